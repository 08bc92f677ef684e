//! Text formats and serializable records.

mod edgelist;
mod graph6;
mod record;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6, MAX_ORDER};
pub use record::{
    analyze, bounds_csv_rows, bounds_text, certificate_error_json, certificate_json, AnalysisRecord,
    BoundRecord, BOUNDS_CSV_HEADER,
};
