//! Generators for the extremal families and the finite-field machinery
//! behind the C4-free construction.

pub mod families;
pub mod field;
pub mod polarity;

pub use families::{
    c4_chain_graph, chain_graph, closed_form_ex, layered_graph, layered_part_sizes, FamilyParams,
};
pub use field::{FiniteField, prime_power};
pub use polarity::{
    polarity_graph, polarity_graph_over, projective_points, punctured_polarity, ProjectivePoint,
    PuncturedPolarity, ABSOLUTE,
};
