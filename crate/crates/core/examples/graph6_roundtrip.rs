//! Encoding to graph6 and the edge-list format, and reading both back.

use avec::constructions::chain_graph;
use avec::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use avec::Graph;

fn main() -> avec::Result<()> {
    let c5 = parse_graph6("Dhc")?;
    println!("Dhc -> edges {:?}", c5.edges());
    assert_eq!(c5, Graph::cycle(5));

    let g = chain_graph(2, 4, 3)?;
    let g6 = write_graph6(&g);
    let edges = write_edge_list(&g);
    println!("chain(2, 4, 3) as graph6: {g6}");
    print!("as edge list:\n{edges}");
    assert_eq!(parse_graph6(&g6)?, g);
    assert_eq!(parse_edge_list(&edges)?, g);
    println!("both encodings round-trip");
    Ok(())
}
