//! Every bound evaluated on one graph, with applicability and slack.

use avec::bounds::check_graph;
use avec::constructions::layered_graph;
use avec::rational::render;

fn main() -> avec::Result<()> {
    let g = layered_graph(4, 10, 12)?;
    println!("layered(4, 10, 12): n = {}, m = {}", g.n(), g.edge_count());
    for r in check_graph(&g)? {
        let value = r.value.as_ref().map_or("-".into(), render);
        let status = match r.satisfied {
            Some(true) => "holds".to_string(),
            Some(false) => "VIOLATED".to_string(),
            None => format!("n/a ({})", r.reason.as_deref().unwrap_or("")),
        };
        println!("  {:<11} {:>12}  {status}", r.bound_id.name(), value);
    }
    Ok(())
}
