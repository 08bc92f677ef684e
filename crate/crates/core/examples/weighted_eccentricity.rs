//! Weighted average eccentricity against the path of matching total weight.

use avec::metrics::check_weighted_path_bound;
use avec::rational::ratio;
use avec::{Graph, VertexWeighting};

fn main() -> avec::Result<()> {
    let g = Graph::star(4);
    for heavy_center in [ratio(1, 1), ratio(7, 2), ratio(5, 1)] {
        let mut w = vec![ratio(1, 1); 5];
        w[0] = heavy_center.clone();
        let weights = VertexWeighting::new(w)?;
        let check = check_weighted_path_bound(&g, &weights)?;
        println!(
            "center weight {heavy_center}: total {} avec_c = {} <= {} : {}",
            weights.total(),
            check.lhs,
            check.rhs,
            check.holds
        );
    }
    Ok(())
}
