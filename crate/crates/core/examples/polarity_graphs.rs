//! Polarity graphs over GF(q), the punctured variant, and the C4-free chains built from them.

use avec::constructions::{c4_chain_graph, polarity_graph, punctured_polarity, FiniteField};
use avec::eccentricity_profile;

fn main() -> avec::Result<()> {
    for q in [3, 4, 5, 7, 8, 9] {
        let field = FiniteField::new(q)?;
        let g = polarity_graph(q)?;
        let absolute = g.degrees().iter().filter(|&&d| d == q as usize).count();
        println!(
            "GF({q}) modulus {:?}: n={} absolute points={absolute} diam={} C4-free={}",
            field.modulus(),
            g.n(),
            eccentricity_profile(&g)?.diam,
            g.is_c4_free()
        );
    }
    for q in [4, 5] {
        let h = punctured_polarity(q)?;
        let d = h.graph.bfs_distances(h.u)?[h.v];
        println!("punctured q={q}: n={} d(u,v)={d} deleted point {}", h.graph.n(), h.deleted);
    }
    let g = c4_chain_graph(4, 4, 1)?;
    let p = eccentricity_profile(&g)?;
    println!("c4 chain (q=4, k=4, m=1): n={} EX={} avec={}", g.n(), p.total, p.avec);
    Ok(())
}
