//! Eccentricities, radius, diameter and exact average eccentricity of a few small graphs.

use avec::{eccentricity_profile, Graph};

fn main() -> avec::Result<()> {
    let graphs = [
        ("P6", Graph::path(6)),
        ("C7", Graph::cycle(7)),
        ("K1,5", Graph::star(5)),
        ("K3,4", Graph::complete_bipartite(3, 4)),
    ];
    for (name, g) in &graphs {
        let p = eccentricity_profile(g)?;
        println!(
            "{name:>5}: ecc={:?} EX={} avec={} rad={} diam={}",
            p.ecc, p.total, p.avec, p.rad, p.diam
        );
    }
    Ok(())
}
