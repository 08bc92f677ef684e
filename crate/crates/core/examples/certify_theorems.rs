//! Replays each upper-bound argument on a member of its extremal family and prints the checklist.

use avec::certify::{certify, Certificate, Theorem};
use avec::constructions::{c4_chain_graph, chain_graph, layered_graph};

fn main() -> avec::Result<()> {
    let cases = [
        (Theorem::Thm1, chain_graph(3, 8, 6)?),
        (Theorem::Thm2, layered_graph(4, 10, 12)?),
        (Theorem::Thm3, c4_chain_graph(4, 2, 1)?),
    ];
    for (theorem, g) in &cases {
        let cert = certify(g, *theorem)?;
        match &cert {
            Certificate::Packing(p) => println!("packing A = {:?} (spacing {})", p.packing, p.spacing),
            Certificate::Matching(m) => println!("matching M = {:?}", m.matching),
        }
        print!("{cert}");
        println!();
    }
    Ok(())
}
