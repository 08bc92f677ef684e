//! The clique chains: closed-form total eccentricity against BFS, and the gap to the bound.

use avec::bounds::{evaluate_bound, BoundId};
use avec::constructions::{closed_form_ex, FamilyParams};
use avec::eccentricity_profile;
use avec::rational::approx;

fn main() -> avec::Result<()> {
    let (delta, max_delta) = (3, 8);
    println!("  k    n    EX  closed      avec     THM1    gap");
    for k in (2..=30).step_by(4) {
        let params = FamilyParams::Chain { delta, max_delta, k };
        let g = params.build()?;
        let p = eccentricity_profile(&g)?;
        let bound = evaluate_bound(BoundId::Thm1, g.n() as u64, delta, max_delta)?;
        println!(
            "{k:>3} {:>4} {:>5} {:>7} {:>9.3} {:>8.3} {:>6.3}",
            g.n(),
            p.total,
            closed_form_ex(&params)?,
            approx(&p.avec),
            approx(&bound),
            approx(&(&bound - &p.avec)),
        );
    }
    Ok(())
}
