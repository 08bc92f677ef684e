//! Triangle-free layered graphs: part sizes, total eccentricity and the triangle-free bound.

use avec::bounds::{evaluate_bound, BoundId};
use avec::constructions::{closed_form_ex, layered_part_sizes, FamilyParams};
use avec::eccentricity_profile;

fn main() -> avec::Result<()> {
    let (delta, max_delta) = (4, 10);
    for k in [4, 8, 12, 16] {
        let params = FamilyParams::Layered { delta, max_delta, k };
        let g = params.build()?;
        let p = eccentricity_profile(&g)?;
        let bound = evaluate_bound(BoundId::Thm2, g.n() as u64, delta, max_delta)?;
        println!(
            "k={k:>2} parts={:?}\n     n={} triangle-free={} EX={} (closed form {}) avec={} THM2={}",
            layered_part_sizes(delta, max_delta, k)?,
            g.n(),
            g.is_triangle_free(),
            p.total,
            closed_form_ex(&params)?,
            p.avec,
            bound
        );
    }
    Ok(())
}
