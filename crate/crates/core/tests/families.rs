mod common;

use avec::bounds::{evaluate_bound, BoundId};
use avec::constructions::{closed_form_ex, FamilyParams};
use avec::rational::int;
use avec::{eccentricity_profile, Graph, Rational};
use common::floyd_warshall;
use num_traits::Zero;

fn oracle_ex(g: &Graph) -> u64 {
    floyd_warshall(g).iter().map(|row| *row.iter().max().unwrap() as u64).sum()
}

fn check_member(p: FamilyParams) -> Graph {
    let g = p.build().unwrap();
    let degrees = g.degree_summary().unwrap();
    assert!(degrees.connected, "{p}");
    assert_eq!(g.n() as u64, p.order(), "{p}");
    assert_eq!(degrees.min_degree as u64, p.min_degree(), "{p}");
    assert_eq!(degrees.max_degree as u64, p.max_degree(), "{p}");
    g
}

#[test]
fn chain_grid() {
    let mut members = 0;
    for delta in 1..=5 {
        for max_delta in delta + 1..=delta + 8 {
            for k in 2..=12 {
                let p = FamilyParams::Chain { delta, max_delta, k };
                if p.validate().is_err() {
                    continue;
                }
                members += 1;
                let g = check_member(p);
                let ex = oracle_ex(&g);
                assert_eq!(closed_form_ex(&p).unwrap(), int(ex), "{p}");
                let profile = eccentricity_profile(&g).unwrap();
                assert_eq!(profile.diam as u64, 3 * (k - 1), "{p}");
                assert_eq!(profile.rad as u64, (3 * (k - 1)).div_ceil(2), "{p}");
                let bound = evaluate_bound(BoundId::Thm1, g.n() as u64, delta, max_delta).unwrap();
                assert!(profile.avec <= bound, "{p}");
            }
        }
    }
    assert_eq!(members, 360);
}

#[test]
fn layered_grid() {
    for delta in 2..=6u64 {
        for max_delta in delta + delta.div_ceil(2)..=delta + 6 {
            for k in [4, 8, 12, 16, 28] {
                let p = FamilyParams::Layered { delta, max_delta, k };
                let g = check_member(p);
                assert!(g.is_triangle_free(), "{p}");
                assert_eq!(closed_form_ex(&p).unwrap(), int(oracle_ex(&g)), "{p}");
                let avec = eccentricity_profile(&g).unwrap().avec;
                assert!(avec <= evaluate_bound(BoundId::Thm2, g.n() as u64, delta, max_delta).unwrap(), "{p}");
            }
        }
    }
}

#[test]
fn c4_chain_grid() {
    for q in [4, 5] {
        for k in 1..=3 {
            for m in 0..=2 {
                let p = FamilyParams::C4Chain { q, k, m };
                let g = check_member(p);
                assert!(g.is_c4_free(), "{p}");
                let lower = closed_form_ex(&p).unwrap();
                assert!(int(oracle_ex(&g)) >= lower, "{p}");
                let profile = eccentricity_profile(&g).unwrap();
                let (n, d, dm) = (g.n() as u64, p.min_degree(), p.max_degree());
                assert!(profile.avec <= evaluate_bound(BoundId::Thm3, n, d, dm).unwrap(), "{p}");
                let main_term = evaluate_bound(BoundId::Thm4Lower, n, d, dm).unwrap();
                assert!(main_term > Rational::zero(), "{p}");
            }
        }
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    for p in [
        FamilyParams::Chain { delta: 3, max_delta: 3, k: 4 },
        FamilyParams::Chain { delta: 1, max_delta: 4, k: 3 },
        FamilyParams::Layered { delta: 4, max_delta: 10, k: 6 },
        FamilyParams::Layered { delta: 4, max_delta: 5, k: 8 },
        FamilyParams::C4Chain { q: 6, k: 2, m: 0 },
        FamilyParams::C4Chain { q: 3, k: 2, m: 0 },
    ] {
        assert!(p.validate().is_err(), "{p}");
        assert!(p.build().is_err(), "{p}");
    }
}
