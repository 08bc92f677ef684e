mod common;

use avec::bounds::{all_satisfied, check_graph, evaluate_bound, BoundId};
use avec::metrics::{check_weighted_path_bound, path_average_eccentricity};
use avec::rational::ratio;
use avec::{eccentricity_profile, Graph, Rational, VertexWeighting};
use common::*;
use num_traits::Signed;
use proptest::prelude::*;

fn report_violations(g: &Graph) -> Vec<String> {
    check_graph(g)
        .unwrap()
        .into_iter()
        .filter(|r| r.is_violation())
        .map(|r| format!("{} value {:?} avec {}", r.bound_id, r.value, r.avec))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn upper_bounds_hold_on_general_graphs(seed in any::<u64>(), n in 2usize..45, p in 0.0f64..0.5) {
        let g = random_connected(&mut rng(seed), n, p);
        prop_assert!(all_satisfied(&check_graph(&g).unwrap()), "{:?}", report_violations(&g));
    }

    #[test]
    fn upper_bounds_hold_on_bipartite_graphs(seed in any::<u64>(), a in 1usize..20, b in 1usize..20, p in 0.0f64..0.5) {
        let g = random_bipartite(&mut rng(seed), a, b, p);
        let reports = check_graph(&g).unwrap();
        prop_assert!(reports.iter().any(|r| r.bound_id == BoundId::Thm2 && r.applicable));
        prop_assert!(all_satisfied(&reports), "{:?}", report_violations(&g));
    }

    #[test]
    fn upper_bounds_hold_on_c4_free_graphs(seed in any::<u64>(), n in 2usize..50, attempts in 0usize..400) {
        let g = random_c4_free(&mut rng(seed), n, attempts);
        let reports = check_graph(&g).unwrap();
        prop_assert!(reports.iter().any(|r| r.bound_id == BoundId::Thm3 && r.applicable));
        prop_assert!(all_satisfied(&reports), "{:?}", report_violations(&g));
    }

    #[test]
    fn weighted_path_maximum(seed in any::<u64>(), n in 1usize..20, p in 0.0f64..0.5,
                             raw in proptest::collection::vec((1u64..=40, 1u64..=8), 20)) {
        let g = random_connected(&mut rng(seed), n, p);
        // numerator in [den, 5 den] keeps every weight in [1, 5]
        let w: Vec<Rational> = raw[..n].iter().map(|&(a, d)| ratio(d + (a * d) % (4 * d + 1), d)).collect();
        let check = check_weighted_path_bound(&g, &VertexWeighting::new(w).unwrap()).unwrap();
        prop_assert!(check.holds, "{} > {}", check.lhs, check.rhs);
    }
}

#[test]
fn path_bound_is_attained_by_paths() {
    for n in 1..60u64 {
        let p = eccentricity_profile(&Graph::path(n as usize)).unwrap();
        assert_eq!(p.avec, evaluate_bound(BoundId::Path, n, 1, 2).unwrap());
        assert_eq!(p.avec, path_average_eccentricity(n));
    }
}

#[test]
fn unit_weights_reduce_to_the_unweighted_case() {
    let g = Graph::cycle(9);
    let check = check_weighted_path_bound(&g, &VertexWeighting::uniform(9)).unwrap();
    assert_eq!(check.lhs, eccentricity_profile(&g).unwrap().avec);
    assert_eq!(check.rhs, path_average_eccentricity(9));
}

#[test]
fn small_weights_are_rejected() {
    let w = VertexWeighting::new(vec![ratio(1, 2), ratio(3, 1)]).unwrap();
    assert!(check_weighted_path_bound(&Graph::path(2), &w).is_err());
}

#[test]
fn thm1_is_non_increasing_in_max_degree() {
    for n in 3..=80u64 {
        for delta in 1..n {
            let values: Vec<Rational> = (delta..n)
                .map(|dm| evaluate_bound(BoundId::Thm1, n, delta, dm).unwrap())
                .collect();
            assert!(values.windows(2).all(|w| w[0] >= w[1]), "n={n} delta={delta}");
        }
    }
}

#[test]
fn thm1_at_regular_degree_is_close_to_dgs() {
    for n in 3..=200u64 {
        for delta in 2..n {
            let thm1 = evaluate_bound(BoundId::Thm1, n, delta, delta).unwrap();
            let dgs = evaluate_bound(BoundId::Dgs, n, delta, delta).unwrap();
            let diff = thm1 - dgs;
            assert!(diff.abs() <= ratio(4, 1), "n={n} delta={delta}: {diff}");
        }
    }
}
