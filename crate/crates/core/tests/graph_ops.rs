mod common;

use avec::metrics::eccentricities;
use avec::{eccentricity_profile, sequential_sum, Graph, UNREACHABLE};
use common::*;
use proptest::prelude::*;

const INF: usize = usize::MAX / 4;

fn normalize(d: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    d.into_iter()
        .map(|row| row.into_iter().map(|x| if x == UNREACHABLE { INF } else { x }).collect())
        .collect()
}

fn brute_triangle_free(g: &Graph) -> bool {
    let n = g.n();
    !(0..n).any(|a| {
        (a + 1..n).any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)))
    })
}

/// Any 4 distinct vertices in any of the three cyclic orders.
fn brute_c4_free(g: &Graph) -> bool {
    let n = g.n();
    let e = |x, y| g.has_edge(x, y);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let cyc = |p: usize, q: usize, r: usize, s: usize| e(p, q) && e(q, r) && e(r, s) && e(s, p);
                    if cyc(a, b, c, d) || cyc(a, b, d, c) || cyc(a, c, b, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn bfs_tree(g: &Graph, root: usize) -> Graph {
    let d = g.bfs_distances(root).unwrap();
    let edges = (0..g.n()).filter(|&v| v != root).map(|v| {
        let parent = *g.neighbors(v).iter().find(|&&w| d[w] + 1 == d[v]).unwrap();
        (parent, v)
    });
    Graph::from_edges(g.n(), edges).unwrap()
}

proptest! {
    #[test]
    fn all_pairs_matches_floyd_warshall(seed in any::<u64>(), n in 0usize..30, p in 0.0f64..0.5) {
        let g = random_graph(&mut rng(seed), n, p);
        prop_assert_eq!(normalize(g.all_pairs_distances()), floyd_warshall(&g));
    }

    #[test]
    fn profile_matches_floyd_warshall(seed in any::<u64>(), n in 1usize..=40, p in 0.0f64..0.4) {
        let g = random_connected(&mut rng(seed), n, p);
        let ecc: Vec<usize> = floyd_warshall(&g).iter().map(|row| *row.iter().max().unwrap()).collect();
        let profile = eccentricity_profile(&g).unwrap();
        prop_assert_eq!(&profile.ecc, &ecc);
        prop_assert_eq!(profile.total, ecc.iter().map(|&e| e as u64).sum::<u64>());
        prop_assert_eq!(profile.diam, *ecc.iter().max().unwrap());
        prop_assert_eq!(profile.rad, *ecc.iter().min().unwrap());
    }

    #[test]
    fn forbidden_subgraph_detection(seed in any::<u64>(), n in 0usize..=12, p in 0.0f64..0.6) {
        let g = random_graph(&mut rng(seed), n, p);
        prop_assert_eq!(g.is_triangle_free(), brute_triangle_free(&g));
        prop_assert_eq!(g.is_c4_free(), brute_c4_free(&g));
        if let Some(w) = g.find_forbidden(avec::Forbidden::C4) {
            prop_assert!(g.has_edge(w[0], w[1]) && g.has_edge(w[1], w[2]) && g.has_edge(w[2], w[3]) && g.has_edge(w[3], w[0]));
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn power_is_distance_threshold(seed in any::<u64>(), n in 1usize..25, p in 0.0f64..0.3, k in 1usize..5) {
        let g = random_graph(&mut rng(seed), n, p);
        let d = floyd_warshall(&g);
        let h = g.power(k).unwrap();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(h.has_edge(u, v), u != v && d[u][v] <= k);
            }
        }
    }

    #[test]
    fn line_graph_distance_is_endpoint_distance_plus_one(seed in any::<u64>(), n in 2usize..20, p in 0.0f64..0.3) {
        let g = random_connected(&mut rng(seed), n, p);
        let d = floyd_warshall(&g);
        let (l, edges) = g.line_graph();
        let dl = floyd_warshall(&l);
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, e)) in edges.iter().enumerate() {
                let expect = if i == j { 0 } else { 1 + [d[a][c], d[a][e], d[b][c], d[b][e]].into_iter().min().unwrap() };
                prop_assert_eq!(dl[i][j], expect);
            }
        }
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges(seed in any::<u64>(), n in 1usize..25, p in 0.0f64..0.5, mask in any::<u32>()) {
        let g = random_graph(&mut rng(seed), n, p);
        let subset: Vec<usize> = (0..n).filter(|v| mask >> (v % 32) & 1 == 1).collect();
        let (h, map) = g.induced_subgraph(&subset).unwrap();
        prop_assert_eq!(h.n(), subset.len());
        for a in 0..h.n() {
            for b in 0..h.n() {
                prop_assert_eq!(h.has_edge(a, b), g.has_edge(map.old_id(a), map.old_id(b)));
            }
        }
    }

    #[test]
    fn spanning_trees_do_not_lower_eccentricity(seed in any::<u64>(), n in 1usize..40, p in 0.0f64..0.4) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, p);
        let root = rand::Rng::gen_range(&mut r, 0..n);
        let t = bfs_tree(&g, root);
        prop_assert_eq!(t.edge_count(), n - 1);
        let (eg, et) = (eccentricities(&g).unwrap(), eccentricities(&t).unwrap());
        prop_assert!(eg.iter().zip(&et).all(|(a, b)| a <= b));
        prop_assert!(eccentricity_profile(&g).unwrap().avec <= eccentricity_profile(&t).unwrap().avec);
    }

    #[test]
    fn sequential_sum_structure(seed in any::<u64>(), sizes in proptest::collection::vec(1usize..6, 1..8)) {
        let mut r = rng(seed);
        let parts: Vec<Graph> = sizes.iter().map(|&s| random_graph(&mut r, s, 0.5)).collect();
        let g = sequential_sum(&parts).unwrap();
        let m: usize = parts.iter().map(Graph::edge_count).sum::<usize>()
            + sizes.windows(2).map(|w| w[0] * w[1]).sum::<usize>();
        prop_assert_eq!(g.edge_count(), m);
        let d = floyd_warshall(&g);
        let ecc: Vec<usize> = d.iter().map(|row| *row.iter().max().unwrap()).collect();
        if sizes.len() >= 2 {
            prop_assert_eq!(eccentricities(&g).unwrap(), ecc);
        }
    }
}

#[test]
fn sequential_sum_of_singletons_is_a_path() {
    let parts = vec![Graph::empty(1); 7];
    assert_eq!(sequential_sum(&parts).unwrap(), Graph::path(7));
}
