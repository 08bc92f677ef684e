//! Random and exhaustive graph corpora shared by the integration tests.
#![allow(dead_code)]

use avec::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random labelled tree (attach each vertex to an earlier one) plus each
/// remaining pair independently with probability `p`, then shuffled ids.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((perm[v], perm[rng.gen_range(0..v)]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Possibly disconnected graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Connected bipartite graph with sides `0..a` and `a..a+b`; needs `a, b >= 1`.
pub fn random_bipartite(rng: &mut impl Rng, a: usize, b: usize, p: f64) -> Graph {
    let n = a + b;
    let mut edges = vec![(0, a)];
    let (mut left, mut right) = (vec![0], vec![a]);
    let mut pending: Vec<usize> = (1..a).chain(a + 1..n).collect();
    pending.shuffle(rng);
    for v in pending {
        if v < a {
            edges.push((v, right[rng.gen_range(0..right.len())]));
            left.push(v);
        } else {
            edges.push((v, left[rng.gen_range(0..left.len())]));
            right.push(v);
        }
    }
    for u in 0..a {
        for v in a..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random tree densified by random edges that close no 4-cycle.
pub fn random_c4_free(rng: &mut impl Rng, n: usize, attempts: usize) -> Graph {
    let mut adj = vec![Vec::<usize>::new(); n];
    let add = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
    };
    for v in 1..n {
        let u = rng.gen_range(0..v);
        add(&mut adj, u, v);
    }
    for _ in 0..attempts {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || adj[u].contains(&v) {
            continue;
        }
        // uv closes a 4-cycle through a path u-x-y-v, or the pair already has
        // two common neighbours.
        let closes_path3 = adj[u].iter().any(|&x| {
            x != v && adj[v].iter().any(|&y| y != u && y != x && adj[x].contains(&y))
        });
        let common = adj[u].iter().filter(|x| adj[v].contains(x)).count();
        if !closes_path3 && common < 2 {
            add(&mut adj, u, v);
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)).collect::<Vec<_>>())
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Every labelled graph on `n` vertices, by adjacency bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Floyd–Warshall distances, independent of the BFS in the library.
#[allow(clippy::needless_range_loop)]
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}
