//! Spanning-tree assembly and the weight transfer onto a base set.

use crate::graph::{Graph, UNREACHABLE};
use crate::rational::{int, Rational};

/// A growing acyclic edge set over the vertices of `g`.
pub(crate) struct TreeBuilder {
    edges: Vec<(usize, usize)>,
    in_tree: Vec<bool>,
}

impl TreeBuilder {
    pub fn new(n: usize) -> Self {
        TreeBuilder {
            edges: Vec::new(),
            in_tree: vec![false; n],
        }
    }

    pub fn insert_vertex(&mut self, v: usize) {
        self.in_tree[v] = true;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u.min(v), u.max(v)));
        self.in_tree[u] = true;
        self.in_tree[v] = true;
    }

    /// Attaches every missing vertex, in order of `(base_dist, id)`, to its
    /// lowest-indexed tree neighbour one layer closer to the base set. The
    /// result is distance preserving from that base set as long as the
    /// current tree already is on the vertices it covers.
    pub fn complete(&mut self, g: &Graph, base_dist: &[usize]) {
        let mut missing: Vec<usize> = (0..g.n()).filter(|&v| !self.in_tree[v]).collect();
        missing.sort_by_key(|&v| (base_dist[v], v));
        for x in missing {
            let parent = g
                .neighbors(x)
                .iter()
                .copied()
                .find(|&w| self.in_tree[w] && base_dist[w] + 1 == base_dist[x])
                .or_else(|| g.neighbors(x).iter().copied().find(|&w| self.in_tree[w]))
                .expect("connected graph has a tree neighbour in the previous layer");
            self.add_edge(parent, x);
        }
    }

    pub fn finish(mut self) -> (Graph, Vec<(usize, usize)>) {
        self.edges.sort_unstable();
        let n = self.in_tree.len();
        let tree = Graph::from_edges(n, self.edges.iter().copied()).expect("tree edges are in range");
        (tree, self.edges)
    }
}

/// Distance to and identity of the nearest base vertex in `g`; ties go to
/// the lowest-indexed base vertex.
pub(crate) fn nearest_owner(g: &Graph, base: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let dist = g.multi_source_distances(base);
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| dist[v] != UNREACHABLE).collect();
    order.sort_by_key(|&v| (dist[v], v));
    let mut owner = vec![UNREACHABLE; g.n()];
    for v in order {
        owner[v] = if dist[v] == 0 {
            v
        } else {
            g.neighbors(v)
                .iter()
                .filter(|&&w| dist[w] + 1 == dist[v])
                .map(|&w| owner[w])
                .min()
                .expect("BFS layers have predecessors")
        };
    }
    (dist, owner)
}

/// Number of connected components.
pub(crate) fn components(g: &Graph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        count += 1;
        for (v, d) in g.multi_source_distances(&[s]).into_iter().enumerate() {
            if d != UNREACHABLE {
                seen[v] = true;
            }
        }
    }
    count
}

/// Number of edges of `tree` that are missing from `g`.
pub(crate) fn edges_outside(tree: &Graph, g: &Graph) -> usize {
    tree.edges().into_iter().filter(|&(u, v)| !g.has_edge(u, v)).count()
}

/// Number of vertices whose distance to `base` differs between `a` and `b`.
pub(crate) fn distance_violations(a: &Graph, b: &Graph, base: &[usize]) -> usize {
    let da = a.multi_source_distances(base);
    let db = b.multi_source_distances(base);
    da.iter().zip(&db).filter(|(x, y)| x != y).count()
}

/// `Σ w(v) e(v) / Σ w(v)`; the total must be nonzero.
pub(crate) fn weighted_average(ecc: &[usize], weights: &[Rational]) -> Rational {
    let total: Rational = weights.iter().sum();
    let ex: Rational = ecc.iter().zip(weights).map(|(&e, w)| w * int(e as u64)).sum();
    ex / total
}

/// Smallest distance between distinct members of `set` (`None` if `|set| < 2`).
pub(crate) fn min_pairwise_distance(g: &Graph, set: &[usize]) -> Option<usize> {
    set.iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            let d = g.multi_source_distances(&[a]);
            set[i + 1..].iter().map(move |&b| d[b]).collect::<Vec<_>>()
        })
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_owner_breaks_ties_low() {
        let (dist, owner) = nearest_owner(&Graph::path(5), &[4, 0]);
        assert_eq!(dist, vec![0, 1, 2, 1, 0]);
        assert_eq!(owner, vec![0, 0, 0, 4, 4]);
    }

    #[test]
    fn completion_is_distance_preserving() {
        let g = Graph::cycle(6);
        let mut t = TreeBuilder::new(6);
        t.insert_vertex(0);
        let base = g.multi_source_distances(&[0]);
        t.complete(&g, &base);
        let (tree, edges) = t.finish();
        assert_eq!(edges, vec![(0, 1), (0, 5), (1, 2), (2, 3), (4, 5)]);
        assert_eq!(distance_violations(&tree, &g, &[0]), 0);
        assert_eq!(components(&tree), 1);
        assert_eq!(edges_outside(&tree, &g), 0);
    }

    #[test]
    fn component_count_and_pairwise() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(components(&g), 3);
        assert_eq!(min_pairwise_distance(&Graph::path(7), &[0, 3, 6]), Some(3));
        assert_eq!(min_pairwise_distance(&Graph::path(7), &[2]), None);
    }
}
