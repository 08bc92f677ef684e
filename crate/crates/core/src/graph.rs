//! Immutable simple undirected graphs and the structural operators used by
//! the metrics, constructions and certificates.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Distance marker for vertices in a different component than the source.
pub const UNREACHABLE: usize = usize::MAX;

/// A simple undirected graph on the vertex ids `0..n`.
///
/// Adjacency lists are sorted and duplicate free, and the relation is
/// symmetric without loops. Labels are free-form annotations attached by
/// generators (for example `"v1"` or `"y"`) and take part in equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

/// Minimum and maximum degree together with a connectivity flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DegreeSummary {
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
}

/// The forbidden subgraphs the bounds distinguish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Forbidden {
    Triangle,
    C4,
}

/// Vertex renumbering produced by [`Graph::induced_subgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMap {
    /// `new_to_old[i]` is the original id of new vertex `i`.
    pub new_to_old: Vec<usize>,
    old_to_new: BTreeMap<usize, usize>,
}

impl IdMap {
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(&old).copied()
    }

    pub fn old_id(&self, new: usize) -> usize {
        self.new_to_old[new]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .field("labels", &self.labels)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, symmetrizing and removing duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::IdOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adj,
            labels: BTreeMap::new(),
        })
    }

    /// Wraps adjacency lists that already satisfy the invariants.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v)));
        Graph {
            adj,
            labels: BTreeMap::new(),
        }
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_sorted_adjacency(vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    /// The complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("bipartite edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Vertex carrying the given label, if any.
    pub fn find_label(&self, text: &str) -> Option<usize> {
        self.labels
            .iter()
            .find_map(|(&v, l)| (l == text).then_some(v))
    }

    pub fn set_label(&mut self, v: usize, text: impl Into<String>) {
        assert!(v < self.n(), "label on missing vertex {v}");
        self.labels.insert(v, text.into());
    }

    pub fn with_label(mut self, v: usize, text: impl Into<String>) -> Self {
        self.set_label(v, text);
        self
    }

    pub fn unlabeled(&self) -> Graph {
        Graph::from_sorted_adjacency(self.adj.clone())
    }

    fn check_id(&self, id: usize) -> Result<()> {
        if id < self.n() {
            Ok(())
        } else {
            Err(Error::IdOutOfRange { id, n: self.n() })
        }
    }

    /// Shortest-path distances from `source`; other components get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<usize>> {
        self.check_id(source)?;
        Ok(self.multi_source_distances(&[source]))
    }

    /// Distances to the nearest vertex of `sources` (all UNREACHABLE if empty).
    pub fn multi_source_distances(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::with_capacity(self.n());
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        bfs_fill(&self.adj, &mut dist, &mut queue, UNREACHABLE);
        dist
    }

    /// BFS distances truncated at `limit`; vertices farther away stay UNREACHABLE.
    pub(crate) fn bounded_distances(&self, source: usize, limit: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        bfs_fill(&self.adj, &mut dist, &mut queue, limit);
        dist
    }

    /// `d[u][v]` for all pairs, one BFS per source run in parallel.
    pub fn all_pairs_distances(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .into_par_iter()
            .map(|s| self.multi_source_distances(&[s]))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).is_ok_and(|d| !d.contains(&UNREACHABLE))
    }

    /// The k-th power: `uv` is an edge iff `1 <= d(u, v) <= k`.
    pub fn power(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::ParameterOutOfRange("graph power needs k >= 1".into()));
        }
        let adj = (0..self.n())
            .into_par_iter()
            .map(|s| {
                let d = self.bounded_distances(s, k);
                d.iter()
                    .enumerate()
                    .filter(|&(v, &dv)| v != s && dv != UNREACHABLE)
                    .map(|(v, _)| v)
                    .collect()
            })
            .collect();
        Ok(Graph::from_sorted_adjacency(adj))
    }

    /// Subgraph induced by `subset`, renumbered in increasing id order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(Graph, IdMap)> {
        for &v in subset {
            self.check_id(v)?;
        }
        let mut new_to_old = subset.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        let old_to_new: BTreeMap<usize, usize> =
            new_to_old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = new_to_old
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|w| old_to_new.get(w).copied())
                    .collect()
            })
            .collect();
        let mut graph = Graph::from_sorted_adjacency(adj);
        for (old, text) in &self.labels {
            if let Some(&new) = old_to_new.get(old) {
                graph.labels.insert(new, text.clone());
            }
        }
        Ok((graph, IdMap { new_to_old, old_to_new }))
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> (Graph, Vec<(usize, usize)>) {
        let edges = self.edges();
        let index: BTreeMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut adj = vec![Vec::new(); edges.len()];
        for v in 0..self.n() {
            let incident: Vec<usize> = self.adj[v]
                .iter()
                .map(|&w| index[&(v.min(w), v.max(w))])
                .collect();
            for (i, &a) in incident.iter().enumerate() {
                for &b in &incident[i + 1..] {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        (Graph::from_sorted_adjacency(adj), edges)
    }

    /// One forbidden subgraph as a vertex tuple, or `None` if the graph is free of it.
    ///
    /// A triangle is reported as `(u, v, w)` with `u < v < w`. A 4-cycle
    /// is reported in cyclic order `(u, a, v, b)`: any pair `u, v` with two
    /// common neighbours `a, b` spans one.
    pub fn find_forbidden(&self, kind: Forbidden) -> Option<Vec<usize>> {
        match kind {
            Forbidden::Triangle => self.find_triangle(),
            Forbidden::C4 => self.find_c4(),
        }
    }

    fn find_triangle(&self) -> Option<Vec<usize>> {
        for (u, v) in self.edges() {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let mut t = vec![u, v, a[i]];
                        t.sort_unstable();
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    fn find_c4(&self) -> Option<Vec<usize>> {
        // via[v] = a middle vertex of some path u-w-v found while scanning from u.
        let mut via = vec![UNREACHABLE; self.n()];
        let mut touched = Vec::new();
        for u in 0..self.n() {
            for &w in &self.adj[u] {
                for &v in &self.adj[w] {
                    if v <= u {
                        continue;
                    }
                    if via[v] == UNREACHABLE {
                        via[v] = w;
                        touched.push(v);
                    } else if via[v] != w {
                        return Some(vec![u, via[v], v, w]);
                    }
                }
            }
            for v in touched.drain(..) {
                via[v] = UNREACHABLE;
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn is_c4_free(&self) -> bool {
        self.find_c4().is_none()
    }

    pub fn degree_summary(&self) -> Result<DegreeSummary> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let degrees = self.degrees();
        Ok(DegreeSummary {
            min_degree: *degrees.iter().min().expect("nonempty"),
            max_degree: *degrees.iter().max().expect("nonempty"),
            connected: self.is_connected(),
        })
    }

    /// Lowest-indexed vertex of maximum degree.
    pub fn max_degree_vertex(&self) -> Option<usize> {
        (0..self.n()).max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
    }
}

/// Standard BFS over `queue`, never expanding past distance `limit`.
fn bfs_fill(adj: &[Vec<usize>], dist: &mut [usize], queue: &mut VecDeque<usize>, limit: usize) {
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        if next > limit {
            continue;
        }
        for &w in &adj[u] {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
}

/// Disjoint union with complete joins between consecutive parts.
pub fn sequential_sum(parts: &[Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, g| {
            let start = *acc;
            *acc += g.n();
            Some(start)
        })
        .collect();
    let total: usize = parts.iter().map(Graph::n).sum();
    let mut edges = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let off = offsets[i];
        edges.extend(part.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        if let Some(next) = parts.get(i + 1) {
            let next_off = offsets[i + 1];
            for u in 0..part.n() {
                edges.extend((0..next.n()).map(|v| (u + off, v + next_off)));
            }
        }
    }
    Graph::from_edges(total, edges)
}

/// Disjoint union placing the parts one after another.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut adj = Vec::new();
    let mut labels = BTreeMap::new();
    for part in parts {
        let off = adj.len();
        adj.extend(part.adj.iter().map(|l| l.iter().map(|&w| w + off).collect()));
        labels.extend(part.labels.iter().map(|(&v, t)| (v + off, t.clone())));
    }
    Graph { adj, labels }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
    }

    #[test]
    fn from_edges_builds_path() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn from_edges_dedups_and_symmetrizes() {
        let g = Graph::from_edges(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::IdOutOfRange { id: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(Graph::path(4).bfs_distances(0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(Graph::cycle(5).bfs_distances(0).unwrap(), vec![0, 1, 2, 2, 1]);
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.bfs_distances(0).unwrap(), vec![0, 1, 2, UNREACHABLE]);
        assert!(g.bfs_distances(9).is_err());
    }

    #[test]
    fn power_examples() {
        let p4 = Graph::path(4);
        assert_eq!(
            edge_set(&p4.power(2).unwrap()),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(p4.power(1).unwrap(), p4);
        assert_eq!(Graph::cycle(6).power(3).unwrap(), Graph::complete(6));
        assert!(p4.power(0).is_err());
    }

    #[test]
    fn power_keeps_components_apart() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.power(5).unwrap(), g);
    }

    #[test]
    fn induced_examples() {
        let (k3, map) = Graph::complete(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map.new_id(2), Some(2));
        assert_eq!(map.new_id(3), None);
        let (g, map) = Graph::path(5).induced_subgraph(&[4, 0, 2]).unwrap();
        assert_eq!(g, Graph::empty(3));
        assert_eq!(map.new_to_old, vec![0, 2, 4]);
        let (g, _) = Graph::cycle(5).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(g, Graph::path(3));
        assert!(Graph::path(3).induced_subgraph(&[3]).is_err());
    }

    #[test]
    fn line_graph_examples() {
        let (l, edges) = Graph::path(4).line_graph();
        assert_eq!(l, Graph::path(3));
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Graph::star(3).line_graph().0, Graph::complete(3));
        let (l5, _) = Graph::cycle(5).line_graph();
        assert_eq!(l5.degrees(), vec![2; 5]);
        assert!(l5.is_connected());
        assert_eq!(l5.edge_count(), 5);
    }

    #[test]
    fn sequential_sum_examples() {
        let g = sequential_sum(&[Graph::empty(2), Graph::empty(3)]).unwrap();
        assert_eq!(g, Graph::complete_bipartite(2, 3));
        assert_eq!(g.edge_count(), 6);
        let c5 = Graph::cycle(5);
        assert_eq!(sequential_sum(std::slice::from_ref(&c5)).unwrap(), c5);
        assert_eq!(sequential_sum(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn forbidden_examples() {
        assert_eq!(
            Graph::complete(3).find_forbidden(Forbidden::Triangle),
            Some(vec![0, 1, 2])
        );
        let c4 = Graph::cycle(4).find_forbidden(Forbidden::C4).unwrap();
        assert_eq!(c4.len(), 4);
        assert!(Graph::cycle(5).is_c4_free());
        assert!(Graph::cycle(5).is_triangle_free());
        assert!(!Graph::complete(4).is_c4_free());
    }

    #[test]
    fn c4_witness_is_a_cycle() {
        let g = Graph::complete_bipartite(2, 3);
        let w = g.find_forbidden(Forbidden::C4).unwrap();
        for i in 0..4 {
            assert!(g.has_edge(w[i], w[(i + 1) % 4]), "{w:?}");
        }
    }

    #[test]
    fn degree_summaries() {
        let s = Graph::complete(4).degree_summary().unwrap();
        assert_eq!((s.min_degree, s.max_degree, s.connected), (3, 3, true));
        let s = Graph::path(4).degree_summary().unwrap();
        assert_eq!((s.min_degree, s.max_degree, s.connected), (1, 2, true));
        assert_eq!(Graph::empty(0).degree_summary(), Err(Error::EmptyGraph));
        assert!(!Graph::empty(2).degree_summary().unwrap().connected);
    }

    #[test]
    fn max_degree_vertex_prefers_lowest_id() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (2, 4), (1, 3), (1, 4)]).unwrap();
        assert_eq!(g.max_degree_vertex(), Some(1));
    }
}
