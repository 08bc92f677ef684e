//! Greedy spaced packings and matchings with deterministic tie-breaking.

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

/// Output of [`greedy_spaced_packing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    /// Members in insertion order; `members[0]` is the anchor.
    pub members: Vec<usize>,
    /// `paths[i]` is a shortest path from `members[i + 1]` to the members
    /// added before it, starting at the new member.
    pub paths: Vec<Vec<usize>>,
    pub spacing: usize,
}

/// Output of [`greedy_spaced_matching`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Edges `(u, v)` with `u < v` in insertion order; `edges[0]` is the anchor edge.
    pub edges: Vec<(usize, usize)>,
    /// `paths[i]` is a shortest path of length 3 from an endpoint of
    /// `edges[i + 1]` to the earlier matched vertices.
    pub paths: Vec<Vec<usize>>,
}

impl Matching {
    /// Matched vertices in increasing order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }
}

/// Walks from `start` to the base set along decreasing `dist`, choosing the
/// lowest-indexed predecessor at each step.
fn descend(g: &Graph, dist: &[usize], start: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut cur = start;
    while dist[cur] > 0 {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dist[w] + 1 == dist[cur])
            .expect("BFS layers have predecessors");
        path.push(cur);
    }
    path
}

fn relax(g: &Graph, dist: &mut [usize], from: &[usize]) {
    let fresh = g.multi_source_distances(from);
    for (d, f) in dist.iter_mut().zip(fresh) {
        *d = (*d).min(f);
    }
}

/// Starting from `{anchor}`, repeatedly adds the lowest-indexed vertex at
/// distance exactly `spacing`, until every vertex is within `spacing - 1`.
pub fn greedy_spaced_packing(g: &Graph, anchor: usize, spacing: usize) -> Result<Packing> {
    if anchor >= g.n() {
        return Err(Error::IdOutOfRange { id: anchor, n: g.n() });
    }
    if spacing < 2 {
        return Err(Error::ParameterOutOfRange(format!("spacing {spacing} < 2")));
    }
    let mut dist = g.multi_source_distances(&[anchor]);
    if dist.contains(&UNREACHABLE) {
        return Err(Error::NotConnected);
    }
    let mut packing = Packing {
        members: vec![anchor],
        paths: Vec::new(),
        spacing,
    };
    while let Some(a) = dist.iter().position(|&d| d == spacing) {
        packing.paths.push(descend(g, &dist, a));
        packing.members.push(a);
        relax(g, &mut dist, &[a]);
    }
    debug_assert!(dist.iter().all(|&d| d < spacing));
    Ok(packing)
}

/// Starting from `{anchor_edge}`, repeatedly adds the lexicographically least
/// edge at distance exactly 3 from the matched vertices, until every edge is
/// within distance 2.
pub fn greedy_spaced_matching(g: &Graph, anchor_edge: (usize, usize)) -> Result<Matching> {
    let (u, v) = (anchor_edge.0.min(anchor_edge.1), anchor_edge.0.max(anchor_edge.1));
    if v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::EdgeNotInGraph(u, v));
    }
    let mut dist = g.multi_source_distances(&[u, v]);
    if dist.contains(&UNREACHABLE) {
        return Err(Error::NotConnected);
    }
    let edges = g.edges();
    let mut matching = Matching {
        edges: vec![(u, v)],
        paths: Vec::new(),
    };
    while let Some(&(x, y)) = edges.iter().find(|&&(x, y)| dist[x].min(dist[y]) == 3) {
        let near = if dist[x] == 3 { x } else { y };
        matching.paths.push(descend(g, &dist, near));
        matching.edges.push((x, y));
        relax(g, &mut dist, &[x, y]);
    }
    debug_assert!(edges.iter().all(|&(x, y)| dist[x].min(dist[y]) <= 2));
    Ok(matching)
}
