//! Orthogonality graphs on the points of the projective plane over GF(q).

use std::fmt::Write as _;

use super::field::{Element, FiniteField};
use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::metrics::eccentricities;

/// Label attached to self-orthogonal points.
pub const ABSOLUTE: &str = "absolute";

/// A 1-dimensional subspace of GF(q)^3 in canonical form: the first
/// nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: [Element; 3],
}

impl ProjectivePoint {
    /// Canonical representative of the span of `v`; `None` for the zero vector.
    pub fn normalize(field: &FiniteField, v: [Element; 3]) -> Option<Self> {
        let lead = *v.iter().find(|&&x| x != 0)?;
        let inv = field.inv(lead).expect("nonzero");
        Some(ProjectivePoint {
            coords: v.map(|x| field.mul(x, inv)),
        })
    }

    pub fn coords(&self) -> [Element; 3] {
        self.coords
    }

    pub fn dot(&self, field: &FiniteField, other: &ProjectivePoint) -> Element {
        self.coords
            .iter()
            .zip(other.coords)
            .fold(0, |acc, (&a, b)| field.add(acc, field.mul(a, b)))
    }

    pub fn is_absolute(&self, field: &FiniteField) -> bool {
        self.dot(field, self) == 0
    }

    /// Position in the sorted list of canonical points.
    fn index(&self, q: u32) -> usize {
        let q = q as usize;
        match self.coords.map(|c| c as usize) {
            [0, 0, _] => 0,
            [0, 1, t] => 1 + t,
            [1, s, t] => 1 + q + s * q + t,
            other => unreachable!("non-canonical point {other:?}"),
        }
    }
}

/// All `q^2 + q + 1` canonical points in increasing order.
pub fn projective_points(field: &FiniteField) -> Vec<ProjectivePoint> {
    let q = field.order();
    let mut points = vec![ProjectivePoint { coords: [0, 0, 1] }];
    points.extend((0..q).map(|t| ProjectivePoint { coords: [0, 1, t] }));
    for s in 0..q {
        points.extend((0..q).map(|t| ProjectivePoint { coords: [1, s, t] }));
    }
    points
}

/// The `q + 1` points orthogonal to `x` (possibly including `x` itself).
fn perp_line(field: &FiniteField, x: &ProjectivePoint) -> Vec<ProjectivePoint> {
    let [a, b, c] = x.coords;
    let q = field.order();
    let mut line = Vec::with_capacity(q as usize + 1);
    // (1, s, t): a + b s + c t = 0
    for s in 0..q {
        let partial = field.add(a, field.mul(b, s));
        if c != 0 {
            let t = field.div(field.neg(partial), c);
            line.push([1, s, t]);
        } else if partial == 0 {
            line.extend((0..q).map(|t| [1, s, t]));
        }
    }
    // (0, 1, t): b + c t = 0
    if c != 0 {
        line.push([0, 1, field.div(field.neg(b), c)]);
    } else if b == 0 {
        line.extend((0..q).map(|t| [0, 1, t]));
    }
    if c == 0 {
        line.push([0, 0, 1]);
    }
    line.into_iter().map(|coords| ProjectivePoint { coords }).collect()
}

/// Polarity graph over GF(q): points adjacent when orthogonal, loops dropped.
pub fn polarity_graph(q: u64) -> Result<Graph> {
    let field = FiniteField::new(q)?;
    Ok(polarity_graph_over(&field))
}

pub fn polarity_graph_over(field: &FiniteField) -> Graph {
    let q = field.order();
    let points = projective_points(field);
    let adj = points
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let mut nbrs: Vec<usize> = perp_line(field, x)
                .iter()
                .map(|y| y.index(q))
                .filter(|&j| j != i)
                .collect();
            nbrs.sort_unstable();
            nbrs
        })
        .collect();
    let mut graph = Graph::from_sorted_adjacency(adj);
    for (i, x) in points.iter().enumerate() {
        if x.is_absolute(field) {
            graph.set_label(i, ABSOLUTE);
        }
    }
    graph
}

/// The punctured polarity graph with its two far-apart vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuncturedPolarity {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
    /// Id of the deleted absolute point in the full polarity graph.
    pub deleted: usize,
}

/// Deletes an absolute point `z` and every edge between `N(u)` and `N(v)`
/// for neighbours `u, v` of `z`, searching `(u, v)` pairs in lexicographic
/// order until the result has order `q^2 + q`, minimum degree at least
/// `q - 1`, `d(u, v) = 4`, diameter 4 and no 4-cycle.
pub fn punctured_polarity(q: u64) -> Result<PuncturedPolarity> {
    let field = FiniteField::new(q)?;
    if q < 4 {
        return Err(Error::ParameterOutOfRange(format!(
            "punctured polarity graph needs q >= 4, got {q}"
        )));
    }
    let full = polarity_graph_over(&field);
    let z = full
        .find_label(ABSOLUTE)
        .expect("every polarity graph has absolute points");
    let mut trace = format!("q={q}, deleted absolute point z={z}\n");
    let star = full.neighbors(z).to_vec();
    for (i, &u) in star.iter().enumerate() {
        for &v in &star[i + 1..] {
            let candidate = puncture(&full, z, u, v);
            match validate_punctured(&candidate, q as usize) {
                Ok(()) => return Ok(candidate),
                Err(why) => {
                    let _ = writeln!(trace, "  (u={u}, v={v}) rejected: {why}");
                }
            }
        }
    }
    Err(Error::ConstructionFailed { trace })
}

fn puncture(full: &Graph, z: usize, u: usize, v: usize) -> PuncturedPolarity {
    let (nu, nv) = (full.neighbors(u), full.neighbors(v));
    let joins = |a: usize, b: usize| {
        (nu.contains(&a) && nv.contains(&b)) || (nv.contains(&a) && nu.contains(&b))
    };
    let renumber = |x: usize| if x > z { x - 1 } else { x };
    let edges = full
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != z && b != z && !joins(a, b))
        .map(|(a, b)| (renumber(a), renumber(b)));
    let mut graph = Graph::from_edges(full.n() - 1, edges).expect("subgraph edges are valid");
    for (&x, text) in full.labels() {
        if x != z {
            graph.set_label(renumber(x), text.clone());
        }
    }
    let (u, v) = (renumber(u), renumber(v));
    graph.set_label(u, "u");
    graph.set_label(v, "v");
    PuncturedPolarity {
        graph,
        u,
        v,
        deleted: z,
    }
}

fn validate_punctured(h: &PuncturedPolarity, q: usize) -> std::result::Result<(), String> {
    let g = &h.graph;
    if g.n() != q * q + q {
        return Err(format!("order {} != {}", g.n(), q * q + q));
    }
    let min_degree = g.degrees().into_iter().min().unwrap_or(0);
    if min_degree + 1 < q {
        return Err(format!("minimum degree {min_degree} < {}", q - 1));
    }
    let duv = g.bfs_distances(h.u).expect("u in range")[h.v];
    if duv != 4 {
        let shown = if duv == UNREACHABLE { "unreachable".to_string() } else { duv.to_string() };
        return Err(format!("d(u,v) = {shown} != 4"));
    }
    let diam = eccentricities(g)
        .map_err(|e| e.to_string())?
        .into_iter()
        .max()
        .unwrap_or(0);
    if diam != 4 {
        return Err(format!("diameter {diam} != 4"));
    }
    if let Some(w) = g.find_forbidden(crate::graph::Forbidden::C4) {
        return Err(format!("contains 4-cycle {w:?}"));
    }
    Ok(())
}
