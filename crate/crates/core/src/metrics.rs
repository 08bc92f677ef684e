//! Exact eccentricity statistics and vertex/edge weightings.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::rational::{ceil_to_u64, int, ratio, sum, Rational};

/// Per-vertex eccentricities and the aggregates derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<usize>,
    /// Total eccentricity `EX`.
    pub total: u64,
    pub avec: Rational,
    pub diam: usize,
    pub rad: usize,
}

/// Computes every eccentricity with one BFS per vertex.
pub fn eccentricity_profile(g: &Graph) -> Result<EccentricityProfile> {
    let ecc = eccentricities(g)?;
    let total: u64 = ecc.iter().map(|&e| e as u64).sum();
    Ok(EccentricityProfile {
        avec: ratio(total, g.n() as u64),
        diam: *ecc.iter().max().expect("nonempty"),
        rad: *ecc.iter().min().expect("nonempty"),
        total,
        ecc,
    })
}

/// Eccentricity of every vertex; fails on empty or disconnected graphs.
pub fn eccentricities(g: &Graph) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let ecc: Vec<usize> = (0..g.n())
        .into_par_iter()
        .map(|s| {
            g.multi_source_distances(&[s])
                .into_iter()
                .max()
                .expect("nonempty")
        })
        .collect();
    if ecc[0] == UNREACHABLE {
        return Err(Error::NotConnected);
    }
    Ok(ecc)
}

/// Nonnegative rational weights on vertices, with their total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeighting {
    weights: Vec<Rational>,
    total: Rational,
}

impl VertexWeighting {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if let Some((index, w)) = weights.iter().enumerate().find(|(_, w)| w.is_negative()) {
            return Err(Error::NegativeWeight {
                index,
                weight: w.to_string(),
            });
        }
        let total = sum(&weights);
        Ok(VertexWeighting { weights, total })
    }

    pub fn uniform(n: usize) -> Self {
        Self::from_counts(&vec![1; n])
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| int(c)).collect()).expect("counts are nonnegative")
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn total(&self) -> &Rational {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Restriction to the listed vertices, in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        Self::new(vertices.iter().map(|&v| self.weights[v].clone()).collect())
            .expect("restriction keeps weights nonnegative")
    }
}

/// Nonnegative rational weights on edges, keyed by line-graph vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeWeighting {
    weights: BTreeMap<usize, Rational>,
    total: Rational,
}

impl EdgeWeighting {
    pub fn new(weights: BTreeMap<usize, Rational>) -> Result<Self> {
        if let Some((&index, w)) = weights.iter().find(|(_, w)| w.is_negative()) {
            return Err(Error::NegativeWeight {
                index,
                weight: w.to_string(),
            });
        }
        let total = sum(weights.values());
        Ok(EdgeWeighting { weights, total })
    }

    /// Weight of an edge id; edges without an entry weigh zero.
    pub fn weight(&self, edge: usize) -> Rational {
        self.weights.get(&edge).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &BTreeMap<usize, Rational> {
        &self.weights
    }

    pub fn total(&self) -> &Rational {
        &self.total
    }

    /// Dense vertex weighting over `count` line-graph vertices.
    pub fn to_vertex_weighting(&self, count: usize) -> VertexWeighting {
        VertexWeighting::new((0..count).map(|e| self.weight(e)).collect())
            .expect("edge weights are nonnegative")
    }
}

/// `EX_c` and `avec_c = EX_c / N` (the latter `None` when `N = 0`).
pub fn weighted_eccentricity(g: &Graph, c: &VertexWeighting) -> Result<(Rational, Option<Rational>)> {
    if c.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: c.len(),
        });
    }
    let ecc = eccentricities(g)?;
    Ok(weighted_from_ecc(&ecc, c))
}

pub(crate) fn weighted_from_ecc(ecc: &[usize], c: &VertexWeighting) -> (Rational, Option<Rational>) {
    let ex = ecc
        .iter()
        .zip(c.weights())
        .fold(Rational::zero(), |acc, (&e, w)| acc + w * int(e as u64));
    let avec = (!c.total().is_zero()).then(|| &ex / c.total());
    (ex, avec)
}

/// `avec(P_m) = (1/m) * floor(3m^2/4 - m/2)`.
pub fn path_average_eccentricity(m: u64) -> Rational {
    assert!(m >= 1, "path order must be positive");
    let m = num_bigint::BigInt::from(m);
    let numerator: num_bigint::BigInt = (3 * &m * &m - 2 * &m) / 4;
    Rational::new(numerator, m)
}

/// Outcome of comparing `avec_c(G)` against `avec(P_ceil(N))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPathCheck {
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Requires every weight to be at least 1.
pub fn check_weighted_path_bound(g: &Graph, c: &VertexWeighting) -> Result<WeightedPathCheck> {
    if c.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: c.len(),
        });
    }
    if let Some((vertex, w)) = c.weights().iter().enumerate().find(|(_, w)| **w < Rational::one()) {
        return Err(Error::WeightBelowOne {
            vertex,
            weight: w.to_string(),
        });
    }
    let (_, avec) = weighted_eccentricity(g, c)?;
    let lhs = avec.expect("weights >= 1 give positive total");
    let size = ceil_to_u64(c.total()).expect("total is positive");
    let rhs = path_average_eccentricity(size);
    Ok(WeightedPathCheck {
        holds: lhs <= rhs,
        lhs,
        rhs,
    })
}
