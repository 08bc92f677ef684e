//! The three extremal families and their closed-form total eccentricities.

use std::fmt;

use super::field::prime_power;
use super::polarity::{polarity_graph, punctured_polarity, ABSOLUTE};
use crate::error::{Error, Result};
use crate::graph::{sequential_sum, Graph};
use crate::rational::{int, ratio, Rational};

/// Parameters of one family member, in `(delta, Delta, k)` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    /// Cliques chained by bridges, one end a `K_Delta`.
    Chain { delta: u64, max_delta: u64, k: u64 },
    /// Sequential sum of independent sets, triangle-free.
    Layered { delta: u64, max_delta: u64, k: u64 },
    /// Punctured polarity graphs chained, `m` polarity graphs glued at one end.
    C4Chain { q: u64, k: u64, m: u64 },
}

fn out_of_range(msg: String) -> Error {
    Error::ParameterOutOfRange(msg)
}

impl FamilyParams {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilyParams::Chain { delta, max_delta, k } => {
                if delta < 1 || max_delta < delta + 1 || k < 2 {
                    return Err(out_of_range(format!(
                        "chain needs delta >= 1, Delta >= delta + 1, k >= 2 (got {self})"
                    )));
                }
                // An inner K_2 without its edge falls apart.
                if delta == 1 && k >= 3 {
                    return Err(out_of_range(format!(
                        "chain with k >= 3 needs delta >= 2 (got {self})"
                    )));
                }
            }
            FamilyParams::Layered { delta, max_delta, k } => {
                if delta < 2 || k < 4 || k % 4 != 0 || max_delta < delta + delta.div_ceil(2) {
                    return Err(out_of_range(format!(
                        "layered needs delta >= 2, k >= 4 with k = 0 mod 4, \
                         Delta >= delta + ceil(delta/2) (got {self})"
                    )));
                }
            }
            FamilyParams::C4Chain { q, k, .. } => {
                if prime_power(q).is_none() {
                    return Err(Error::NotPrimePower(q));
                }
                if q < 4 || k < 1 {
                    return Err(out_of_range(format!(
                        "c4 chain needs a prime power q >= 4 and k >= 1 (got {self})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilyParams::Chain { delta, max_delta, k } => chain_graph(delta, max_delta, k),
            FamilyParams::Layered { delta, max_delta, k } => layered_graph(delta, max_delta, k),
            FamilyParams::C4Chain { q, k, m } => c4_chain_graph(q, k, m),
        }
    }

    /// Order predicted by the construction.
    pub fn order(&self) -> u64 {
        match *self {
            FamilyParams::Chain { delta, max_delta, k } => max_delta + (delta + 1) * (k - 1),
            FamilyParams::Layered { delta, max_delta, k } => {
                max_delta + delta * k / 2 - delta.div_ceil(2)
            }
            FamilyParams::C4Chain { q, k, m } => (m + k) * (q * q + q),
        }
    }

    pub fn min_degree(&self) -> u64 {
        match *self {
            FamilyParams::Chain { delta, .. } | FamilyParams::Layered { delta, .. } => delta,
            FamilyParams::C4Chain { q, .. } => q - 1,
        }
    }

    /// Maximum degree predicted by the construction.
    ///
    /// For the c4 chain without glued polarity graphs (`m = 0`) vertex `y`
    /// has degree `q`, but untouched vertices of each punctured copy keep
    /// degree `q + 1`, so the maximum is `q + 1` there.
    pub fn max_degree(&self) -> u64 {
        match *self {
            FamilyParams::Chain { max_delta, .. } | FamilyParams::Layered { max_delta, .. } => {
                max_delta
            }
            FamilyParams::C4Chain { q, m, .. } => ((m + 1) * (q + 1) - 1).max(q + 1),
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Chain { delta, max_delta, k } => {
                write!(f, "chain(delta={delta}, Delta={max_delta}, k={k})")
            }
            FamilyParams::Layered { delta, max_delta, k } => {
                write!(f, "layered(delta={delta}, Delta={max_delta}, k={k})")
            }
            FamilyParams::C4Chain { q, k, m } => write!(f, "c4chain(q={q}, k={k}, m={m})"),
        }
    }
}

/// `k - 1` copies of `K_{delta+1}` and one `K_Delta`, chained by bridges.
///
/// Clique `i` occupies a contiguous id block. In the inner cliques the two
/// lowest ids are `u_i` and `v_i`: the edge between them is removed, the
/// bridge from the previous clique lands on `u_i` and the bridge to the next
/// leaves from `v_i`. The first clique's bridge leaves from its lowest id,
/// and the last clique's bridge lands on its lowest id.
pub fn chain_graph(delta: u64, max_delta: u64, k: u64) -> Result<Graph> {
    FamilyParams::Chain { delta, max_delta, k }.validate()?;
    let (s, big, k) = ((delta + 1) as usize, max_delta as usize, k as usize);
    let n = big + s * (k - 1);
    let start = |i: usize| (i - 1) * s; // clique i, 1-based
    let size = |i: usize| if i == k { big } else { s };
    let mut edges = Vec::new();
    for i in 1..=k {
        let b = start(i);
        for x in b..b + size(i) {
            for y in x + 1..b + size(i) {
                let inner_cut = i > 1 && i < k && x == b && y == b + 1;
                if !inner_cut {
                    edges.push((x, y));
                }
            }
        }
    }
    let leaving = |i: usize| if i == 1 { start(1) } else { start(i) + 1 };
    for i in 1..k {
        edges.push((leaving(i), start(i + 1)));
    }
    let mut g = Graph::from_edges(n, edges)?;
    g.set_label(start(1), "v1");
    for i in 2..k {
        g.set_label(start(i), format!("u{i}"));
        g.set_label(start(i) + 1, format!("v{i}"));
    }
    g.set_label(start(k), format!("u{k}"));
    Ok(g)
}

/// Part sizes of the layered sequential sum, 1-based part `i` at index `i - 1`.
pub fn layered_part_sizes(delta: u64, max_delta: u64, k: u64) -> Result<Vec<u64>> {
    FamilyParams::Layered { delta, max_delta, k }.validate()?;
    let (lo, hi) = (delta / 2, delta.div_ceil(2));
    Ok((1..=k)
        .map(|i| match i {
            2 => max_delta - hi,
            _ if i == k - 1 => delta,
            _ if i % 4 == 0 || i % 4 == 3 => hi,
            _ => lo,
        })
        .collect())
}

/// Sequential sum of independent sets sized by [`layered_part_sizes`].
pub fn layered_graph(delta: u64, max_delta: u64, k: u64) -> Result<Graph> {
    let parts: Vec<Graph> = layered_part_sizes(delta, max_delta, k)?
        .into_iter()
        .map(|size| Graph::empty(size as usize))
        .collect();
    sequential_sum(&parts)
}

/// Chains `k` punctured polarity graphs by edges `v_i u_{i+1}` and glues `m`
/// polarity graphs onto `u_1` at one vertex each.
///
/// The punctured copies come first, each in its own id block. Each glued
/// polarity graph contributes its vertices except the lowest-indexed vertex
/// of degree `q + 1`, which is identified with `u_1`; the merged vertex
/// keeps `u_1`'s id and carries the label `y`.
pub fn c4_chain_graph(q: u64, k: u64, m: u64) -> Result<Graph> {
    FamilyParams::C4Chain { q, k, m }.validate()?;
    let star = punctured_polarity(q)?;
    let full = polarity_graph(q)?;
    let block = star.graph.n();
    let (k, m) = (k as usize, m as usize);
    let glue = (0..full.n())
        .find(|&x| full.degree(x) as u64 == q + 1)
        .expect("polarity graphs have non-absolute points");
    let y = star.u;
    let n = k * block + m * (full.n() - 1);

    let mut edges = Vec::new();
    for i in 0..k {
        let off = i * block;
        edges.extend(star.graph.edges().into_iter().map(|(a, b)| (a + off, b + off)));
        if i + 1 < k {
            edges.push((star.v + off, star.u + off + block));
        }
    }
    for j in 0..m {
        let off = k * block + j * (full.n() - 1);
        let place = |x: usize| match x.cmp(&glue) {
            std::cmp::Ordering::Equal => y,
            std::cmp::Ordering::Less => off + x,
            std::cmp::Ordering::Greater => off + x - 1,
        };
        edges.extend(full.edges().into_iter().map(|(a, b)| (place(a), place(b))));
    }
    let mut g = Graph::from_edges(n, edges)?;
    for i in 0..k {
        g.set_label(star.u + i * block, format!("u{}*", i + 1));
        g.set_label(star.v + i * block, format!("v{}*", i + 1));
    }
    g.set_label(y, "y");
    for (&x, text) in full.labels() {
        if text == ABSOLUTE && x != glue {
            for j in 0..m {
                let off = k * block + j * (full.n() - 1);
                let id = if x < glue { off + x } else { off + x - 1 };
                g.set_label(id, ABSOLUTE);
            }
        }
    }
    Ok(g)
}

/// Closed-form total eccentricity of a family member.
///
/// Exact for CHAIN (both parities of `k`) and LAYERED. For C4CHAIN the
/// value is a lower bound on the total eccentricity.
pub fn closed_form_ex(params: &FamilyParams) -> Result<Rational> {
    params.validate()?;
    Ok(match *params {
        FamilyParams::Chain { delta, max_delta, k } => {
            let (d, dm, k) = (delta as i64, max_delta as i64, k as i64);
            let even = int(3 * (k - 1) * (dm + d + 1) - 2)
                + int(6 * (d + 1)) * (ratio(3 * k * k, 8) - ratio(5 * k, 4) + int(1));
            // The clique sum assumes an even number of blocks.
            if k % 2 == 0 {
                even
            } else {
                even - ratio(3 * (d + 1), 4) + int(2)
            }
        }
        FamilyParams::Layered { delta, max_delta, k } => {
            let (d, dm, k) = (delta as i64, max_delta as i64, k as i64);
            int(d) * (ratio(3 * k * k, 8) - ratio(k, 4)) + int((dm - (d + 1) / 2) * (k - 2))
        }
        FamilyParams::C4Chain { q, k, m } => {
            let (q, k, m) = (q as i64, k as i64, m as i64);
            int(5 * k * (q * q + q)) * (ratio(3 * k, 4) + int(m) - ratio(1, 2))
        }
    })
}
