//! Executable versions of the upper-bound arguments.
//!
//! [`certify`] runs the constructive part of an argument on a concrete
//! graph (greedy packing or matching, spanning tree, weight transfer,
//! contracted power graph) and records every intermediate inequality with
//! exact operands. Nothing is repaired: a failing step shows up as a failed
//! [`Check`] carrying its `lhs` and `rhs`.

mod checks;
mod greedy;
mod matching;
mod packing;
mod tree;

use std::fmt;
use std::str::FromStr;

pub use checks::{Check, Fact, Relation};
pub use greedy::{greedy_spaced_matching, greedy_spaced_packing, Matching, Packing};
pub use matching::MatchingCertificate;
pub use packing::PackingCertificate;

use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// General graphs, via a 2-packing.
    Thm1,
    /// Triangle-free graphs, via a spaced matching.
    Thm2,
    /// C4-free graphs, via a 4-packing.
    Thm3,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [Theorem::Thm1, Theorem::Thm2, Theorem::Thm3];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm1 => "thm1",
            Theorem::Thm2 => "thm2",
            Theorem::Thm3 => "thm3",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem {s:?}; expected thm1, thm2 or thm3"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Packing(PackingCertificate),
    Matching(MatchingCertificate),
}

impl Certificate {
    pub fn theorem(&self) -> Theorem {
        match self {
            Certificate::Packing(c) => c.theorem,
            Certificate::Matching(_) => Theorem::Thm2,
        }
    }

    pub fn checks(&self) -> &[Check] {
        match self {
            Certificate::Packing(c) => &c.checks,
            Certificate::Matching(c) => &c.checks,
        }
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        match self {
            Certificate::Packing(c) => &c.tree_edges,
            Certificate::Matching(c) => &c.tree_edges,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.checks().iter().all(Check::holds)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks().iter().filter(|c| !c.holds())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} certificate: {}",
            self.theorem(),
            if self.is_valid() { "VALID" } else { "INVALID" }
        )?;
        for check in self.checks() {
            write!(f, "{check}")?;
        }
        Ok(())
    }
}

/// Runs the argument behind `theorem` on `g`.
///
/// Fails with `NotConnected` on disconnected input, `NotTriangleFree` for
/// [`Theorem::Thm2`] on a graph with a triangle and `NotC4Free` for
/// [`Theorem::Thm3`] on a graph with a 4-cycle.
pub fn certify(g: &Graph, theorem: Theorem) -> Result<Certificate> {
    match theorem {
        Theorem::Thm1 | Theorem::Thm3 => packing::certify_packing(g, theorem).map(Certificate::Packing),
        Theorem::Thm2 => matching::certify_matching(g).map(Certificate::Matching),
    }
}
