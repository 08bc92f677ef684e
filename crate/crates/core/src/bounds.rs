//! Closed-form average-eccentricity bounds in terms of order, minimum degree
//! and maximum degree, and a per-graph report applying each of them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{eccentricity_profile, path_average_eccentricity};
use crate::rational::{ceil_div, int, ratio, Rational};

/// Which bound formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundId {
    /// Path maximum: `(1/n) floor(3n^2/4 - n/2)`.
    Path,
    /// Minimum-degree bound `9n/(4(delta+1)) + 15/4`, for `delta >= 2`.
    Dgs,
    /// Triangle-free minimum-degree bound `3 ceil(n/(2 delta)) + 5`.
    #[serde(rename = "K3FREE")]
    K3Free,
    /// C4-free minimum-degree bound.
    #[serde(rename = "C4FREE")]
    C4Free,
    /// General bound in `n`, `delta`, `Delta`.
    Thm1,
    /// Triangle-free bound in `n`, `delta`, `Delta`.
    Thm2,
    /// C4-free bound in `n`, `delta`, `Delta`.
    Thm3,
    /// Main term of the C4-free lower-bound construction (additive constant dropped).
    Thm4Lower,
}

impl BoundId {
    pub const ALL: [BoundId; 8] = [
        BoundId::Path,
        BoundId::Dgs,
        BoundId::K3Free,
        BoundId::C4Free,
        BoundId::Thm1,
        BoundId::Thm2,
        BoundId::Thm3,
        BoundId::Thm4Lower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Path => "PATH",
            BoundId::Dgs => "DGS",
            BoundId::K3Free => "K3FREE",
            BoundId::C4Free => "C4FREE",
            BoundId::Thm1 => "THM1",
            BoundId::Thm2 => "THM2",
            BoundId::Thm3 => "THM3",
            BoundId::Thm4Lower => "THM4_LOWER",
        }
    }

    pub fn is_lower(self) -> bool {
        self == BoundId::Thm4Lower
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown bound id {s:?}")))
    }
}

/// The neighbourhood-size constants used by the C4-free bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalEpsilons {
    /// `Delta*delta - 2 floor(Delta/2) + 1`.
    pub eps_max: i64,
    /// `delta^2 - 2 floor(delta/2) + 1`.
    pub eps_min: i64,
    /// `(delta+1)(delta+2)`.
    pub eps_min_prime: i64,
}

impl ExtremalEpsilons {
    pub fn new(delta: i64, max_delta: i64) -> Self {
        ExtremalEpsilons {
            eps_max: max_delta * delta - 2 * (max_delta / 2) + 1,
            eps_min: delta * delta - 2 * (delta / 2) + 1,
            eps_min_prime: (delta + 1) * (delta + 2),
        }
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(what.to_string()))
    }
}

/// `(1 + x/(3n))` as an exact rational.
fn correction(x: i64, n: i64) -> Rational {
    Rational::one() + ratio(x, 3 * n)
}

/// Evaluates one bound at `(n, delta, Delta)` exactly.
///
/// PATH reads only `n`; the three minimum-degree bounds read `n` and
/// `delta`; the rest read all three.
pub fn evaluate_bound(id: BoundId, n: u64, delta: u64, max_delta: u64) -> Result<Rational> {
    require(n >= 1, "n >= 1")?;
    let (n, d, dm) = (n as i64, delta as i64, max_delta as i64);
    if id == BoundId::Path {
        return Ok(path_average_eccentricity(n as u64));
    }
    require(d >= 1, "delta >= 1")?;
    require(d < n, "delta <= n - 1")?;
    let uses_max = !matches!(id, BoundId::Dgs | BoundId::K3Free | BoundId::C4Free);
    if uses_max {
        require(d <= dm, "delta <= Delta")?;
        require(dm < n, "Delta <= n - 1")?;
    }
    let eps = ExtremalEpsilons::new(d, dm);
    let value = match id {
        BoundId::Path => unreachable!(),
        BoundId::Dgs => {
            require(d >= 2, "delta >= 2")?;
            ratio(9 * n, 4 * (d + 1)) + ratio(15, 4)
        }
        BoundId::K3Free => int(3 * ceil_div(n, 2 * d) + 5),
        BoundId::C4Free => {
            ratio(15, 4) * int(ceil_div(n, eps.eps_min)) + ratio(11, 2)
        }
        BoundId::Thm1 => {
            ratio(9, 4) * ratio(n - dm - 1, d + 1) * correction(dm - d, n) + int(7)
        }
        BoundId::Thm2 => ratio(3, 2) * ratio(n - dm, d) * correction(dm - d, n) + ratio(19, 2),
        BoundId::Thm3 => {
            ratio(15, 4)
                * ratio(n - eps.eps_max + eps.eps_min, eps.eps_min)
                * correction(eps.eps_max - eps.eps_min, n)
                + ratio(37, 4)
        }
        BoundId::Thm4Lower => {
            ratio(3, 4)
                * ratio(n - eps.eps_max - dm, eps.eps_min_prime)
                * correction(dm * (d + 1), n)
        }
    };
    Ok(value)
}

/// One bound instantiated on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub n: u64,
    pub delta: u64,
    pub max_delta: u64,
    pub applicable: bool,
    /// Why the hypothesis fails, or a note for informational bounds.
    pub reason: Option<String>,
    /// Bound value, when the formula is defined at these parameters.
    pub value: Option<Rational>,
    pub avec: Rational,
    /// `Some(slack >= 0)` for applicable upper bounds; `None` otherwise.
    pub satisfied: Option<bool>,
    /// `value - avec` for upper bounds, `avec - value` for the lower bound.
    pub slack: Option<Rational>,
}

impl BoundReport {
    pub fn is_violation(&self) -> bool {
        self.applicable && self.satisfied == Some(false)
    }
}

/// Applies every bound to a connected graph on at least two vertices.
pub fn check_graph(g: &Graph) -> Result<Vec<BoundReport>> {
    if g.n() < 2 {
        return Err(Error::ParameterOutOfRange("bound reports need n >= 2".into()));
    }
    let profile = eccentricity_profile(g)?;
    let summary = g.degree_summary()?;
    let triangle = g.find_forbidden(crate::graph::Forbidden::Triangle);
    let c4 = g.find_forbidden(crate::graph::Forbidden::C4);
    let (n, delta, max_delta) = (
        g.n() as u64,
        summary.min_degree as u64,
        summary.max_degree as u64,
    );

    let reports = BoundId::ALL
        .into_iter()
        .map(|id| {
            let reason = match id {
                BoundId::Dgs if delta < 2 => Some(format!("minimum degree {delta} < 2")),
                BoundId::K3Free | BoundId::Thm2 => triangle
                    .as_ref()
                    .map(|t| format!("contains triangle ({})", join(t))),
                BoundId::C4Free | BoundId::Thm3 => {
                    c4.as_ref().map(|t| format!("contains 4-cycle ({})", join(t)))
                }
                _ => None,
            };
            let applicable = reason.is_none();
            let value = evaluate_bound(id, n, delta, max_delta).ok();
            let slack = value.as_ref().map(|v| {
                if id.is_lower() {
                    &profile.avec - v
                } else {
                    v - &profile.avec
                }
            });
            let (satisfied, reason) = if id.is_lower() {
                (
                    None,
                    reason.or_else(|| Some("main term of a family lower bound; informational".into())),
                )
            } else if applicable {
                (slack.as_ref().map(|s| !s.is_negative()), reason)
            } else {
                (None, reason)
            };
            BoundReport {
                bound_id: id,
                n,
                delta,
                max_delta,
                applicable: applicable && !id.is_lower(),
                reason,
                value,
                avec: profile.avec.clone(),
                satisfied,
                slack,
            }
        })
        .collect();
    Ok(reports)
}

fn join(t: &[usize]) -> String {
    t.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// True when every applicable upper bound in the reports holds.
pub fn all_satisfied(reports: &[BoundReport]) -> bool {
    reports.iter().all(|r| !r.is_violation())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilons() {
        let e = ExtremalEpsilons::new(3, 9);
        assert_eq!((e.eps_max, e.eps_min, e.eps_min_prime), (20, 8, 20));
        let e = ExtremalEpsilons::new(2, 2);
        assert!(e.eps_max >= e.eps_min);
        assert!(e.eps_min > 0);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(evaluate_bound(BoundId::Path, 5, 0, 0).unwrap(), ratio(16, 5));
        assert_eq!(evaluate_bound(BoundId::Dgs, 20, 3, 3).unwrap(), int(15));
        assert_eq!(evaluate_bound(BoundId::Thm1, 28, 3, 8).unwrap(), ratio(8209, 448));
        assert_eq!(evaluate_bound(BoundId::Thm2, 32, 4, 10).unwrap(), ratio(1169, 64));
        assert_eq!(evaluate_bound(BoundId::Thm3, 60, 3, 9).unwrap(), ratio(133, 4));
        assert_eq!(evaluate_bound(BoundId::Thm4Lower, 60, 3, 9).unwrap(), ratio(279, 200));
        assert_eq!(evaluate_bound(BoundId::K3Free, 32, 4, 10).unwrap(), int(17));
        // 15/4 * ceil(60/8) + 11/2
        assert_eq!(evaluate_bound(BoundId::C4Free, 60, 3, 9).unwrap(), ratio(71, 2));
    }

    #[test]
    fn thm1_factorwise_oracle() {
        // Each factor on its own: 9/4, 19/4, 89/84, then + 7.
        let factors = ratio(9, 4) * ratio(19, 4) * ratio(89, 84);
        assert_eq!(factors + int(7), ratio(8209, 448));
    }

    #[test]
    fn parameter_errors_name_the_constraint() {
        let err = evaluate_bound(BoundId::Dgs, 20, 1, 3).unwrap_err();
        assert_eq!(err, Error::ParameterOutOfRange("delta >= 2".into()));
        let err = evaluate_bound(BoundId::Thm1, 10, 4, 3).unwrap_err();
        assert_eq!(err, Error::ParameterOutOfRange("delta <= Delta".into()));
        let err = evaluate_bound(BoundId::Thm1, 10, 3, 10).unwrap_err();
        assert_eq!(err, Error::ParameterOutOfRange("Delta <= n - 1".into()));
        assert!(evaluate_bound(BoundId::Path, 0, 0, 0).is_err());
    }

    #[test]
    fn triangle_makes_k3free_inapplicable() {
        let reports = check_graph(&Graph::complete(3)).unwrap();
        let k3 = reports.iter().find(|r| r.bound_id == BoundId::K3Free).unwrap();
        assert!(!k3.applicable);
        assert_eq!(k3.reason.as_deref(), Some("contains triangle (0,1,2)"));
        assert_eq!(k3.satisfied, None);
        assert!(all_satisfied(&reports));
    }

    #[test]
    fn lower_bound_is_informational() {
        let reports = check_graph(&Graph::cycle(6)).unwrap();
        let low = reports.iter().find(|r| r.bound_id == BoundId::Thm4Lower).unwrap();
        assert!(!low.applicable);
        assert_eq!(low.satisfied, None);
        assert!(low.value.is_some());
    }

    #[test]
    fn bound_id_parses_names() {
        assert_eq!("thm4_lower".parse::<BoundId>().unwrap(), BoundId::Thm4Lower);
        assert!("thm9".parse::<BoundId>().is_err());
    }
}
