//! Exact average-eccentricity invariants for simple graphs.
//!
//! The crate computes eccentricity statistics with exact rational
//! arithmetic, evaluates upper and lower bounds on the average eccentricity
//! in terms of order, minimum degree and maximum degree, generates the
//! extremal families that show those bounds are tight, and replays the
//! constructive argument behind each upper bound on a concrete graph as a
//! checkable [`certify::Certificate`].
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod bounds;
pub mod certify;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{sequential_sum, DegreeSummary, Forbidden, Graph, UNREACHABLE};
pub use metrics::{eccentricity_profile, EccentricityProfile, EdgeWeighting, VertexWeighting};
pub use rational::Rational;
