//! Path oracles, the corner-to-corner extension, and n-approximations.
//!
//! A path is only ever observed through [`PathOracle::eval_approx`], which
//! returns a rational point within `2^-n` of the true value, together with a
//! modulus of uniform continuity.

mod approx;
mod builtin;
mod extended;

use std::fmt::Debug;
use std::sync::Arc;

use crate::exact_geom::{Interval, Point, Rational};
use crate::track::TrackError;

pub use approx::{
    approximate_track, dyadic_grid, is_n_approximation, n_approximation, n_approximation_pair,
    pair_modulus,
};
pub use builtin::{PolylinePath, QuadBezierPath, TablePath};
pub use extended::{extend, ExtendedPath, Side};

/// A continuous path observed through finite-precision queries.
pub trait PathOracle: Debug + Send + Sync {
    /// Closed parameter domain `[lo; hi]`.
    fn domain(&self) -> Interval;

    /// A rational point strictly within `2^-n` of the path at `t`. Parameters
    /// outside the domain are clamped onto it.
    fn eval_approx(&self, t: &Rational, n: u32) -> Point;

    /// Increasing `md` with `|t - t'| < 2^-md(n)  =>  |f(t) - f(t')| < 2^-n`.
    fn modulus(&self, n: u32) -> u32;

    /// `Some(e)` if the path is Lipschitz with constant at most `2^e`.
    fn lipschitz_exponent(&self) -> Option<u32> {
        None
    }
}

pub type SharedPath = Arc<dyn PathOracle>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("invalid path: {0}")]
    Invalid(String),
    #[error("path must be defined on [0; 1], found {0}")]
    WrongDomain(String),
    #[error("endpoint condition violated: {which} evaluates to {found}, expected {expected}")]
    EndpointViolation {
        which: String,
        found: String,
        expected: String,
    },
    #[error("interval {interval} is not a proper sub-interval of the domain {domain}")]
    BadInterval { interval: String, domain: String },
    #[error("grid with {0} points exceeds the size limit")]
    GridTooLarge(String),
    #[error("no admissible vertex near grid point {0}")]
    PlacementExhausted(usize),
    #[error("asserted modulus violated by samples {i} and {j} at precision {n}")]
    ModulusViolation { i: usize, j: usize, n: u32 },
    #[error(transparent)]
    Track(#[from] TrackError),
}
