use num_traits::{One, Zero};

use super::{PathError, PathOracle, SharedPath};
use crate::exact_geom::{eps, int, Interval, Point, Rational};

/// Which corner pair the extended path joins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `(t, 0)` before the inner path, `(t, 1)` after: from `(0,0)` to `(1,1)`.
    Lower,
    /// `(t, 1)` before, `(t, 0)` after: from `(0,1)` to `(1,0)`.
    Upper,
}

impl Side {
    /// Required values of the inner path at 0 and 1.
    pub fn corners(self) -> (Point, Point) {
        match self {
            Side::Lower => (Point::from_ints(0, 0), Point::from_ints(1, 1)),
            Side::Upper => (Point::from_ints(0, 1), Point::from_ints(1, 0)),
        }
    }

    fn tail_heights(self) -> (Rational, Rational) {
        match self {
            Side::Lower => (Rational::zero(), Rational::one()),
            Side::Upper => (Rational::one(), Rational::zero()),
        }
    }
}

/// A unit-square path extended by horizontal tails to `[-1; 2]`.
#[derive(Clone, Debug)]
pub struct ExtendedPath {
    inner: SharedPath,
    side: Side,
}

/// Precision at which endpoint conditions are tested.
const ENDPOINT_PRECISION: u32 = 32;

pub fn extend(inner: SharedPath, side: Side) -> Result<ExtendedPath, PathError> {
    let domain = inner.domain();
    if domain != Interval::unit() {
        return Err(PathError::WrongDomain(domain.to_string()));
    }
    let (start, end) = side.corners();
    let bound = eps(ENDPOINT_PRECISION - 1);
    let bound = &bound * &bound;
    for (t, corner, name) in [
        (Rational::zero(), start, "path(0)"),
        (Rational::one(), end, "path(1)"),
    ] {
        let found = inner.eval_approx(&t, ENDPOINT_PRECISION);
        if found.sq_dist(&corner) > bound {
            return Err(PathError::EndpointViolation {
                which: name.to_string(),
                found: found.to_string(),
                expected: corner.to_string(),
            });
        }
    }
    Ok(ExtendedPath { inner, side })
}

impl ExtendedPath {
    pub fn inner(&self) -> &SharedPath {
        &self.inner
    }

    pub fn side(&self) -> Side {
        self.side
    }
}

impl PathOracle for ExtendedPath {
    fn domain(&self) -> Interval {
        Interval::extended_domain()
    }

    fn eval_approx(&self, t: &Rational, n: u32) -> Point {
        let t = if t < &int(-1) {
            int(-1)
        } else if t > &int(2) {
            int(2)
        } else {
            t.clone()
        };
        let (before, after) = self.side.tail_heights();
        if t < Rational::zero() {
            Point::new(t, before)
        } else if t > Rational::one() {
            Point::new(t, after)
        } else {
            self.inner.eval_approx(&t, n)
        }
    }

    fn modulus(&self, n: u32) -> u32 {
        match self.inner.lipschitz_exponent() {
            // Unit-speed tails joined continuously to a 2^e-Lipschitz middle.
            Some(e) => n + e,
            // Across a junction the two halves each get half the budget.
            None => self.inner.modulus(n + 1).max(n + 1),
        }
    }

    fn lipschitz_exponent(&self) -> Option<u32> {
        self.inner.lipschitz_exponent()
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}
