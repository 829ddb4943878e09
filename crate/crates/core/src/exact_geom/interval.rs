use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, int, Rational};

/// Closed rational interval `[lo; hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("interval bounds out of order: {lo} > {hi}")]
pub struct IntervalError {
    pub lo: String,
    pub hi: String,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, IntervalError> {
        if lo > hi {
            return Err(IntervalError {
                lo: format_rational(&lo),
                hi: format_rational(&hi),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Self::new(int(lo), int(hi)).expect("ordered integer bounds")
    }

    /// `[-1; 2]`, the domain of the extended paths.
    pub fn extended_domain() -> Self {
        Self::from_ints(-1, 2)
    }

    pub fn unit() -> Self {
        Self::new(Rational::zero(), Rational::one()).expect("ordered")
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn len(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo <= t && t <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        Interval::new(lo, hi).ok()
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}; {}]",
            format_rational(&self.lo),
            format_rational(&self.hi)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::ratio;

    #[test]
    fn containment_and_intersection() {
        let a = Interval::from_ints(-1, 2);
        let b = Interval::new(ratio(1, 3), ratio(1, 2)).unwrap();
        assert!(a.contains_interval(&b));
        assert!(!b.contains_interval(&a));
        assert_eq!(a.intersect(&Interval::unit()), Some(Interval::unit()));
        assert_eq!(Interval::from_ints(3, 4).intersect(&Interval::unit()), None);
        assert!(Interval::new(int(1), int(0)).is_err());
        assert_eq!(b.midpoint(), ratio(5, 12));
    }
}
