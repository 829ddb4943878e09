use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::{pow2, Rational};

/// A rational interval known to contain a Euclidean distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceEnclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl DistanceEnclosure {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Encloses `sqrt(q)` in `[lo, hi]` with `lo^2 <= q <= hi^2`, dyadic bounds of
/// width at most `2^-k`. Deterministic in `(q, k)`.
pub fn sqrt_enclosure(q: &Rational, k: u32) -> DistanceEnclosure {
    assert!(!q.is_negative(), "square root of a negative rational");
    if q.is_zero() {
        return DistanceEnclosure {
            lo: Rational::zero(),
            hi: Rational::zero(),
        };
    }
    // floor(q * 4^k), then its integer square root.
    let scaled_num: BigInt = q.numer() << (2 * k as usize);
    let floor = &scaled_num / q.denom();
    let root = floor.sqrt();
    let unit = pow2(-(k as i64));
    let lo = Rational::from_integer(root.clone()) * &unit;
    let exact = &root * &root * q.denom() == scaled_num;
    let hi = if exact {
        lo.clone()
    } else {
        Rational::from_integer(root + 1) * &unit
    };
    DistanceEnclosure { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::{int, ratio};

    /// Independent bisection on rationals.
    fn bisect_sqrt(q: &Rational, k: u32) -> (Rational, Rational) {
        let mut lo = int(0);
        let mut hi = if q > &int(1) { q.clone() } else { int(1) };
        while &hi - &lo > pow2(-(k as i64)) {
            let mid = (&lo + &hi) / int(2);
            if &mid * &mid <= *q {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo, hi)
    }

    #[test]
    fn examples() {
        let e = sqrt_enclosure(&int(4), 10);
        assert_eq!((e.lo, e.hi), (int(2), int(2)));
        let e = sqrt_enclosure(&int(2), 3);
        assert_eq!((e.lo.clone(), e.hi.clone()), (ratio(11, 8), ratio(3, 2)));
        let (blo, bhi) = bisect_sqrt(&int(2), 3);
        assert!(blo <= e.hi && e.lo <= bhi);
        let e = sqrt_enclosure(&int(0), 7);
        assert_eq!((e.lo, e.hi), (int(0), int(0)));
    }

    #[test]
    fn agrees_with_bisection_oracle() {
        for (n, d) in [(1, 3), (7, 2), (1, 1000), (123_456, 7)] {
            let q = ratio(n, d);
            for k in [1, 5, 20] {
                let e = sqrt_enclosure(&q, k);
                let (blo, bhi) = bisect_sqrt(&q, k);
                assert!(&e.lo * &e.lo <= q && q <= &e.hi * &e.hi);
                assert!(e.width() <= pow2(-(k as i64)));
                // Both enclose the same irrational root, so they overlap.
                assert!(e.lo <= bhi && blo <= e.hi);
            }
        }
    }
}
