//! Residues modulo the Mersenne prime 2^61 - 1.
//!
//! A rational with denominator coprime to the modulus maps to a field element,
//! and the map is a ring homomorphism. A nonzero residue of a polynomial
//! expression therefore proves the exact value is nonzero; a zero residue
//! proves nothing and must be settled by exact arithmetic.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::ToPrimitive;

use super::point::Point;
use super::rational::Rational;

pub const MODULUS: u64 = (1 << 61) - 1;

#[inline]
fn reduce(v: u128) -> u64 {
    let m = MODULUS as u128;
    let folded = (v & m) + (v >> 61);
    let folded = (folded & m) + (folded >> 61);
    let r = folded as u64;
    if r >= MODULUS {
        r - MODULUS
    } else {
        r
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

fn magnitude_residue(v: &BigUint) -> u64 {
    (v % MODULUS).to_u64().expect("remainder below modulus")
}

fn int_residue(v: &BigInt) -> u64 {
    let mag = magnitude_residue(v.magnitude());
    if v.sign() == Sign::Minus && mag != 0 {
        MODULUS - mag
    } else {
        mag
    }
}

/// Residue of a rational, or `None` when the modulus divides the denominator.
pub fn residue(r: &Rational) -> Option<u64> {
    let den = int_residue(r.denom());
    if den == 0 {
        return None;
    }
    let num = int_residue(r.numer());
    Some(mul(num, pow(den, MODULUS - 2)))
}

/// Residues of both coordinates of a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModPoint {
    pub x: u64,
    pub y: u64,
}

impl ModPoint {
    pub fn of(p: &Point) -> Option<ModPoint> {
        Some(ModPoint {
            x: residue(&p.x)?,
            y: residue(&p.y)?,
        })
    }
}

/// Residue of the cross product `(b - a) x (c - a)`.
#[inline]
pub fn orient_residue(a: ModPoint, b: ModPoint, c: ModPoint) -> u64 {
    let l = mul(sub(b.x, a.x), sub(c.y, a.y));
    let r = mul(sub(b.y, a.y), sub(c.x, a.x));
    sub(l, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::{int, ratio};

    #[test]
    fn residues_respect_arithmetic() {
        let a = ratio(-7, 3);
        let b = ratio(5, 1 << 40);
        let ra = residue(&a).unwrap();
        let rb = residue(&b).unwrap();
        assert_eq!(residue(&(&a * &b)).unwrap(), mul(ra, rb));
        assert_eq!(residue(&(&a + &b)).unwrap(), add(ra, rb));
        assert_eq!(residue(&(&a - &b)).unwrap(), sub(ra, rb));
        assert_eq!(residue(&int(0)).unwrap(), 0);
        let bad = Rational::new(BigInt::from(1), BigInt::from(MODULUS));
        assert_eq!(residue(&bad), None);
    }
}
