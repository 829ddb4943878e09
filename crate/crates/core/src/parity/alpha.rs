use num_traits::{Signed, Zero};

use super::ParityError;
use crate::exact_geom::{
    eps, format_rational, int, min_exponent_below, sqrt_enclosure, Interval, Rational,
};
use crate::paths::{n_approximation, PathError, PathOracle};
use crate::track::Track;

/// Rational bounds `lo <= alpha <= hi` obtained from `precision`-approximations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaEnclosure {
    pub lo: Rational,
    pub hi: Rational,
    pub precision: u32,
}

impl AlphaEnclosure {
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }
}

/// Bounds on the distance from the end vertices of `from` to the path of `to`.
fn endpoint_term(from: &Track, to: &Track, n: u32) -> (Rational, Rational) {
    let index = to.index();
    let sq = index
        .sq_dist_to_point(from.first_vertex())
        .min(index.sq_dist_to_point(from.last_vertex()));
    let root = sqrt_enclosure(&sq, n);
    // Vertex error 2^-n plus polygon-path deviation 5 * 2^-n.
    let budget = eps(n) * int(6);
    let lo = &root.lo - &budget;
    let lo = if lo.is_negative() {
        Rational::zero()
    } else {
        lo
    };
    (lo, root.hi + budget)
}

/// Encloses `alpha_IJ`, the smaller of the distances from `{f(a_I), f(b_I)}`
/// to `g(J)` and from `{g(a_J), g(b_J)}` to `f(I)`, with width at most
/// `13 * 2^-n`.
pub fn alpha_enclosure(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    n: u32,
) -> Result<AlphaEnclosure, ParityError> {
    let p = n_approximation(f, i, n)?;
    let q = n_approximation(g, j, n)?;
    let (lo1, hi1) = endpoint_term(&p, &q, n);
    let (lo2, hi2) = endpoint_term(&q, &p, n);
    Ok(AlphaEnclosure {
        lo: lo1.min(lo2),
        hi: hi1.min(hi2),
        precision: n,
    })
}

/// Precision at which the search for a positive lower bound starts.
const START_PRECISION: u32 = 5;

/// Starts at the larger of 5 and the scale of the shorter interval, then
/// raises the precision one step at a time, at most `effort` times, until the
/// enclosure proves `alpha > 0`.
pub fn certify_alpha(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    effort: u32,
) -> Result<AlphaEnclosure, ParityError> {
    // Below the scale of the shorter interval coarser grids carry no
    // information, and grids at this scale have only a few points.
    let shortest = i.len().min(j.len());
    let start = START_PRECISION.max(min_exponent_below(&shortest));
    let first = alpha_enclosure(f, g, i, j, start)?;
    let n = start.max(min_exponent_below(&(&first.hi / int(16))));
    let mut current = if n == start {
        first
    } else {
        alpha_enclosure(f, g, i, j, n)?
    };
    let mut steps = 0;
    while !current.is_positive() && steps < effort {
        steps += 1;
        match alpha_enclosure(f, g, i, j, current.precision + 1) {
            Ok(next) => current = next,
            // Finer grids are out of reach; treat as running out of effort.
            Err(ParityError::Path(PathError::GridTooLarge(_))) => break,
            Err(e) => return Err(e),
        }
    }
    if current.is_positive() {
        Ok(current)
    } else {
        Err(ParityError::EffortExhausted {
            effort,
            lo: format_rational(&current.lo),
            hi: format_rational(&current.hi),
        })
    }
}

/// Raises the precision of a positive enclosure until `16 * 2^-p < lo`. The
/// width bound `13 * 2^-p` then forces `lo > alpha / 2`.
pub fn sharpen_alpha(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    mut alpha: AlphaEnclosure,
) -> Result<AlphaEnclosure, ParityError> {
    assert!(
        alpha.is_positive(),
        "only positive enclosures can be sharpened"
    );
    while !(eps(alpha.precision) * int(16) < alpha.lo) {
        // Both enclosures hold, so keep their intersection.
        let next = alpha_enclosure(f, g, i, j, alpha.precision + 1)?;
        alpha = AlphaEnclosure {
            lo: next.lo.max(alpha.lo),
            hi: next.hi.min(alpha.hi),
            precision: next.precision,
        };
    }
    Ok(alpha)
}
