use super::RefineError;
use crate::exact_geom::{eps, min_exponent_below, Interval, Rational};
use crate::parity::{certify_alpha, evaluate_parity, function_parity, sharpen_alpha, Parity};
use crate::paths::{dyadic_grid, n_approximation, PathOracle};

/// Extra precision of the `g` approximation used for the distances `d_i`:
/// vertex, path and root errors total `7 * 2^-(n+9) < 2^-n / 16`.
const DISTANCE_GUARD: u32 = 9;

/// Grid indices where boundaries may be placed: both ends, and every high
/// index next to a low one. Between consecutive chosen indices all interior
/// indices are on the same side of the threshold.
fn boundary_indices(low: &[bool]) -> Vec<usize> {
    let k = low.len() - 1;
    (0..=k)
        .filter(|&i| {
            i == 0
                || i == k
                || (!low[i] && (low[i - 1] || low.get(i + 1).copied().unwrap_or(false)))
        })
        .collect()
}

pub(crate) fn shrink_first_unchecked(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    n: u32,
    effort: u32,
) -> Result<Interval, RefineError> {
    let grid = dyadic_grid(i, f.modulus(n + 4))?;
    let fine = n + DISTANCE_GUARD;
    let q = n_approximation(g, j, fine)?;
    let index = q.index();
    // With d_i the lower end of the width-2^-fine root enclosure, d_i < 2^-(n+1)
    // holds exactly when the squared distance is below 2^-2(n+1), because
    // 2^-(n+1) is a multiple of 2^-fine.
    let threshold = eps(n + 1);
    let bound = &threshold * &threshold;
    let low: Vec<bool> = grid
        .iter()
        .map(|s| index.point_within_sq_dist(&f.eval_approx(s, fine), &bound))
        .collect();
    if low[0] || *low.last().unwrap() {
        return Err(RefineError::PreconditionViolated(format!(
            "an end of {i} is within 2^-{} of the other image; 2^-{n} < alpha fails",
            n + 1
        )));
    }
    let chosen = boundary_indices(&low);
    let mut candidates = 0;
    for w in chosen.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b == a + 1 || !low[a + 1] {
            continue;
        }
        candidates += 1;
        let k = Interval::new(grid[a].clone(), grid[b].clone()).expect("increasing grid");
        if function_parity(f, g, &k, j, effort)? == Parity::Odd {
            return Ok(k);
        }
    }
    Err(RefineError::NoOddCandidate(candidates))
}

/// A sub-interval `K` of `I` with `f(K)` inside the `2^-n` neighbourhood of
/// `g(J)`, odd parity against `g|J`, and `alpha_KJ > 0`. Requires
/// `2^-n < alpha_IJ` and `pi(f|I, g|J) = 1`; both are checked.
pub fn shrink_first(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    n: u32,
    effort: u32,
) -> Result<Interval, RefineError> {
    let eval = evaluate_parity(f, g, i, j, effort)?;
    if eval.parity != Parity::Odd {
        return Err(RefineError::PreconditionViolated(format!(
            "parity of {i} against {j} is {}",
            eval.parity
        )));
    }
    if !(eps(n) < eval.alpha.lo) {
        return Err(RefineError::PreconditionViolated(format!(
            "2^-{n} < alpha not certified"
        )));
    }
    shrink_first_unchecked(f, g, i, j, n, effort)
}

/// Smallest `n > m` with `2^-n` below the certified lower bound.
fn precision_for(m: u32, lo: &Rational) -> u32 {
    (m + 1).max(min_exponent_below(lo))
}

/// Shrinks both intervals so that `f(I')` lies within `2^-m` of `g(J)` and
/// `g(J')` within `2^-m` of `f(I')`, keeping parity one.
pub fn shrink_pair(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    m: u32,
    effort: u32,
) -> Result<(Interval, Interval), RefineError> {
    // A sharp lower bound keeps n, and with it the contraction, small.
    let alpha = sharpen_alpha(f, g, i, j, certify_alpha(f, g, i, j, effort)?)?;
    let i2 = shrink_first_unchecked(f, g, i, j, precision_for(m, &alpha.lo), effort)?;
    let alpha = sharpen_alpha(g, f, j, &i2, certify_alpha(g, f, j, &i2, effort)?)?;
    let j2 = shrink_first_unchecked(g, f, j, &i2, precision_for(m, &alpha.lo), effort)?;
    Ok((i2, j2))
}
