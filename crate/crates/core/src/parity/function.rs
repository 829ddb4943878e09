use super::{certify_alpha, crossing_count, sharpen_alpha, AlphaEnclosure, Parity, ParityError};
use crate::exact_geom::{eps, int, Interval};
use crate::paths::{n_approximation_pair, PathOracle};

/// Outcome of a certified parity computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityEvaluation {
    pub parity: Parity,
    pub alpha: AlphaEnclosure,
    /// Precision of the approximation pair whose crossings were counted.
    pub precision: u32,
    /// `None` when the approximations were far enough apart to skip counting.
    pub crossings: Option<usize>,
}

fn pair_parity(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    n: u32,
) -> Result<Option<(Parity, usize)>, ParityError> {
    let (p, q) = n_approximation_pair(f, g, i, j, n)?;
    let far = &eps(n) * int(11);
    if !p.index().within_sq_dist(&q.index(), &(&far * &far)) {
        return Ok(None);
    }
    let report = crossing_count(&p, &q)?;
    Ok(Some((report.parity(), report.count())))
}

/// Crossing parity of a separated `n`-approximation pair of `f|I` and `g|J`.
/// Meaningful as the parity of the paths only when `2^-n < alpha_IJ / 16`.
pub fn parity_at_precision(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    n: u32,
) -> Result<Parity, ParityError> {
    Ok(pair_parity(f, g, i, j, n)?.map_or(Parity::Even, |(parity, _)| parity))
}

pub fn evaluate_parity(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    effort: u32,
) -> Result<ParityEvaluation, ParityError> {
    let alpha = sharpen_alpha(f, g, i, j, certify_alpha(f, g, i, j, effort)?)?;
    // 2^-n < lo / 16 <= alpha / 16 at the enclosure's own precision.
    let n = alpha.precision;
    let counted = pair_parity(f, g, i, j, n)?;
    Ok(ParityEvaluation {
        parity: counted.map_or(Parity::Even, |(parity, _)| parity),
        alpha,
        precision: n,
        crossings: counted.map(|(_, count)| count),
    })
}

/// `pi(f|I, g|J)`. Fails with `EffortExhausted` when `alpha_IJ > 0` cannot be
/// certified within `effort` precision steps.
pub fn function_parity(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    effort: u32,
) -> Result<Parity, ParityError> {
    Ok(evaluate_parity(f, g, i, j, effort)?.parity)
}
