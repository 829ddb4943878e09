use super::{Certificate, RefineError};
use crate::exact_geom::{
    eps, format_rational, int, min_exponent_below, sqrt_enclosure, Point, Rational,
};
use crate::paths::{extend, n_approximation, SharedPath, Side};

/// Closed disc `B(center, radius)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: Point,
    pub radius: Rational,
    /// Record whose interval produced the ball.
    pub m: u32,
}

/// A rational disc of radius at most `epsilon` containing `f(I_m)` for some
/// record; if the intersection is unique it lies in the disc. Records are
/// tried from the last one backwards.
pub fn extract_point(
    cert: &Certificate,
    phi: &SharedPath,
    epsilon: &Rational,
) -> Result<Ball, RefineError> {
    let f = extend(phi.clone(), Side::Lower)?;
    // Inflation 5 * 2^-k stays below epsilon / 4.
    let k0 = min_exponent_below(&(epsilon / int(20)));
    for record in cert.records.iter().rev() {
        let k = k0.max(record.m);
        let p = n_approximation(&f, &record.i, k)?;
        let center = p.bbox().center();
        let far = p
            .vertices()
            .iter()
            .map(|v| v.sq_dist(&center))
            .max()
            .expect("non-empty track");
        let radius = sqrt_enclosure(&far, k).hi + eps(k) * int(5);
        if radius <= *epsilon {
            return Ok(Ball {
                center,
                radius,
                m: record.m,
            });
        }
    }
    Err(RefineError::NotConverged(format_rational(epsilon)))
}
