use super::{PathError, PathOracle};
use crate::exact_geom::{floor_log2, half_log2_ceil, int, pow2, Interval, Point, Rational};

fn clamp(t: &Rational, domain: &Interval) -> Rational {
    if t < domain.lo() {
        domain.lo().clone()
    } else if t > domain.hi() {
        domain.hi().clone()
    } else {
        t.clone()
    }
}

/// Piecewise-linear interpolation of `(param, point)` knots.
fn interpolate(params: &[Rational], points: &[Point], t: &Rational) -> Point {
    match params.binary_search(t) {
        Ok(i) => points[i].clone(),
        Err(0) => points[0].clone(),
        Err(i) if i == params.len() => points[i - 1].clone(),
        Err(i) => {
            let lambda = (t - &params[i - 1]) / (&params[i] - &params[i - 1]);
            points[i - 1].lerp(&points[i], &lambda)
        }
    }
}

fn check_knots(params: &[Rational], points: &[Point]) -> Result<(), PathError> {
    if params.len() != points.len() {
        return Err(PathError::Invalid(format!(
            "{} parameters for {} points",
            params.len(),
            points.len()
        )));
    }
    if params.len() < 2 {
        return Err(PathError::Invalid("need at least two knots".into()));
    }
    if params.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PathError::Invalid(
            "knot parameters must increase strictly".into(),
        ));
    }
    Ok(())
}

/// Exact polygonal path through rational vertices. Consecutive vertices may
/// coincide (the path rests).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylinePath {
    params: Vec<Rational>,
    points: Vec<Point>,
    lipschitz: u32,
}

impl PolylinePath {
    pub fn new(params: Vec<Rational>, points: Vec<Point>) -> Result<Self, PathError> {
        check_knots(&params, &points)?;
        let lipschitz = params
            .windows(2)
            .zip(points.windows(2))
            .map(|(t, p)| {
                let dt = &t[1] - &t[0];
                half_log2_ceil(&(p[0].sq_dist(&p[1]) / (&dt * &dt)))
            })
            .max()
            .unwrap_or(0);
        Ok(Self {
            params,
            points,
            lipschitz,
        })
    }

    /// Vertices at uniform parameters `i / k` on `[0; 1]`.
    pub fn uniform(points: Vec<Point>) -> Result<Self, PathError> {
        if points.len() < 2 {
            return Err(PathError::Invalid("need at least two knots".into()));
        }
        let k = (points.len() - 1) as i64;
        let params = (0..=k).map(|i| Rational::new(i.into(), k.into())).collect();
        Self::new(params, points)
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

impl PathOracle for PolylinePath {
    fn domain(&self) -> Interval {
        Interval::new(self.params[0].clone(), self.params.last().unwrap().clone())
            .expect("increasing knots")
    }

    fn eval_approx(&self, t: &Rational, _n: u32) -> Point {
        interpolate(&self.params, &self.points, &clamp(t, &self.domain()))
    }

    fn modulus(&self, n: u32) -> u32 {
        n + self.lipschitz
    }

    fn lipschitz_exponent(&self) -> Option<u32> {
        Some(self.lipschitz)
    }
}

/// Quadratic Bézier arc on `[0; 1]`, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadBezierPath {
    control: [Point; 3],
    lipschitz: u32,
}

impl QuadBezierPath {
    pub fn new(p0: Point, p1: Point, p2: Point) -> Self {
        // |B'(t)| <= 2 max(|p1 - p0|, |p2 - p1|) by convexity of the hodograph.
        let legs = p0.sq_dist(&p1).max(p1.sq_dist(&p2));
        let lipschitz = half_log2_ceil(&(legs * int(4)));
        Self {
            control: [p0, p1, p2],
            lipschitz,
        }
    }

    pub fn control(&self) -> &[Point; 3] {
        &self.control
    }

    /// Exact value at `t` (no clamping).
    pub fn point_at(&self, t: &Rational) -> Point {
        let [p0, p1, p2] = &self.control;
        let q0 = p0.lerp(p1, t);
        let q1 = p1.lerp(p2, t);
        q0.lerp(&q1, t)
    }
}

impl PathOracle for QuadBezierPath {
    fn domain(&self) -> Interval {
        Interval::unit()
    }

    fn eval_approx(&self, t: &Rational, _n: u32) -> Point {
        self.point_at(&clamp(t, &Interval::unit()))
    }

    fn modulus(&self, n: u32) -> u32 {
        n + self.lipschitz
    }

    fn lipschitz_exponent(&self) -> Option<u32> {
        Some(self.lipschitz)
    }
}

/// Sampled path, linearly interpolated, with a caller-asserted modulus
/// `md(n) = n + shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TablePath {
    params: Vec<Rational>,
    points: Vec<Point>,
    modulus_shift: u32,
}

impl TablePath {
    pub fn new(
        params: Vec<Rational>,
        points: Vec<Point>,
        modulus_shift: u32,
    ) -> Result<Self, PathError> {
        check_knots(&params, &points)?;
        Ok(Self {
            params,
            points,
            modulus_shift,
        })
    }

    /// Rejects sample pairs that provably contradict the asserted modulus.
    pub fn validate(&self) -> Result<(), PathError> {
        let shift = self.modulus_shift as i64;
        for i in 0..self.params.len() {
            for j in i + 1..self.params.len() {
                let dt = &self.params[j] - &self.params[i];
                // Largest N with 2^-N > dt is -floor_log2(dt) - 1; the
                // tightest constrained precision is n = N - shift.
                let n = -floor_log2(&dt) - 1 - shift;
                if n < 0 {
                    // Larger gaps are only further apart; nothing to check.
                    continue;
                }
                let bound = pow2(-2 * n);
                if self.points[i].sq_dist(&self.points[j]) >= bound {
                    return Err(PathError::ModulusViolation { i, j, n: n as u32 });
                }
            }
        }
        Ok(())
    }

    pub fn modulus_shift(&self) -> u32 {
        self.modulus_shift
    }
}

impl PathOracle for TablePath {
    fn domain(&self) -> Interval {
        Interval::new(self.params[0].clone(), self.params.last().unwrap().clone())
            .expect("increasing knots")
    }

    fn eval_approx(&self, t: &Rational, _n: u32) -> Point {
        interpolate(&self.params, &self.points, &clamp(t, &self.domain()))
    }

    fn modulus(&self, n: u32) -> u32 {
        n + self.modulus_shift
    }
}
