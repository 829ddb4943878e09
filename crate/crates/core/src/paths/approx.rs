use num_bigint::BigInt;
use num_traits::One;

use super::{PathError, PathOracle};
use crate::exact_geom::{eps, Interval, Point, Rational};
use crate::track::{place_vertex, Obstacles, PlacementBudget, Track};

/// Upper bound on grid sizes; beyond this an approximation is refused.
const MAX_GRID_POINTS: u64 = 1 << 22;

/// Spiral search radius in lattice steps of `2^-(n+8)`. Together with the
/// base error `2^-(n+2)` the total offset stays below `2^-n`.
const MAX_RING: u32 = 128;

/// `a`, every multiple of `2^-(md+1)` strictly inside `(a; b)`, then `b`.
/// Consecutive gaps are below `2^-md`.
pub fn dyadic_grid(interval: &Interval, md: u32) -> Result<Vec<Rational>, PathError> {
    let (a, b) = (interval.lo(), interval.hi());
    let scale = BigInt::one() << (md as usize + 1);
    let scale_r = Rational::from_integer(scale.clone());
    let first: BigInt = (a * &scale_r).floor().to_integer() + 1;
    let last: BigInt = (b * &scale_r).ceil().to_integer() - 1;
    let inner = if last >= first {
        &last - &first + 1
    } else {
        BigInt::from(0)
    };
    if inner >= BigInt::from(MAX_GRID_POINTS) {
        return Err(PathError::GridTooLarge(inner.to_string()));
    }
    let mut grid = vec![a.clone()];
    let mut j = first;
    while j <= last {
        grid.push(Rational::new(j.clone(), scale.clone()));
        j += 1;
    }
    grid.push(b.clone());
    Ok(grid)
}

fn check_interval(f: &dyn PathOracle, interval: &Interval) -> Result<(), PathError> {
    let domain = f.domain();
    if interval.is_degenerate() || !domain.contains_interval(interval) {
        return Err(PathError::BadInterval {
            interval: interval.to_string(),
            domain: domain.to_string(),
        });
    }
    Ok(())
}

/// An `n`-approximation of `f` on `interval` over the dyadic grid for `md`
/// (which must be at least `f.modulus(n)`). Every vertex avoids the lines of
/// `obstacles`, and every connecting line misses their vertices.
pub fn approximate_track(
    f: &dyn PathOracle,
    interval: &Interval,
    n: u32,
    md: u32,
    obstacles: &Obstacles<'_>,
) -> Result<Track, PathError> {
    check_interval(f, interval)?;
    let grid = dyadic_grid(interval, md)?;
    let budget = PlacementBudget {
        pitch: eps(n + 8),
        max_ring: MAX_RING,
    };
    let mut vertices: Vec<Point> = Vec::with_capacity(grid.len());
    for (i, s) in grid.iter().enumerate() {
        let base = f.eval_approx(s, n + 2);
        let v = place_vertex(&base, vertices.last(), &budget, obstacles)
            .ok_or(PathError::PlacementExhausted(i))?;
        vertices.push(v);
    }
    Ok(Track::from_parts(grid, vertices)?)
}

pub fn n_approximation(
    f: &dyn PathOracle,
    interval: &Interval,
    n: u32,
) -> Result<Track, PathError> {
    approximate_track(f, interval, n, f.modulus(n), &Obstacles::none())
}

/// Common grid modulus for a pair of paths.
pub fn pair_modulus(f: &dyn PathOracle, g: &dyn PathOracle, n: u32) -> u32 {
    f.modulus(n).max(g.modulus(n))
}

/// Weakly separated `n`-approximations of `f|I` and `g|J`: `p` first, then
/// `q` with vertices off the lines of `p` and lines clear of `p`'s vertices.
pub fn n_approximation_pair(
    f: &dyn PathOracle,
    g: &dyn PathOracle,
    i: &Interval,
    j: &Interval,
    n: u32,
) -> Result<(Track, Track), PathError> {
    let md = pair_modulus(f, g, n);
    let p = approximate_track(f, i, n, md, &Obstacles::none())?;
    let q = {
        let avoid = [&p];
        approximate_track(g, j, n, md, &Obstacles::new(&avoid))?
    };
    Ok((p, q))
}

/// Checks the defining conditions of an `n`-approximation of `f|I` with grid
/// modulus `md`. Vertex errors are tested against a sharper query of `f`, so
/// a `true` answer is conclusive.
pub fn is_n_approximation(
    p: &Track,
    f: &dyn PathOracle,
    interval: &Interval,
    n: u32,
    md: u32,
) -> bool {
    if p.first_param() != interval.lo() || p.last_param() != interval.hi() {
        return false;
    }
    let gap = eps(md);
    if p.params().windows(2).any(|w| &w[1] - &w[0] >= gap) {
        return false;
    }
    let sharp = n + 20;
    let slack = eps(n) - eps(sharp);
    let bound = &slack * &slack;
    p.entries()
        .all(|(s, x)| f.eval_approx(s, sharp).sq_dist(x) < bound)
}
