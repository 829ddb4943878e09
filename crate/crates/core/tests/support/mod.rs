//! Shared test machinery: independent oracles and random generators.
//!
//! The oracles deliberately avoid the crate's predicates. Shared code would
//! let one mistake hide itself.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use planar_crossing::exact_geom::{int, ratio, Point, Rational};
use planar_crossing::paths::{
    extend, ExtendedPath, PolylinePath, QuadBezierPath, SharedPath, Side,
};
use planar_crossing::track::Track;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Square-ball alternation classifier.

fn cross(ax: &Rational, ay: &Rational, bx: &Rational, by: &Rational) -> Rational {
    ax * by - ay * bx
}

fn max_norm(dx: &Rational, dy: &Rational) -> Rational {
    dx.abs().max(dy.abs())
}

/// Place of `u` on the boundary of the square `[-1, 1]^2`, counterclockwise
/// from the corner `(1, -1)`, as a number in `[0, 8)`.
fn boundary_position(ux: &Rational, uy: &Rational) -> Rational {
    let one = int(1);
    let minus = int(-1);
    if *ux == one && *uy > minus {
        uy + int(1)
    } else if *uy == one && *ux < one {
        int(2) + (int(1) - ux)
    } else if *ux == minus && *uy < one {
        int(4) + (int(1) - uy)
    } else {
        assert!(*uy == minus, "point not on the unit square");
        int(6) + (ux + int(1))
    }
}

/// Neighbours of the parameter `s` on a track: the vertices just before and
/// just after it, skipping `s` itself when it is a vertex parameter.
fn neighbours(track: &Track, s: &Rational) -> (Point, Point) {
    let params = track.params();
    let vs = track.vertices();
    match params.binary_search(s) {
        Ok(i) => (vs[i - 1].clone(), vs[i + 1].clone()),
        Err(i) => (vs[i - 1].clone(), vs[i].clone()),
    }
}

/// An intersection `(s, t)` of two tracks together with its point.
#[derive(Clone, Debug)]
pub struct Meeting {
    pub s: Rational,
    pub t: Rational,
    pub point: Point,
    pub crossing: bool,
}

/// Interior meetings of `h_p` and `h_q`, each classified by whether the four
/// exit points on a small square around it alternate between the tracks.
/// Panics if the polygon paths share a straight piece.
pub fn alternation_meetings(p: &Track, q: &Track) -> Vec<Meeting> {
    let (ps, pv) = (p.params(), p.vertices());
    let (qs, qv) = (q.params(), q.vertices());
    let mut found: BTreeMap<(Rational, Rational), Point> = BTreeMap::new();
    for i in 0..pv.len() - 1 {
        for j in 0..qv.len() - 1 {
            let (a, b, c, d) = (&pv[i], &pv[i + 1], &qv[j], &qv[j + 1]);
            let (ux, uy) = (&b.x - &a.x, &b.y - &a.y);
            let (vx, vy) = (&d.x - &c.x, &d.y - &c.y);
            let (wx, wy) = (&c.x - &a.x, &c.y - &a.y);
            let den = cross(&ux, &uy, &vx, &vy);
            if den.is_zero() {
                // Parallel. A shared line with overlap would be a common piece.
                if cross(&ux, &uy, &wx, &wy).is_zero() {
                    let along = |p: &Point| (&p.x - &a.x) * &ux + (&p.y - &a.y) * &uy;
                    let len = &ux * &ux + &uy * &uy;
                    let (l, h) = {
                        let (e, f) = (along(c), along(d));
                        if e <= f {
                            (e, f)
                        } else {
                            (f, e)
                        }
                    };
                    let lo = l.max(Rational::zero());
                    let hi = h.min(len.clone());
                    assert!(lo >= hi, "tracks share a straight piece");
                    if lo == hi {
                        let lam = &lo / &len;
                        let x = a.lerp(b, &lam);
                        let mu = if vx.is_zero() {
                            (&x.y - &c.y) / &vy
                        } else {
                            (&x.x - &c.x) / &vx
                        };
                        record(&mut found, ps, qs, i, j, &lam, &mu, x);
                    }
                }
                continue;
            }
            let lam = cross(&wx, &wy, &vx, &vy) / &den;
            let mu = cross(&wx, &wy, &ux, &uy) / &den;
            let unit = |r: &Rational| !r.is_negative() && *r <= int(1);
            if unit(&lam) && unit(&mu) {
                let x = a.lerp(b, &lam);
                record(&mut found, ps, qs, i, j, &lam, &mu, x);
            }
        }
    }
    found
        .into_iter()
        .map(|((s, t), x)| {
            let crossing = alternates(p, q, &s, &t, &x);
            Meeting {
                s,
                t,
                point: x,
                crossing,
            }
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn record(
    found: &mut BTreeMap<(Rational, Rational), Point>,
    ps: &[Rational],
    qs: &[Rational],
    i: usize,
    j: usize,
    lam: &Rational,
    mu: &Rational,
    x: Point,
) {
    let s = &ps[i] + lam * (&ps[i + 1] - &ps[i]);
    let t = &qs[j] + mu * (&qs[j + 1] - &qs[j]);
    let interior = |v: &Rational, grid: &[Rational]| v > &grid[0] && v < &grid[grid.len() - 1];
    if interior(&s, ps) && interior(&t, qs) {
        found.insert((s, t), x);
    }
}

fn alternates(p: &Track, q: &Track, s: &Rational, t: &Rational, x: &Point) -> bool {
    // Inside a square around x that holds no other vertex, each track runs
    // straight from x to its neighbours, so an exit point is the neighbour
    // direction rescaled to max-norm 1; the square's size drops out.
    let exit = |towards: &Point| {
        let (dx, dy) = (&towards.x - &x.x, &towards.y - &x.y);
        let n = max_norm(&dx, &dy);
        boundary_position(&(&dx / &n), &(&dy / &n))
    };
    let (p_before, p_after) = neighbours(p, s);
    let (q_before, q_after) = neighbours(q, t);
    let (a, b) = (exit(&p_before), exit(&p_after));
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let inside = |r: &Rational| *r > lo && *r < hi;
    inside(&exit(&q_before)) != inside(&exit(&q_after))
}

pub fn alternation_crossings(p: &Track, q: &Track) -> usize {
    alternation_meetings(p, q)
        .iter()
        .filter(|m| m.crossing)
        .count()
}

// ---------------------------------------------------------------------------
// Floating-point Bezier subdivision.

pub type Quad = [(f64, f64); 3];

fn split(c: &Quad) -> (Quad, Quad) {
    let mid = |a: (f64, f64), b: (f64, f64)| ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
    let l1 = mid(c[0], c[1]);
    let r1 = mid(c[1], c[2]);
    let m = mid(l1, r1);
    ([c[0], l1, m], [m, r1, c[2]])
}

fn hull_box(c: &Quad) -> (f64, f64, f64, f64) {
    let xs = c.iter().map(|p| p.0);
    let ys = c.iter().map(|p| p.1);
    (
        xs.clone().fold(f64::INFINITY, f64::min),
        ys.clone().fold(f64::INFINITY, f64::min),
        xs.fold(f64::NEG_INFINITY, f64::max),
        ys.fold(f64::NEG_INFINITY, f64::max),
    )
}

fn subdivide(a: &Quad, b: &Quad, tol: f64, depth: u32, out: &mut Vec<(f64, f64)>) {
    let (ax0, ay0, ax1, ay1) = hull_box(a);
    let (bx0, by0, bx1, by1) = hull_box(b);
    if ax1 < bx0 || bx1 < ax0 || ay1 < by0 || by1 < ay0 {
        return;
    }
    let size = (ax1 - ax0).max(ay1 - ay0).max(bx1 - bx0).max(by1 - by0);
    if size < tol || depth > 80 {
        out.push(((ax0 + ax1 + bx0 + bx1) / 4.0, (ay0 + ay1 + by0 + by1) / 4.0));
        return;
    }
    let (a0, a1) = split(a);
    let (b0, b1) = split(b);
    for x in [&a0, &a1] {
        for y in [&b0, &b1] {
            subdivide(x, y, tol, depth + 1, out);
        }
    }
}

/// Intersection points of two quadratic Bezier arcs, by recursive halving
/// with control-polygon boxes; nearby hits are merged.
pub fn bezier_intersections(a: &Quad, b: &Quad, tol: f64) -> Vec<(f64, f64)> {
    let mut raw = Vec::new();
    subdivide(a, b, tol, 0, &mut raw);
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for p in raw {
        if !merged
            .iter()
            .any(|m| (m.0 - p.0).hypot(m.1 - p.1) < 1e3 * tol)
        {
            merged.push(p);
        }
    }
    merged
}

// ---------------------------------------------------------------------------
// Path fixtures and random generators.

pub fn polyline(points: &[(i64, i64, i64)]) -> SharedPath {
    let pts = points
        .iter()
        .map(|&(x, y, d)| Point::new(ratio(x, d), ratio(y, d)))
        .collect();
    Arc::new(PolylinePath::uniform(pts).unwrap())
}

pub fn diagonals() -> (SharedPath, SharedPath) {
    (
        polyline(&[(0, 0, 1), (1, 1, 1)]),
        polyline(&[(0, 1, 1), (1, 0, 1)]),
    )
}

pub const ARC_PHI: Quad = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)];
pub const ARC_PSI: Quad = [(0.0, 1.0), (0.0, 0.0), (1.0, 0.0)];

fn quad(c: &Quad) -> SharedPath {
    let p = |(x, y): (f64, f64)| Point::new(int(x as i64), int(y as i64));
    Arc::new(QuadBezierPath::new(p(c[0]), p(c[1]), p(c[2])))
}

pub fn arcs() -> (SharedPath, SharedPath) {
    (quad(&ARC_PHI), quad(&ARC_PSI))
}

/// Zigzag from (0,0) to (1,1) crossing the anti-diagonal three times.
pub fn zigzag() -> (SharedPath, SharedPath) {
    let pts = vec![
        Point::new(int(0), int(0)),
        Point::new(ratio(1, 5), ratio(9, 10)),
        Point::new(ratio(1, 2), ratio(1, 5)),
        Point::new(ratio(4, 5), ratio(9, 10)),
        Point::new(int(1), int(1)),
    ];
    let params = vec![int(0), ratio(1, 4), ratio(1, 2), ratio(3, 4), int(1)];
    (
        Arc::new(PolylinePath::new(params, pts).unwrap()),
        polyline(&[(0, 1, 1), (1, 0, 1)]),
    )
}

pub fn extended((phi, psi): (SharedPath, SharedPath)) -> (ExtendedPath, ExtendedPath) {
    (
        extend(phi, Side::Lower).unwrap(),
        extend(psi, Side::Upper).unwrap(),
    )
}

/// Uniformly random multiple of `1/den` in `[lo, hi]`.
pub fn grid_value(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rational {
    ratio(rng.gen_range(lo..=hi), den)
}

pub fn grid_point(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Point {
    Point::new(grid_value(rng, lo, hi, den), grid_value(rng, lo, hi, den))
}

/// A track with `k` vertices drawn from a `den`-grid on `[lo, hi]^2` and
/// integer parameters `0..k`; consecutive vertices differ.
pub fn random_track(rng: &mut ChaCha8Rng, k: usize, lo: i64, hi: i64, den: i64) -> Track {
    let mut pts: Vec<Point> = Vec::with_capacity(k);
    while pts.len() < k {
        let p = grid_point(rng, lo, hi, den);
        if pts.last() != Some(&p) {
            pts.push(p);
        }
    }
    Track::from_parts((0..k as i64).map(int).collect(), pts).unwrap()
}

/// A random sub-interval of `[lo, hi]` with endpoints on a `den`-grid.
pub fn random_interval(
    rng: &mut ChaCha8Rng,
    lo: i64,
    hi: i64,
    den: i64,
) -> planar_crossing::exact_geom::Interval {
    loop {
        let a = rng.gen_range(lo * den..=hi * den);
        let b = rng.gen_range(lo * den..=hi * den);
        if a < b {
            return planar_crossing::exact_geom::Interval::new(ratio(a, den), ratio(b, den))
                .unwrap();
        }
    }
}

/// Random tracks on a coarse grid, with `p` nudged off every line and vertex
/// of `q`.
pub fn separated_pair(rng: &mut ChaCha8Rng, k: usize, l: usize) -> (Track, Track) {
    use planar_crossing::track::perturb_to_separated;
    let p = random_track(rng, k, 0, 8, 2);
    let q = random_track(rng, l, 0, 8, 2);
    let p = perturb_to_separated(&p, &q, &q, &ratio(1, 32)).unwrap();
    (p, q)
}

/// Random point of the open disc `B(center, radius)` on a `den`-grid.
fn point_in_disc(rng: &mut ChaCha8Rng, center: &Point, radius: &Rational, den: i64) -> Point {
    let r2 = radius * radius;
    loop {
        let dx = ratio(rng.gen_range(-den..=den), den) * radius;
        let dy = ratio(rng.gen_range(-den..=den), den) * radius;
        let p = center.offset(&dx, &dy);
        if p.sq_dist(center) < r2 {
            return p;
        }
    }
}

/// Track `p`, ball data and the two three-vertex tracks of a triangle move.
#[derive(Debug)]
pub struct TriangleMove {
    pub p: Track,
    pub q1: Track,
    pub q2: Track,
}

/// One random configuration with `y, y'` off the lines of `p`, the four
/// `q` vertices inside a disc `B`, and both ends of `p` outside `B`. The
/// pairs must also be weakly separated so that crossings are proper;
/// returns `None` when a draw fails any condition.
pub fn triangle_move(rng: &mut ChaCha8Rng) -> Option<TriangleMove> {
    use planar_crossing::exact_geom::modular::ModPoint;
    use planar_crossing::track::weakly_separated;
    let center = grid_point(rng, 0, 16, 4);
    let radius = ratio(rng.gen_range(2..=6), 4);
    let r2 = &radius * &radius;
    let k = rng.gen_range(3..=7);
    let mut pts = Vec::with_capacity(k);
    for i in 0..k {
        let v = loop {
            // Inner vertices cluster around the disc so that p passes through it.
            let v = if i == 0 || i == k - 1 {
                grid_point(rng, -16, 32, 4)
            } else {
                center.offset(
                    &(grid_value(rng, -128, 128, 64) * &radius),
                    &(grid_value(rng, -128, 128, 64) * &radius),
                )
            };
            let outside = v.sq_dist(&center) > r2;
            if (i != 0 && i != k - 1) || outside {
                break v;
            }
        };
        if pts.last() == Some(&v) {
            return None;
        }
        pts.push(v);
    }
    let p = Track::from_parts((0..k as i64).map(int).collect(), pts).ok()?;
    let y = point_in_disc(rng, &center, &radius, 256);
    let y2 = point_in_disc(rng, &center, &radius, 256);
    let z1 = point_in_disc(rng, &center, &radius, 256);
    let z2 = point_in_disc(rng, &center, &radius, 256);
    if [&y, &y2]
        .iter()
        .any(|v| p.lines_contain(v, ModPoint::of(v)))
    {
        return None;
    }
    let t2 = ratio(rng.gen_range(1..64), 32);
    let q1 = Track::from_parts(
        vec![int(0), int(1), int(2)],
        vec![y.clone(), z1, y2.clone()],
    )
    .ok()?;
    let q2 = Track::from_parts(vec![int(0), t2, int(2)], vec![y, z2, y2]).ok()?;
    if !weakly_separated(&p, &q1) || !weakly_separated(&p, &q2) {
        return None;
    }
    Some(TriangleMove { p, q1, q2 })
}

/// Squared-distance bounds observed for an approximation `p` of `f|I`:
/// the largest adjacent-vertex distance and the largest deviation over
/// `per_segment` samples on each segment. `f` must evaluate exactly.
pub fn approximation_errors(
    p: &Track,
    f: &dyn planar_crossing::paths::PathOracle,
    per_segment: i64,
) -> (Rational, Rational) {
    let vs = p.vertices();
    let ps = p.params();
    let gap = vs
        .windows(2)
        .map(|w| w[0].sq_dist(&w[1]))
        .max()
        .unwrap_or_default();
    let mut dev = Rational::zero();
    for i in 0..vs.len() - 1 {
        for j in 0..=per_segment {
            let s = &ps[i] + (&ps[i + 1] - &ps[i]) * ratio(j, per_segment);
            let d = p.eval(&s).unwrap().sq_dist(&f.eval_approx(&s, 64));
            dev = dev.max(d);
        }
    }
    (gap, dev)
}
