//! Orientation and incidence predicates, segment classification and exact
//! squared distances.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modular::{orient_residue, ModPoint};
use super::point::Point;
use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn of(v: &Rational) -> Self {
        if v.is_positive() {
            Orientation::CounterClockwise
        } else if v.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

/// The cross product `(b - a) x (c - a)`.
pub fn orient_value(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

pub fn orient(a: &Point, b: &Point, c: &Point) -> Orientation {
    Orientation::of(&orient_value(a, b, c))
}

/// Exact collinearity test, filtered by residues when they are available.
#[inline]
pub fn collinear_filtered(
    a: (&Point, Option<ModPoint>),
    b: (&Point, Option<ModPoint>),
    c: (&Point, Option<ModPoint>),
) -> bool {
    if let (Some(ma), Some(mb), Some(mc)) = (a.1, b.1, c.1) {
        if orient_residue(ma, mb, mc) != 0 {
            return false;
        }
    }
    orient_value(a.0, b.0, c.0).is_zero()
}

/// A straight line segment between two distinct points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    a: Point,
    b: Point,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("segment endpoints coincide at {0}")]
pub struct DegenerateSegment(pub String);

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, DegenerateSegment> {
        if a == b {
            return Err(DegenerateSegment(a.to_string()));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    pub fn line(&self) -> Line {
        Line::through(&self.a, &self.b).expect("segment endpoints are distinct")
    }
}

/// Canonical line `A x + B y = C` with integer, gcd-reduced coefficients and
/// `(A, B)` lexicographically positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    /// The line through two points, `None` if they coincide.
    pub fn through(p: &Point, q: &Point) -> Option<Line> {
        if p == q {
            return None;
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        Some(Self::canonical(a, b, c))
    }

    /// Line from rational coefficients; `None` if `a = b = 0`.
    pub fn from_coefficients(a: Rational, b: Rational, c: Rational) -> Option<Line> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        Some(Self::canonical(a, b, c))
    }

    fn canonical(a: Rational, b: Rational, c: Rational) -> Line {
        let scale = a.denom().lcm(b.denom()).lcm(c.denom());
        let mut ia = a.numer() * (&scale / a.denom());
        let mut ib = b.numer() * (&scale / b.denom());
        let mut ic = c.numer() * (&scale / c.denom());
        let g = ia.gcd(&ib).gcd(&ic);
        if !g.is_zero() && !g.is_one() {
            ia /= &g;
            ib /= &g;
            ic /= &g;
        }
        if ia.is_negative() || (ia.is_zero() && ib.is_negative()) {
            ia = -ia;
            ib = -ib;
            ic = -ic;
        }
        Line {
            a: ia,
            b: ib,
            c: ic,
        }
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains(&self, p: &Point) -> bool {
        let lhs = Rational::from_integer(self.a.clone()) * &p.x
            + Rational::from_integer(self.b.clone()) * &p.y;
        lhs == Rational::from_integer(self.c.clone())
    }
}

pub fn point_on_line(p: &Point, l: &Line) -> bool {
    l.contains(p)
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentRelation {
    Disjoint,
    /// Interiors cross transversally in exactly this point.
    ProperCrossing(Point),
    /// Closures meet, but not as a transversal interior crossing.
    Touching,
    /// The intersection contains a segment.
    CollinearOverlap,
}

/// Is `p`, known to be collinear with `s`, inside the closed segment?
fn within_collinear(s: &Segment, p: &Point) -> bool {
    let (lx, hx) = min_max(&s.a.x, &s.b.x);
    let (ly, hy) = min_max(&s.a.y, &s.b.y);
    lx <= &p.x && &p.x <= hx && ly <= &p.y && &p.y <= hy
}

fn min_max<'a>(u: &'a Rational, v: &'a Rational) -> (&'a Rational, &'a Rational) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

pub fn classify_segment_pair(s1: &Segment, s2: &Segment) -> SegmentRelation {
    let o1 = orient_value(&s1.a, &s1.b, &s2.a);
    let o2 = orient_value(&s1.a, &s1.b, &s2.b);
    let o3 = orient_value(&s2.a, &s2.b, &s1.a);
    let o4 = orient_value(&s2.a, &s2.b, &s1.b);

    if o1.is_zero() && o2.is_zero() {
        // All four points share one line; compare projections on a
        // non-degenerate axis.
        let use_x = s1.a.x != s1.b.x;
        let key = |p: &Point| if use_x { p.x.clone() } else { p.y.clone() };
        let (l1, h1) = ordered(key(&s1.a), key(&s1.b));
        let (l2, h2) = ordered(key(&s2.a), key(&s2.b));
        let lo = l1.max(l2);
        let hi = h1.min(h2);
        return if lo < hi {
            SegmentRelation::CollinearOverlap
        } else if lo == hi {
            SegmentRelation::Touching
        } else {
            SegmentRelation::Disjoint
        };
    }

    let opposite = |u: &Rational, v: &Rational| {
        (u.is_positive() && v.is_negative()) || (u.is_negative() && v.is_positive())
    };
    if opposite(&o1, &o2) && opposite(&o3, &o4) {
        let lambda = &o3 / (&o3 - &o4);
        return SegmentRelation::ProperCrossing(s1.a.lerp(&s1.b, &lambda));
    }

    let touches = (o1.is_zero() && within_collinear(s1, &s2.a))
        || (o2.is_zero() && within_collinear(s1, &s2.b))
        || (o3.is_zero() && within_collinear(s2, &s1.a))
        || (o4.is_zero() && within_collinear(s2, &s1.b));
    if touches {
        SegmentRelation::Touching
    } else {
        SegmentRelation::Disjoint
    }
}

fn ordered(u: Rational, v: Rational) -> (Rational, Rational) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Parameter `lambda` in `[0, 1]` of the point of `[a, b]` nearest to `p`.
pub fn nearest_parameter(p: &Point, a: &Point, b: &Point) -> Rational {
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let len2 = &dx * &dx + &dy * &dy;
    let dot = (&p.x - &a.x) * &dx + (&p.y - &a.y) * &dy;
    if !dot.is_positive() {
        Rational::zero()
    } else if dot >= len2 {
        Rational::one()
    } else {
        dot / len2
    }
}

/// Squared distance from `p` to the closed segment `[a, b]`; `a = b` allowed.
pub fn sq_dist_point_points(p: &Point, a: &Point, b: &Point) -> Rational {
    if a == b {
        return p.sq_dist(a);
    }
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let (px, py) = (&p.x - &a.x, &p.y - &a.y);
    let dot = &px * &dx + &py * &dy;
    if !dot.is_positive() {
        return p.sq_dist(a);
    }
    let len2 = &dx * &dx + &dy * &dy;
    if dot >= len2 {
        return p.sq_dist(b);
    }
    // Foot inside the segment: squared height of the triangle.
    let cross = &dx * &py - &dy * &px;
    &cross * &cross / len2
}

pub fn sq_dist_point_segment(p: &Point, s: &Segment) -> Rational {
    sq_dist_point_points(p, &s.a, &s.b)
}

pub fn sq_dist_segment_segment(s1: &Segment, s2: &Segment) -> Rational {
    if classify_segment_pair(s1, s2) != SegmentRelation::Disjoint {
        return Rational::zero();
    }
    [
        sq_dist_point_segment(&s1.a, s2),
        sq_dist_point_segment(&s1.b, s2),
        sq_dist_point_segment(&s2.a, s1),
        sq_dist_point_segment(&s2.b, s1),
    ]
    .into_iter()
    .min()
    .expect("four candidates")
}
