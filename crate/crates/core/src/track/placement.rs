//! Deterministic dyadic-spiral vertex placement.
//!
//! Candidates are scanned ring by ring on a square lattice of a given pitch
//! around a base point. The first candidate that passes every exact predicate
//! is accepted.

use crate::exact_geom::modular::ModPoint;
use crate::exact_geom::{int, Point, Rational};

use super::{Track, TrackError};

/// Tracks whose vertex and line sets a new vertex must avoid.
#[derive(Clone, Copy, Debug, Default)]
pub struct Obstacles<'a> {
    pub tracks: &'a [&'a Track],
}

impl<'a> Obstacles<'a> {
    pub fn new(tracks: &'a [&'a Track]) -> Self {
        Self { tracks }
    }

    pub fn none() -> Self {
        Self { tracks: &[] }
    }

    fn admits(
        &self,
        y: &Point,
        ym: Option<ModPoint>,
        prev: Option<(&Point, Option<ModPoint>)>,
    ) -> bool {
        if let Some((p, _)) = prev {
            if p == y {
                return false;
            }
        }
        for t in self.tracks {
            if t.lines_contain(y, ym) {
                return false;
            }
            if let Some(prev) = prev {
                if t.vertices_on_line(prev, (y, ym)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Lattice pitch and ring limit of a spiral search.
#[derive(Clone, Debug)]
pub struct PlacementBudget {
    pub pitch: Rational,
    pub max_ring: u32,
}

/// Lattice offsets `(i, j)` with `max(|i|, |j|) = r`, in a fixed order.
fn ring(r: i64) -> impl Iterator<Item = (i64, i64)> {
    let (top, right, bottom, left): (Vec<_>, Vec<_>, Vec<_>, Vec<_>) = if r == 0 {
        (vec![(0, 0)], vec![], vec![], vec![])
    } else {
        (
            (-r..=r).map(|i| (i, r)).collect(),
            (-r..r).rev().map(|j| (r, j)).collect(),
            (-r..r).rev().map(|i| (i, -r)).collect(),
            (-r + 1..r).map(|j| (-r, j)).collect(),
        )
    };
    top.into_iter().chain(right).chain(bottom).chain(left)
}

/// First lattice point around `base` that differs from `prev`, lies on no
/// line of the obstacles, and whose line to `prev` misses all obstacle
/// vertices.
pub fn place_vertex(
    base: &Point,
    prev: Option<&Point>,
    budget: &PlacementBudget,
    obstacles: &Obstacles<'_>,
) -> Option<Point> {
    let prev = prev.map(|p| (p, ModPoint::of(p)));
    for r in 0..=budget.max_ring as i64 {
        for (i, j) in ring(r) {
            let candidate = if i == 0 && j == 0 {
                base.clone()
            } else {
                base.offset(&(&budget.pitch * int(i)), &(&budget.pitch * int(j)))
            };
            let cm = ModPoint::of(&candidate);
            if obstacles.admits(&candidate, cm, prev) {
                return Some(candidate);
            }
        }
    }
    None
}

/// Moves each vertex of `p` by less than `delta` so that the result is weakly
/// separated from both `q` and `q2`. Keeps the parameter grid.
pub fn perturb_to_separated(
    p: &Track,
    q: &Track,
    q2: &Track,
    delta: &Rational,
) -> Result<Track, TrackError> {
    let avoid = [q, q2];
    let obstacles = Obstacles::new(&avoid);
    let mut placed: Vec<Point> = Vec::with_capacity(p.len());
    for (i, x) in p.vertices().iter().enumerate() {
        let mut found = None;
        // Pitch delta / 2^level with ring radius below 0.7 * 2^level keeps
        // every offset strictly inside the delta ball.
        for level in 3..=12u32 {
            let budget = PlacementBudget {
                pitch: delta * crate::exact_geom::eps(level),
                max_ring: ((1u64 << level) * 7 / 10) as u32,
            };
            found = place_vertex(x, placed.last(), &budget, &obstacles);
            if found.is_some() {
                break;
            }
        }
        placed.push(found.ok_or(TrackError::PerturbationExhausted(i))?);
    }
    Track::from_parts(p.params().to_vec(), placed)
}
