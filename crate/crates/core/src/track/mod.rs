//! Tracks: parameterised vertex sequences spanning polygon paths.

mod index;
mod placement;

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::exact_geom::modular::ModPoint;
use crate::exact_geom::{collinear_filtered, format_rational, Line, Point, Rational, Segment};

pub use index::{BBox, SegmentIndex};
pub use placement::{perturb_to_separated, place_vertex, Obstacles, PlacementBudget};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrackError {
    #[error("a track needs at least two entries, got {0}")]
    TooShort(usize),
    #[error("parameters must increase strictly at entry {0}")]
    NonIncreasing(usize),
    #[error("consecutive vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("parameter {param} outside [{lo}; {hi}]")]
    OutOfDomain {
        param: String,
        lo: String,
        hi: String,
    },
    #[error("tracks do not share a parameter grid")]
    GridMismatch,
    #[error("no admissible perturbation found for vertex {0}")]
    PerturbationExhausted(usize),
}

/// A sequence `((s_0, x_0), ..., (s_k, x_k))` with strictly increasing
/// parameters and distinct consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Track {
    params: Vec<Rational>,
    vertices: Vec<Point>,
    residues: Vec<Option<ModPoint>>,
}

impl Track {
    pub fn new(entries: Vec<(Rational, Point)>) -> Result<Self, TrackError> {
        let (params, vertices) = entries.into_iter().unzip();
        Self::from_parts(params, vertices)
    }

    pub fn from_parts(params: Vec<Rational>, vertices: Vec<Point>) -> Result<Self, TrackError> {
        assert_eq!(params.len(), vertices.len(), "one parameter per vertex");
        if params.len() < 2 {
            return Err(TrackError::TooShort(params.len()));
        }
        for i in 1..params.len() {
            if params[i - 1] >= params[i] {
                return Err(TrackError::NonIncreasing(i));
            }
            if vertices[i - 1] == vertices[i] {
                return Err(TrackError::RepeatedVertex(i - 1, i));
            }
        }
        let residues = vertices.iter().map(ModPoint::of).collect();
        Ok(Self {
            params,
            vertices,
            residues,
        })
    }

    /// Number of entries, `k + 1`.
    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn segment_count(&self) -> usize {
        self.params.len() - 1
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, &Point)> {
        self.params.iter().zip(&self.vertices)
    }

    pub fn first_param(&self) -> &Rational {
        &self.params[0]
    }

    pub fn last_param(&self) -> &Rational {
        self.params.last().expect("non-empty")
    }

    pub fn first_vertex(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn last_vertex(&self) -> &Point {
        self.vertices.last().expect("non-empty")
    }

    pub fn segment(&self, i: usize) -> Segment {
        Segment::new(self.vertices[i].clone(), self.vertices[i + 1].clone())
            .expect("track vertices are distinct")
    }

    /// Evaluates the polygon path `h_p` at `s`.
    pub fn eval(&self, s: &Rational) -> Result<Point, TrackError> {
        if s < self.first_param() || s > self.last_param() {
            return Err(TrackError::OutOfDomain {
                param: format_rational(s),
                lo: format_rational(self.first_param()),
                hi: format_rational(self.last_param()),
            });
        }
        let i = match self.params.binary_search(s) {
            Ok(i) => return Ok(self.vertices[i].clone()),
            Err(i) => i - 1,
        };
        let lambda = (s - &self.params[i]) / (&self.params[i + 1] - &self.params[i]);
        Ok(self.vertices[i].lerp(&self.vertices[i + 1], &lambda))
    }

    /// Maps a parameter inside segment `i` from the segment-local `lambda`.
    pub fn param_at(&self, i: usize, lambda: &Rational) -> Rational {
        &self.params[i] + lambda * (&self.params[i + 1] - &self.params[i])
    }

    /// `V(p)`.
    pub fn vertex_set(&self) -> BTreeSet<Point> {
        self.vertices.iter().cloned().collect()
    }

    /// `L(p)`: lines through consecutive vertices.
    pub fn line_set(&self) -> LineSet {
        LineSet(
            self.vertices
                .windows(2)
                .map(|w| Line::through(&w[0], &w[1]).expect("distinct"))
                .collect(),
        )
    }

    /// `L̄(p)`: lines through all pairs of distinct vertices.
    pub fn full_line_set(&self) -> LineSet {
        let distinct: Vec<Point> = self.vertex_set().into_iter().collect();
        let mut lines = BTreeSet::new();
        for i in 0..distinct.len() {
            for j in i + 1..distinct.len() {
                lines.insert(Line::through(&distinct[i], &distinct[j]).expect("distinct"));
            }
        }
        LineSet(lines)
    }

    /// Is `y` on some line of `L(p)`?
    pub fn lines_contain(&self, y: &Point, ym: Option<ModPoint>) -> bool {
        (0..self.segment_count()).any(|i| {
            collinear_filtered(
                (&self.vertices[i], self.residues[i]),
                (&self.vertices[i + 1], self.residues[i + 1]),
                (y, ym),
            )
        })
    }

    /// Does the line through `a` and `b` contain a vertex of `p`?
    pub fn vertices_on_line(
        &self,
        a: (&Point, Option<ModPoint>),
        b: (&Point, Option<ModPoint>),
    ) -> bool {
        (0..self.len()).any(|i| collinear_filtered(a, b, (&self.vertices[i], self.residues[i])))
    }

    /// Sub-track of entries `from..=to`.
    pub fn slice(&self, from: usize, to: usize) -> Result<Track, TrackError> {
        Track::from_parts(
            self.params[from..=to].to_vec(),
            self.vertices[from..=to].to_vec(),
        )
    }

    /// Inserts the entry `(t, h_p(t))`; the spanned path is unchanged.
    pub fn with_redundant_vertex(&self, t: &Rational) -> Result<Track, TrackError> {
        let x = self.eval(t)?;
        let pos = match self.params.binary_search(t) {
            Ok(_) => return Ok(self.clone()),
            Err(pos) => pos,
        };
        let mut params = self.params.clone();
        let mut vertices = self.vertices.clone();
        params.insert(pos, t.clone());
        vertices.insert(pos, x);
        Track::from_parts(params, vertices)
    }

    pub fn index(&self) -> SegmentIndex<'_> {
        SegmentIndex::build(self)
    }

    pub fn bbox(&self) -> BBox {
        BBox::of_points(&self.vertices)
    }
}

/// A deduplicated set of canonical lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LineSet(pub BTreeSet<Line>);

impl LineSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.0.iter().any(|l| l.contains(p))
    }
}

/// `p ⋈ q`: no vertex of either track lies on a segment line of the other.
pub fn weakly_separated(p: &Track, q: &Track) -> bool {
    let clear = |a: &Track, b: &Track| {
        (0..a.len()).all(|i| !b.lines_contain(&a.vertices[i], a.residues[i]))
    };
    clear(p, q) && clear(q, p)
}

/// Squared sup-distance `max_i |x_i - y_i|^2` of two tracks on one grid;
/// bounds the squared distance of the spanned paths everywhere.
pub fn sup_track_distance(p: &Track, other: &Track) -> Result<Rational, TrackError> {
    if p.params != other.params {
        return Err(TrackError::GridMismatch);
    }
    Ok(p.vertices
        .iter()
        .zip(&other.vertices)
        .map(|(a, b)| a.sq_dist(b))
        .max()
        .unwrap_or_else(Rational::zero))
}
