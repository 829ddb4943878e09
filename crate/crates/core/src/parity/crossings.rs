use super::{Parity, ParityError};
use crate::exact_geom::{classify_segment_pair, orient_value, Point, Rational, SegmentRelation};
use crate::track::{weakly_separated, Track};

/// One transversal meeting of `h_p` and `h_q`, at `h_p(s) = h_q(t) = point`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub p_segment: usize,
    pub q_segment: usize,
    pub s: Rational,
    pub t: Rational,
    pub point: Point,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossingReport {
    pub crossings: Vec<Crossing>,
}

impl CrossingReport {
    pub fn count(&self) -> usize {
        self.crossings.len()
    }

    pub fn parity(&self) -> Parity {
        Parity::of_count(self.count())
    }
}

/// All crossings of two weakly separated tracks, ordered by segment indices.
///
/// Weak separation keeps every meeting point off the vertices of both
/// tracks, so meetings are exactly the proper segment crossings.
pub fn crossing_count(p: &Track, q: &Track) -> Result<CrossingReport, ParityError> {
    if !weakly_separated(p, q) {
        return Err(ParityError::NotSeparated);
    }
    let (ip, iq) = (p.index(), q.index());
    let mut crossings = Vec::new();
    for (i, j) in ip.overlapping_pairs(&iq) {
        let (sp, sq) = (p.segment(i), q.segment(j));
        match classify_segment_pair(&sp, &sq) {
            SegmentRelation::Disjoint => {}
            SegmentRelation::ProperCrossing(point) => {
                let (a, b) = (sp.a(), sp.b());
                let (c, d) = (sq.a(), sq.b());
                let o3 = orient_value(c, d, a);
                let o4 = orient_value(c, d, b);
                let o1 = orient_value(a, b, c);
                let o2 = orient_value(a, b, d);
                let lp = &o3 / (&o3 - &o4);
                let lq = &o1 / (&o1 - &o2);
                crossings.push(Crossing {
                    p_segment: i,
                    q_segment: j,
                    s: p.param_at(i, &lp),
                    t: q.param_at(j, &lq),
                    point,
                });
            }
            SegmentRelation::Touching => {
                return Err(ParityError::Inconsistent {
                    i,
                    j,
                    relation: "touch",
                })
            }
            SegmentRelation::CollinearOverlap => {
                return Err(ParityError::Inconsistent {
                    i,
                    j,
                    relation: "collinear overlap",
                })
            }
        }
    }
    Ok(CrossingReport { crossings })
}
