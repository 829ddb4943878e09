//! Bounding-box hierarchy over the segments of a track.
//!
//! Consecutive segments of a polygon path are spatially coherent, so splitting
//! the index range in halves gives a usable tree without any sorting.

use num_traits::Zero;

use super::Track;
use crate::exact_geom::{sq_dist_point_points, Point, Rational};

const LEAF_SIZE: usize = 4;

/// Axis-aligned rational box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBox {
    pub min_x: Rational,
    pub max_x: Rational,
    pub min_y: Rational,
    pub max_y: Rational,
}

impl BBox {
    pub fn of_points<'a>(points: impl IntoIterator<Item = &'a Point>) -> BBox {
        let mut it = points.into_iter();
        let first = it.next().expect("at least one point");
        let mut b = BBox {
            min_x: first.x.clone(),
            max_x: first.x.clone(),
            min_y: first.y.clone(),
            max_y: first.y.clone(),
        };
        for p in it {
            b.include(p);
        }
        b
    }

    fn include(&mut self, p: &Point) {
        if p.x < self.min_x {
            self.min_x = p.x.clone();
        }
        if p.x > self.max_x {
            self.max_x = p.x.clone();
        }
        if p.y < self.min_y {
            self.min_y = p.y.clone();
        }
        if p.y > self.max_y {
            self.max_y = p.y.clone();
        }
    }

    fn union(&self, other: &BBox) -> BBox {
        BBox {
            min_x: self.min_x.clone().min(other.min_x.clone()),
            max_x: self.max_x.clone().max(other.max_x.clone()),
            min_y: self.min_y.clone().min(other.min_y.clone()),
            max_y: self.max_y.clone().max(other.max_y.clone()),
        }
    }

    pub fn center(&self) -> Point {
        let two = crate::exact_geom::int(2);
        Point::new(
            (&self.min_x + &self.max_x) / &two,
            (&self.min_y + &self.max_y) / &two,
        )
    }

    /// Squared distance from `p` to the box (zero inside).
    pub fn sq_dist_point(&self, p: &Point) -> Rational {
        let dx = gap(&self.min_x, &self.max_x, &p.x);
        let dy = gap(&self.min_y, &self.max_y, &p.y);
        &dx * &dx + &dy * &dy
    }

    /// Squared distance between two boxes.
    pub fn sq_dist_box(&self, other: &BBox) -> Rational {
        let dx = box_gap(&self.min_x, &self.max_x, &other.min_x, &other.max_x);
        let dy = box_gap(&self.min_y, &self.max_y, &other.min_y, &other.max_y);
        &dx * &dx + &dy * &dy
    }

    /// Do the closed boxes meet?
    pub fn overlaps(&self, other: &BBox) -> bool {
        self.min_x <= other.max_x
            && other.min_x <= self.max_x
            && self.min_y <= other.max_y
            && other.min_y <= self.max_y
    }
}

fn gap(lo: &Rational, hi: &Rational, v: &Rational) -> Rational {
    if v < lo {
        lo - v
    } else if v > hi {
        v - hi
    } else {
        Rational::zero()
    }
}

fn box_gap(lo1: &Rational, hi1: &Rational, lo2: &Rational, hi2: &Rational) -> Rational {
    if hi1 < lo2 {
        lo2 - hi1
    } else if hi2 < lo1 {
        lo1 - hi2
    } else {
        Rational::zero()
    }
}

#[derive(Clone, Debug)]
struct Node {
    bbox: BBox,
    lo: usize,
    hi: usize,
    children: Option<(usize, usize)>,
}

/// Spatial index over the segments `[x_i, x_{i+1}]` of a track.
#[derive(Clone, Debug)]
pub struct SegmentIndex<'a> {
    track: &'a Track,
    seg_boxes: Vec<BBox>,
    nodes: Vec<Node>,
}

impl<'a> SegmentIndex<'a> {
    pub fn build(track: &'a Track) -> Self {
        let v = track.vertices();
        let seg_boxes: Vec<BBox> = (0..track.segment_count())
            .map(|i| BBox::of_points([&v[i], &v[i + 1]]))
            .collect();
        let mut index = SegmentIndex {
            track,
            seg_boxes,
            nodes: Vec::new(),
        };
        index.build_node(0, track.segment_count());
        index
    }

    fn build_node(&mut self, lo: usize, hi: usize) -> usize {
        let id = self.nodes.len();
        if hi - lo <= LEAF_SIZE {
            let bbox = self.seg_boxes[lo..hi]
                .iter()
                .skip(1)
                .fold(self.seg_boxes[lo].clone(), |acc, b| acc.union(b));
            self.nodes.push(Node {
                bbox,
                lo,
                hi,
                children: None,
            });
            return id;
        }
        self.nodes.push(Node {
            bbox: self.seg_boxes[lo].clone(),
            lo,
            hi,
            children: None,
        });
        let mid = lo + (hi - lo) / 2;
        let left = self.build_node(lo, mid);
        let right = self.build_node(mid, hi);
        self.nodes[id].bbox = self.nodes[left].bbox.union(&self.nodes[right].bbox);
        self.nodes[id].children = Some((left, right));
        id
    }

    pub fn track(&self) -> &'a Track {
        self.track
    }

    pub fn bbox(&self) -> &BBox {
        &self.nodes[0].bbox
    }

    pub fn segment_box(&self, i: usize) -> &BBox {
        &self.seg_boxes[i]
    }

    fn seg_sq_dist_point(&self, i: usize, p: &Point) -> Rational {
        let v = self.track.vertices();
        sq_dist_point_points(p, &v[i], &v[i + 1])
    }

    /// Exact squared distance from `p` to the spanned polygon path.
    pub fn sq_dist_to_point(&self, p: &Point) -> Rational {
        let mut best: Option<Rational> = None;
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            if let Some(b) = &best {
                if node.bbox.sq_dist_point(p) >= *b {
                    continue;
                }
            }
            match node.children {
                Some((l, r)) => {
                    // Visit the nearer child first for tighter pruning.
                    let dl = self.nodes[l].bbox.sq_dist_point(p);
                    let dr = self.nodes[r].bbox.sq_dist_point(p);
                    if dl <= dr {
                        stack.push(r);
                        stack.push(l);
                    } else {
                        stack.push(l);
                        stack.push(r);
                    }
                }
                None => {
                    for i in node.lo..node.hi {
                        if let Some(b) = &best {
                            if self.seg_boxes[i].sq_dist_point(p) >= *b {
                                continue;
                            }
                        }
                        let d = self.seg_sq_dist_point(i, p);
                        if best.as_ref().is_none_or(|b| d < *b) {
                            best = Some(d);
                        }
                    }
                }
            }
        }
        best.expect("index has at least one segment")
    }

    /// Is the squared distance from `p` to the path strictly below `bound`?
    pub fn point_within_sq_dist(&self, p: &Point, bound: &Rational) -> bool {
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            if node.bbox.sq_dist_point(p) >= *bound {
                continue;
            }
            match node.children {
                Some((l, r)) => {
                    stack.push(r);
                    stack.push(l);
                }
                None => {
                    for i in node.lo..node.hi {
                        if self.seg_boxes[i].sq_dist_point(p) < *bound
                            && self.seg_sq_dist_point(i, p) < *bound
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Pairs `(i, j)` of segments of `self` and `other` whose boxes meet,
    /// sorted lexicographically.
    pub fn overlapping_pairs(&self, other: &SegmentIndex<'_>) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0usize)];
        while let Some((a, b)) = stack.pop() {
            let na = &self.nodes[a];
            let nb = &other.nodes[b];
            if !na.bbox.overlaps(&nb.bbox) {
                continue;
            }
            match (na.children, nb.children) {
                (None, None) => {
                    for i in na.lo..na.hi {
                        for j in nb.lo..nb.hi {
                            if self.seg_boxes[i].overlaps(&other.seg_boxes[j]) {
                                out.push((i, j));
                            }
                        }
                    }
                }
                (Some((l, r)), None) => {
                    stack.push((l, b));
                    stack.push((r, b));
                }
                (None, Some((l, r))) => {
                    stack.push((a, l));
                    stack.push((a, r));
                }
                (Some((al, ar)), Some((bl, br))) => {
                    stack.push((al, bl));
                    stack.push((al, br));
                    stack.push((ar, bl));
                    stack.push((ar, br));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Is some point of `self` within squared distance `bound` of `other`?
    pub fn within_sq_dist(&self, other: &SegmentIndex<'_>, bound: &Rational) -> bool {
        let mut stack = vec![(0usize, 0usize)];
        while let Some((a, b)) = stack.pop() {
            let na = &self.nodes[a];
            let nb = &other.nodes[b];
            if na.bbox.sq_dist_box(&nb.bbox) > *bound {
                continue;
            }
            match (na.children, nb.children) {
                (None, None) => {
                    for i in na.lo..na.hi {
                        for j in nb.lo..nb.hi {
                            if self.seg_boxes[i].sq_dist_box(&other.seg_boxes[j]) > *bound {
                                continue;
                            }
                            if self.segment_pair_sq_dist(i, other, j) <= *bound {
                                return true;
                            }
                        }
                    }
                }
                (Some((l, r)), None) => {
                    stack.push((l, b));
                    stack.push((r, b));
                }
                (None, Some((l, r))) => {
                    stack.push((a, l));
                    stack.push((a, r));
                }
                (Some((al, ar)), Some((bl, br))) => {
                    stack.push((al, bl));
                    stack.push((al, br));
                    stack.push((ar, bl));
                    stack.push((ar, br));
                }
            }
        }
        false
    }

    fn segment_pair_sq_dist(&self, i: usize, other: &SegmentIndex<'_>, j: usize) -> Rational {
        let s1 = self.track.segment(i);
        let s2 = other.track.segment(j);
        crate::exact_geom::sq_dist_segment_segment(&s1, &s2)
    }
}
