//! Exact rational plane geometry.

mod interval;
pub mod modular;
mod point;
mod predicates;
mod rational;
mod sqrt;

pub use interval::{Interval, IntervalError};
pub use point::Point;
pub use predicates::{
    classify_segment_pair, collinear_filtered, nearest_parameter, orient, orient_value,
    point_on_line, sq_dist_point_points, sq_dist_point_segment, sq_dist_segment_segment,
    DegenerateSegment, Line, Orientation, Segment, SegmentRelation,
};
pub use rational::{
    eps, floor_log2, format_rational, half_log2_ceil, int, min_exponent_below, parse_rational,
    pow2, ratio, to_f64, Exact, ParseRationalError, Rational,
};
pub use sqrt::{sqrt_enclosure, DistanceEnclosure};
