//! Certified intersection intervals for planar paths crossing the unit
//! square corner to corner.
//!
//! Paths are queried through precision-indexed oracles, approximated by
//! exact rational tracks, and compared through the parity of their crossing
//! count. Refinement keeps that parity odd while shrinking both parameter
//! intervals, producing a nested sequence whose images converge to a common
//! point.

pub mod exact_geom;
pub mod formats;
pub mod parity;
pub mod paths;
pub mod refine;
pub mod track;
