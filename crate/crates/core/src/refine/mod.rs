//! Certified refinement: parity-preserving interval shrinking and the nested
//! interval sequence converging to an intersection.

mod certificate;
mod extract;
mod shrink;

use crate::parity::ParityError;
use crate::paths::PathError;

pub use certificate::{
    refine_sequence, verify_certificate, Certificate, RefineOptions, RefinementRecord,
    VerifyOptions,
};
pub use extract::{extract_point, Ball};
pub use shrink::{shrink_first, shrink_pair};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RefineError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Parity(#[from] ParityError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("base parity check failed: computed {0}")]
    BaseParity(crate::parity::Parity),
    #[error("no candidate interval of odd parity among {0}; internal invariant broken")]
    NoOddCandidate(usize),
    #[error("no record yields a ball of radius at most {0}")]
    NotConverged(String),
    #[error("certificate check failed: {0}")]
    Verification(String),
}

impl RefineError {
    /// Did the computation run out of precision effort?
    pub fn is_effort_exhausted(&self) -> bool {
        matches!(
            self,
            RefineError::Parity(ParityError::EffortExhausted { .. })
        )
    }

    pub fn is_endpoint_violation(&self) -> bool {
        matches!(self, RefineError::Path(PathError::EndpointViolation { .. }))
    }
}
