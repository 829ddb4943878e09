//! Crossing parity of track pairs and of restricted path pairs, and the
//! separation quantity `alpha` licensing the latter.

mod alpha;
mod crossings;

use std::fmt;

use crate::paths::PathError;

pub use alpha::{alpha_enclosure, certify_alpha, sharpen_alpha, AlphaEnclosure};
pub use crossings::{crossing_count, Crossing, CrossingReport};

mod function;
pub use function::{evaluate_parity, function_parity, parity_at_precision, ParityEvaluation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_count(count: usize) -> Parity {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::of_count((self.bit() + rhs.bit()) as usize)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParityError {
    #[error("tracks are not weakly separated")]
    NotSeparated,
    #[error("segments {i} and {j} meet in a {relation} despite weak separation")]
    Inconsistent {
        i: usize,
        j: usize,
        relation: &'static str,
    },
    #[error("positivity of alpha not certified within {effort} precision steps (last enclosure [{lo}; {hi}])")]
    EffortExhausted { effort: u32, lo: String, hi: String },
    #[error(transparent)]
    Path(#[from] PathError),
}
