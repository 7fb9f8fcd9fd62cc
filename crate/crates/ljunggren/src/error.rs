use std::fmt;

use num_bigint::BigUint;

/// Errors produced by the fallible operations in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Radicand below 2: sqrt(0) and sqrt(1) have no periodic expansion.
    InvalidRadicand(BigUint),
    /// Radicand is a perfect square, so its square root is an integer.
    PerfectSquareRadicand(BigUint),
    /// x^2 - d*y^2 = -1 is unsolvable for this d (even continued-fraction period).
    NoNegativePellSolution(BigUint),
    /// A denominator argument was zero.
    ZeroDenominator,
    /// The triple's hypotenuse is not divisible by 13.
    NotMultipleOf13(BigUint),
    /// The given legs and hypotenuse do not satisfy leg1^2 + leg2^2 = hyp^2.
    NotPythagorean {
        leg1: BigUint,
        leg2: BigUint,
        hyp: BigUint,
    },
    /// A count or range argument is below the smallest meaningful value.
    RangeTooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidRadicand(d) => write!(f, "radicand {d} must be at least 2"),
            Self::PerfectSquareRadicand(d) => {
                write!(f, "radicand {d} is a perfect square; sqrt({d}) is rational")
            }
            Self::NoNegativePellSolution(d) => {
                write!(f, "x^2 - {d}*y^2 = -1 has no solution (even period)")
            }
            Self::ZeroDenominator => write!(f, "denominator must be nonzero"),
            Self::NotMultipleOf13(hyp) => {
                write!(f, "hypotenuse {hyp} is not divisible by 13")
            }
            Self::NotPythagorean { leg1, leg2, hyp } => {
                write!(f, "{leg1}^2 + {leg2}^2 != {hyp}^2")
            }
            Self::RangeTooSmall { what, min, got } => {
                write!(f, "{what} must be at least {min}, got {got}")
            }
        }
    }
}

impl std::error::Error for Error {}
