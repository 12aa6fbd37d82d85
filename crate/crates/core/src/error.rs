use thiserror::Error;

/// Everything that can go wrong inside the solver.
///
/// Variants fall into two groups. Input and precondition errors mean the
/// caller asked for something ill-formed. The remaining variants are
/// *fail outcomes*: the randomized algorithm made an unlucky choice (a bad
/// separating form or a bad prime) and a rerun with another seed may
/// succeed. [`Error::is_fail`] tells them apart.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("no rational number within the bound matches the residue")]
    NoRationalSolution,

    #[error("rational function reconstruction failed")]
    ReconstructionFailed,

    #[error("repeated interpolation nodes")]
    RepeatedNodes,

    #[error("linear form is not separating on the given points")]
    NotSeparating,

    #[error("Jacobian matrix is singular at a point where it must be invertible")]
    SingularJacobian,

    #[error("a parametrization coefficient has a pole at t = 1 after scaling")]
    InvalidValuation,

    #[error("characteristic {characteristic} is too small, at least {required} is needed")]
    CharacteristicTooSmall { characteristic: u64, required: u64 },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("Chow ring with {entries} coefficients exceeds the supported size")]
    ChowRingTooLarge { entries: u128 },

    #[error("prime bound {0} is too large for word-sized primes; supply a prime explicitly")]
    PrimeBoundTooLarge(String),

    #[error("output validation failed: {0}")]
    Validation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for the outcomes a rerun with a fresh seed can fix.
    pub fn is_fail(&self) -> bool {
        matches!(
            self,
            Error::NoRationalSolution
                | Error::ReconstructionFailed
                | Error::RepeatedNodes
                | Error::NotSeparating
                | Error::SingularJacobian
                | Error::InvalidValuation
                | Error::Validation(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
