use thiserror::Error;

/// Errors raised by the engines. Paper-vs-engine mismatches are never errors;
/// they are reported as data by [`crate::verify`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: &'static str },
    #[error("coefficient evaluates to a non-finite value")]
    NonFiniteCoefficient,
    #[error("basis of {requested} states exceeds the limit of {limit}")]
    CapacityExceeded { requested: usize, limit: usize },
    #[error("matrix is not Hermitian (defect {defect:e})")]
    NonHermitianInput { defect: f64 },
    #[error("eigensolver did not converge")]
    ConvergenceFailure,
    #[error("state ({n_plus}, {n_minus}, {n_z}) is not in the basis")]
    StateOutOfBasis { n_plus: u32, n_minus: u32, n_z: u32 },
    #[error("state is degenerate at zero coupling; eigenvalue tracking is undefined")]
    DegenerateState,
    #[error("lost track of the eigenstate (best overlap {overlap:.3})")]
    TrackingLost { overlap: f64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
