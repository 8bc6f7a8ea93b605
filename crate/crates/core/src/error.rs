use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid subsystem index {index} for a state with {count} subsystems")]
    InvalidSubsystem { index: usize, count: usize },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("no sign change of C(B|A) - C(A|B) on [{alpha_min}, {alpha_max}]")]
    NoCrossing { alpha_min: f64, alpha_max: f64 },
}
