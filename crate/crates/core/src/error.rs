use thiserror::Error;

/// Errors produced by space construction, operator algebra and the
/// verification harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("q must be positive and finite, got {0}")]
    InvalidQ(f64),

    #[error("deformation parameter h must be finite, got {0}")]
    InvalidH(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("mode index {mode} out of range for a {modes}-mode space")]
    ModeOutOfRange { mode: usize, modes: usize },

    #[error("operators live on different spaces")]
    SpaceMismatch,

    #[error("expected {expected}")]
    SpaceShape { expected: String },

    #[error("matrix dimension {got} does not match space dimension {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("diagonal function is not finite at basis state {state:?} (value {value})")]
    NonFiniteDiagonal { state: Vec<u32>, value: f64 },

    #[error("guard degree {degree} exceeds the cutoff {cutoff}: guarded subspace is empty")]
    EmptyGuard { degree: u32, cutoff: u32 },

    #[error("conjugator is numerically singular: condition number {cond:.3e} exceeds {limit:.1e}")]
    IllConditioned { cond: f64, limit: f64 },

    #[error("conjugator must reduce to the identity at h = 0 (max deviation {dev:.3e})")]
    NotIdentityAtZero { dev: f64 },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
