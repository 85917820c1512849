use num_complex::Complex64;
use thiserror::Error;

/// Failures surfaced by the numerical kernels and the solver pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("log-gamma pole at z = {0}")]
    Pole(f64),

    #[error("{func}: no convergent regime at z = {z}")]
    NonConvergence { func: &'static str, z: Complex64 },

    #[error("{0}: result overflowed")]
    Overflow(&'static str),

    #[error("invalid model parameters: {0}")]
    InvalidModel(String),

    #[error("invalid search rectangle: {0}")]
    InvalidRect(String),

    #[error("model {0} has no characteristic function")]
    NoCharacteristic(&'static str),

    #[error("refinement failed from {start}: {reason}")]
    Refine { start: Complex64, reason: String },

    #[error("solver gave up: {0}")]
    Solver(String),

    #[error("matching system is singular at E = {0}")]
    Degenerate(Complex64),

    #[error("only {0} support points, need at least 10")]
    InsufficientSupport(usize),

    #[error("integration step {0:.3e} too coarse for this energy")]
    StepSize(f64),

    #[error("amplitude underflow at index {0}")]
    Underflow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
