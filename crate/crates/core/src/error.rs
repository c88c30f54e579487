//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Series operands disagree in component count, order or base point.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A vector family fell below the rank threshold during orthonormalization
    /// or an osculating space lost rank at the evaluation point.
    #[error("degenerate data at index {index}: {what}")]
    Degenerate { index: usize, what: String },

    /// Evaluation point lies outside the validity disc of a chart.
    #[error("point {point} outside domain (|z - z0| = {dist:.6}, allowed {allowed:.6})")]
    Domain {
        point: String,
        dist: f64,
        allowed: f64,
    },

    /// Seed data violates a precondition (vanishing scale, wrong component count).
    #[error("invalid seed: {0}")]
    Seed(String),

    /// An operation that requires a 1-isotropic chart was fed something else.
    #[error("model violation: {0}")]
    ModelViolation(String),

    /// Finite-difference step outside the accepted range.
    #[error("step {0} outside [{1}, {2}]")]
    StepOutOfRange(f64, f64, f64),

    /// Point cloud unusable for rigid alignment.
    #[error("alignment input: {0}")]
    Alignment(String),

    /// Mesh projection does not have full rank.
    #[error("projection error: {0}")]
    Projection(String),

    /// Bad run configuration.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
