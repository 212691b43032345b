//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ToeplitzError {
    #[error("moment sequence too short: need {needed} entries, have {available}")]
    InsufficientMoments { needed: usize, available: usize },
    /// Carathéodory-Toeplitz failure: the Schur complement Δₙ dropped below
    /// the positivity threshold at order `order`.
    #[error("moment sequence is not positive definite at order {order}")]
    NotPositiveDefinite { order: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("c0 must be positive, got {0}")]
    NonPositiveLeadingMoment(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OpucError {
    #[error("Verblunsky coefficient out of (-1, 1): alpha[{index}] = {value}")]
    InvalidVerblunsky { index: usize, value: f64 },
    #[error("moments are not positive definite: |alpha[{order}]| >= 1")]
    NotPositiveDefinite { order: usize },
    #[error(transparent)]
    Toeplitz(#[from] ToeplitzError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DirectError {
    #[error("step height h[{index}] = {value} is not positive")]
    InvalidHeights { index: usize, value: f64 },
    #[error("height sequence is empty")]
    EmptyHeights,
    #[error(transparent)]
    Toeplitz(#[from] ToeplitzError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SystemsError {
    #[error("h11 must be positive and finite on every step: step {step} averaged to {value}")]
    InvalidHamiltonian { step: usize, value: f64 },
    #[error("invalid Dirac potential: {0}")]
    InvalidPotential(String),
    #[error("time {t} outside the Hamiltonian's domain [0, {limit}]")]
    OutOfRange { t: f64, limit: f64 },
    #[error("quadrature grid too small: tail bound {tail:.3e} exceeds tolerance {tol:.3e}")]
    GridTooSmall { tail: f64, tol: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("Verblunsky coefficient out of (-1, 1): {0}")]
    InvalidAlpha(f64),
    #[error("measure has no closed-form density; quadrature needs one")]
    NoClosedForm,
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("adaptive quadrature failed to reach tolerance {tol:.3e} on [{a}, {b}]")]
pub struct QuadratureError {
    pub a: f64,
    pub b: f64,
    pub tol: f64,
}
