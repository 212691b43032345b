//! Direct spectral problems for det-normalized diagonal canonical systems.
//!
//! From a step-function Hamiltonian (heights of h₁₁, one value per uniform
//! step) this crate recovers the spectral measure by two independent routes —
//! Verblunsky coefficients via the Szegő recurrence, and trigonometric
//! moments via Toeplitz determinant recursions — and cross-validates them.
//! Smooth Hamiltonians are handled by periodization; for real Dirac systems
//! the step approximations' spectral weights converge to the smooth weight,
//! which the [`systems`] module measures experimentally.
//!
//! Module map:
//! * [`toeplitz`] — truncated Toeplitz matrices: determinant recursions,
//!   Trench inversion, Carathéodory-Toeplitz positivity.
//! * [`opuc`] — Szegő recurrence, Verblunsky ↔ moment conversions, Heine
//!   determinant oracle.
//! * [`direct`] — the two recovery algorithms and their cross-validation.
//! * [`systems`] — step Hamiltonians, matrizants, periodization, Dirac
//!   scattering, spectral weights, convergence experiment.
//! * [`measure`] — densities: cosine partial sums, Geronimus, the
//!   exponential-growth family, rescaling and measure periodization.
//! * [`builtins`] — the named Hamiltonian/potential registry and sample-file
//!   parsing used by the CLI.

// `!(x > 0.0)` guards are used on purpose: unlike `x <= 0.0` they also reject
// NaN inputs.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod builtins;
mod dd;
pub mod direct;
pub mod error;
pub mod matrix;
pub mod measure;
pub mod opuc;
pub mod quad;
pub mod systems;
pub mod toeplitz;

pub use num_complex::Complex64;

pub use direct::{
    cross_validate, recover_moments, recover_moments_with_trace, recover_verblunsky,
    RecoveryReport, StepHeightSequence,
};
pub use error::{DirectError, MeasureError, OpucError, QuadratureError, SystemsError, ToeplitzError};
pub use measure::SpectralMeasure;
pub use opuc::{MonicPair, VerblunskySequence};
pub use systems::{BoundaryValueGrid, DiracPotential, SincKernel, StepHamiltonian};
pub use toeplitz::{MomentSequence, Positivity, ToeplitzState};
