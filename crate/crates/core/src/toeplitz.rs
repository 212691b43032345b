//! Truncated Toeplitz matrices of a trigonometric moment sequence.
//!
//! For an even measure the moments cₙ are real, every truncated matrix Jₙ
//! (size (n+1)×(n+1), entry (i,j) = c_{|i−j|}) is symmetric about both
//! diagonals, and positivity of all det(Jₙ) characterizes valid moment
//! sequences (Carathéodory-Toeplitz). This module maintains Jₙ⁻¹ and det(Jₙ)
//! incrementally:
//!
//! * det(Jₙ) = det(Jₙ₋₁)·(c₀ − vₙᵀ Jₙ₋₁⁻¹ vₙ),  vₙ = (cₙ, …, c₁)ᵀ
//! * det `[Jₙ₋₁ vₙ; 𝟙 1]` = det(Jₙ₋₁)·(1 − 𝟙 Jₙ₋₁⁻¹ vₙ)
//! * Trench block update of Jₙ⁻¹ from Jₙ₋₁⁻¹ and uₙ = (c₁, …, cₙ)ᵀ when c₀ = 1,
//!   with Schur complement Δₙ = 1 − uₙᵀ Jₙ₋₁⁻¹ uₙ = det(Jₙ)/det(Jₙ₋₁).
//!
//! Dense pivoted-elimination oracles live in [`crate::matrix`].

use crate::error::ToeplitzError;
use crate::matrix::Mat;

/// Δₙ at or below this threshold is treated as a Carathéodory-Toeplitz
/// failure. Δₙ shrinks like the Szegő norm product, so at desk scale (n ≤ 50)
/// this separates genuine degeneracy from roundoff.
pub const POSITIVITY_TOLERANCE: f64 = 1e-12;

/// Real trigonometric moments c₀, c₁, … of an even measure.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    values: Vec<f64>,
    /// Period 2T of the underlying measure on the line, when known.
    pub period: Option<f64>,
}

impl MomentSequence {
    /// Requires c₀ > 0; evenness of the measure is encoded by realness.
    pub fn new(values: Vec<f64>) -> Result<Self, ToeplitzError> {
        match values.first() {
            Some(&c0) if c0 > 0.0 && c0.is_finite() => Ok(MomentSequence { values, period: None }),
            Some(&c0) => Err(ToeplitzError::NonPositiveLeadingMoment(c0)),
            None => Err(ToeplitzError::InsufficientMoments { needed: 1, available: 0 }),
        }
    }

    pub fn with_period(mut self, period: f64) -> Self {
        self.period = Some(period);
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn c0(&self) -> f64 {
        self.values[0]
    }

    /// uₙ = (c₁, …, cₙ)ᵀ.
    pub fn forward_column(&self, n: usize) -> &[f64] {
        &self.values[1..=n]
    }

    /// vₙ = (cₙ, …, c₁)ᵀ.
    pub fn reversed_column(&self, n: usize) -> Vec<f64> {
        let mut v: Vec<f64> = self.values[1..=n].to_vec();
        v.reverse();
        v
    }
}

/// State of the incremental inversion at order n: Jₙ⁻¹, det(Jₙ), and the
/// last Schur complement Δₙ. Requires the normalized convention c₀ = 1.
#[derive(Debug, Clone)]
pub struct ToeplitzState {
    pub n: usize,
    pub inv: Mat,
    pub det: f64,
    pub delta: f64,
}

impl ToeplitzState {
    /// Order 0: J₀ = `[1]`.
    pub fn initial() -> Self {
        ToeplitzState { n: 0, inv: Mat::identity(1), det: 1.0, delta: 1.0 }
    }
}

/// Dense Jₙ, entry (i,j) = c_{|i−j|} (real even case).
pub fn build_toeplitz(c: &MomentSequence, n: usize) -> Result<Mat, ToeplitzError> {
    if c.len() < n + 1 {
        return Err(ToeplitzError::InsufficientMoments { needed: n + 1, available: c.len() });
    }
    let mut m = Mat::zeros(n + 1);
    for i in 0..=n {
        for j in 0..=n {
            m[(i, j)] = c.values[i.abs_diff(j)];
        }
    }
    Ok(m)
}

/// det(Jₙ) from the previous state: det(Jₙ₋₁)·(c₀ − vₙᵀ Jₙ₋₁⁻¹ vₙ).
///
/// May return a non-positive value; that signals an invalid moment sequence
/// downstream rather than an error here.
pub fn det_step(prev: &ToeplitzState, c0: f64, v: &[f64]) -> f64 {
    prev.det * (c0 - prev.inv.quadratic_form(v, v))
}

/// Determinant of the bordered matrix `[Jₙ₋₁ vₙ; 𝟙 1]`:
/// det(Jₙ₋₁)·(1 − 𝟙 Jₙ₋₁⁻¹ vₙ).
pub fn bordered_det(prev: &ToeplitzState, v: &[f64]) -> f64 {
    prev.det * (1.0 - prev.inv.ones_form(v))
}

/// Advance Jₙ₋₁⁻¹ to Jₙ⁻¹ by the Trench block formula (c₀ = 1):
///
/// ```text
/// Jₙ⁻¹ = [ Δₙ⁻¹            −Δₙ⁻¹ (Jₙ₋₁⁻¹uₙ)ᵀ                   ]
///        [ −Δₙ⁻¹ Jₙ₋₁⁻¹uₙ   Jₙ₋₁⁻¹ + Δₙ⁻¹ (Jₙ₋₁⁻¹uₙ)(Jₙ₋₁⁻¹uₙ)ᵀ ]
/// ```
///
/// Fails with `NotPositiveDefinite` when Δₙ ≤ [`POSITIVITY_TOLERANCE`].
pub fn trench_update(prev: &ToeplitzState, u: &[f64]) -> Result<ToeplitzState, ToeplitzError> {
    let n = prev.n + 1;
    assert_eq!(u.len(), n, "expected u_n of length n = {}", n);
    let ju = prev.inv.mul_vec(u);
    let delta = 1.0 - u.iter().zip(&ju).map(|(a, b)| a * b).sum::<f64>();
    if !(delta > POSITIVITY_TOLERANCE) {
        return Err(ToeplitzError::NotPositiveDefinite { order: n });
    }
    let inv_delta = 1.0 / delta;
    let mut inv = Mat::zeros(n + 1);
    inv[(0, 0)] = inv_delta;
    for i in 0..n {
        let t = -inv_delta * ju[i];
        inv[(0, i + 1)] = t;
        inv[(i + 1, 0)] = t;
    }
    for i in 0..n {
        for j in 0..n {
            inv[(i + 1, j + 1)] = prev.inv[(i, j)] + inv_delta * ju[i] * ju[j];
        }
    }
    Ok(ToeplitzState { n, inv, det: prev.det * delta, delta })
}

/// Verdict of the incremental Carathéodory-Toeplitz test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    /// Every Δₙ up to the full length of the sequence stayed positive.
    Valid { through: usize },
    /// Smallest order at which Δₙ fell to or below the threshold.
    FailsAt(usize),
}

impl std::fmt::Display for Positivity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Positivity::Valid { through } => write!(f, "valid through {}", through),
            Positivity::FailsAt(n) => write!(f, "fails at {}", n),
        }
    }
}

/// Run the Trench recursion over the whole sequence (normalizing by c₀ first)
/// and report the smallest failing order, if any.
pub fn check_positive_definite(c: &MomentSequence) -> Positivity {
    let c0 = c.c0();
    if !(c0 > 0.0) {
        return Positivity::FailsAt(0);
    }
    let normalized: Vec<f64> = c.values().iter().map(|v| v / c0).collect();
    let mut state = ToeplitzState::initial();
    for n in 1..c.len() {
        let u = &normalized[1..=n];
        match trench_update(&state, u) {
            Ok(next) => state = next,
            Err(_) => return Positivity::FailsAt(n),
        }
    }
    Positivity::Valid { through: c.len() - 1 }
}
