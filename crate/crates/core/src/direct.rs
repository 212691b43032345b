//! The direct spectral problem for step Hamiltonians: from the step heights
//! h⁰, h¹, … of h₁₁ (equal to φₙ(1)² for the spectral measure's orthonormal
//! polynomials), recover the measure by two independent algebraic routes.
//!
//! Route A (Verblunsky): αₙ = (1 − r)/(1 + r) with r = hⁿ⁺¹/hⁿ. Always lands
//! in (−1, 1) because r > 0.
//!
//! Route B (moments): normalize h̃ⁿ = hⁿ/h⁰; then c̃₀ = 1,
//! c̃₁ = (1 − h̃¹)/(1 + h̃¹), and for n ≥ 1 the next moment solves
//!
//!   h̃ⁿ⁺¹ = (1 − 𝟙Jₙ⁻¹vₙ₊₁)² / (1 − vₙ₊₁ᵀJₙ⁻¹vₙ₊₁)
//!
//! in closed form: with Δₙ = 1 − uₙᵀJₙ₋₁⁻¹uₙ, Dₙ = uₙᵀJₙ₋₁⁻¹vₙ and
//! β = (1 − 𝟙Jₙ₋₁⁻¹uₙ)²,
//!
//!   c̃ₙ₊₁ = [(Δₙ + Dₙ)β − Δₙ(Δₙ − Dₙ)h̃ⁿ⁺¹] / (Δₙh̃ⁿ⁺¹ + β).
//!
//! Finally cₙ = c̃ₙ/h⁰. Both routes determine the same unique even measure;
//! [`cross_validate`] measures their numerical agreement.

use crate::dd::Dd;
use crate::error::{DirectError, ToeplitzError};
use crate::opuc::{
    moments_from_verblunsky, orthonormal_sq_at_one, VerblunskySequence,
};
use crate::toeplitz::{
    check_positive_definite, MomentSequence, Positivity, POSITIVITY_TOLERANCE,
};

/// Positive step values of h₁₁ (the direct-problem input).
#[derive(Debug, Clone, PartialEq)]
pub struct StepHeightSequence {
    heights: Vec<f64>,
}

impl StepHeightSequence {
    pub fn new(heights: Vec<f64>) -> Result<Self, DirectError> {
        if heights.is_empty() {
            return Err(DirectError::EmptyHeights);
        }
        for (index, &value) in heights.iter().enumerate() {
            if !(value > 0.0 && value.is_finite()) {
                return Err(DirectError::InvalidHeights { index, value });
            }
        }
        Ok(StepHeightSequence { heights })
    }

    pub fn heights(&self) -> &[f64] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// h̃ⁿ = hⁿ/h⁰.
    pub fn normalized(&self) -> Vec<f64> {
        let h0 = self.heights[0];
        self.heights.iter().map(|h| h / h0).collect()
    }
}

/// Per-step intermediates of the moment recursion, exposed for inspection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentStepTrace {
    /// Order n of the step that produced c̃ₙ₊₁.
    pub n: usize,
    /// Δₙ = 1 − uₙᵀJₙ₋₁⁻¹uₙ.
    pub delta: f64,
    /// Dₙ = uₙᵀJₙ₋₁⁻¹vₙ.
    pub d: f64,
    /// (1 − 𝟙Jₙ₋₁⁻¹uₙ)².
    pub bordered_sq: f64,
}

/// Outcome of running both recovery routes on one height sequence.
#[derive(Debug, Clone)]
pub struct RecoveryReport {
    pub alphas: VerblunskySequence,
    pub moments: MomentSequence,
    /// max over n of |cₙ(moment route) − cₙ(Verblunsky route)|.
    pub max_cross_error: f64,
    /// max over n of |h̃ⁿ(round trip through the forward map) − h̃ⁿ|.
    pub max_height_error: f64,
    pub positivity: Positivity,
    /// Whether both error figures stay within the requested tolerance.
    pub within_tolerance: bool,
}

/// Route A: αₙ = (1 − hⁿ⁺¹/hⁿ)/(1 + hⁿ⁺¹/hⁿ). N+1 heights give N coefficients.
pub fn recover_verblunsky(h: &StepHeightSequence) -> VerblunskySequence {
    let alphas: Vec<f64> = h
        .heights
        .windows(2)
        .map(|w| {
            let r = w[1] / w[0];
            (1.0 - r) / (1.0 + r)
        })
        .collect();
    VerblunskySequence::new(alphas).expect("(1-r)/(1+r) maps (0,∞) into (-1,1)")
}

/// Route B: moments c₀…c_N from N+1 heights.
pub fn recover_moments(h: &StepHeightSequence) -> Result<MomentSequence, DirectError> {
    Ok(recover_moments_with_trace(h)?.0)
}

/// As [`recover_moments`], also returning the per-step (Δₙ, Dₙ, β) values.
///
/// The recursion runs in double-double internally: the Schur complements Δₙ
/// shrink like ∏(1 − αⱼ²) and amplify f64 roundoff to ~eps/Δ², which at order
/// 20 already costs half the mantissa on unremarkable inputs. Results are
/// rounded to f64 on the way out.
pub fn recover_moments_with_trace(
    h: &StepHeightSequence,
) -> Result<(MomentSequence, Vec<MomentStepTrace>), DirectError> {
    let h0 = Dd::from(h.heights[0]);
    let ht: Vec<Dd> = h.heights.iter().map(|&v| Dd::from(v).div(h0)).collect();
    let order = ht.len() - 1;
    let mut c = Vec::with_capacity(order + 1);
    c.push(Dd::ONE);
    let mut trace = Vec::new();
    if order >= 1 {
        c.push(Dd::ONE.sub(ht[1]).div(Dd::ONE.add(ht[1])));
    }
    // inv = Jₙ₋₁⁻¹ of the normalized moments, maintained by the Trench update
    let mut inv: Vec<Vec<Dd>> = vec![vec![Dd::ONE]];
    for n in 1..order {
        let u = &c[1..=n];
        let ju: Vec<Dd> = inv
            .iter()
            .map(|row| {
                row.iter().zip(u).fold(Dd::ZERO, |acc, (m, x)| acc.add(m.mul(*x)))
            })
            .collect();
        let mut delta = Dd::ONE;
        let mut d = Dd::ZERO;
        let mut border = Dd::ONE;
        for i in 0..n {
            delta = delta.sub(u[i].mul(ju[i]));
            d = d.add(u[n - 1 - i].mul(ju[i])); // vₙ is uₙ reversed
            border = border.sub(ju[i]);
        }
        if !(delta.hi > POSITIVITY_TOLERANCE) {
            return Err(DirectError::Toeplitz(ToeplitzError::NotPositiveDefinite { order: n }));
        }
        let beta = border.mul(border);
        let hh = ht[n + 1];
        trace.push(MomentStepTrace {
            n,
            delta: delta.to_f64(),
            d: d.to_f64(),
            bordered_sq: beta.to_f64(),
        });
        let numer = delta.add(d).mul(beta).sub(delta.mul(delta.sub(d)).mul(hh));
        let denom = delta.mul(hh).add(beta);
        c.push(numer.div(denom));
        // Trench block update
        let mut next = vec![vec![Dd::ZERO; n + 1]; n + 1];
        let inv_delta = Dd::ONE.div(delta);
        next[0][0] = inv_delta;
        for i in 0..n {
            let t = ju[i].mul(inv_delta).neg();
            next[0][i + 1] = t;
            next[i + 1][0] = t;
            for j in 0..n {
                next[i + 1][j + 1] = inv[i][j].add(ju[i].mul(ju[j]).mul(inv_delta));
            }
        }
        inv = next;
    }
    let scaled: Vec<f64> = c.into_iter().map(|v| v.div(h0).to_f64()).collect();
    let moments = MomentSequence::new(scaled).expect("c0 = 1/h0 > 0");
    Ok((moments, trace))
}

/// Run both routes, convert route A to moments, and report the discrepancies.
pub fn cross_validate(h: &StepHeightSequence, tol: f64) -> Result<RecoveryReport, DirectError> {
    let alphas = recover_verblunsky(h);
    let moments = recover_moments(h)?;
    let via_alphas = moments_from_verblunsky(&alphas, 1.0 / h.heights[0]);
    let max_cross_error = moments
        .values()
        .iter()
        .zip(via_alphas.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let ht = h.normalized();
    let max_height_error = orthonormal_sq_at_one(&alphas)
        .iter()
        .zip(&ht)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let positivity = check_positive_definite(&moments);
    Ok(RecoveryReport {
        alphas,
        moments,
        max_cross_error,
        max_height_error,
        positivity,
        within_tolerance: max_cross_error <= tol && max_height_error <= tol,
    })
}

/// Default cross-validation tolerance.
pub const CROSS_VALIDATION_TOLERANCE: f64 = 1e-9;
