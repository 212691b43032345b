//! Orthogonal polynomials on the unit circle for even measures.
//!
//! Real Verblunsky coefficients αₙ ∈ (−1, 1) drive the Szegő recurrence
//!
//!   Φₙ₊₁(z) = z Φₙ(z) − αₙ Φₙ*(z),
//!   Φₙ₊₁*(z) = Φₙ*(z) − αₙ z Φₙ(z),
//!
//! with ‖Φₙ‖² = ∏_{j<n} (1 − αⱼ²). Moments and coefficients convert both
//! ways through the orthogonality relation ⟨Φₙ₊₁, 1⟩ = 0 (one new moment is
//! the single unknown per step) and αₙ = ⟨zΦₙ, 1⟩ / ‖Φₙ‖²; the Heine
//! determinant formula is kept as an O(n³)-per-step oracle.

use crate::error::{OpucError, ToeplitzError};
use crate::matrix::brute_det;
use crate::toeplitz::{build_toeplitz, MomentSequence};

/// Verblunsky coefficients of an even probability measure on the circle.
#[derive(Debug, Clone, PartialEq)]
pub struct VerblunskySequence {
    alphas: Vec<f64>,
}

impl VerblunskySequence {
    /// Requires |αₙ| < 1 (strictly) for every n.
    pub fn new(alphas: Vec<f64>) -> Result<Self, OpucError> {
        for (index, &value) in alphas.iter().enumerate() {
            if !(value.abs() < 1.0) {
                return Err(OpucError::InvalidVerblunsky { index, value });
            }
        }
        Ok(VerblunskySequence { alphas })
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }
}

/// A monic orthogonal polynomial Φₙ and its reverse Φₙ*, stored as real
/// coefficient vectors in ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPair {
    pub phi: Vec<f64>,
    pub phi_star: Vec<f64>,
}

impl MonicPair {
    /// Φ₀ = Φ₀* = 1.
    pub fn degree_zero() -> Self {
        MonicPair { phi: vec![1.0], phi_star: vec![1.0] }
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Φₙ(1) (= Φₙ*(1) in the real case).
    pub fn at_one(&self) -> f64 {
        self.phi.iter().sum()
    }
}

/// One step of the Szegő recurrence.
pub fn szego_step(pair: &MonicPair, alpha: f64) -> Result<MonicPair, OpucError> {
    if !(alpha.abs() < 1.0) {
        return Err(OpucError::InvalidVerblunsky { index: pair.degree(), value: alpha });
    }
    let n = pair.phi.len();
    // z·Φₙ − α·Φₙ*
    let mut phi = vec![0.0; n + 1];
    for (k, &b) in pair.phi.iter().enumerate() {
        phi[k + 1] = b;
    }
    for (k, &b) in pair.phi_star.iter().enumerate() {
        phi[k] -= alpha * b;
    }
    // Φₙ* − α·z·Φₙ
    let mut phi_star = vec![0.0; n + 1];
    for (k, &b) in pair.phi_star.iter().enumerate() {
        phi_star[k] = b;
    }
    for (k, &b) in pair.phi.iter().enumerate() {
        phi_star[k + 1] -= alpha * b;
    }
    Ok(MonicPair { phi, phi_star })
}

/// ‖Φₙ‖² = ∏_{j<n} (1 − αⱼ²).
pub fn monic_norm_sq(seq: &VerblunskySequence, upto: usize) -> f64 {
    seq.alphas[..upto].iter().map(|a| 1.0 - a * a).product()
}

/// hⁿ = φₙ(1)² for n = 0…N via the scalar recursion
/// φₙ₊₁(1) = (1 − αₙ²)^(−1/2) (1 − αₙ) φₙ(1), so hⁿ⁺¹/hⁿ = (1 − αₙ)/(1 + αₙ).
///
/// This is the forward map of the direct problem; h⁰ = 1 always.
pub fn orthonormal_sq_at_one(seq: &VerblunskySequence) -> Vec<f64> {
    let mut h = Vec::with_capacity(seq.len() + 1);
    h.push(1.0);
    for &a in seq.alphas() {
        let last = *h.last().unwrap();
        h.push(last * (1.0 - a) / (1.0 + a));
    }
    h
}

/// Moments c₀…c_N of the measure with Verblunsky coefficients α₀…α_{N−1},
/// scaled so the zeroth moment is `c0`.
///
/// Normalized route: at each step the orthogonality relation ⟨Φₙ₊₁, 1⟩ = 0 is
/// solved for the single unknown c̃ₙ₊₁. The inner products are propagated
/// directly through the Szegő recurrence,
///
///   ⟨zʲΦₙ₊₁, 1⟩ = ⟨zʲ⁺¹Φₙ, 1⟩ − αₙ⟨zʲΦₙ*, 1⟩,
///   ⟨zʲΦₙ₊₁*, 1⟩ = ⟨zʲΦₙ*, 1⟩ − αₙ⟨zʲ⁺¹Φₙ, 1⟩,
///
/// rather than through monomial coefficients of Φₙ: every intermediate is
/// bounded by ‖Φₙ‖ ≤ 1, whereas the coefficients grow like ∏(1 + |αⱼ|) and
/// would lose that many digits to cancellation. Entries that depend on the
/// not-yet-known moment are carried as affine functions of it.
pub fn moments_from_verblunsky(seq: &VerblunskySequence, c0: f64) -> MomentSequence {
    assert!(c0 > 0.0, "c0 must be positive");
    let alphas = seq.alphas();
    // star[k][j] = ⟨zʲΦₖ*, 1⟩ for k + j ≤ current order (the ⟨zʲΦₖ, 1⟩ table
    // is only ever read through the affine sweep, so it is not stored)
    let mut star: Vec<Vec<f64>> = vec![vec![1.0]];
    let mut c = Vec::with_capacity(alphas.len() + 1);
    c.push(1.0);
    for (n, _) in alphas.iter().enumerate() {
        // sweep the anti-diagonal k + j = n + 1; entries are (const, coeff)
        // pairs in the unknown x = c̃ₙ₊₁, starting from ⟨zⁿ⁺¹Φ₀, 1⟩ = x
        let mut phi_aff = (0.0, 1.0);
        let mut star_aff = Vec::with_capacity(n + 2);
        star_aff.push((0.0, 1.0));
        for k in 1..=n + 1 {
            let j = n + 1 - k;
            let a = alphas[k - 1];
            let known_star = star[k - 1][j];
            let next_phi = (phi_aff.0 - a * known_star, phi_aff.1);
            star_aff.push((known_star - a * phi_aff.0, -a * phi_aff.1));
            phi_aff = next_phi;
        }
        // ⟨Φₙ₊₁, 1⟩ = 0
        let x = -phi_aff.0 / phi_aff.1;
        c.push(x);
        for (k, &(sc, sx)) in star_aff.iter().enumerate() {
            let value = sc + sx * x;
            if k == n + 1 {
                star.push(vec![value]);
            } else {
                star[k].push(value);
            }
        }
    }
    let scaled: Vec<f64> = c.into_iter().map(|v| v * c0).collect();
    MomentSequence::new(scaled).expect("c0 > 0 by construction")
}

/// Verblunsky coefficients α₀…α_{N−1} from moments c₀…c_N, via
/// αₙ = ⟨zΦₙ, 1⟩ / ‖Φₙ‖² (exact inverse of [`moments_from_verblunsky`]).
///
/// Uses the same inner-product propagation; ‖Φₙ‖² appears as ⟨Φₙ*, 1⟩.
pub fn verblunsky_from_moments(c: &MomentSequence) -> Result<VerblunskySequence, OpucError> {
    let c0 = c.c0();
    // ⟨zʲΦ₀, 1⟩ = ⟨zʲΦ₀*, 1⟩ = c̃ⱼ for even measures
    let mut phi_row: Vec<f64> = c.values().iter().map(|v| v / c0).collect();
    let mut star_row = phi_row.clone();
    let order = phi_row.len() - 1;
    let mut alphas = Vec::with_capacity(order);
    for n in 0..order {
        let alpha = phi_row[1] / star_row[0];
        if !(alpha.abs() < 1.0) {
            return Err(OpucError::NotPositiveDefinite { order: n });
        }
        let width = order - n;
        let mut next_phi = Vec::with_capacity(width);
        let mut next_star = Vec::with_capacity(width);
        for j in 0..width {
            next_phi.push(phi_row[j + 1] - alpha * star_row[j]);
            next_star.push(star_row[j] - alpha * phi_row[j + 1]);
        }
        phi_row = next_phi;
        star_row = next_star;
        alphas.push(alpha);
    }
    VerblunskySequence::new(alphas)
}

/// Heine determinant oracle: Φₙ by cofactor expansion of the bordered moment
/// determinant divided by det(Jₙ₋₁), plus ‖Φₙ‖² = det(Jₙ)/det(Jₙ₋₁).
///
/// O(n⁴) with dense minors; intended for n ≤ 8.
pub fn heine_monic_oracle(c: &MomentSequence, n: usize) -> Result<(MonicPair, f64), OpucError> {
    let c0 = c.c0();
    let cn: Vec<f64> = c.values().iter().map(|v| v / c0).collect();
    let normalized = MomentSequence::new(cn)?;
    if normalized.len() < n + 1 {
        return Err(ToeplitzError::InsufficientMoments {
            needed: n + 1,
            available: normalized.len(),
        }
        .into());
    }
    let det_lower = |k: usize| -> Result<f64, OpucError> {
        let d = brute_det(&build_toeplitz(&normalized, k)?);
        if d <= 0.0 {
            return Err(OpucError::NotPositiveDefinite { order: k });
        }
        Ok(d)
    };
    if n == 0 {
        return Ok((MonicPair::degree_zero(), 1.0));
    }
    let det_prev = det_lower(n - 1)?;
    let det_curr = det_lower(n)?;

    // Heine matrix: rows 0..n-1 are Toeplitz rows (entry c_{i-j}, even case),
    // last row is (1, z, …, zⁿ). Expand along the last row.
    let heine = build_toeplitz(&normalized, n)?;
    let mut phi = vec![0.0; n + 1];
    for j in 0..=n {
        let minor = heine.minor(n, j);
        let sign = if (n + j) % 2 == 0 { 1.0 } else { -1.0 };
        phi[j] = sign * brute_det(&minor) / det_prev;
    }

    let mut phi_star: Vec<f64> = phi.clone();
    phi_star.reverse();
    Ok((MonicPair { phi, phi_star }, det_curr / det_prev))
}
