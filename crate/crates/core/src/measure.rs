//! Spectral-measure representations and conversions.
//!
//! Conventions used throughout:
//!
//! * Circle measures live on x ∈ [0, 2π) with moments
//!   cₖ = (1/2π)(∫ e^{−ikx} w(x) dx + Σⱼ mⱼ e^{−ikxⱼ}); densities and atom
//!   masses share units, so Lebesgue (w ≡ 1, no atoms) has c = (1, 0, 0, …).
//! * Circle ↔ line maps preserve density values pointwise: the circle measure
//!   of a π/T-periodic line measure is w*(x) = w_line(x/(2T)), atoms scale as
//!   m* = 2T·m_line. This is forced by h ≡ 1 ↔ Lebesgue and reproduces the
//!   exponential-growth family's density exactly, prefactor included.
//! * For an L-periodic line measure, the moment sequence equals the classical
//!   Fourier coefficients (1/L)∫_window e^{−2πiny/L} dμ(y).
//!
//! Densities with square-root support edges (Geronimus and its rescalings)
//! are integrated after the substitution x = edge ± u², which makes the
//! integrand smooth.

use std::sync::Arc;

use crate::error::MeasureError;
use crate::quad::{adaptive_simpson_min_depth, oscillation_depth};
use crate::toeplitz::MomentSequence;

/// Relative tolerance for moment quadrature.
pub const QUADRATURE_REL_TOL: f64 = 1e-8;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

type DensityFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Where the measure lives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// x ∈ [0, 2π).
    Circle,
    /// The real line; `period` is set for periodic measures.
    Line { period: Option<f64> },
}

/// Closed-form absolutely continuous part, used by the quadrature routines.
#[derive(Clone)]
pub struct ClosedForm {
    pub density: DensityFn,
    /// Support interval of the density (density is 0 outside).
    pub support: (f64, f64),
    /// Density vanishes like √(x − edge) at the support endpoints.
    pub sqrt_edges: bool,
}

/// Grid-sampled density plus point masses, with optional closed form.
#[derive(Clone)]
pub struct SpectralMeasure {
    /// (x, w(x)) samples.
    pub samples: Vec<(f64, f64)>,
    /// (location, mass) pairs.
    pub atoms: Vec<(f64, f64)>,
    pub domain: Domain,
    pub form: Option<ClosedForm>,
}

impl std::fmt::Debug for SpectralMeasure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectralMeasure")
            .field("samples", &self.samples.len())
            .field("atoms", &self.atoms)
            .field("domain", &self.domain)
            .field("has_form", &self.form.is_some())
            .finish()
    }
}

impl SpectralMeasure {
    /// Measure from a closed-form density, sampled on `xs`.
    pub fn from_density<F>(
        domain: Domain,
        density: F,
        support: (f64, f64),
        sqrt_edges: bool,
        atoms: Vec<(f64, f64)>,
        xs: &[f64],
    ) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let density: DensityFn = Arc::new(density);
        let eval = |x: f64| {
            if (support.0..=support.1).contains(&x) {
                (density)(x)
            } else {
                0.0
            }
        };
        let samples = xs.iter().map(|&x| (x, eval(x))).collect();
        SpectralMeasure {
            samples,
            atoms,
            domain,
            form: Some(ClosedForm { density, support, sqrt_edges }),
        }
    }

    /// Density value (0 outside the support); requires a closed form.
    pub fn density_at(&self, x: f64) -> Option<f64> {
        self.form.as_ref().map(|f| {
            if (f.support.0..=f.support.1).contains(&x) {
                (f.density)(x)
            } else {
                0.0
            }
        })
    }

    /// Same measure scaled by a positive factor (densities and atoms).
    pub fn scaled(&self, factor: f64) -> Self {
        let samples = self.samples.iter().map(|&(x, w)| (x, w * factor)).collect();
        let atoms = self.atoms.iter().map(|&(x, m)| (x, m * factor)).collect();
        let form = self.form.clone().map(|f| {
            let inner = f.density.clone();
            ClosedForm {
                density: Arc::new(move |x| factor * inner(x)) as DensityFn,
                support: f.support,
                sqrt_edges: f.sqrt_edges,
            }
        });
        SpectralMeasure { samples, atoms, domain: self.domain, form }
    }
}

// ---------------------------------------------------------------------------
// Producers
// ---------------------------------------------------------------------------

/// Cosine partial sum w_N(x) = c₀ + 2 Σ_{n=1}^N cₙ cos(nx) on the circle.
pub fn cosine_partial_sum(c: &MomentSequence, terms: usize, xs: &[f64]) -> SpectralMeasure {
    let n = terms.min(c.len() - 1);
    let coeffs: Vec<f64> = c.values()[..=n].to_vec();
    let eval = move |x: f64| -> f64 {
        coeffs[0]
            + 2.0
                * coeffs[1..]
                    .iter()
                    .enumerate()
                    .map(|(k, ck)| ck * ((k + 1) as f64 * x).cos())
                    .sum::<f64>()
    };
    // trig polynomials are 2π-periodic and entire: evaluable on any grid
    SpectralMeasure::from_density(
        Domain::Circle,
        eval,
        (f64::NEG_INFINITY, f64::INFINITY),
        false,
        Vec::new(),
        xs,
    )
}

/// Geronimus measure: the probability measure on the circle with constant
/// Verblunsky coefficient α. Absolutely continuous part
/// w(x) = (1/|1+α|)·√(1 − α² − cos²(x/2))/sin(x/2) on
/// [2 arcsin|α|, 2π − 2 arcsin|α|], plus an atom at x = 0 of (probability)
/// mass (2/|1+α|²)(|α + 1/2|² − 1/4) when α > 0. The stored atom mass is
/// 2π times that, matching the moment convention of this module.
pub fn geronimus_measure(alpha: f64) -> Result<SpectralMeasure, MeasureError> {
    if !(alpha.abs() < 1.0) {
        return Err(MeasureError::InvalidAlpha(alpha));
    }
    let lo = 2.0 * alpha.abs().asin();
    let hi = TWO_PI - lo;
    let one_plus = (1.0 + alpha).abs();
    let s_sq = 1.0 - alpha * alpha;
    let density = move |x: f64| -> f64 {
        let c = (0.5 * x).cos();
        let inside = s_sq - c * c;
        if inside <= 0.0 {
            return 0.0;
        }
        inside.sqrt() / ((0.5 * x).sin() * one_plus)
    };
    let mut atoms = Vec::new();
    if alpha > 0.0 {
        let mass_prob = 2.0 / (one_plus * one_plus) * ((alpha + 0.5).powi(2) - 0.25);
        atoms.push((0.0, TWO_PI * mass_prob));
    }
    let xs: Vec<f64> = (0..=2000).map(|i| i as f64 * TWO_PI / 2000.0).collect();
    Ok(SpectralMeasure::from_density(Domain::Circle, density, (lo, hi), true, atoms, &xs))
}

/// Map a circle measure to one period of the π/T-periodic line measure of a
/// step-T Hamiltonian: θ = x/(2T), densities preserved pointwise, atom masses
/// divided by 2T.
pub fn rescale_to_line(m: &SpectralMeasure, t_step: f64) -> SpectralMeasure {
    assert!(matches!(m.domain, Domain::Circle), "rescale_to_line expects a circle measure");
    assert!(t_step > 0.0);
    let scale = 2.0 * t_step;
    let samples = m.samples.iter().map(|&(x, w)| (x / scale, w)).collect();
    let atoms = m.atoms.iter().map(|&(x, mass)| (x / scale, mass / scale)).collect();
    let form = m.form.clone().map(|f| {
        let inner = f.density.clone();
        ClosedForm {
            density: Arc::new(move |theta: f64| inner(scale * theta)) as DensityFn,
            support: (f.support.0 / scale, f.support.1 / scale),
            sqrt_edges: f.sqrt_edges,
        }
    });
    SpectralMeasure {
        samples,
        atoms,
        domain: Domain::Line { period: Some(std::f64::consts::PI / t_step) },
        form,
    }
}

/// Spectral density of the periodized exponential Hamiltonian h₁₁ = eᵗ with
/// step T, on the line:
/// w^T(θ) = T(e^T+1)/(2(e^T−1)) · √(4e^T/(e^T+1)² − cos²(Tθ))/sin(Tθ),
/// supported on [arcsin(tanh(T/2))/T, π/T − arcsin(tanh(T/2))/T]; no atom.
pub fn expgrowth_family(t_step: f64, xs: &[f64]) -> SpectralMeasure {
    assert!(t_step > 0.0);
    let et = t_step.exp();
    let pref = t_step * (et + 1.0) / (2.0 * (et - 1.0));
    let s_sq = 4.0 * et / ((et + 1.0) * (et + 1.0));
    let alpha_abs = ((1.0 - et) / (1.0 + et)).abs();
    let edge = alpha_abs.asin() / t_step;
    let period = std::f64::consts::PI / t_step;
    let density = move |theta: f64| -> f64 {
        let c = (t_step * theta).cos();
        let inside = s_sq - c * c;
        if inside <= 0.0 {
            return 0.0;
        }
        pref * inside.sqrt() / (t_step * theta).sin()
    };
    SpectralMeasure::from_density(
        Domain::Line { period: Some(period) },
        density,
        (edge, period - edge),
        true,
        Vec::new(),
        xs,
    )
}

/// T → 0 limit of [`expgrowth_family`]: w(x) = √(4x² − 1)/(2|x|) on |x| ≥ 1/2.
pub fn expgrowth_limit(xs: &[f64]) -> SpectralMeasure {
    let density = |x: f64| -> f64 {
        let inside = 4.0 * x * x - 1.0;
        if inside <= 0.0 {
            return 0.0;
        }
        inside.sqrt() / (2.0 * x.abs())
    };
    let samples = xs.iter().map(|&x| (x, density(x))).collect();
    SpectralMeasure {
        samples,
        atoms: Vec::new(),
        domain: Domain::Line { period: None },
        form: Some(ClosedForm {
            density: Arc::new(density),
            support: (f64::NEG_INFINITY, f64::INFINITY),
            sqrt_edges: false,
        }),
    }
}

// ---------------------------------------------------------------------------
// Moment quadrature
// ---------------------------------------------------------------------------

/// ∫ g(x)·w(x) dx over the support, splitting at the midpoint and using the
/// substitution x = edge ± u² when the edges are square roots. `cycles` is
/// the number of oscillations of g across the window; it sets the minimum
/// bisection depth so the dyadic sampling cannot alias g away.
fn integrate_against<F: Fn(f64) -> f64>(
    form: &ClosedForm,
    clip: (f64, f64),
    g: F,
    cycles: usize,
    rel_tol: f64,
    abs_floor: f64,
) -> Result<f64, MeasureError> {
    let lo = form.support.0.max(clip.0);
    let hi = form.support.1.min(clip.1);
    if hi <= lo {
        return Ok(0.0);
    }
    let depth = oscillation_depth(cycles);
    let d = &form.density;
    if !form.sqrt_edges || (lo > form.support.0 && hi < form.support.1) {
        return Ok(adaptive_simpson_min_depth(
            |x| d(x) * g(x),
            lo,
            hi,
            rel_tol,
            abs_floor,
            depth,
        )?);
    }
    let mid = 0.5 * (lo + hi);
    let mut total = 0.0;
    if lo == form.support.0 {
        // left edge: x = lo + u²
        total += adaptive_simpson_min_depth(
            |u| 2.0 * u * d(lo + u * u) * g(lo + u * u),
            0.0,
            (mid - lo).sqrt(),
            rel_tol,
            abs_floor,
            depth,
        )?;
    } else {
        total += adaptive_simpson_min_depth(|x| d(x) * g(x), lo, mid, rel_tol, abs_floor, depth)?;
    }
    if hi == form.support.1 {
        // right edge: x = hi − u²
        total += adaptive_simpson_min_depth(
            |u| 2.0 * u * d(hi - u * u) * g(hi - u * u),
            0.0,
            (hi - mid).sqrt(),
            rel_tol,
            abs_floor,
            depth,
        )?;
    } else {
        total += adaptive_simpson_min_depth(|x| d(x) * g(x), mid, hi, rel_tol, abs_floor, depth)?;
    }
    Ok(total)
}

/// Moments c₀…c_count of a circle measure by adaptive quadrature, plus the
/// largest imaginary residual (the sine parts, ≈ 0 for even measures).
pub fn quadrature_moments_with_residual(
    m: &SpectralMeasure,
    count: usize,
) -> Result<(MomentSequence, f64), MeasureError> {
    if !matches!(m.domain, Domain::Circle) {
        return Err(MeasureError::NoClosedForm);
    }
    let form = m.form.as_ref().ok_or(MeasureError::NoClosedForm)?;
    let clip = (0.0, TWO_PI);
    let mass = integrate_against(form, clip, |_| 1.0, 1, QUADRATURE_REL_TOL, 0.0)?;
    let floor = QUADRATURE_REL_TOL * (mass.abs() + m.atoms.iter().map(|a| a.1.abs()).sum::<f64>());
    let mut values = Vec::with_capacity(count + 1);
    let mut residual: f64 = 0.0;
    for k in 0..=count {
        let kf = k as f64;
        let mut re = if k == 0 {
            mass
        } else {
            integrate_against(form, clip, |x| (kf * x).cos(), k, QUADRATURE_REL_TOL, floor)?
        };
        let mut im = if k == 0 {
            0.0
        } else {
            integrate_against(form, clip, |x| -(kf * x).sin(), k, QUADRATURE_REL_TOL, floor)?
        };
        for &(x0, atom_mass) in &m.atoms {
            re += atom_mass * (kf * x0).cos();
            im -= atom_mass * (kf * x0).sin();
        }
        residual = residual.max(im.abs() / TWO_PI);
        values.push(re / TWO_PI);
    }
    let seq = MomentSequence::new(values).map_err(|_| MeasureError::NoClosedForm)?;
    Ok((seq, residual))
}

/// Moments of a circle measure; the imaginary residual is checked against the
/// quadrature tolerance and discarded.
pub fn quadrature_moments(m: &SpectralMeasure, count: usize) -> Result<MomentSequence, MeasureError> {
    let (seq, _residual) = quadrature_moments_with_residual(m, count)?;
    Ok(seq)
}

/// Fourier coefficients of the L-periodization of a line measure, restricted
/// to the window [−L/2, L/2): cₙ = (1/L)(∫ w(y)cos(2πny/L)dy + Σ m·cos(2πny₀/L)).
pub fn periodize_measure(m: &SpectralMeasure, period: f64) -> Result<MomentSequence, MeasureError> {
    assert!(period > 0.0);
    if !matches!(m.domain, Domain::Line { .. }) {
        return Err(MeasureError::NoClosedForm);
    }
    let form = m.form.as_ref().ok_or(MeasureError::NoClosedForm)?;
    let clip = (-0.5 * period, 0.5 * period);
    let omega = TWO_PI / period;
    let mass = integrate_against(form, clip, |_| 1.0, 1, QUADRATURE_REL_TOL, 0.0)?;
    let floor = QUADRATURE_REL_TOL * (mass.abs() + 1.0);
    // one sequence long enough for plotting; callers slice what they need
    let count = 32;
    let mut values = Vec::with_capacity(count + 1);
    for k in 0..=count {
        let kf = k as f64;
        let mut re = if k == 0 {
            mass
        } else {
            integrate_against(form, clip, |y| (kf * omega * y).cos(), k, QUADRATURE_REL_TOL, floor)?
        };
        for &(y0, atom_mass) in &m.atoms {
            if y0 >= clip.0 && y0 < clip.1 {
                re += atom_mass * (kf * omega * y0).cos();
            }
        }
        values.push(re / period);
    }
    let seq = MomentSequence::new(values).map_err(|_| MeasureError::NoClosedForm)?;
    Ok(seq.with_period(period))
}

/// Split c into (c/c₀, c₀): the moments of the associated probability measure
/// and the scale that restores the original.
pub fn probability_normalize(c: &MomentSequence) -> (MomentSequence, f64) {
    let c0 = c.c0();
    let normalized: Vec<f64> = c.values().iter().map(|v| v / c0).collect();
    (MomentSequence::new(normalized).expect("c0 = 1"), c0)
}
