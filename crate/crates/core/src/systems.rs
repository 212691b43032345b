//! Canonical-system side: step Hamiltonians and their exact matrizants,
//! periodization of smooth Hamiltonians, Hermite-Biehler boundary values,
//! the Dirac scattering ODE, spectral weights 1/|E(a,x)|², and the
//! step-approximation convergence experiment.
//!
//! Conventions. The canonical system is `Ω Ẋ = z H X` with `Ω = [[0,1],[−1,0]]`
//! and H = diag(h₁₁, 1/h₁₁), i.e. u̇ = −z v/h₁₁, v̇ = z h₁₁ u. On a step of
//! constant height h and length ℓ the matrizant advances by the closed form
//!
//! `[[cos(zℓ), −sin(zℓ)/h], [h sin(zℓ), cos(zℓ)]]` with det ≡ 1.
//!
//! A Dirac potential f enters through h₁₁(t) = exp(∫₀ᵗ f). The scattering
//! function ℰ(t, x) of the Dirac form satisfies ∂ₜℰ = f e^{2itx} ℰ̄ with
//! ℰ(0, x) = 1 and E = e^{−iax}ℰ; its modulus is tied to the canonical-form
//! boundary value by the gauge identity
//!
//!   |E_canonical(a,x)|² = u²/h₁₁(a) + h₁₁(a) v²,
//!
//! where (u, v) solves the Dirac system with the halved potential f/2. The
//! spectral weight of the system with h₁₁ = exp(∫f) is the canonical one;
//! [`weight_grid`] computes it exactly (matrizant product) for step input and
//! by fixed-step RK4 on the augmented system (F, u, v), F' = f, for smooth
//! input.

use num_complex::Complex64;

use crate::direct::StepHeightSequence;
use crate::error::SystemsError;
use crate::quad::{adaptive_simpson, trapezoid};

/// Fraction of the horizon used as default RK4 step.
pub const RK4_DT_FRACTION: f64 = 1e-3;

/// Relative tolerance of the periodization quadrature.
pub const PERIODIZE_REL_TOL: f64 = 1e-10;

pub fn rk4_default_dt(a: f64) -> f64 {
    RK4_DT_FRACTION * a
}

// ---------------------------------------------------------------------------
// 2×2 complex matrices
// ---------------------------------------------------------------------------

/// 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2(pub [[Complex64; 2]; 2]);

impl Matrix2 {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Matrix2([[one, zero], [zero, one]])
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// self · other (matrix product).
    pub fn mul(&self, other: &Matrix2) -> Matrix2 {
        let a = &self.0;
        let b = &other.0;
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Matrix2(out)
    }
}

// ---------------------------------------------------------------------------
// Step Hamiltonians and matrizants
// ---------------------------------------------------------------------------

/// Det-normalized diagonal step Hamiltonian: h₁₁ = `heights[n]` on
/// [n·step, (n+1)·step), h₂₂ = 1/h₁₁, off-diagonal zero.
#[derive(Debug, Clone)]
pub struct StepHamiltonian {
    pub step: f64,
    pub heights: StepHeightSequence,
}

impl StepHamiltonian {
    pub fn new(step: f64, heights: StepHeightSequence) -> Result<Self, SystemsError> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(SystemsError::InvalidHamiltonian { step: 0, value: step });
        }
        Ok(StepHamiltonian { step, heights })
    }

    /// Right end of the covered interval.
    pub fn length(&self) -> f64 {
        self.step * self.heights.len() as f64
    }
}

/// Periodization of a smooth positive h₁₁: heights are the per-step averages
/// (1/T)∫_{nT}^{(n+1)T} h₁₁, by adaptive Simpson at relative tolerance 1e−10.
pub fn periodize<F: Fn(f64) -> f64>(
    h11: F,
    step: f64,
    count: usize,
) -> Result<StepHamiltonian, SystemsError> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(SystemsError::InvalidHamiltonian { step: 0, value: step });
    }
    let mut heights = Vec::with_capacity(count);
    for n in 0..count {
        let lo = n as f64 * step;
        let hi = lo + step;
        let integral = adaptive_simpson(&h11, lo, hi, PERIODIZE_REL_TOL, 0.0)?;
        let avg = integral / step;
        if !(avg > 0.0 && avg.is_finite()) {
            return Err(SystemsError::InvalidHamiltonian { step: n, value: avg });
        }
        heights.push(avg);
    }
    let heights = StepHeightSequence::new(heights)
        .map_err(|_| SystemsError::InvalidHamiltonian { step: 0, value: f64::NAN })?;
    StepHamiltonian::new(step, heights)
}

/// Matrizant of one constant step of the canonical system:
/// `exp(ℓ·z·[[0,−1/h],[h,0]]) = [[cos(zℓ), −sin(zℓ)/h],[h sin(zℓ), cos(zℓ)]]`.
pub fn matrizant_constant_step(h: f64, len: f64, z: Complex64) -> Matrix2 {
    let arg = z * len;
    let c = arg.cos();
    let s = arg.sin();
    Matrix2([[c, -s / h], [s * h, c]])
}

/// Transfer matrix of one constant step of the Dirac system
/// `Ẋ = [[f,−z],[z,−f]]X`: cos(ωℓ)·I + sin(ωℓ)/ω·B with ω = √(z²−f²).
///
/// Closed-form oracle for [`scattering_rk4`] on step potentials.
pub fn dirac_matrizant_step(f: f64, len: f64, z: Complex64) -> Matrix2 {
    let omega_sq = z * z - f * f;
    let omega = omega_sq.sqrt();
    let (c, sinc) = if omega.norm() < 1e-8 {
        // series around ω = 0; entire in ω², so the branch of √ is irrelevant
        let w2 = omega_sq * (len * len);
        (
            Complex64::new(1.0, 0.0) - w2 / 2.0 + w2 * w2 / 24.0,
            (Complex64::new(1.0, 0.0) - w2 / 6.0 + w2 * w2 / 120.0) * len,
        )
    } else {
        let arg = omega * len;
        (arg.cos(), arg.sin() / omega)
    };
    Matrix2([
        [c + sinc * f, -sinc * z],
        [sinc * z, c - sinc * f],
    ])
}

/// Matrizant M(t, z) of a step Hamiltonian: ordered product of whole steps
/// plus the partial last step; M(0, z) = I.
pub fn matrizant(ham: &StepHamiltonian, t: f64, z: Complex64) -> Result<Matrix2, SystemsError> {
    let limit = ham.length();
    let eps = 1e-12 * (1.0 + limit);
    if t < -eps || t > limit + eps {
        return Err(SystemsError::OutOfRange { t, limit });
    }
    let mut m = Matrix2::identity();
    let mut covered = 0.0;
    for &h in ham.heights.heights() {
        if covered + eps >= t {
            break;
        }
        let len = ham.step.min(t - covered);
        m = matrizant_constant_step(h, len, z).mul(&m);
        covered += len;
    }
    Ok(m)
}

/// Hermite-Biehler boundary value E = u − iv from a matrizant column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCondition {
    /// X(0) = (1, 0)ᵀ: first column, E(0, z) = 1.
    Neumann,
    /// X(0) = (0, 1)ᵀ: second column, Ẽ(0, z) = −i.
    Dirichlet,
}

pub fn hermite_biehler(m: &Matrix2, condition: BoundaryCondition) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    match condition {
        BoundaryCondition::Neumann => m.0[0][0] - i * m.0[1][0],
        BoundaryCondition::Dirichlet => m.0[0][1] - i * m.0[1][1],
    }
}

// ---------------------------------------------------------------------------
// Dirac potentials
// ---------------------------------------------------------------------------

type RealFn = Box<dyn Fn(f64) -> f64 + Send + Sync>;

enum Antiderivative {
    Exact(RealFn),
    /// Cumulative Simpson table with cubic Hermite evaluation (slopes are
    /// exact: F' = f at the nodes).
    Table { nodes: Vec<f64>, values: Vec<f64>, slopes: Vec<f64> },
}

/// Real locally integrable potential f on [0, a], the off-diagonal entry of a
/// real Dirac system; the associated Hamiltonian is h₁₁(t) = exp(∫₀ᵗ f).
pub struct DiracPotential {
    f: RealFn,
    antiderivative: Antiderivative,
    /// Interior discontinuities or kinks; RK4 substeps never straddle them.
    breakpoints: Vec<f64>,
    horizon: f64,
    abs_integral: f64,
}

const TABLE_RESOLUTION: usize = 4096;

impl DiracPotential {
    /// Closed-form potential; the antiderivative is tabulated once at
    /// construction (cumulative Simpson, ~a/4096 resolution).
    pub fn from_fn<F>(f: F, horizon: f64) -> Result<Self, SystemsError>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::build(Box::new(f), None, Vec::new(), horizon)
    }

    /// Closed-form potential with its exact antiderivative F(t) = ∫₀ᵗ f.
    pub fn with_antiderivative<F, G>(f: F, integral: G, horizon: f64) -> Result<Self, SystemsError>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::build(Box::new(f), Some(Box::new(integral)), Vec::new(), horizon)
    }

    /// Sampled potential, linearly interpolated; sample points become
    /// breakpoints and the antiderivative is exact per segment.
    pub fn from_samples(ts: &[f64], vals: &[f64]) -> Result<Self, SystemsError> {
        if ts.len() != vals.len() || ts.len() < 2 {
            return Err(SystemsError::InvalidPotential(
                "need at least two (t, value) samples".into(),
            ));
        }
        if ts.windows(2).any(|w| w[1] <= w[0]) {
            return Err(SystemsError::InvalidPotential(
                "sample times must be strictly increasing".into(),
            ));
        }
        if ts[0] != 0.0 {
            return Err(SystemsError::InvalidPotential("samples must start at t = 0".into()));
        }
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(SystemsError::InvalidPotential("non-finite sample value".into()));
        }
        let horizon = *ts.last().unwrap();
        let ts_owned = ts.to_vec();
        let vals_owned = vals.to_vec();
        let interp = move |t: f64| -> f64 {
            let i = match ts_owned.binary_search_by(|v| v.total_cmp(&t)) {
                Ok(i) => i.min(ts_owned.len() - 2),
                Err(i) => i.saturating_sub(1).min(ts_owned.len() - 2),
            };
            let w = (t - ts_owned[i]) / (ts_owned[i + 1] - ts_owned[i]);
            vals_owned[i] * (1.0 - w) + vals_owned[i + 1] * w
        };
        let breakpoints = ts[1..ts.len() - 1].to_vec();
        Self::build(Box::new(interp), None, breakpoints, horizon)
    }

    /// Step potential with value `values[n]` on [n·step, (n+1)·step).
    pub fn step_potential(values: &[f64], step: f64) -> Result<Self, SystemsError> {
        if values.is_empty() || !(step > 0.0) {
            return Err(SystemsError::InvalidPotential("empty step potential".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(SystemsError::InvalidPotential("non-finite step value".into()));
        }
        let horizon = step * values.len() as f64;
        let vals = values.to_vec();
        let f = move |t: f64| -> f64 {
            let idx = ((t / step).floor() as usize).min(vals.len() - 1);
            vals[idx]
        };
        // exact piecewise-linear antiderivative
        let vals2 = values.to_vec();
        let integral = move |t: f64| -> f64 {
            let idx = ((t / step).floor() as usize).min(vals2.len() - 1);
            let whole: f64 = vals2[..idx].iter().sum::<f64>() * step;
            whole + vals2[idx] * (t - idx as f64 * step)
        };
        let breakpoints: Vec<f64> = (1..values.len()).map(|n| n as f64 * step).collect();
        Self::build(Box::new(f), Some(Box::new(integral)), breakpoints, horizon)
    }

    pub fn with_breakpoints(mut self, mut pts: Vec<f64>) -> Self {
        pts.retain(|&t| t > 0.0 && t < self.horizon);
        self.breakpoints.extend(pts);
        self.breakpoints.sort_by(f64::total_cmp);
        self.breakpoints.dedup();
        self
    }

    fn build(
        f: RealFn,
        integral: Option<RealFn>,
        breakpoints: Vec<f64>,
        horizon: f64,
    ) -> Result<Self, SystemsError> {
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(SystemsError::InvalidPotential(format!(
                "horizon must be positive, got {horizon}"
            )));
        }
        let antiderivative = match integral {
            Some(g) => Antiderivative::Exact(g),
            None => {
                let (nodes, values, slopes) =
                    cumulative_table(&f, horizon, &breakpoints, TABLE_RESOLUTION)?;
                Antiderivative::Table { nodes, values, slopes }
            }
        };
        let (_, abs_values, _) =
            cumulative_table(&|t| f(t).abs(), horizon, &breakpoints, TABLE_RESOLUTION)?;
        let abs_integral = *abs_values.last().unwrap();
        if !abs_integral.is_finite() {
            return Err(SystemsError::InvalidPotential("∫|f| is not finite".into()));
        }
        Ok(DiracPotential { f, antiderivative, breakpoints, horizon, abs_integral })
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    /// F(t) = ∫₀ᵗ f.
    pub fn integral(&self, t: f64) -> f64 {
        match &self.antiderivative {
            Antiderivative::Exact(g) => g(t),
            Antiderivative::Table { nodes, values, slopes } => {
                let i = match nodes.binary_search_by(|v| v.total_cmp(&t)) {
                    Ok(i) => return values[i],
                    Err(i) => i.saturating_sub(1).min(nodes.len() - 2),
                };
                // cubic Hermite on [nodes[i], nodes[i+1]]
                let h = nodes[i + 1] - nodes[i];
                let s = (t - nodes[i]) / h;
                let (v0, v1) = (values[i], values[i + 1]);
                let (m0, m1) = (slopes[i] * h, slopes[i + 1] * h);
                let s2 = s * s;
                let s3 = s2 * s;
                (2.0 * s3 - 3.0 * s2 + 1.0) * v0
                    + (s3 - 2.0 * s2 + s) * m0
                    + (-2.0 * s3 + 3.0 * s2) * v1
                    + (s3 - s2) * m1
            }
        }
    }

    /// ∫₀ᵃ |f| over the whole horizon.
    pub fn abs_integral(&self) -> f64 {
        self.abs_integral
    }

    /// h₁₁(t) = exp(∫₀ᵗ f) of the associated canonical system.
    pub fn h11(&self, t: f64) -> f64 {
        self.integral(t).exp()
    }

    /// Integration pieces of [0, a] delimited by the breakpoints.
    fn pieces(&self, a: f64) -> Vec<(f64, f64)> {
        let mut cuts = vec![0.0];
        for &b in &self.breakpoints {
            if b > 0.0 && b < a {
                cuts.push(b);
            }
        }
        cuts.push(a);
        cuts.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// Cumulative Simpson antiderivative table aligned with breakpoints.
fn cumulative_table(
    f: &dyn Fn(f64) -> f64,
    horizon: f64,
    breakpoints: &[f64],
    resolution: usize,
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>), SystemsError> {
    let target = horizon / resolution as f64;
    let mut cuts = vec![0.0];
    for &b in breakpoints {
        if b > 0.0 && b < horizon {
            cuts.push(b);
        }
    }
    cuts.push(horizon);
    let mut nodes = Vec::new();
    let mut values = Vec::new();
    let mut slopes = Vec::new();
    let mut acc = 0.0;
    nodes.push(0.0);
    values.push(0.0);
    slopes.push(f(0.0));
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let m = ((hi - lo) / target).ceil().max(1.0) as usize;
        let h = (hi - lo) / m as f64;
        for k in 0..m {
            let t0 = lo + k as f64 * h;
            let t1 = t0 + h;
            let fm = f(t0 + 0.5 * h);
            let f0 = f(t0);
            let f1 = f(t1);
            if !(f0.is_finite() && fm.is_finite() && f1.is_finite()) {
                return Err(SystemsError::InvalidPotential(format!(
                    "non-finite potential value near t = {t0}"
                )));
            }
            acc += h / 6.0 * (f0 + 4.0 * fm + f1);
            nodes.push(t1);
            values.push(acc);
            slopes.push(f1);
        }
    }
    Ok((nodes, values, slopes))
}

// ---------------------------------------------------------------------------
// ODE integrators
// ---------------------------------------------------------------------------

/// Scattering solution ℰ(a, x) of ∂ₜℰ = f(t) e^{2itx} ℰ̄, ℰ(0, x) = 1, by
/// classical RK4 with fixed step ≤ dt, aligned with the potential's
/// breakpoints. E(a, x) = e^{−iax} ℰ(a, x).
pub fn scattering_rk4(
    f: &DiracPotential,
    a: f64,
    x: f64,
    dt: f64,
) -> Result<Complex64, SystemsError> {
    if !(dt > 0.0) || !(a > 0.0) || a > f.horizon() * (1.0 + 1e-12) {
        return Err(SystemsError::OutOfRange { t: a, limit: f.horizon() });
    }
    let mut e = Complex64::new(1.0, 0.0);
    for (lo, hi) in f.pieces(a) {
        // sample f just inside the piece at its right endpoint so a step
        // discontinuity there cannot contaminate the k4 stage
        let f_cap = hi - 1e-12 * (hi - lo);
        let rhs = |t: f64, e: Complex64| -> Complex64 {
            let phase = Complex64::new(0.0, 2.0 * t * x).exp();
            f.eval(t.min(f_cap)) * phase * e.conj()
        };
        let n = ((hi - lo) / dt).ceil().max(1.0) as usize;
        let h = (hi - lo) / n as f64;
        let mut t = lo;
        for _ in 0..n {
            let k1 = rhs(t, e);
            let k2 = rhs(t + 0.5 * h, e + 0.5 * h * k1);
            let k3 = rhs(t + 0.5 * h, e + 0.5 * h * k2);
            let k4 = rhs(t + h, e + h * k3);
            e += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t += h;
        }
        if !(e.re.is_finite() && e.im.is_finite()) {
            return Err(SystemsError::InvalidPotential(format!(
                "scattering solution blew up near t = {hi}"
            )));
        }
    }
    Ok(e)
}

/// Boundary values (u, v)(a) of the canonical system with h₁₁ = exp(∫₀ᵗ f)
/// and Neumann data, by RK4 on the augmented system F' = f, u' = −x e^{−F} v,
/// v' = x e^{F} u. The canonical-form E(a, x) = u − iv.
pub fn canonical_rk4(
    f: &DiracPotential,
    a: f64,
    x: f64,
    dt: f64,
) -> Result<(f64, f64), SystemsError> {
    if !(dt > 0.0) || !(a > 0.0) || a > f.horizon() * (1.0 + 1e-12) {
        return Err(SystemsError::OutOfRange { t: a, limit: f.horizon() });
    }
    let mut y = [0.0f64, 1.0, 0.0]; // F, u, v
    let add = |y: &[f64; 3], k: &[f64; 3], s: f64| -> [f64; 3] {
        [y[0] + s * k[0], y[1] + s * k[1], y[2] + s * k[2]]
    };
    for (lo, hi) in f.pieces(a) {
        let f_cap = hi - 1e-12 * (hi - lo);
        let rhs = |t: f64, y: &[f64; 3]| -> [f64; 3] {
            let ef = y[0].exp();
            [f.eval(t.min(f_cap)), -x / ef * y[2], x * ef * y[1]]
        };
        let n = ((hi - lo) / dt).ceil().max(1.0) as usize;
        let h = (hi - lo) / n as f64;
        let mut t = lo;
        for _ in 0..n {
            let k1 = rhs(t, &y);
            let k2 = rhs(t + 0.5 * h, &add(&y, &k1, 0.5 * h));
            let k3 = rhs(t + 0.5 * h, &add(&y, &k2, 0.5 * h));
            let k4 = rhs(t + h, &add(&y, &k3, h));
            for i in 0..3 {
                y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
            t += h;
        }
    }
    if !(y[1].is_finite() && y[2].is_finite()) {
        return Err(SystemsError::InvalidPotential("canonical solution blew up".into()));
    }
    Ok((y[1], y[2]))
}

// ---------------------------------------------------------------------------
// Spectral weights and Paley-Wiener norms
// ---------------------------------------------------------------------------

/// E(a, x) and the weight 1/|E(a, x)|² sampled on a real grid.
#[derive(Debug, Clone)]
pub struct BoundaryValueGrid {
    pub a: f64,
    pub xs: Vec<f64>,
    pub e_vals: Vec<Complex64>,
    pub weight: Vec<f64>,
    /// A priori bound on the weight, exp(2∫₀ᵃ|f|)-style; used for tail
    /// estimates in [`pw_norm`].
    pub weight_bound: f64,
}

/// Source of the boundary values: exact matrizant for step Hamiltonians,
/// RK4 on the canonical system for smooth Dirac input.
pub enum WeightSource<'a> {
    Step(&'a StepHamiltonian),
    Dirac(&'a DiracPotential),
}

pub fn weight_grid(
    source: &WeightSource,
    a: f64,
    xs: &[f64],
) -> Result<BoundaryValueGrid, SystemsError> {
    weight_grid_with_dt(source, a, xs, rk4_default_dt(a))
}

/// As [`weight_grid`] with an explicit RK4 step for the smooth route.
pub fn weight_grid_with_dt(
    source: &WeightSource,
    a: f64,
    xs: &[f64],
    dt: f64,
) -> Result<BoundaryValueGrid, SystemsError> {
    if xs.iter().any(|x| !x.is_finite()) || xs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(SystemsError::InvalidPotential(
            "x grid must be finite, sorted, and distinct".into(),
        ));
    }
    let mut e_vals = Vec::with_capacity(xs.len());
    match source {
        WeightSource::Step(ham) => {
            for &x in xs {
                let m = matrizant(ham, a, Complex64::new(x, 0.0))?;
                e_vals.push(hermite_biehler(&m, BoundaryCondition::Neumann));
            }
        }
        WeightSource::Dirac(f) => {
            for &x in xs {
                let (u, v) = canonical_rk4(f, a, x, dt)?;
                e_vals.push(Complex64::new(u, -v));
            }
        }
    }
    let weight: Vec<f64> = e_vals.iter().map(|e| 1.0 / e.norm_sqr()).collect();
    let weight_bound = match source {
        // |E| ≥ exp(−∫|f^T|) with ∫|f^T| = ½(|log h⁰| + Σ|log hₙ₊₁/hₙ|)
        WeightSource::Step(ham) => {
            let hs = ham.heights.heights();
            let covered = ((a / ham.step).ceil() as usize).min(hs.len());
            let mut log_var = hs[0].ln().abs();
            for w in hs[..covered].windows(2) {
                log_var += (w[1] / w[0]).ln().abs();
            }
            log_var.exp()
        }
        WeightSource::Dirac(f) => (2.0 * f.abs_integral()).exp(),
    };
    Ok(BoundaryValueGrid { a, xs: xs.to_vec(), e_vals, weight, weight_bound })
}

/// Paley-Wiener reproducing kernel sin(b(x − λ))/(π(x − λ)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SincKernel {
    pub band: f64,
    pub center: f64,
}

impl SincKernel {
    pub fn new(band: f64, center: f64) -> Self {
        SincKernel { band, center }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let y = x - self.center;
        if y.abs() < 1e-9 {
            self.band / std::f64::consts::PI * (1.0 - (self.band * y).powi(2) / 6.0)
        } else {
            (self.band * y).sin() / (std::f64::consts::PI * y)
        }
    }
}

/// ∫ φψ · weight over the grid (trapezoid); the building block of the norms.
pub fn pw_inner(phi: &SincKernel, psi: &SincKernel, grid: &BoundaryValueGrid) -> f64 {
    let ys: Vec<f64> = grid
        .xs
        .iter()
        .zip(&grid.weight)
        .map(|(&x, &w)| phi.eval(x) * psi.eval(x) * w)
        .collect();
    trapezoid(&grid.xs, &ys)
}

/// ‖φ‖²_{L²(μ)} = ∫ |φ|²·weight by trapezoid quadrature on the grid.
///
/// Fails with `GridTooSmall` when the analytic tail bound
/// weight_bound · (1/π²) · (1/(X₊ − λ) + 1/(λ − X₋)) exceeds `tail_tol`.
pub fn pw_norm(
    phi: &SincKernel,
    grid: &BoundaryValueGrid,
    tail_tol: f64,
) -> Result<f64, SystemsError> {
    let x_lo = *grid.xs.first().expect("non-empty grid");
    let x_hi = *grid.xs.last().unwrap();
    let pi_sq = std::f64::consts::PI * std::f64::consts::PI;
    if phi.center <= x_lo || phi.center >= x_hi {
        return Err(SystemsError::GridTooSmall { tail: f64::INFINITY, tol: tail_tol });
    }
    let tail = grid.weight_bound / pi_sq
        * (1.0 / (x_hi - phi.center) + 1.0 / (phi.center - x_lo));
    if tail > tail_tol {
        return Err(SystemsError::GridTooSmall { tail, tol: tail_tol });
    }
    Ok(pw_inner(phi, phi, grid))
}

/// Default tail tolerance for PW norms on the standard [−20, 20] grid.
pub const PW_TAIL_TOLERANCE: f64 = 0.1;

// ---------------------------------------------------------------------------
// Convergence experiment
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub step: f64,
    pub sup_weight_diff: f64,
    pub pw_norm_diffs: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
    /// Whether sup |weight_T − weight| strictly decreases along the rows.
    pub weight_monotone: bool,
    /// Per test function: whether the norm differences strictly decrease.
    pub pw_monotone: Vec<bool>,
}

/// The default PW test set: kernels of band a centered at 0, 1, 2.5.
pub fn default_sinc_test_set(a: f64) -> Vec<SincKernel> {
    [0.0, 1.0, 2.5].iter().map(|&c| SincKernel::new(a, c)).collect()
}

/// For each step size T: periodize h₁₁ = exp(∫f), compare the exact step
/// weight against the smooth weight on the grid, and compare PW norms for the
/// test set.
pub fn convergence_experiment(
    f: &DiracPotential,
    a: f64,
    steps: &[f64],
    xs: &[f64],
    phis: &[SincKernel],
) -> Result<ConvergenceTable, SystemsError> {
    convergence_experiment_with_dt(f, a, steps, xs, phis, rk4_default_dt(a))
}

/// As [`convergence_experiment`] with an explicit RK4 step.
pub fn convergence_experiment_with_dt(
    f: &DiracPotential,
    a: f64,
    steps: &[f64],
    xs: &[f64],
    phis: &[SincKernel],
    dt: f64,
) -> Result<ConvergenceTable, SystemsError> {
    let smooth = weight_grid_with_dt(&WeightSource::Dirac(f), a, xs, dt)?;
    let smooth_norms: Vec<f64> = phis
        .iter()
        .map(|phi| pw_norm(phi, &smooth, PW_TAIL_TOLERANCE))
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::with_capacity(steps.len());
    for &step in steps {
        let count = (a / step).ceil() as usize;
        let ham = periodize(|t| f.h11(t), step, count)?;
        let grid = weight_grid(&WeightSource::Step(&ham), a, xs)?;
        let sup_weight_diff = grid
            .weight
            .iter()
            .zip(&smooth.weight)
            .map(|(w, s)| (w - s).abs())
            .fold(0.0, f64::max);
        let pw_norm_diffs = phis
            .iter()
            .zip(&smooth_norms)
            .map(|(phi, sn)| pw_norm(phi, &grid, PW_TAIL_TOLERANCE).map(|n| (n - sn).abs()))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(ConvergenceRow { step, sup_weight_diff, pw_norm_diffs });
    }
    let weight_monotone = rows
        .windows(2)
        .all(|w| w[1].sup_weight_diff < w[0].sup_weight_diff);
    let pw_monotone: Vec<bool> = (0..phis.len())
        .map(|j| rows.windows(2).all(|w| w[1].pw_norm_diffs[j] < w[0].pw_norm_diffs[j]))
        .collect();
    Ok(ConvergenceTable { rows, weight_monotone, pw_monotone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    const I: Complex64 = Complex64::new(0.0, 1.0);

    fn step_ham(step: f64, heights: &[f64]) -> StepHamiltonian {
        StepHamiltonian::new(step, StepHeightSequence::new(heights.to_vec()).unwrap()).unwrap()
    }

    /// Test-only canonical RK4 for a step Hamiltonian, substeps aligned with
    /// the steps. Independent of the matrizant product it checks.
    fn rk4_canonical_step(ham: &StepHamiltonian, t: f64, x: f64, per_step: usize) -> (f64, f64) {
        let mut u = 1.0f64;
        let mut v = 0.0f64;
        let mut covered = 0.0;
        for &hh in ham.heights.heights() {
            if covered >= t - 1e-15 {
                break;
            }
            let len = ham.step.min(t - covered);
            let h = len / per_step as f64;
            for _ in 0..per_step {
                let rhs = |u: f64, v: f64| (-x / hh * v, x * hh * u);
                let (k1u, k1v) = rhs(u, v);
                let (k2u, k2v) = rhs(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
                let (k3u, k3v) = rhs(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
                let (k4u, k4v) = rhs(u + h * k3u, v + h * k3v);
                u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
                v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            }
            covered += len;
        }
        (u, v)
    }

    #[test]
    fn constant_step_at_zero_is_identity() {
        let m = matrizant_constant_step(2.5, 0.7, Complex64::new(0.0, 0.0));
        assert_eq!(m, Matrix2::identity());
    }

    #[test]
    fn constant_step_quarter_turn() {
        let m = matrizant_constant_step(1.0, 1.0, Complex64::new(std::f64::consts::FRAC_PI_2, 0.0));
        assert!((m.0[0][0].norm()) < 1e-15);
        assert!((m.0[0][1] + 1.0).norm() < 1e-15);
        assert!((m.0[1][0] - 1.0).norm() < 1e-15);
    }

    #[test]
    fn constant_step_det_is_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let h = rng.gen_range(0.1..10.0);
            let len = rng.gen_range(0.01..3.0);
            let z = Complex64::new(rng.gen_range(-8.0..8.0), rng.gen_range(-1.5..1.5));
            let det = matrizant_constant_step(h, len, z).det();
            assert!((det - 1.0).norm() < 1e-12, "det {det}");
        }
    }

    #[test]
    fn matrizant_of_free_system_is_a_rotation() {
        let ham = step_ham(0.5, &[1.0; 8]);
        let a = 3.0;
        for &x in &[0.3, 1.0, 2.7] {
            let m = matrizant(&ham, a, Complex64::new(x, 0.0)).unwrap();
            let e = hermite_biehler(&m, BoundaryCondition::Neumann);
            let expect = (-I * a * x).exp();
            assert!((e - expect).norm() < 1e-13, "E(a,x) = e^{{-iax}} for H ≡ 1");
        }
        // also at complex z
        let z = Complex64::new(1.3, 0.4);
        let m = matrizant(&ham, a, z).unwrap();
        let e = hermite_biehler(&m, BoundaryCondition::Neumann);
        assert!((e - (-I * a * z).exp()).norm() < 1e-12);
    }

    #[test]
    fn matrizant_time_zero_and_out_of_range() {
        let ham = step_ham(0.5, &[2.0, 3.0]);
        assert_eq!(matrizant(&ham, 0.0, Complex64::new(1.0, 0.0)).unwrap(), Matrix2::identity());
        assert!(matches!(
            matrizant(&ham, 1.5, Complex64::new(1.0, 0.0)),
            Err(SystemsError::OutOfRange { .. })
        ));
    }

    #[test]
    fn matrizant_matches_ode_integration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let heights: Vec<f64> = (0..4).map(|_| rng.gen_range(0.3..3.0)).collect();
        let ham = step_ham(0.5, &heights);
        let t = 1.0; // two whole steps
        for &x in &[0.4, 1.1, 2.0] {
            let m = matrizant(&ham, t, Complex64::new(x, 0.0)).unwrap();
            assert!((m.det() - 1.0).norm() < 1e-12);
            let (u, v) = rk4_canonical_step(&ham, t, x, 1000);
            let e = hermite_biehler(&m, BoundaryCondition::Neumann);
            assert!(
                (e.re - u).abs() < 1e-8 && (-e.im - v).abs() < 1e-8,
                "x {x}: ({}, {}) vs ODE ({u}, {v})",
                e.re,
                -e.im
            );
        }
        // partial last step
        let m = matrizant(&ham, 1.3, Complex64::new(0.9, 0.0)).unwrap();
        let (u, v) = rk4_canonical_step(&ham, 1.3, 0.9, 1000);
        let e = hermite_biehler(&m, BoundaryCondition::Neumann);
        assert!((e.re - u).abs() < 1e-8 && (-e.im - v).abs() < 1e-8);
    }

    #[test]
    fn hermite_biehler_initial_values() {
        let id = Matrix2::identity();
        assert_eq!(hermite_biehler(&id, BoundaryCondition::Neumann), Complex64::new(1.0, 0.0));
        assert_eq!(hermite_biehler(&id, BoundaryCondition::Dirichlet), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn free_system_boundary_modulus_is_one() {
        let ham = step_ham(0.5, &[1.0; 4]);
        for &x in &[0.0, 0.7, 1.9] {
            let m = matrizant(&ham, 2.0, Complex64::new(x, 0.0)).unwrap();
            let e = hermite_biehler(&m, BoundaryCondition::Neumann);
            assert!((e.norm() - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn hermite_biehler_inequality_in_upper_half_plane() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let heights: Vec<f64> = (0..8).map(|_| rng.gen_range(0.3..3.0)).collect();
        let ham = step_ham(0.25, &heights);
        for _ in 0..40 {
            let z = Complex64::new(rng.gen_range(-6.0..6.0), rng.gen_range(0.05..2.0));
            let e_up = hermite_biehler(&matrizant(&ham, 2.0, z).unwrap(), BoundaryCondition::Neumann);
            let e_dn =
                hermite_biehler(&matrizant(&ham, 2.0, z.conj()).unwrap(), BoundaryCondition::Neumann);
            assert!(e_up.norm() > e_dn.norm(), "|E(z)| > |E(z̄)| failed at {z}");
        }
    }

    #[test]
    fn periodize_exponential_has_constant_ratio() {
        let t_step = 0.3;
        let ham = periodize(|t: f64| t.exp(), t_step, 6).unwrap();
        let hs = ham.heights.heights();
        for w in hs.windows(2) {
            assert!((w[1] / w[0] - t_step.exp()).abs() < 1e-9, "ratio must be e^T");
        }
    }

    #[test]
    fn periodize_constant_and_affine() {
        let flat = periodize(|_| 1.0, 0.5, 4).unwrap();
        for &h in flat.heights.heights() {
            assert!((h - 1.0).abs() < 1e-12);
        }
        // h₁₁ = 1 + t, T = 1/2: averages 1.25, 1.75
        let affine = periodize(|t| 1.0 + t, 0.5, 2).unwrap();
        assert!((affine.heights.heights()[0] - 1.25).abs() < 1e-10);
        assert!((affine.heights.heights()[1] - 1.75).abs() < 1e-10);
    }

    #[test]
    fn periodize_rejects_nonpositive_h11() {
        assert!(matches!(
            periodize(|t| 1.0 - t, 1.0, 3),
            Err(SystemsError::InvalidHamiltonian { .. })
        ));
    }

    #[test]
    fn scattering_of_zero_potential_is_one() {
        let f = DiracPotential::from_fn(|_| 0.0, 2.0).unwrap();
        for &x in &[0.0, 1.0, 5.0, 17.0] {
            let e = scattering_rk4(&f, 2.0, x, 1e-3).unwrap();
            assert!((e - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn scattering_respects_exponential_bound() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let f = DiracPotential::with_antiderivative(
            |t: f64| 0.8 * (3.0 * t).sin(),
            |t: f64| 0.8 * (1.0 - (3.0 * t).cos()) / 3.0,
            1.5,
        )
        .unwrap();
        let bound = f.abs_integral().exp();
        for _ in 0..20 {
            let x = rng.gen_range(-15.0..15.0);
            let e = scattering_rk4(&f, 1.5, x, 1e-3).unwrap();
            assert!(e.norm() <= bound * (1.0 + 1e-9), "|ℰ| = {} > {}", e.norm(), bound);
        }
    }

    #[test]
    fn scattering_matches_dirac_step_oracle() {
        // step potential: RK4 vs exact per-step transfer matrices
        let vals = [0.8, -0.3, 0.5, 1.2];
        let step = 0.25;
        let f = DiracPotential::step_potential(&vals, step).unwrap();
        for &x in &[0.5, 1.0, 2.0, 3.0] {
            let z = Complex64::new(x, 0.0);
            let mut m = Matrix2::identity();
            for &c in &vals {
                m = dirac_matrizant_step(c, step, z).mul(&m);
            }
            assert!((m.det() - 1.0).norm() < 1e-12);
            let e_exact = hermite_biehler(&m, BoundaryCondition::Neumann);
            let e_rk4 = (-I * x).exp() * scattering_rk4(&f, 1.0, x, 1e-3).unwrap();
            assert!(
                (e_rk4 - e_exact).norm() < 1e-8,
                "x {x}: {:?} vs {:?}",
                e_rk4,
                e_exact
            );
        }
    }

    #[test]
    fn scattering_rk4_is_fourth_order() {
        // truncation-dominated regime: halving dt must cut the error ~16x
        let vals = [0.9, -0.4];
        let step = 0.5;
        let f = DiracPotential::step_potential(&vals, step).unwrap();
        let x = 1.5;
        let z = Complex64::new(x, 0.0);
        let mut m = Matrix2::identity();
        for &c in &vals {
            m = dirac_matrizant_step(c, step, z).mul(&m);
        }
        let exact = hermite_biehler(&m, BoundaryCondition::Neumann);
        let err = |dt: f64| {
            let e = (-I * x).exp() * scattering_rk4(&f, 1.0, x, dt).unwrap();
            (e - exact).norm()
        };
        let (e1, e2, e3) = (err(0.02), err(0.01), err(0.005));
        for ratio in [e1 / e2, e2 / e3] {
            assert!(
                (8.0..40.0).contains(&ratio),
                "fourth order means ~16x per halving, got {ratio} ({e1:.2e}, {e2:.2e}, {e3:.2e})"
            );
        }
    }

    #[test]
    fn dirac_step_degenerate_frequency() {
        // z² = f²: the sinc branch
        let m = dirac_matrizant_step(1.0, 0.5, Complex64::new(1.0, 0.0));
        assert!((m.det() - 1.0).norm() < 1e-12);
        // compare with a slightly detuned value
        let m2 = dirac_matrizant_step(1.0, 0.5, Complex64::new(1.0 + 1e-6, 0.0));
        for i in 0..2 {
            for j in 0..2 {
                assert!((m.0[i][j] - m2.0[i][j]).norm() < 1e-5);
            }
        }
    }

    #[test]
    fn gauge_identity_links_canonical_and_scattering() {
        // |E_c(a,x)|² = u²/h(a) + h(a)v² with (u,v) from the half potential
        let f_full = DiracPotential::with_antiderivative(
            |t: f64| 0.3 + 0.2 * t,
            |t: f64| 0.3 * t + 0.1 * t * t,
            1.0,
        )
        .unwrap();
        let f_half = DiracPotential::with_antiderivative(
            |t: f64| 0.15 + 0.1 * t,
            |t: f64| 0.15 * t + 0.05 * t * t,
            1.0,
        )
        .unwrap();
        let a = 1.0;
        let h_a = f_full.h11(a);
        for &x in &[0.5, 1.3, 4.0] {
            let (u_c, v_c) = canonical_rk4(&f_full, a, x, 1e-3).unwrap();
            let e_d = (-I * a * x).exp() * scattering_rk4(&f_half, a, x, 1e-3).unwrap();
            let (u_d, v_d) = (e_d.re, -e_d.im);
            let lhs = u_c * u_c + v_c * v_c;
            let rhs = u_d * u_d / h_a + h_a * v_d * v_d;
            assert!((lhs - rhs).abs() < 1e-9, "x {x}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn weight_grid_of_free_system_is_flat() {
        let ham = step_ham(0.5, &[1.0; 4]);
        let xs: Vec<f64> = (-10..=10).map(|i| i as f64 * 0.5).collect();
        let grid = weight_grid(&WeightSource::Step(&ham), 2.0, &xs).unwrap();
        for &w in &grid.weight {
            assert!((w - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn weight_of_unit_potential_within_exponential_bounds() {
        let f = DiracPotential::with_antiderivative(|_| 1.0, |t| t, 1.0).unwrap();
        let xs: Vec<f64> = (-40..=40).map(|i| i as f64 * 0.25).collect();
        let grid = weight_grid(&WeightSource::Dirac(&f), 1.0, &xs).unwrap();
        let (lo, hi) = ((-4.0f64).exp(), (4.0f64).exp());
        for &w in &grid.weight {
            assert!(w > lo && w < hi, "weight {w} outside [e⁻⁴, e⁴]");
        }
        assert!((grid.weight_bound - (2.0f64).exp()).abs() < 1e-9);
    }

    #[test]
    fn canonical_boundary_modulus_within_exponential_bounds() {
        // e^{−∫|f|} ≤ |E(a,x)| ≤ e^{∫|f|}
        let f = DiracPotential::with_antiderivative(
            |t: f64| (2.0 * t).cos(),
            |t: f64| (2.0 * t).sin() / 2.0,
            1.2,
        )
        .unwrap();
        let bound = f.abs_integral().exp();
        for &x in &[0.2, 1.0, 3.3, 9.0] {
            let (u, v) = canonical_rk4(&f, 1.2, x, 1e-3).unwrap();
            let modulus = (u * u + v * v).sqrt();
            assert!(modulus <= bound * (1.0 + 1e-9));
            assert!(modulus >= (1.0 - 1e-9) / bound);
        }
    }

    #[test]
    fn pw_norm_of_sinc_on_free_system() {
        // ‖sinc_b‖² = b/π for Lebesgue weight
        let ham = step_ham(0.5, &[1.0; 2]);
        let xs: Vec<f64> = (-4000..=4000).map(|i| i as f64 * 0.01).collect();
        let grid = weight_grid(&WeightSource::Step(&ham), 1.0, &xs).unwrap();
        let phi = SincKernel::new(1.0, 0.0);
        let norm = pw_norm(&phi, &grid, 0.1).unwrap();
        let expect = 1.0 / std::f64::consts::PI;
        // truncation to [−40, 40] loses ~1/(π²·40) per side
        assert!((norm - expect).abs() < 6e-3, "{norm} vs {expect}");
    }

    #[test]
    fn orthogonal_sinc_kernels_have_zero_inner_product() {
        let ham = step_ham(0.5, &[1.0; 2]);
        let xs: Vec<f64> = (-4000..=4000).map(|i| i as f64 * 0.01).collect();
        let grid = weight_grid(&WeightSource::Step(&ham), 1.0, &xs).unwrap();
        let phi = SincKernel::new(1.0, 0.0);
        let psi = SincKernel::new(1.0, std::f64::consts::PI);
        let inner = pw_inner(&phi, &psi, &grid);
        // truncation to [−40, 40] leaves an O(1/(π²·40)) tail
        assert!(inner.abs() < 5e-3, "reproducing-kernel orthogonality, got {inner}");
    }

    #[test]
    fn pw_norm_rejects_narrow_grids() {
        let ham = step_ham(0.5, &[1.0; 2]);
        let xs: Vec<f64> = (-30..=30).map(|i| i as f64 * 0.1).collect();
        let grid = weight_grid(&WeightSource::Step(&ham), 1.0, &xs).unwrap();
        let phi = SincKernel::new(1.0, 0.0);
        assert!(matches!(
            pw_norm(&phi, &grid, 1e-3),
            Err(SystemsError::GridTooSmall { .. })
        ));
    }

    #[test]
    fn pw_norm_is_grid_self_consistent() {
        // Richardson-style check: halving the spacing barely moves the value
        let f = DiracPotential::with_antiderivative(|_| 1.0, |t| t, 1.0).unwrap();
        let coarse: Vec<f64> = (-1000..=1000).map(|i| i as f64 * 0.02).collect();
        let fine: Vec<f64> = (-2000..=2000).map(|i| i as f64 * 0.01).collect();
        let phi = SincKernel::new(1.0, 0.0);
        let g1 = weight_grid(&WeightSource::Dirac(&f), 1.0, &coarse).unwrap();
        let g2 = weight_grid(&WeightSource::Dirac(&f), 1.0, &fine).unwrap();
        let n1 = pw_norm(&phi, &g1, 0.2).unwrap();
        let n2 = pw_norm(&phi, &g2, 0.2).unwrap();
        assert!((n1 - n2).abs() < 1e-4, "{n1} vs {n2}");
    }

    #[test]
    fn convergence_of_zero_potential_is_exact() {
        let f = DiracPotential::with_antiderivative(|_| 0.0, |_| 0.0, 1.0).unwrap();
        let xs: Vec<f64> = (-200..=200).map(|i| i as f64 * 0.1).collect();
        let phis = default_sinc_test_set(1.0);
        let table =
            convergence_experiment(&f, 1.0, &[0.5, 0.25], &xs, &phis).unwrap();
        // the step side is exact; the smooth side carries RK4 roundoff of
        // order (x·dt)⁴ per unit time, ~1e−8 at the grid edge
        for row in &table.rows {
            assert!(row.sup_weight_diff < 1e-7, "{}", row.sup_weight_diff);
            assert!(row.pw_norm_diffs.iter().all(|&d| d < 1e-7));
        }
    }

    #[test]
    fn sampled_potential_interpolates_and_integrates() {
        // f(t) = t sampled on a uniform grid: exact under linear interpolation
        let ts: Vec<f64> = (0..=10).map(|i| i as f64 * 0.1).collect();
        let vals: Vec<f64> = ts.clone();
        let f = DiracPotential::from_samples(&ts, &vals).unwrap();
        assert!((f.eval(0.55) - 0.55).abs() < 1e-12);
        assert!((f.integral(1.0) - 0.5).abs() < 1e-9);
        assert!((f.abs_integral() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn invalid_potentials_are_rejected() {
        assert!(DiracPotential::from_samples(&[0.0], &[1.0]).is_err());
        assert!(DiracPotential::from_samples(&[0.0, 1.0], &[1.0, f64::NAN]).is_err());
        assert!(DiracPotential::from_fn(|_| f64::INFINITY, 1.0).is_err());
    }
}
