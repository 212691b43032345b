//! Adaptive Simpson quadrature and the trapezoid rule.

use crate::error::QuadratureError;

const MAX_DEPTH: usize = 48;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    p: Panel,
    tol: f64,
    depth: usize,
    min_depth: usize,
    converged: &mut bool,
) -> f64 {
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let refined = left + right;
    if depth >= min_depth && (refined - p.whole).abs() <= 15.0 * tol {
        return refined + (refined - p.whole) / 15.0;
    }
    if depth >= MAX_DEPTH {
        *converged = false;
        return refined;
    }
    let lp = Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left };
    let rp = Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right };
    recurse(f, lp, tol / 2.0, depth + 1, min_depth, converged)
        + recurse(f, rp, tol / 2.0, depth + 1, min_depth, converged)
}

/// Adaptive Simpson with a forced initial refinement depth.
///
/// `min_depth` levels of bisection are performed before the error estimate is
/// trusted. Oscillatory integrands need this: sampling cos(kωx) on a coarse
/// dyadic lattice can alias to a constant and "converge" instantly, so
/// callers pass min_depth ≈ log₂(cycles) + 3.
pub fn adaptive_simpson_min_depth<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_floor: f64,
    min_depth: usize,
) -> Result<f64, QuadratureError> {
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fm = f(0.5 * (a + b));
    let fb = f(b);
    let whole = simpson(a, b, fa, fm, fb);
    if !whole.is_finite() {
        return Err(QuadratureError { a, b, tol: rel_tol });
    }
    let tol = (rel_tol * whole.abs()).max(abs_floor);
    let mut converged = true;
    let value = recurse(
        &f,
        Panel { a, b, fa, fm, fb, whole },
        tol,
        0,
        min_depth.min(MAX_DEPTH - 1),
        &mut converged,
    );
    if converged && value.is_finite() {
        Ok(value)
    } else {
        Err(QuadratureError { a, b, tol: rel_tol })
    }
}

/// Adaptive Simpson integration of `f` over `[a, b]`.
///
/// The tolerance is `rel_tol * |first estimate|`, floored at `abs_floor` so
/// that integrals near zero do not demand infinite refinement.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_floor: f64,
) -> Result<f64, QuadratureError> {
    adaptive_simpson_min_depth(f, a, b, rel_tol, abs_floor, 2)
}

/// Minimum bisection depth that resolves `cycles` oscillations.
pub fn oscillation_depth(cycles: usize) -> usize {
    let mut depth = 3;
    let mut resolved = 1;
    while resolved < cycles.max(1) {
        resolved *= 2;
        depth += 1;
    }
    depth
}

/// Trapezoid rule on an explicit (sorted) grid.
pub fn trapezoid(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let mut sum = 0.0;
    for i in 1..xs.len() {
        sum += 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
    }
    sum
}
