//! Named built-in Hamiltonians/potentials and two-column sample files.
//!
//! The registry covers the worked examples plus `const`:
//!
//! * `const:V`             — constant V
//! * `exp` / `exp:r=R`     — e^{Rt} (default R = 1)
//! * `affine:b=B`          — 1 + B·t
//! * `inverse-square:c=C`  — 1/(1 + C·t)²
//! * `decay` / `decay:s=S` — 1/(1 + S·t) (also accepts the spelled-out
//!   `decay:1/(1+t)`)
//!
//! A spec names either the h₁₁ entry of a Hamiltonian or a Dirac potential f;
//! both views are provided. Potentials carry exact antiderivatives.

use crate::error::SystemsError;
use crate::systems::DiracPotential;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BuiltinSpec {
    Const { value: f64 },
    Exp { rate: f64 },
    Affine { slope: f64 },
    InverseSquare { coeff: f64 },
    Decay { scale: f64 },
}

impl BuiltinSpec {
    /// Parse `name`, `name:value`, or `name:key=value`.
    pub fn parse(spec: &str) -> Result<Self, String> {
        let (name, payload) = match spec.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p.trim())),
            None => (spec.trim(), None),
        };
        let positional = |payload: Option<&str>, default: Option<f64>| -> Result<f64, String> {
            match payload {
                None => default.ok_or_else(|| format!("`{name}` needs a parameter")),
                Some(p) => {
                    let v = p.split_once('=').map(|(_, v)| v).unwrap_or(p);
                    v.parse::<f64>().map_err(|_| format!("cannot parse `{p}` as a number"))
                }
            }
        };
        match name {
            "const" => Ok(BuiltinSpec::Const { value: positional(payload, None)? }),
            "exp" => Ok(BuiltinSpec::Exp { rate: positional(payload, Some(1.0))? }),
            "affine" => Ok(BuiltinSpec::Affine { slope: positional(payload, None)? }),
            "inverse-square" => Ok(BuiltinSpec::InverseSquare { coeff: positional(payload, None)? }),
            "decay" => {
                if payload == Some("1/(1+t)") {
                    return Ok(BuiltinSpec::Decay { scale: 1.0 });
                }
                Ok(BuiltinSpec::Decay { scale: positional(payload, Some(1.0))? })
            }
            other => Err(format!(
                "unknown builtin `{other}` (expected const, exp, affine, inverse-square, decay)"
            )),
        }
    }

    /// The spec read as h₁₁(t).
    pub fn h11_fn(&self) -> impl Fn(f64) -> f64 + Send + Sync + 'static {
        let spec = *self;
        move |t: f64| match spec {
            BuiltinSpec::Const { value } => value,
            BuiltinSpec::Exp { rate } => (rate * t).exp(),
            BuiltinSpec::Affine { slope } => 1.0 + slope * t,
            BuiltinSpec::InverseSquare { coeff } => 1.0 / (1.0 + coeff * t).powi(2),
            BuiltinSpec::Decay { scale } => 1.0 / (1.0 + scale * t),
        }
    }

    /// The spec read as a Dirac potential f(t) on [0, horizon], with its
    /// exact antiderivative.
    pub fn potential(&self, horizon: f64) -> Result<DiracPotential, SystemsError> {
        let f = self.h11_fn();
        let spec = *self;
        let integral = move |t: f64| match spec {
            BuiltinSpec::Const { value } => value * t,
            BuiltinSpec::Exp { rate } => {
                if rate == 0.0 {
                    t
                } else {
                    ((rate * t).exp() - 1.0) / rate
                }
            }
            BuiltinSpec::Affine { slope } => t + 0.5 * slope * t * t,
            BuiltinSpec::InverseSquare { coeff } => {
                if coeff == 0.0 {
                    t
                } else {
                    t / (1.0 + coeff * t)
                }
            }
            BuiltinSpec::Decay { scale } => {
                if scale == 0.0 {
                    t
                } else {
                    (1.0 + scale * t).ln() / scale
                }
            }
        };
        DiracPotential::with_antiderivative(f, integral, horizon)
    }
}

/// Parse two-column whitespace-separated (t, value) text.
pub fn parse_samples(text: &str) -> Result<(Vec<f64>, Vec<f64>), String> {
    let mut ts = Vec::new();
    let mut vals = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let t: f64 = parts
            .next()
            .ok_or_else(|| format!("line {}: missing time column", lineno + 1))?
            .parse()
            .map_err(|_| format!("line {}: bad time value", lineno + 1))?;
        let v: f64 = parts
            .next()
            .ok_or_else(|| format!("line {}: missing value column", lineno + 1))?
            .parse()
            .map_err(|_| format!("line {}: bad sample value", lineno + 1))?;
        ts.push(t);
        vals.push(v);
    }
    if ts.len() < 2 {
        return Err("sample file needs at least two rows".into());
    }
    Ok((ts, vals))
}
