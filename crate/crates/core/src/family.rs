//! The three normalized Wright functions and their geometric functionals.
//!
//! With `Φ(z) = Γ(β) W_{ρ,β}(-z²)` and `Ψ(z) = Γ(β) W_{ρ,β}(-z)`:
//!
//! ```text
//! f(z) = z Φ(z)^{1/β}      (kind F)
//! g(z) = z Φ(z)            (kind G)
//! h(z) = z Ψ(z)            (kind H)
//! ```
//!
//! All three satisfy `f(0) = 0`, `f'(0) = 1`. The starlikeness functional
//! `z f'/f` and the convexity functional `1 + z f''/f'` are assembled from
//! the log-derivatives `L = zΦ'/Φ` and `M = z²Φ''/Φ`, so the fractional power
//! in kind F is never evaluated.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{wright_derivative, wright_eval, EvalResult, WrightParams};

/// Which normalization of the Wright function is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalizedKind {
    F,
    G,
    H,
}

impl NormalizedKind {
    pub const ALL: [NormalizedKind; 3] = [NormalizedKind::F, NormalizedKind::G, NormalizedKind::H];

    /// Argument substitution used by the kind's base function.
    pub fn form(self) -> Form {
        match self {
            NormalizedKind::F | NormalizedKind::G => Form::MinusZSquared,
            NormalizedKind::H => Form::MinusZ,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NormalizedKind::F => "f",
            NormalizedKind::G => "g",
            NormalizedKind::H => "h",
        }
    }
}

impl fmt::Display for NormalizedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NormalizedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f" => Ok(NormalizedKind::F),
            "g" => Ok(NormalizedKind::G),
            "h" => Ok(NormalizedKind::H),
            other => Err(Error::InvalidParameter(format!(
                "unknown normalized kind '{other}' (expected f, g or h)"
            ))),
        }
    }
}

/// Argument substitution of a base function: `W(-z²)` or `W(-z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    MinusZSquared,
    MinusZ,
}

impl Form {
    pub fn as_str(self) -> &'static str {
        match self {
            Form::MinusZSquared => "sq",
            Form::MinusZ => "lin",
        }
    }

    /// The argument passed to `W`.
    pub fn argument(self, z: Complex64) -> Complex64 {
        match self {
            Form::MinusZSquared => -(z * z),
            Form::MinusZ => -z,
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sq" | "minus_z_squared" | "minus-z-squared" => Ok(Form::MinusZSquared),
            "lin" | "minus_z" | "minus-z" => Ok(Form::MinusZ),
            other => Err(Error::InvalidParameter(format!(
                "unknown form '{other}' (expected sq or lin)"
            ))),
        }
    }
}

/// Starlikeness (`z f'/f`) or convexity (`1 + z f''/f'`) functional.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Functional {
    Starlike,
    Convex,
}

/// A functional value with its first-order propagated error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalValue {
    pub value: Complex64,
    pub abs_error_bound: f64,
}

/// `Φ(z) = Γ(β) W_{ρ,β}(-z²)`, the even base of kinds F and G.
pub fn base_eval(p: &WrightParams, z: Complex64, tol: f64) -> Result<EvalResult> {
    form_base_eval(p, Form::MinusZSquared, z, tol)
}

/// `Γ(β) W_{ρ,β}(u)` with `u` given by `form`.
pub fn form_base_eval(p: &WrightParams, form: Form, z: Complex64, tol: f64) -> Result<EvalResult> {
    let gb = p.ln_gamma_beta().exp();
    let r = wright_eval(p, form.argument(z), tol / gb)?;
    Ok(EvalResult {
        value: r.value * gb,
        abs_error_bound: r.abs_error_bound * gb,
        terms_used: r.terms_used,
    })
}

#[derive(Debug, Clone, Copy)]
struct Approx {
    v: Complex64,
    e: f64,
}

/// `L = zΦ'/Φ` and `M = z²Φ''/Φ` for the kind's base.
/// `M` is skipped (returned as zero) unless `second` is set.
fn log_derivatives(
    form: Form,
    p: &WrightParams,
    z: Complex64,
    tol: f64,
    second: bool,
) -> Result<(Approx, Approx)> {
    let u = form.argument(z);
    let w0 = wright_eval(p, u, tol)?;
    let w1 = wright_derivative(p, u, 1, tol)?;
    let w2 = if second {
        wright_derivative(p, u, 2, tol)?
    } else {
        EvalResult { value: Complex64::new(0.0, 0.0), abs_error_bound: 0.0, terms_used: 0 }
    };
    let den = w0.value.norm();
    if den <= w0.abs_error_bound {
        return Err(Error::NearZeroDenominator {
            z: z.to_string(),
            modulus: den,
            bound: w0.abs_error_bound,
        });
    }
    let r1 = w1.value / w0.value;
    let r2 = w2.value / w0.value;
    let e1 = (w1.abs_error_bound + r1.norm() * w0.abs_error_bound) / den;
    let e2 = (w2.abs_error_bound + r2.norm() * w0.abs_error_bound) / den;
    let z2 = z * z;
    Ok(match form {
        Form::MinusZSquared => {
            let l = -2.0 * z2 * r1;
            let el = 2.0 * z2.norm() * e1;
            let m = l + 4.0 * z2 * z2 * r2;
            let em = el + 4.0 * z2.norm() * z2.norm() * e2;
            (Approx { v: l, e: el }, Approx { v: m, e: em })
        }
        Form::MinusZ => {
            let l = -z * r1;
            let el = z.norm() * e1;
            let m = z2 * r2;
            let em = z2.norm() * e2;
            (Approx { v: l, e: el }, Approx { v: m, e: em })
        }
    })
}

fn quotient(num: Approx, den: Approx, z: Complex64) -> Result<Approx> {
    let d = den.v.norm();
    if d <= den.e {
        return Err(Error::NearZeroDenominator {
            z: z.to_string(),
            modulus: d,
            bound: den.e,
        });
    }
    let q = num.v / den.v;
    Ok(Approx {
        v: q,
        e: (num.e + q.norm() * den.e) / d,
    })
}

/// `w(z) = z f'(z)/f(z)` for the given kind.
pub fn starlike_functional(
    kind: NormalizedKind,
    p: &WrightParams,
    z: Complex64,
    tol: f64,
) -> Result<FunctionalValue> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(FunctionalValue { value: Complex64::new(1.0, 0.0), abs_error_bound: 0.0 });
    }
    let (l, _) = log_derivatives(kind.form(), p, z, tol, false)?;
    let (value, err) = match kind {
        NormalizedKind::F => (1.0 + l.v / p.beta(), l.e / p.beta()),
        NormalizedKind::G | NormalizedKind::H => (1.0 + l.v, l.e),
    };
    Ok(FunctionalValue { value, abs_error_bound: err })
}

/// `C(z) = 1 + z f''(z)/f'(z)` for the given kind.
pub fn convex_functional(
    kind: NormalizedKind,
    p: &WrightParams,
    z: Complex64,
    tol: f64,
) -> Result<FunctionalValue> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(FunctionalValue { value: Complex64::new(1.0, 0.0), abs_error_bound: 0.0 });
    }
    let (l, m) = log_derivatives(kind.form(), p, z, tol, true)?;
    let one = Complex64::new(1.0, 0.0);
    match kind {
        NormalizedKind::G | NormalizedKind::H => {
            // 1 + (2L + M)/(1 + L)
            let num = Approx { v: 2.0 * l.v + m.v, e: 2.0 * l.e + m.e };
            let den = Approx { v: one + l.v, e: l.e };
            let q = quotient(num, den, z)?;
            Ok(FunctionalValue { value: one + q.v, abs_error_bound: q.e })
        }
        NormalizedKind::F => {
            // log f' = (1/β) log Φ + log u with u = 1 + L/β:
            // 1 + L/β + (L + M - L²)/(β + L)
            let beta = p.beta();
            let num = Approx {
                v: l.v + m.v - l.v * l.v,
                e: l.e + m.e + 2.0 * l.v.norm() * l.e,
            };
            let den = Approx { v: beta + l.v, e: l.e };
            let q = quotient(num, den, z)?;
            Ok(FunctionalValue {
                value: one + l.v / beta + q.v,
                abs_error_bound: l.e / beta + q.e,
            })
        }
    }
}

/// Dispatches to [`starlike_functional`] or [`convex_functional`].
pub fn functional(
    which: Functional,
    kind: NormalizedKind,
    p: &WrightParams,
    z: Complex64,
    tol: f64,
) -> Result<FunctionalValue> {
    match which {
        Functional::Starlike => starlike_functional(kind, p, z, tol),
        Functional::Convex => convex_functional(kind, p, z, tol),
    }
}
