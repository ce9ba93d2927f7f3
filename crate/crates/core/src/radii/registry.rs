//! Scalar radius equations written directly in Wright functions of a real
//! argument.
//!
//! With `s` real, `P = W(s)`, `P₁ = W_{ρ,β+ρ}(s)` and `P₂ = W_{ρ,β+2ρ}(s)`, the
//! functionals on the real line are ratios `N(s)/D(s)` of polynomials in
//! `P, P₁, P₂`. The even forms use `s = -r²` on the positive axis and
//! `s = +r²` at `z = ir`; the linear form uses `s = -r` and `s = +r` (`z = -r`).
//! Each equation is `N - c D = 0`, cleared of denominators so it can be
//! bracketed through sign changes.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::region::boundary_sup;
use super::{
    Method, RadiusKind, RadiusQuery, RadiusResult, DEFAULT_THETA_TOL, FUNCTIONAL_TOL,
    LEMNISCATE_DISK_TARGET,
};
use crate::error::{Error, Result};
use crate::family::{Form, Functional, NormalizedKind};
use crate::kernel::{wright_derivative, wright_eval, WrightParams};

const SCAN_POINTS: usize = 256;

/// A registered radius equation.
#[derive(Debug, Clone, PartialEq)]
pub struct EquationDescriptor {
    pub kind: NormalizedKind,
    pub radius_kind: RadiusKind,
    /// Human-readable form of the equation.
    pub statement: &'static str,
}

impl EquationDescriptor {
    /// `N(s) - c D(s)` at real argument `s` of the base function.
    fn residual(&self, p: &WrightParams, s: f64, c: f64) -> Result<f64> {
        let (n, d) = numerator_denominator(self.kind, self.radius_kind.functional(), p, s)?;
        Ok(n - c * d)
    }
}

/// Lookup table from (normalization, radius kind) to equation.
#[derive(Debug, Clone, Default)]
pub struct EquationRegistry {
    entries: BTreeMap<(NormalizedKind, RadiusKind), EquationDescriptor>,
}

impl EquationRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    /// All twelve (kind, radius kind) equations.
    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        for kind in NormalizedKind::ALL {
            for rk in RadiusKind::ALL {
                reg.insert(EquationDescriptor { kind, radius_kind: rk, statement: statement(kind, rk) });
            }
        }
        reg
    }

    pub fn insert(&mut self, d: EquationDescriptor) {
        self.entries.insert((d.kind, d.radius_kind), d);
    }

    pub fn remove(&mut self, kind: NormalizedKind, rk: RadiusKind) -> Option<EquationDescriptor> {
        self.entries.remove(&(kind, rk))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &EquationDescriptor> {
        self.entries.values()
    }

    pub fn lookup(&self, kind: NormalizedKind, rk: RadiusKind) -> Result<&EquationDescriptor> {
        self.entries
            .get(&(kind, rk))
            .ok_or_else(|| Error::NotTranscribed(format!("{rk} of {kind}")))
    }

    /// Smallest positive root of the query's equation below the domain bound.
    ///
    /// Janowski queries with `B > -1` also solve the equation for the upper
    /// end `(1+A)/(1+B)` at the antipodal point and take the smaller root.
    pub fn solve(&self, q: &RadiusQuery, tol: f64) -> Result<RadiusResult> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidParameter(format!("tol must be finite and > 0, got {tol}")));
        }
        let d = self.lookup(q.kind, q.radius_kind)?;
        let bound = q.domain_bound(tol)?;
        let form = q.kind.form();
        let arg = |r: f64, antipode: bool| {
            let x = r * q.scale;
            let s = match form {
                Form::MinusZSquared => x * x,
                Form::MinusZ => x,
            };
            if antipode {
                s
            } else {
                -s
            }
        };

        let (lower, upper) = match q.janowski {
            Some(jp) => (jp.lower_target(), jp.upper_target()),
            None => (LEMNISCATE_DISK_TARGET, None),
        };
        let mut best = first_root(|r| d.residual(&q.params, arg(r, false), lower), bound, tol)?;
        if let Some(c) = upper {
            let up = first_root(|r| d.residual(&q.params, arg(r, true), c), bound, tol)?;
            best = match (best, up) {
                (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
                (a, b) => a.or(b),
            };
        }
        let (lo, hi) = best.ok_or(Error::NoCrossing { target: lower, bound })?;
        let mut res = RadiusResult::from_bracket(lo, hi, Method::Equation, bound);
        if let Ok(s) = boundary_sup(q, res.radius, DEFAULT_THETA_TOL) {
            res.sup_at_radius = s.sup;
            res.argmax_angle = s.argmax_angle;
        }
        Ok(res)
    }
}

/// First sign change of `f` on `(0, bound]`, refined to width `tol`.
fn first_root(f: impl Fn(f64) -> Result<f64>, bound: f64, tol: f64) -> Result<Option<(f64, f64)>> {
    let h = bound / SCAN_POINTS as f64;
    let mut lo = 0.0;
    let mut f_lo = f(0.0)?;
    for i in 1..=SCAN_POINTS {
        let r = i as f64 * h;
        let f_r = f(r)?;
        if f_r == 0.0 {
            return Ok(Some((r, r)));
        }
        if (f_r > 0.0) != (f_lo > 0.0) {
            let mut hi = r;
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if (f(mid)? > 0.0) == (f_lo > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(Some((lo, hi)));
        }
        lo = r;
        f_lo = f_r;
    }
    Ok(None)
}

/// Numerator and denominator of the functional on the real line.
fn numerator_denominator(
    kind: NormalizedKind,
    which: Functional,
    p: &WrightParams,
    s: f64,
) -> Result<(f64, f64)> {
    let x = Complex64::new(s, 0.0);
    let w0 = wright_eval(p, x, FUNCTIONAL_TOL)?.value.re;
    let w1 = wright_derivative(p, x, 1, FUNCTIONAL_TOL)?.value.re;
    // P·L and P·M, with L, M the first and second log-derivative terms
    let (lp, mp) = match kind.form() {
        Form::MinusZSquared => {
            let lp = 2.0 * s * w1;
            let mp = match which {
                Functional::Starlike => 0.0,
                Functional::Convex => {
                    lp + 4.0 * s * s * wright_derivative(p, x, 2, FUNCTIONAL_TOL)?.value.re
                }
            };
            (lp, mp)
        }
        Form::MinusZ => {
            let mp = match which {
                Functional::Starlike => 0.0,
                Functional::Convex => s * s * wright_derivative(p, x, 2, FUNCTIONAL_TOL)?.value.re,
            };
            (s * w1, mp)
        }
    };
    let beta = p.beta();
    Ok(match (kind, which) {
        (NormalizedKind::F, Functional::Starlike) => (beta * w0 + lp, beta * w0),
        (_, Functional::Starlike) => (w0 + lp, w0),
        (NormalizedKind::F, Functional::Convex) => {
            let bp = beta * w0 + lp;
            (beta * w0 * bp + lp * bp + beta * (lp * w0 + mp * w0 - lp * lp), beta * w0 * bp)
        }
        (_, Functional::Convex) => (w0 + 3.0 * lp + mp, w0 + lp),
    })
}

fn statement(kind: NormalizedKind, rk: RadiusKind) -> &'static str {
    use NormalizedKind::*;
    use RadiusKind::*;
    match (kind, rk) {
        (F, LemStar) => "r f'(r) = (2 - sqrt 2) f(r)",
        (G, LemStar) => "r g'(r) = (2 - sqrt 2) g(r)",
        (H, LemStar) => "r h'(r) = (2 - sqrt 2) h(r)",
        (F, LemConvex) => "f'(r) + r f''(r) = (2 - sqrt 2) f'(r)",
        (G, LemConvex) => "g'(r) + r g''(r) = (2 - sqrt 2) g'(r)",
        (H, LemConvex) => "h'(r) + r h''(r) = (2 - sqrt 2) h'(r)",
        (F, JanStar) => "(1-B) r f'(r) = (1-A) f(r), or (1+B) z f'(z) = (1+A) f(z) at z = ir",
        (G, JanStar) => "(1-B) r g'(r) = (1-A) g(r), or (1+B) z g'(z) = (1+A) g(z) at z = ir",
        (H, JanStar) => "(1-B) r h'(r) = (1-A) h(r), or (1+B) z h'(z) = (1+A) h(z) at z = -r",
        (F, JanConvex) => {
            "(1-B)(f'(r) + r f''(r)) = (1-A) f'(r), or the (1+B), (1+A) analogue at z = ir"
        }
        (G, JanConvex) => {
            "(1-B)(g'(r) + r g''(r)) = (1-A) g'(r), or the (1+B), (1+A) analogue at z = ir"
        }
        (H, JanConvex) => {
            "(1-B)(h'(r) + r h''(r)) = (1-A) h'(r), or the (1+B), (1+A) analogue at z = -r"
        }
    }
}
