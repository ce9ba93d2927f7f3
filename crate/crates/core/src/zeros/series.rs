//! Real power series `Σ m(n) xⁿ / (n! Γ(ρn+β))` on the negative real axis,
//! evaluated with a certified sign.
//!
//! Along `x < 0` the terms alternate and the sum is far smaller than its
//! largest term once `|x|` is large, so a double-precision sum loses
//! `log10(max term / |sum|)` digits. Every evaluation carries a rounding
//! bound; when the bound swamps the value the sum is redone in MPFR at a
//! precision chosen from the term magnitudes.

use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::kernel::{ln_gamma_pos, WrightParams};

const EPS: f64 = f64::EPSILON;
const MAX_TERMS: usize = 20_000;

/// Coefficient multiplier `m(n)` applied to the Wright coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Multiplier {
    /// `1`: the base function itself.
    One,
    /// `n + shift` scaled by `scale`: derivative forms such as `2n+1`, `n+1`, `2n+β`.
    Affine { scale: f64, shift: f64 },
}

impl Multiplier {
    fn eval(self, n: usize) -> f64 {
        match self {
            Multiplier::One => 1.0,
            Multiplier::Affine { scale, shift } => scale * n as f64 + shift,
        }
    }
}

/// A sign-certified evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Certified {
    pub value: f64,
    /// Combined rounding and truncation bound on `value`.
    pub bound: f64,
}

impl Certified {
    /// `+1`, `-1`, or `0` when the value is not resolved.
    pub fn sign(&self) -> i8 {
        if self.value.abs() > self.bound {
            if self.value > 0.0 {
                1
            } else {
                -1
            }
        } else {
            0
        }
    }
}

/// `S(x) = Σ m(n) c_n xⁿ`, `c_n = 1/(n! Γ(ρn+β))`, for `x ≤ 0`.
pub(crate) struct RealSeries {
    params: WrightParams,
    mult: Multiplier,
    /// `ln |m(n) c_n|`, grown on demand.
    ln_coef: RefCell<Vec<f64>>,
    #[cfg(feature = "extended-precision")]
    mp_cache: RefCell<Option<extended::Coefficients>>,
}

impl RealSeries {
    pub fn new(params: WrightParams, mult: Multiplier) -> Self {
        Self {
            params,
            mult,
            ln_coef: RefCell::new(Vec::new()),
            #[cfg(feature = "extended-precision")]
            mp_cache: RefCell::new(None),
        }
    }

    fn ln_coef(&self, n: usize) -> f64 {
        let mut cache = self.ln_coef.borrow_mut();
        while cache.len() <= n {
            let k = cache.len();
            let ln_fact = if k < 2 { 0.0 } else { ln_gamma_pos(k as f64 + 1.0) };
            let m = self.mult.eval(k);
            let v = m.abs().ln() - ln_fact - ln_gamma_pos(self.params.rho() * k as f64 + self.params.beta());
            cache.push(v);
        }
        cache[n]
    }

    /// Natural log of `Σ |t_n|` and the number of terms needed so the
    /// remaining tail is below `exp(-drop)` relative to that sum.
    fn magnitude_profile(&self, x: f64, drop: f64) -> (f64, usize) {
        let ln_x = x.abs().ln();
        let mut ln_max = f64::NEG_INFINITY;
        let mut acc = 0.0; // Σ exp(ln_t - ln_max)
        let mut prev = f64::NEG_INFINITY;
        let mut below = 0;
        for n in 0..MAX_TERMS {
            let lt = self.ln_coef(n) + n as f64 * ln_x;
            if lt > ln_max {
                acc = acc * (ln_max - lt).exp() + 1.0;
                ln_max = lt;
            } else {
                acc += (lt - ln_max).exp();
            }
            if lt - prev < (0.5f64).ln() {
                below += 1;
            } else {
                below = 0;
            }
            prev = lt;
            let ln_sum = ln_max + acc.ln();
            if below >= 3 && lt < ln_sum - drop {
                return (ln_sum, n + 1);
            }
        }
        (ln_max + acc.ln(), MAX_TERMS)
    }

    /// Double-precision evaluation with a rounding bound.
    pub fn eval_f64(&self, x: f64) -> Certified {
        if x == 0.0 {
            return Certified { value: self.ln_coef(0).exp() * self.sign_of(0), bound: 0.0 };
        }
        let ln_x = x.abs().ln();
        let neg = x < 0.0;
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        let mut round = 0.0;
        let mut prev = f64::NEG_INFINITY;
        let mut below = 0;
        let mut tail = f64::INFINITY;
        let mut n_used = 0;
        for n in 0..MAX_TERMS {
            let lc = self.ln_coef(n);
            let lt = lc + n as f64 * ln_x;
            let mag = lt.exp();
            let s = if neg && n % 2 == 1 { -1.0 } else { 1.0 } * self.sign_of(n);
            sum += s * mag;
            abs_sum += mag;
            // exp() turns the absolute error of the log, which scales with the
            // magnitudes of its cancelling parts, into a relative error of the term
            round += mag * EPS * 2.0 * (8.0 + lc.abs() + (n as f64 * ln_x).abs());
            n_used = n + 1;
            let q = (lt - prev).exp();
            below = if q < 0.5 { below + 1 } else { 0 };
            prev = lt;
            if below >= 3 {
                tail = mag * q / (1.0 - q);
                if tail <= EPS * EPS * abs_sum || mag == 0.0 {
                    break;
                }
            }
        }
        let bound = round + tail + n_used as f64 * EPS * abs_sum;
        Certified { value: sum, bound }
    }

    fn sign_of(&self, n: usize) -> f64 {
        if self.mult.eval(n) < 0.0 {
            -1.0
        } else {
            1.0
        }
    }

    /// Evaluation with a resolved sign, escalating to extended precision
    /// when double precision cannot decide.
    pub fn eval_certified(&self, x: f64) -> Result<Certified> {
        let fast = self.eval_f64(x);
        if fast.sign() != 0 {
            return Ok(fast);
        }
        self.eval_extended(x)
    }

    #[cfg(feature = "extended-precision")]
    fn eval_extended(&self, x: f64) -> Result<Certified> {
        const MAX_BITS: u32 = 1 << 15;
        let (ln_sum, _) = self.magnitude_profile(x, 0.0);
        let log2_sum = (ln_sum / std::f64::consts::LN_2).max(0.0);
        let mut bits = 128 + (1.5 * log2_sum).ceil() as u32;
        while bits <= MAX_BITS {
            let drop = f64::from(bits) * std::f64::consts::LN_2 + 8.0;
            let (_, terms) = self.magnitude_profile(x, drop);
            let mut cache = self.mp_cache.borrow_mut();
            if cache.as_ref().map_or(true, |c| c.prec() < bits) {
                // headroom so a scan moving outward does not rebuild at every step
                *cache = Some(extended::Coefficients::new(&self.params, self.mult, bits + bits / 4));
            }
            let coefs = cache.as_mut().expect("coefficient cache populated above");
            coefs.extend_to(terms);
            let value = coefs.horner(x, terms);
            let ln_bound = ln_sum - f64::from(bits) * std::f64::consts::LN_2;
            let bound = (terms as f64 + 8.0) * ln_bound.exp();
            let c = Certified { value, bound };
            if c.sign() != 0 {
                return Ok(c);
            }
            bits *= 2;
        }
        Err(Error::PrecisionExhausted { x })
    }

    #[cfg(not(feature = "extended-precision"))]
    fn eval_extended(&self, x: f64) -> Result<Certified> {
        Err(Error::PrecisionExhausted { x })
    }
}

#[cfg(feature = "extended-precision")]
mod extended {
    use rug::Float;

    use super::Multiplier;
    use crate::kernel::WrightParams;

    /// MPFR coefficients `m(n) / (Γ(n+1) Γ(ρn+β))`, grown on demand.
    pub(super) struct Coefficients {
        prec: u32,
        rho: Float,
        beta: Float,
        mult: Multiplier,
        fact: Float,
        coefs: Vec<Float>,
    }

    impl Coefficients {
        pub fn new(p: &WrightParams, mult: Multiplier, prec: u32) -> Self {
            Self {
                prec,
                rho: Float::with_val(prec, p.rho()),
                beta: Float::with_val(prec, p.beta()),
                mult,
                fact: Float::with_val(prec, 1),
                coefs: Vec::new(),
            }
        }

        pub fn prec(&self) -> u32 {
            self.prec
        }

        pub fn extend_to(&mut self, terms: usize) {
            let prec = self.prec;
            while self.coefs.len() < terms {
                let n = self.coefs.len() as u32;
                if n > 1 {
                    self.fact *= n;
                }
                let arg = Float::with_val(prec, &self.rho * n) + &self.beta;
                let g = arg.gamma();
                let m = match self.mult {
                    Multiplier::One => Float::with_val(prec, 1),
                    Multiplier::Affine { scale, shift } => {
                        Float::with_val(prec, scale) * n + Float::with_val(prec, shift)
                    }
                };
                let denom = Float::with_val(prec, &self.fact * &g);
                self.coefs.push(m / denom);
            }
        }

        pub fn horner(&self, x: f64, terms: usize) -> f64 {
            let xf = Float::with_val(self.prec, x);
            let mut acc = Float::with_val(self.prec, 0);
            for c in self.coefs[..terms].iter().rev() {
                acc *= &xf;
                acc += c;
            }
            acc.to_f64()
        }
    }
}
