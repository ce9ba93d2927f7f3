//! Positive real zeros of the base functions and of the derivatives of the
//! normalized functions, Hadamard partial products over those zeros, and an
//! argument-principle count that checks a table is complete.

mod count;
mod series;

use num_complex::Complex64;

pub use count::{count_zeros_in_disk, DEFAULT_QUADRATURE_POINTS};

use crate::error::{Error, Result};
use crate::family::{Form, NormalizedKind};
use crate::kernel::WrightParams;
use series::{Multiplier, RealSeries};

/// Default refinement width of a zero bracket.
pub const DEFAULT_ZERO_TOL: f64 = 1e-12;
/// Initial scan step.
pub const INITIAL_STEP: f64 = 0.05;
/// Step growth factor applied after each scan step, subject to the gap cap.
pub const STEP_GROWTH: f64 = 1.05;
/// Scan steps allowed per requested zero.
pub const SCAN_CAP: usize = 10_000;

/// The function whose zeros a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSource {
    /// `Γ(β) W_{ρ,β}(-r²)` or `Γ(β) W_{ρ,β}(-r)`.
    Base,
    /// Derivative of the normalized function of the given kind.
    Derivative(NormalizedKind),
}

/// Ordered positive zeros of one real function, each refined to `tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    pub params: WrightParams,
    pub form: Form,
    pub source: TableSource,
    pub zeros: Vec<f64>,
    /// `|S(λ_n)|` at each reported zero.
    pub residuals: Vec<f64>,
    pub tol: f64,
}

impl ZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn first(&self) -> f64 {
        self.zeros[0]
    }
}

/// First `count` positive zeros of `r ↦ Γ(β) W_{ρ,β}(-r²)` (form `MinusZSquared`)
/// or `r ↦ Γ(β) W_{ρ,β}(-r)` (form `MinusZ`).
pub fn positive_zeros(p: &WrightParams, form: Form, count: usize, tol: f64) -> Result<ZeroTable> {
    let series = RealSeries::new(*p, Multiplier::One);
    build_table(p, form, TableSource::Base, &series, count, tol)
}

/// First `count` positive zeros of `r ↦ f'(r)` for the kind's normalized function.
///
/// For kind F the zeros of `f' = Φ^{1/β}·(1 + rΦ'/(βΦ))` below the first zero
/// of `Φ` are those of `βΦ + rΦ'`, which is what is scanned.
pub fn derivative_positive_zeros(
    kind: NormalizedKind,
    p: &WrightParams,
    count: usize,
    tol: f64,
) -> Result<ZeroTable> {
    let mult = derivative_multiplier(kind, p);
    let series = RealSeries::new(*p, mult);
    build_table(p, kind.form(), TableSource::Derivative(kind), &series, count, tol)
}

/// Coefficient multiplier turning the base series into the derivative series.
fn derivative_multiplier(kind: NormalizedKind, p: &WrightParams) -> Multiplier {
    match kind {
        // d/dr [r Σ c_n (-r²)^n] = Σ (2n+1) c_n (-r²)^n
        NormalizedKind::G => Multiplier::Affine { scale: 2.0, shift: 1.0 },
        // d/dr [r Σ c_n (-r)^n] = Σ (n+1) c_n (-r)^n
        NormalizedKind::H => Multiplier::Affine { scale: 1.0, shift: 1.0 },
        // βΦ + rΦ' = Γ(β) Σ (β+2n) c_n (-r²)^n
        NormalizedKind::F => Multiplier::Affine { scale: 2.0, shift: p.beta() },
    }
}

fn build_table(
    p: &WrightParams,
    form: Form,
    source: TableSource,
    series: &RealSeries,
    count: usize,
    tol: f64,
) -> Result<ZeroTable> {
    if count == 0 {
        return Err(Error::InvalidParameter("zero count must be >= 1".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tol must be > 0, got {tol}")));
    }
    let arg = |r: f64| match form {
        Form::MinusZSquared => -(r * r),
        Form::MinusZ => -r,
    };

    let mut zeros: Vec<f64> = Vec::with_capacity(count);
    let mut residuals = Vec::with_capacity(count);
    let mut lo = 0.0;
    let mut sign_lo: i8 = 1; // S(0) = m(0)/Γ(β) > 0
    let mut step = INITIAL_STEP;
    let mut steps = 0usize;

    while zeros.len() < count {
        let hi = lo + step;
        let sign_hi = series.eval_certified(arg(hi))?.sign();
        if sign_hi != sign_lo {
            let z = bisect(series, &arg, lo, hi, sign_lo, tol)?;
            residuals.push(series.eval_f64(arg(z)).value.abs());
            zeros.push(z);
            steps = 0;
        } else {
            steps += 1;
            if steps > SCAN_CAP {
                return Err(Error::ScanExhausted {
                    found: zeros.len(),
                    requested: count,
                    reached: hi,
                });
            }
        }
        // keep at least four samples per expected gap so close pairs are not skipped
        let limit = match zeros.as_slice() {
            [] => (hi / 4.0).max(INITIAL_STEP),
            [z] => z / 4.0,
            [.., a, b] => (b - a) / 4.0,
        };
        step = (step * STEP_GROWTH).min(limit);
        lo = hi;
        sign_lo = sign_hi;
    }

    Ok(ZeroTable { params: *p, form, source, zeros, residuals, tol })
}

fn bisect(
    series: &RealSeries,
    arg: &impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    sign_lo: i8,
    tol: f64,
) -> Result<f64> {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match series.eval_certified(arg(mid)) {
            Ok(c) if c.sign() == sign_lo => lo = mid,
            Ok(_) => hi = mid,
            // the value at mid is below every attainable rounding bound
            Err(Error::PrecisionExhausted { .. }) => return Ok(mid),
            Err(e) => return Err(e),
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `Π_{n≤N} (1 - z²/λ_n²)` for the even form, `Π_{n≤N} (1 - z/λ_n)` for the linear form.
pub fn hadamard_partial_product(table: &ZeroTable, z: Complex64, n: usize) -> Result<Complex64> {
    if n > table.len() {
        return Err(Error::TableTooShort { available: table.len(), requested: n });
    }
    let one = Complex64::new(1.0, 0.0);
    let w = match table.form {
        Form::MinusZSquared => z * z,
        Form::MinusZ => z,
    };
    Ok(table.zeros[..n].iter().fold(one, |acc, &lam| {
        let scale = match table.form {
            Form::MinusZSquared => lam * lam,
            Form::MinusZ => lam,
        };
        acc * (one - w / scale)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::form_base_eval;

    #[test]
    fn bessel_zeros() {
        let p = WrightParams::new(1.0, 1.0).unwrap();
        let t = positive_zeros(&p, Form::MinusZSquared, 3, DEFAULT_ZERO_TOL).unwrap();
        // halves of the zeros of J0
        let j0 = [2.404_825_557_695_773, 5.520_078_110_286_311, 8.653_727_912_911_013];
        for (z, j) in t.zeros.iter().zip(j0) {
            assert!((z - j / 2.0).abs() < 1e-11);
        }
    }

    #[test]
    fn forms_are_related_by_squaring() {
        let p = WrightParams::new(1.0, 1.0).unwrap();
        let sq = positive_zeros(&p, Form::MinusZSquared, 1, DEFAULT_ZERO_TOL).unwrap();
        let lin = positive_zeros(&p, Form::MinusZ, 1, DEFAULT_ZERO_TOL).unwrap();
        assert!((lin.first() - sq.first().powi(2)).abs() < 1e-10);
        assert!((lin.first() - 1.4458).abs() < 1e-4);
    }

    #[test]
    fn zero_count_must_be_positive() {
        let p = WrightParams::new(1.0, 1.0).unwrap();
        assert!(matches!(
            positive_zeros(&p, Form::MinusZ, 0, 1e-10),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn derivative_zero_precedes_base_zero() {
        let p = WrightParams::new(1.0, 1.0).unwrap();
        let d = derivative_positive_zeros(NormalizedKind::G, &p, 1, DEFAULT_ZERO_TOL).unwrap();
        let b = positive_zeros(&p, Form::MinusZSquared, 1, DEFAULT_ZERO_TOL).unwrap();
        assert!(d.first() > 0.5 && d.first() < b.first());
    }

    #[test]
    fn product_vanishes_at_a_zero_and_is_one_at_origin() {
        let p = WrightParams::new(1.0, 1.0).unwrap();
        let t = positive_zeros(&p, Form::MinusZSquared, 5, DEFAULT_ZERO_TOL).unwrap();
        let origin = hadamard_partial_product(&t, Complex64::new(0.0, 0.0), 5).unwrap();
        assert_eq!(origin, Complex64::new(1.0, 0.0));
        let at = hadamard_partial_product(&t, Complex64::new(t.first(), 0.0), 3).unwrap();
        assert!(at.norm() < 1e-12);
        assert!(matches!(
            hadamard_partial_product(&t, Complex64::new(0.1, 0.0), 6),
            Err(Error::TableTooShort { available: 5, requested: 6 })
        ));
    }

    #[test]
    fn residuals_consistent_with_tolerance() {
        let p = WrightParams::new(0.5, 1.5).unwrap();
        let t = positive_zeros(&p, Form::MinusZSquared, 4, DEFAULT_ZERO_TOL).unwrap();
        for &z in &t.zeros {
            let h = 1e-6;
            let a = form_base_eval(&p, Form::MinusZSquared, Complex64::new(z - h, 0.0), 1e-15).unwrap();
            let b = form_base_eval(&p, Form::MinusZSquared, Complex64::new(z + h, 0.0), 1e-15).unwrap();
            let slope = ((b.value.re - a.value.re) / (2.0 * h)).abs();
            let v = form_base_eval(&p, Form::MinusZSquared, Complex64::new(z, 0.0), 1e-15).unwrap();
            // rounding in the alternating sum scales with the sum of |terms|, i.e. the value at +r²
            let abs_sum = form_base_eval(&p, Form::MinusZSquared, Complex64::new(0.0, z), 1e-15).unwrap();
            let rounding = 1e-14 * abs_sum.value.re;
            assert!(v.value.re.abs() <= slope * t.tol + rounding, "z = {z}");
        }
    }
}
