use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::family::Form;
use crate::kernel::{wright_derivative, wright_eval, WrightParams};

pub const DEFAULT_QUADRATURE_POINTS: usize = 512;
const MAX_QUADRATURE_POINTS: usize = 1 << 16;
const KERNEL_TOL: f64 = 1e-15;

/// Number of zeros of the base function inside `|z| < radius`, counted with
/// multiplicity by the argument principle.
///
/// The winding integral `(1/2πi)∮ B'/B dz` is approximated by the trapezoidal
/// rule on the circle, which for this periodic integrand reduces to the mean
/// of `z B'(z)/B(z)` over equispaced nodes. Node counts double from `points`
/// until the rounded value repeats and lies within 0.1 of an integer.
pub fn count_zeros_in_disk(
    p: &WrightParams,
    form: Form,
    radius: f64,
    points: usize,
) -> Result<i64> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidParameter(format!("radius must be > 0, got {radius}")));
    }
    if points < 8 {
        return Err(Error::InvalidParameter(format!(
            "need at least 8 quadrature points, got {points}"
        )));
    }
    let mut n = points;
    let mut previous: Option<i64> = None;
    let mut last = (f64::NAN, f64::INFINITY);
    while n <= MAX_QUADRATURE_POINTS {
        let v = winding(p, form, radius, n)?;
        let rounded = v.re.round();
        let distance = (v - rounded).norm();
        last = (v.re, distance);
        if distance <= 0.1 && previous == Some(rounded as i64) {
            return Ok(rounded as i64);
        }
        previous = if distance <= 0.1 { Some(rounded as i64) } else { None };
        n *= 2;
    }
    Err(Error::NonIntegerResidual { value: last.0, distance: last.1 })
}

/// Mean of `z B'(z)/B(z)` over `n` equispaced nodes of `|z| = radius`.
fn winding(p: &WrightParams, form: Form, radius: f64, n: usize) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let theta = 2.0 * PI * k as f64 / n as f64;
        let z = Complex64::from_polar(radius, theta);
        let u = form.argument(z);
        let w0 = wright_eval(p, u, KERNEL_TOL)?;
        if w0.value.norm() <= w0.abs_error_bound {
            return Err(Error::NearZeroDenominator {
                z: z.to_string(),
                modulus: w0.value.norm(),
                bound: w0.abs_error_bound,
            });
        }
        let w1 = wright_derivative(p, u, 1, KERNEL_TOL)?;
        let ratio = w1.value / w0.value;
        acc += match form {
            Form::MinusZSquared => -2.0 * z * z * ratio,
            Form::MinusZ => -z * ratio,
        };
    }
    Ok(acc / n as f64)
}
