use std::f64::consts::PI;

use num_complex::Complex64;

use super::{RadiusQuery, FUNCTIONAL_TOL};
use crate::error::{Error, Result};
use crate::family::functional;

const GRID_INTERVALS: usize = 256;
const REFINE_CANDIDATES: usize = 4;
const REFINE_POINTS: usize = 20;
const MIN_REFINE_LEVELS: usize = 3;

/// Left-hand side of the class condition at `z` (in the rescaled variable):
/// `|v² - 1|` for the lemniscate, `|(v - 1)/(A - B v)|` for Janowski.
pub fn region_functional(q: &RadiusQuery, z: Complex64) -> Result<f64> {
    let v = functional(q.functional(), q.kind, &q.params, z * q.scale, FUNCTIONAL_TOL)?;
    match q.janowski {
        None => Ok((v.value * v.value - 1.0).norm()),
        Some(jp) => {
            let den = jp.a() - jp.b() * v.value;
            let den_bound = jp.b().abs() * v.abs_error_bound;
            if den.norm() < 10.0 * den_bound || den.norm() == 0.0 {
                return Err(Error::PoleProximity {
                    z: z.to_string(),
                    modulus: den.norm(),
                    bound: den_bound,
                });
            }
            Ok(((v.value - 1.0) / den).norm())
        }
    }
}

/// Maximum of the region functional on `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySup {
    pub sup: f64,
    /// Angle in `[0, π]` where the maximum is attained.
    pub argmax_angle: f64,
}

/// Maximum of [`region_functional`] over `|z| = r`.
///
/// The functionals have real Taylor coefficients, so the sweep covers
/// `θ ∈ [0, π]` only. A uniform grid locates the largest local maxima, each
/// of which is refined by repeated ten-fold zooming until the spacing falls
/// below `tol_theta`.
pub fn boundary_sup(q: &RadiusQuery, r: f64, tol_theta: f64) -> Result<BoundarySup> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::InvalidParameter(format!("radius must be finite and >= 0, got {r}")));
    }
    if !(tol_theta > 0.0) {
        return Err(Error::InvalidParameter(format!("tol_theta must be > 0, got {tol_theta}")));
    }
    let at = |theta: f64| region_functional(q, Complex64::from_polar(r, theta));
    if r == 0.0 {
        return Ok(BoundarySup { sup: at(0.0)?, argmax_angle: 0.0 });
    }

    let h = PI / GRID_INTERVALS as f64;
    let values = (0..=GRID_INTERVALS)
        .map(|i| at(i as f64 * h))
        .collect::<Result<Vec<_>>>()?;

    let mut peaks: Vec<usize> = (0..=GRID_INTERVALS)
        .filter(|&i| {
            let left = i == 0 || values[i] >= values[i - 1];
            let right = i == GRID_INTERVALS || values[i] >= values[i + 1];
            left && right
        })
        .collect();
    peaks.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    peaks.truncate(REFINE_CANDIDATES);

    let mut best = BoundarySup { sup: f64::NEG_INFINITY, argmax_angle: 0.0 };
    for &i in &peaks {
        let (mut theta, mut value) = (i as f64 * h, values[i]);
        let mut width = h;
        let mut level = 0;
        while level < MIN_REFINE_LEVELS || width >= tol_theta {
            let lo = (theta - width).max(0.0);
            let hi = (theta + width).min(PI);
            for k in 0..=REFINE_POINTS {
                let t = lo + (hi - lo) * k as f64 / REFINE_POINTS as f64;
                let v = at(t)?;
                if v > value {
                    value = v;
                    theta = t;
                }
            }
            width /= 10.0;
            level += 1;
        }
        if value > best.sup {
            best = BoundarySup { sup: value, argmax_angle: theta };
        }
    }
    Ok(best)
}
