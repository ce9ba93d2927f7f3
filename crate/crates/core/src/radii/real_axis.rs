use num_complex::Complex64;

use super::region::boundary_sup;
use super::{Method, RadiusQuery, RadiusResult, DEFAULT_THETA_TOL, FUNCTIONAL_TOL};
use crate::error::{Error, Result};
use crate::family::functional;

const MONOTONICITY_GRID: usize = 64;

/// Root of `v(r) = c` on the positive real axis, where `v` is the query's
/// starlikeness or convexity functional.
///
/// `v` starts at 1 and must be strictly decreasing on the search interval
/// `(0, domain bound)`; this is checked on a grid. Use
/// [`RadiusQuery::default_real_axis_target`] for the usual target.
pub fn radius_real_axis(q: &RadiusQuery, c: f64, tol: f64) -> Result<RadiusResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!("tol must be finite and > 0, got {tol}")));
    }
    if !(c < 1.0) {
        return Err(Error::InvalidParameter(format!("target must be < 1, got {c}")));
    }
    let bound = q.domain_bound(tol)?;
    let v = |r: f64| -> Result<f64> {
        let z = Complex64::new(r * q.scale, 0.0);
        Ok(functional(q.functional(), q.kind, &q.params, z, FUNCTIONAL_TOL)?.value.re)
    };

    let h = bound / MONOTONICITY_GRID as f64;
    let mut prev = (0.0, 1.0);
    let mut crossing = None;
    for i in 1..=MONOTONICITY_GRID {
        let r = i as f64 * h;
        let value = match v(r) {
            Ok(x) => x,
            // the functional blows up next to the domain bound
            Err(Error::NearZeroDenominator { .. }) if i == MONOTONICITY_GRID => break,
            Err(e) => return Err(e),
        };
        if !(value < prev.1) {
            return Err(Error::MonotonicityViolation { at: r });
        }
        if crossing.is_none() && value <= c {
            crossing = Some((prev.0, r));
        }
        prev = (r, value);
    }
    let (mut lo, mut hi) = crossing.ok_or(Error::NoCrossing { target: c, bound })?;

    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if v(mid)? > c {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut res = RadiusResult::from_bracket(lo, hi, Method::RealAxis, bound);
    if let Ok(s) = boundary_sup(q, res.radius, DEFAULT_THETA_TOL) {
        res.sup_at_radius = s.sup;
        res.argmax_angle = s.argmax_angle;
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::NormalizedKind;
    use crate::kernel::WrightParams;
    use crate::radii::JanowskiParams;

    #[test]
    fn bessel_star_root() {
        let p = WrightParams::new(1.0, 1.0).unwrap();
        let q = RadiusQuery::janowski(NormalizedKind::G, p, false, JanowskiParams::new(1.0, 0.0).unwrap());
        let r = radius_real_axis(&q, q.default_real_axis_target(), 1e-10).unwrap();
        assert!((r.radius - 0.627_892).abs() < 1e-5);
        assert_eq!(r.method, Method::RealAxis);
    }

    #[test]
    fn unreachable_target() {
        let p = WrightParams::new(1.0, 1.0).unwrap();
        let q = RadiusQuery::lemniscate(NormalizedKind::G, p, false);
        assert!(matches!(radius_real_axis(&q, 1.5, 1e-9), Err(Error::InvalidParameter(_))));
        assert!(matches!(radius_real_axis(&q, -1e12, 1e-9), Err(Error::NoCrossing { .. })));
    }
}
