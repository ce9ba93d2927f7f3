use std::f64::consts::PI;

use num_complex::Complex64;

use super::region::boundary_sup;
use super::{Method, RadiusQuery, RadiusResult, DEFAULT_THETA_TOL, FUNCTIONAL_TOL};
use crate::error::{Error, Result};
use crate::family::functional;

/// Radius by bisection on `sup_{|z|=r} Λ(z) < 1`, where `Λ` is the region
/// functional.
///
/// While `Λ` is the modulus of a function analytic in `|z| ≤ r`, its circle
/// maximum is nondecreasing in `r` (maximum modulus). For Janowski classes
/// with `B ≠ 0` the function has poles where `A = B v`; the maximum blows up
/// as the circle approaches the first one, so the condition fails before it,
/// but past a pole it may hold again. A forward scan therefore locates the
/// first failing grid cell and bisection runs inside it. Evaluation failures
/// count as violations. If the condition still holds at the domain bound,
/// that bound is returned with `reached_domain_bound` set.
pub fn radius_by_certification(q: &RadiusQuery, tol: f64) -> Result<RadiusResult> {
    check_tol(tol)?;
    let bound = q.domain_bound(tol)?;
    let mut pole = false;
    let mut holds = |r: f64| match boundary_sup(q, r, DEFAULT_THETA_TOL) {
        Ok(s) => s.sup < 1.0,
        Err(Error::PoleProximity { .. }) => {
            pole = true;
            false
        }
        Err(_) => false,
    };

    let (lo, hi, reached) = first_failure(bound, tol, &mut holds);
    let mut res = RadiusResult::from_bracket(lo, hi, Method::Certifier, bound);
    res.reached_domain_bound = reached;
    res.pole_encountered = pole;
    if let Ok(s) = boundary_sup(q, res.radius, DEFAULT_THETA_TOL) {
        res.sup_at_radius = s.sup;
        res.argmax_angle = s.argmax_angle;
    }
    Ok(res)
}

/// Radius of the half-plane condition `Re v > 0` on `|z| < r`.
///
/// This is the Janowski class with `A = 1, B = -1`, computed without the
/// Janowski map: the minimum of the harmonic function `Re v` over the circle
/// is located by a grid and golden-section search.
pub fn radius_half_plane(q: &RadiusQuery, tol: f64) -> Result<RadiusResult> {
    check_tol(tol)?;
    let bound = q.domain_bound(tol)?;
    let mut holds = |r: f64| min_real_part(q, r).map_or(false, |(m, _)| m > 0.0);
    let (lo, hi, reached) = first_failure(bound, tol, &mut holds);
    let mut res = RadiusResult::from_bracket(lo, hi, Method::HalfPlane, bound);
    res.reached_domain_bound = reached;
    if let Ok((m, theta)) = min_real_part(q, res.radius) {
        res.sup_at_radius = m;
        res.argmax_angle = theta;
    }
    Ok(res)
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("tol must be finite and > 0, got {tol}")))
    }
}

const SCAN_CELLS: usize = 32;

/// Bracket of the first `r` in `(0, bound]` where `holds` fails, from a
/// uniform scan followed by bisection; `(bound, bound, true)` if it never fails.
fn first_failure(bound: f64, tol: f64, holds: &mut impl FnMut(f64) -> bool) -> (f64, f64, bool) {
    let h = bound / SCAN_CELLS as f64;
    for i in 1..=SCAN_CELLS {
        let r = if i == SCAN_CELLS { bound } else { i as f64 * h };
        if !holds(r) {
            let (lo, hi) = bisect((i - 1) as f64 * h, r, tol, holds);
            return (lo, hi, false);
        }
    }
    (bound, bound, true)
}

/// Bisection for the last `r` where `holds` is true, given it holds at `lo`
/// and fails at `hi`.
fn bisect(mut lo: f64, mut hi: f64, tol: f64, holds: &mut impl FnMut(f64) -> bool) -> (f64, f64) {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Minimum of `Re v(r e^{iθ})` over `θ ∈ [0, π]` and its location.
fn min_real_part(q: &RadiusQuery, r: f64) -> Result<(f64, f64)> {
    const GRID: usize = 512;
    let re = |theta: f64| -> Result<f64> {
        let z = Complex64::from_polar(r * q.scale, theta);
        Ok(functional(q.functional(), q.kind, &q.params, z, FUNCTIONAL_TOL)?.value.re)
    };
    let h = PI / GRID as f64;
    let values = (0..=GRID).map(|i| re(i as f64 * h)).collect::<Result<Vec<_>>>()?;
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..=GRID {
        let local = (i == 0 || values[i] <= values[i - 1]) && (i == GRID || values[i] <= values[i + 1]);
        if !local {
            continue;
        }
        let a = (i as f64 - 1.0).max(0.0) * h;
        let b = ((i + 1) as f64 * h).min(PI);
        let (theta, m) = golden_min(&re, a, b)?;
        let (theta, m) = if values[i] < m { (i as f64 * h, values[i]) } else { (theta, m) };
        if m < best.0 {
            best = (m, theta);
        }
    }
    Ok(best)
}

fn golden_min(f: &impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64) -> Result<(f64, f64)> {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    while b - a > 1e-9 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc < fd { (c, fc) } else { (d, fd) })
}
