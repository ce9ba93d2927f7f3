use serde::Serialize;

use super::certify::radius_by_certification;
use super::real_axis::radius_real_axis;
use super::{RadiusQuery, RadiusResult};
use crate::error::Result;

/// The certifier and the real-axis root for one query.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub query: RadiusQuery,
    pub certifier: RadiusResult,
    /// `Err` holds the real-axis failure.
    pub real_axis: std::result::Result<RadiusResult, crate::error::Error>,
    pub agreement_tol: f64,
}

impl CrossCheck {
    pub fn delta(&self) -> Option<f64> {
        self.real_axis.as_ref().ok().map(|r| r.radius - self.certifier.radius)
    }

    pub fn agree(&self) -> bool {
        self.delta().map_or(false, |d| d.abs() <= self.agreement_tol)
    }

    /// A structured record of the disagreement, if any.
    pub fn finding(&self) -> Option<Finding> {
        if self.agree() {
            return None;
        }
        let q = &self.query;
        let note = match &self.real_axis {
            Err(e) => format!("real-axis method failed: {e}"),
            Ok(_) if self.certifier.argmax_angle > 1e-6 => format!(
                "boundary maximum at theta = {:.6}, off the positive real axis",
                self.certifier.argmax_angle
            ),
            Ok(_) => "boundary maximum on the real axis but roots differ".to_string(),
        };
        Some(Finding {
            kind: q.kind.as_str().to_string(),
            radius_kind: q.radius_kind.as_str().to_string(),
            rho: q.params.rho(),
            beta: q.params.beta(),
            a: q.janowski.map(|j| j.a()),
            b: q.janowski.map(|j| j.b()),
            certifier: self.certifier.radius,
            real_axis: self.real_axis.as_ref().ok().map(|r| r.radius),
            delta: self.delta(),
            argmax_angle: self.certifier.argmax_angle,
            note,
        })
    }
}

/// A certifier/real-axis disagreement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub kind: String,
    pub radius_kind: String,
    pub rho: f64,
    pub beta: f64,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub certifier: f64,
    pub real_axis: Option<f64>,
    pub delta: Option<f64>,
    pub argmax_angle: f64,
    pub note: String,
}

/// Runs both methods; a real-axis failure is recorded rather than returned.
pub fn cross_check(q: &RadiusQuery, tol: f64, agreement_tol: f64) -> Result<CrossCheck> {
    let certifier = radius_by_certification(q, tol)?;
    let real_axis = radius_real_axis(q, q.default_real_axis_target(), tol);
    Ok(CrossCheck { query: *q, certifier, real_axis, agreement_tol })
}
