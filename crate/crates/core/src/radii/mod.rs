//! Radii of lemniscate and Janowski starlikeness and convexity.
//!
//! For a normalized `f`, the radius of a class is the largest `r` such that
//! the class condition holds on `|z| < r`; equivalently the rescaling
//! `f_r(z) = f(rz)/r` belongs to the class. The conditions are
//!
//! ```text
//! lemniscate:  |v(z)² - 1| < 1
//! Janowski:    |(v(z) - 1) / (A - B v(z))| < 1,    -1 ≤ B < A ≤ 1
//! ```
//!
//! with `v = z f'/f` for starlikeness and `v = 1 + z f''/f'` for convexity.
//!
//! Three routes compute a radius:
//!
//! - [`radius_by_certification`]: bisection on the maximum of the condition's
//!   left-hand side over the circle `|z| = r` (maximum modulus principle).
//! - [`radius_real_axis`]: the root of `v(r) = c` on the positive real axis.
//! - [`EquationRegistry`]: scalar equations written directly in terms of
//!   Wright functions at real arguments.

mod certify;
mod crosscheck;
mod real_axis;
mod region;
mod registry;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::{Functional, NormalizedKind};
use crate::kernel::WrightParams;
use crate::zeros::{derivative_positive_zeros, positive_zeros, DEFAULT_ZERO_TOL};

pub use certify::{radius_by_certification, radius_half_plane};
pub use crosscheck::{cross_check, CrossCheck, Finding};
pub use real_axis::radius_real_axis;
pub use region::{boundary_sup, region_functional, BoundarySup};
pub use registry::{EquationDescriptor, EquationRegistry};

/// Default bisection tolerance on `r`.
pub const DEFAULT_RADIUS_TOL: f64 = 1e-9;
/// Default angular resolution of the boundary sweep.
pub const DEFAULT_THETA_TOL: f64 = 1e-6;
/// Kernel tolerance used for functional evaluations.
pub(crate) const FUNCTIONAL_TOL: f64 = 1e-15;

/// `2 - √2`, the left end of the largest disk about 1 inside the lemniscate loop.
pub const LEMNISCATE_DISK_TARGET: f64 = 2.0 - std::f64::consts::SQRT_2;

/// Janowski parameters with `-1 ≤ B < A ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JanowskiParams {
    a: f64,
    b: f64,
}

impl JanowskiParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidParameter(format!("A and B must be finite, got A={a}, B={b}")));
        }
        if !(-1.0..=1.0).contains(&b) {
            return Err(Error::InvalidParameter(format!("B must satisfy -1 <= B, got B={b}")));
        }
        if a > 1.0 {
            return Err(Error::InvalidParameter(format!("A must satisfy A <= 1, got A={a}")));
        }
        if !(b < a) {
            return Err(Error::InvalidParameter(format!("need B < A, got A={a}, B={b}")));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `(1-A)/(1-B)`, where the real diameter of the target disk starts.
    pub fn lower_target(&self) -> f64 {
        (1.0 - self.a) / (1.0 - self.b)
    }

    /// `(1+A)/(1+B)`, where it ends; `None` for the half-plane case `B = -1`.
    pub fn upper_target(&self) -> Option<f64> {
        (self.b > -1.0).then(|| (1.0 + self.a) / (1.0 + self.b))
    }
}

/// The four radius notions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RadiusKind {
    LemStar,
    LemConvex,
    JanStar,
    JanConvex,
}

impl RadiusKind {
    pub const ALL: [RadiusKind; 4] =
        [RadiusKind::LemStar, RadiusKind::LemConvex, RadiusKind::JanStar, RadiusKind::JanConvex];

    pub fn is_janowski(self) -> bool {
        matches!(self, RadiusKind::JanStar | RadiusKind::JanConvex)
    }

    pub fn functional(self) -> Functional {
        match self {
            RadiusKind::LemStar | RadiusKind::JanStar => Functional::Starlike,
            RadiusKind::LemConvex | RadiusKind::JanConvex => Functional::Convex,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RadiusKind::LemStar => "lem-star",
            RadiusKind::LemConvex => "lem-convex",
            RadiusKind::JanStar => "jan-star",
            RadiusKind::JanConvex => "jan-convex",
        }
    }
}

impl fmt::Display for RadiusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RadiusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "lem-star" => Ok(RadiusKind::LemStar),
            "lem-convex" => Ok(RadiusKind::LemConvex),
            "jan-star" => Ok(RadiusKind::JanStar),
            "jan-convex" => Ok(RadiusKind::JanConvex),
            other => Err(Error::InvalidParameter(format!(
                "unknown radius kind '{other}' (expected lem-star, lem-convex, jan-star or jan-convex)"
            ))),
        }
    }
}

/// How a radius was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Certifier,
    RealAxis,
    Equation,
    HalfPlane,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Certifier => "certifier",
            Method::RealAxis => "real-axis",
            Method::Equation => "equation",
            Method::HalfPlane => "half-plane",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A radius request. `scale` realizes the rescaling `f(scale·z)/scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusQuery {
    pub kind: NormalizedKind,
    pub params: WrightParams,
    pub radius_kind: RadiusKind,
    pub janowski: Option<JanowskiParams>,
    pub scale: f64,
}

impl RadiusQuery {
    pub fn new(
        kind: NormalizedKind,
        params: WrightParams,
        radius_kind: RadiusKind,
        janowski: Option<JanowskiParams>,
    ) -> Result<Self> {
        match (radius_kind.is_janowski(), janowski.is_some()) {
            (true, false) => Err(Error::InvalidParameter(format!(
                "{radius_kind} requires Janowski parameters A and B"
            ))),
            (false, true) => Err(Error::InvalidParameter(format!(
                "{radius_kind} does not take Janowski parameters"
            ))),
            _ => Ok(Self { kind, params, radius_kind, janowski, scale: 1.0 }),
        }
    }

    pub fn lemniscate(kind: NormalizedKind, params: WrightParams, convex: bool) -> Self {
        let radius_kind = if convex { RadiusKind::LemConvex } else { RadiusKind::LemStar };
        Self { kind, params, radius_kind, janowski: None, scale: 1.0 }
    }

    pub fn janowski(kind: NormalizedKind, params: WrightParams, convex: bool, jp: JanowskiParams) -> Self {
        let radius_kind = if convex { RadiusKind::JanConvex } else { RadiusKind::JanStar };
        Self { kind, params, radius_kind, janowski: Some(jp), scale: 1.0 }
    }

    /// The query for `f_r(z) = f(rz)/r`.
    pub fn rescaled(&self, r: f64) -> Self {
        Self { scale: self.scale * r, ..*self }
    }

    pub fn functional(&self) -> Functional {
        self.radius_kind.functional()
    }

    /// Default real-axis target: `(1-A)/(1-B)` for Janowski, `2-√2` for the lemniscate.
    pub fn default_real_axis_target(&self) -> f64 {
        match self.janowski {
            Some(jp) => jp.lower_target(),
            None => LEMNISCATE_DISK_TARGET,
        }
    }

    /// First positive zero of `f` (starlikeness) or `f'` (convexity), in the
    /// rescaled variable, less `10·tol`.
    pub fn domain_bound(&self, tol: f64) -> Result<f64> {
        let p = &self.params;
        let lambda = positive_zeros(p, self.kind.form(), 1, DEFAULT_ZERO_TOL)?.first();
        let first = match self.functional() {
            Functional::Starlike => lambda,
            Functional::Convex => {
                let mu = derivative_positive_zeros(self.kind, p, 1, DEFAULT_ZERO_TOL)?.first();
                mu.min(lambda)
            }
        };
        Ok(first / self.scale - 10.0 * tol)
    }
}

impl fmt::Display for RadiusQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} of {} (rho={}, beta={})",
            self.radius_kind,
            self.kind,
            self.params.rho(),
            self.params.beta()
        )?;
        if let Some(jp) = self.janowski {
            write!(f, " with A={}, B={}", jp.a(), jp.b())?;
        }
        if self.scale != 1.0 {
            write!(f, " rescaled by {}", self.scale)?;
        }
        Ok(())
    }
}

/// A computed radius with its bracket and boundary diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    /// The analytic radius (not capped at 1).
    pub radius: f64,
    /// `min(radius, 1)`.
    pub clamped: f64,
    pub bracket: (f64, f64),
    pub method: Method,
    /// Maximum of the condition's left-hand side on `|z| = radius`.
    pub sup_at_radius: f64,
    pub argmax_angle: f64,
    pub domain_bound: f64,
    /// The condition held on the whole disk up to the domain bound.
    pub reached_domain_bound: bool,
    /// A Janowski pole cut off part of the search interval.
    pub pole_encountered: bool,
}

impl RadiusResult {
    pub(crate) fn from_bracket(lo: f64, hi: f64, method: Method, domain_bound: f64) -> Self {
        let radius = 0.5 * (lo + hi);
        Self {
            radius,
            clamped: radius.min(1.0),
            bracket: (lo, hi),
            method,
            sup_at_radius: f64::NAN,
            argmax_angle: f64::NAN,
            domain_bound,
            reached_domain_bound: false,
            pole_encountered: false,
        }
    }
}
