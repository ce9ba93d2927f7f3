use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use wright_radii::{family, kernel, radii, zeros, Error};

create_exception!(wright_radii_py, NumericError, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::InvalidParameter(m) => PyValueError::new_err(m),
        other => NumericError::new_err(other.to_string()),
    }
}

fn params(rho: f64, beta: f64) -> PyResult<kernel::WrightParams> {
    kernel::WrightParams::new(rho, beta).map_err(to_py)
}

/// ln Γ(x) for x > 0.
#[pyfunction]
fn log_gamma(x: f64) -> PyResult<f64> {
    kernel::log_gamma(x).map_err(to_py)
}

/// W_{rho,beta}(z) as (value, abs_error_bound, terms_used).
#[pyfunction]
#[pyo3(signature = (rho, beta, z, tol = 1e-15))]
fn wright_eval(rho: f64, beta: f64, z: Complex64, tol: f64) -> PyResult<(Complex64, f64, usize)> {
    let r = kernel::wright_eval(&params(rho, beta)?, z, tol).map_err(to_py)?;
    Ok((r.value, r.abs_error_bound, r.terms_used))
}

/// Derivative of order 1 or 2 as (value, abs_error_bound, terms_used).
#[pyfunction]
#[pyo3(signature = (rho, beta, z, order = 1, tol = 1e-15))]
fn wright_derivative(
    rho: f64,
    beta: f64,
    z: Complex64,
    order: u32,
    tol: f64,
) -> PyResult<(Complex64, f64, usize)> {
    let r = kernel::wright_derivative(&params(rho, beta)?, z, order, tol).map_err(to_py)?;
    Ok((r.value, r.abs_error_bound, r.terms_used))
}

/// z f'(z)/f(z) for kind "f", "g" or "h".
#[pyfunction]
#[pyo3(signature = (kind, rho, beta, z, tol = 1e-15))]
fn starlike_functional(kind: &str, rho: f64, beta: f64, z: Complex64, tol: f64) -> PyResult<Complex64> {
    let kind: family::NormalizedKind = kind.parse().map_err(to_py)?;
    let v = family::starlike_functional(kind, &params(rho, beta)?, z, tol).map_err(to_py)?;
    Ok(v.value)
}

/// 1 + z f''(z)/f'(z) for kind "f", "g" or "h".
#[pyfunction]
#[pyo3(signature = (kind, rho, beta, z, tol = 1e-15))]
fn convex_functional(kind: &str, rho: f64, beta: f64, z: Complex64, tol: f64) -> PyResult<Complex64> {
    let kind: family::NormalizedKind = kind.parse().map_err(to_py)?;
    let v = family::convex_functional(kind, &params(rho, beta)?, z, tol).map_err(to_py)?;
    Ok(v.value)
}

/// First `count` positive zeros of Γ(β)W(-r²) ("sq") or Γ(β)W(-r) ("lin").
#[pyfunction]
#[pyo3(signature = (rho, beta, count, form = "sq", tol = 1e-12))]
fn positive_zeros(rho: f64, beta: f64, count: usize, form: &str, tol: f64) -> PyResult<Vec<f64>> {
    let form: family::Form = form.parse().map_err(to_py)?;
    Ok(zeros::positive_zeros(&params(rho, beta)?, form, count, tol).map_err(to_py)?.zeros)
}

/// First `count` positive zeros of the derivative of the normalized function.
#[pyfunction]
#[pyo3(signature = (kind, rho, beta, count, tol = 1e-12))]
fn derivative_zeros(kind: &str, rho: f64, beta: f64, count: usize, tol: f64) -> PyResult<Vec<f64>> {
    let kind: family::NormalizedKind = kind.parse().map_err(to_py)?;
    Ok(zeros::derivative_positive_zeros(kind, &params(rho, beta)?, count, tol).map_err(to_py)?.zeros)
}

/// Zeros of the base function in |z| < radius, by the argument principle.
#[pyfunction]
#[pyo3(signature = (rho, beta, radius, form = "sq", points = 512))]
fn count_zeros(rho: f64, beta: f64, radius: f64, form: &str, points: usize) -> PyResult<i64> {
    let form: family::Form = form.parse().map_err(to_py)?;
    zeros::count_zeros_in_disk(&params(rho, beta)?, form, radius, points).map_err(to_py)
}

#[pyclass(name = "RadiusResult", frozen)]
struct PyRadiusResult {
    inner: radii::RadiusResult,
}

#[pymethods]
impl PyRadiusResult {
    #[getter]
    fn radius(&self) -> f64 {
        self.inner.radius
    }

    #[getter]
    fn clamped(&self) -> f64 {
        self.inner.clamped
    }

    #[getter]
    fn bracket(&self) -> (f64, f64) {
        self.inner.bracket
    }

    #[getter]
    fn method(&self) -> &'static str {
        self.inner.method.as_str()
    }

    #[getter]
    fn sup_at_radius(&self) -> f64 {
        self.inner.sup_at_radius
    }

    #[getter]
    fn argmax_angle(&self) -> f64 {
        self.inner.argmax_angle
    }

    #[getter]
    fn domain_bound(&self) -> f64 {
        self.inner.domain_bound
    }

    #[getter]
    fn reached_domain_bound(&self) -> bool {
        self.inner.reached_domain_bound
    }

    #[getter]
    fn pole_encountered(&self) -> bool {
        self.inner.pole_encountered
    }

    fn __repr__(&self) -> String {
        format!(
            "RadiusResult(radius={}, method='{}', bracket=({}, {}))",
            self.inner.radius,
            self.inner.method,
            self.inner.bracket.0,
            self.inner.bracket.1
        )
    }
}

fn wrap(r: Result<radii::RadiusResult, Error>) -> PyResult<PyRadiusResult> {
    r.map(|inner| PyRadiusResult { inner }).map_err(to_py)
}

/// A radius request: kind in {"f","g","h"}, what in {"lem-star","lem-convex","jan-star","jan-convex"}.
#[pyclass(name = "RadiusQuery", frozen)]
struct PyRadiusQuery {
    inner: radii::RadiusQuery,
}

#[pymethods]
impl PyRadiusQuery {
    #[new]
    #[pyo3(signature = (kind, rho, beta, what, a = None, b = None))]
    fn new(kind: &str, rho: f64, beta: f64, what: &str, a: Option<f64>, b: Option<f64>) -> PyResult<Self> {
        let kind: family::NormalizedKind = kind.parse().map_err(to_py)?;
        let rk: radii::RadiusKind = what.parse().map_err(to_py)?;
        let jp = if rk.is_janowski() {
            Some(radii::JanowskiParams::new(a.unwrap_or(1.0), b.unwrap_or(-1.0)).map_err(to_py)?)
        } else {
            None
        };
        let inner = radii::RadiusQuery::new(kind, params(rho, beta)?, rk, jp).map_err(to_py)?;
        Ok(Self { inner })
    }

    /// Query for f(rz)/r.
    fn rescaled(&self, r: f64) -> Self {
        Self { inner: self.inner.rescaled(r) }
    }

    #[pyo3(signature = (tol = 1e-9))]
    fn certify(&self, tol: f64) -> PyResult<PyRadiusResult> {
        wrap(radii::radius_by_certification(&self.inner, tol))
    }

    /// Root of the real-axis functional at `c` (default target if omitted).
    #[pyo3(signature = (c = None, tol = 1e-9))]
    fn real_axis(&self, c: Option<f64>, tol: f64) -> PyResult<PyRadiusResult> {
        let c = c.unwrap_or_else(|| self.inner.default_real_axis_target());
        wrap(radii::radius_real_axis(&self.inner, c, tol))
    }

    #[pyo3(signature = (tol = 1e-9))]
    fn equation(&self, tol: f64) -> PyResult<PyRadiusResult> {
        wrap(radii::EquationRegistry::builtin().solve(&self.inner, tol))
    }

    #[pyo3(signature = (tol = 1e-9))]
    fn half_plane(&self, tol: f64) -> PyResult<PyRadiusResult> {
        wrap(radii::radius_half_plane(&self.inner, tol))
    }

    /// (sup, argmax_angle) of the class functional on |z| = r.
    #[pyo3(signature = (r, tol_theta = 1e-6))]
    fn boundary_sup(&self, r: f64, tol_theta: f64) -> PyResult<(f64, f64)> {
        let s = radii::boundary_sup(&self.inner, r, tol_theta).map_err(to_py)?;
        Ok((s.sup, s.argmax_angle))
    }

    fn __repr__(&self) -> String {
        format!("RadiusQuery({})", self.inner)
    }
}

#[pymodule]
fn wright_radii_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NumericError", m.py().get_type::<NumericError>())?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(wright_eval, m)?)?;
    m.add_function(wrap_pyfunction!(wright_derivative, m)?)?;
    m.add_function(wrap_pyfunction!(starlike_functional, m)?)?;
    m.add_function(wrap_pyfunction!(convex_functional, m)?)?;
    m.add_function(wrap_pyfunction!(positive_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(derivative_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(count_zeros, m)?)?;
    m.add_class::<PyRadiusQuery>()?;
    m.add_class::<PyRadiusResult>()?;
    Ok(())
}
