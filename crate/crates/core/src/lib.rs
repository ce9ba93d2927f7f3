//! Wright function evaluation, real zeros of normalized Wright functions,
//! and their radii of lemniscate and Janowski starlikeness and convexity.
//!
//! Modules, bottom up:
//!
//! - [`kernel`]: `ln Γ` and the Wright series with certified truncation bounds.
//! - [`family`]: the normalized functions f, g, h and the functionals
//!   `z f'/f` and `1 + z f''/f'`.
//! - [`zeros`]: positive zeros, argument-principle counts, Hadamard products.
//! - [`radii`]: boundary certification, real-axis equations and their cross-checks.
//! - [`cli`]: the command implementations behind the `wright-radii` binary.

pub mod error;
pub mod family;
pub mod cli;
pub mod kernel;
pub mod radii;
pub mod zeros;

pub use error::{Error, Result};
pub use family::{
    base_eval, convex_functional, form_base_eval, starlike_functional, Form, Functional,
    FunctionalValue, NormalizedKind,
};
pub use kernel::{log_gamma, wright_derivative, wright_eval, EvalResult, WrightParams};
pub use zeros::{
    count_zeros_in_disk, derivative_positive_zeros, hadamard_partial_product, positive_zeros,
    TableSource, ZeroTable,
};
pub use radii::{
    boundary_sup, cross_check, radius_by_certification, radius_half_plane, radius_real_axis,
    EquationRegistry, JanowskiParams, Method, RadiusKind, RadiusQuery, RadiusResult,
};
