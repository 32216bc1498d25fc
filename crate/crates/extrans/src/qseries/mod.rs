//! Truncated power and Laurent series over exact and floating fields.
//!
//! Every [`Series`] carries its variable tag and truncation order; binary
//! operations take the smaller order of their operands.
//!
//! ```
//! use extrans::qseries::{Series, Var, int};
//!
//! let a = Series::from_ints(Var::P, 4, &[1, -6, 90]);
//! let b = Series::from_ints(Var::P, 4, &[1, 6]);
//! let c = &a * &b;
//! assert_eq!(c.coeff(1), int(0));
//! assert_eq!(c.coeff(2), int(54));
//! ```

mod field;
mod laurent;
mod series;

pub use field::{
    gauss, gauss_i, gauss_real, int, rat, rat_abs, rat_is_integer, rat_to_f64, Coeff, ComplexF,
    GaussRational, Rational,
};
pub use laurent::LaurentSeries;
pub use series::{solve_dlog, solve_dlog_composed, Series, Var, ORDER_CAP};

use crate::error::Result;

/// Truncated Cauchy product; fails on a variable mismatch.
pub fn series_mul<C: Coeff>(a: &Series<C>, b: &Series<C>) -> Result<Series<C>> {
    a.try_mul(b)
}

/// Multiplicative inverse; fails on a zero constant term.
pub fn series_inv<C: Coeff>(a: &Series<C>) -> Result<Series<C>> {
    a.inv()
}

pub fn series_exp<C: Coeff>(a: &Series<C>) -> Result<Series<C>> {
    a.exp()
}

pub fn series_log<C: Coeff>(a: &Series<C>) -> Result<Series<C>> {
    a.log()
}

pub fn series_root<C: Coeff>(a: &Series<C>, k: u32) -> Result<Series<C>> {
    a.root(k)
}

pub fn series_compose<C: Coeff>(f: &Series<C>, p: &Series<C>) -> Result<Series<C>> {
    f.compose(p)
}

/// Partial sum with tail bound at `z0`, inside `radius`.
pub fn series_eval<C: Coeff>(
    a: &Series<C>,
    z0: ComplexF,
    radius: f64,
    tol: f64,
) -> Result<(ComplexF, f64)> {
    a.eval(z0, radius, tol)
}
