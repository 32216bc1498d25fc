use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::num::NonZeroUsize;
use std::sync::OnceLock;

use gauss_quad::GaussLegendre;

use super::combo::{decompose_extremal, CuspRep};
use crate::catalog::{case_constants, TransitionCase};
use crate::error::{Error, Result};
use crate::modular::{hauptmodul_eval, horner, terms_needed};
use crate::qseries::ComplexF;

const GL_DEGREE: usize = 15;
const MAX_INTERVALS: usize = 4000;
const MAX_TERMS: usize = 2_000_000;

fn rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(NonZeroUsize::new(GL_DEGREE).expect("nonzero degree")))
}

/// Globally adaptive bisection on a fixed Gauss–Legendre rule: the
/// interval with the largest error estimate is split until the total falls
/// below `tol`. Returns the integral and the error estimate.
pub fn adaptive_gauss_legendre(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    let gl = rule();
    let piece = |lo: f64, hi: f64| {
        let m = 0.5 * (lo + hi);
        let coarse = gl.integrate(lo, hi, f);
        let fine = gl.integrate(lo, m, f) + gl.integrate(m, hi, f);
        Piece {
            lo,
            hi,
            value: fine,
            err: (fine - coarse).abs(),
        }
    };
    let mut heap = BinaryHeap::new();
    heap.push(piece(a, b));
    let mut total_err = heap.peek().map_or(0.0, |p| p.err);
    while total_err > tol && heap.len() < MAX_INTERVALS {
        let worst = heap.pop().expect("nonempty");
        let m = 0.5 * (worst.lo + worst.hi);
        let (l, r) = (piece(worst.lo, m), piece(m, worst.hi));
        total_err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
    }
    let value: f64 = heap.iter().map(|p| p.value).sum();
    let err: f64 = heap.iter().map(|p| p.err).sum();
    if err > tol || !value.is_finite() {
        return Err(Error::Quadrature(err));
    }
    Ok((value, err))
}

struct Piece {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Piece {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// `(sin πa/π)·∫_0^1 t^{−a}(1−t)^{a−1}·h(t) dt`, with `t = e^{−s}` on
/// `[0, ½]` and `1 − t = w^{1/a}` on `[½, 1]`; `scale` is the largest `x`
/// at which `h` still varies, used to place the upper limit in `s`.
fn euler_beta_integral(a: f64, scale: f64, h: &dyn Fn(f64) -> f64, tol: f64) -> Result<(f64, f64)> {
    let s_top = scale.max(1.0).ln() + 40.0 / (1.0 - a);
    let part_a = |s: f64| {
        let t = (-s).exp();
        (-(1.0 - a) * s).exp() * (-(-s).exp_m1()).powf(a - 1.0) * h(t)
    };
    let w_top = 0.5f64.powf(a);
    let part_b = |w: f64| {
        let t = 1.0 - w.powf(1.0 / a);
        t.powf(-a) * h(t) / a
    };
    let (va, ea) = adaptive_gauss_legendre(&part_a, 2f64.ln(), s_top, tol)?;
    let (vb, eb) = adaptive_gauss_legendre(&part_b, 0.0, w_top, tol)?;
    let c = (PI * a).sin() / PI;
    Ok((c * (va + vb), c * (ea + eb)))
}

fn hypergeometric_parameter(d: TransitionCase) -> Result<(f64, f64)> {
    use TransitionCase::*;
    let a = match d {
        D1 => 1.0 / 6.0,
        D2 => 0.25,
        D3 => 1.0 / 3.0,
        D4 => 0.5,
        _ => return Err(Error::Unsupported(format!("f_{d} is not a 2F1 in −κP"))),
    };
    Ok((a, case_constants(d)?.0 as f64))
}

/// `f_d(p) = ₂F₁(a, 1−a; 1; −κp)` for `d ≤ 4` and `p ≥ 0` by its Euler
/// integral.
pub fn f_euler_integral(d: TransitionCase, p: f64) -> Result<f64> {
    let (a, k) = hypergeometric_parameter(d)?;
    if p < 0.0 {
        return Err(Error::Precondition(
            "the Euler integral is used for p ≥ 0".into(),
        ));
    }
    let x = k * p;
    Ok(euler_beta_integral(a, x, &|t| (-a * (x * t).ln_1p()).exp(), 1e-14)?.0)
}

/// `(f_d(p) − 1)/p` without cancellation.
fn f_minus_one_over_p(a: f64, k: f64, p: f64, tol: f64) -> Result<(f64, f64)> {
    let x = k * p;
    if p == 0.0 {
        return Ok((-a * (1.0 - a) * k, 0.0));
    }
    euler_beta_integral(a, x, &|t| (-a * (x * t).ln_1p()).exp_m1() / p, tol)
}

/// Result of [`real_axis_limit`].
#[derive(Clone, Debug, PartialEq)]
pub struct RealAxisLimit {
    pub d: TransitionCase,
    /// `lim log Q^ℓ` along the ray.
    pub log_limit: ComplexF,
    pub q_limit: ComplexF,
    pub error_estimate: f64,
}

/// `lim log Q^ℓ` as `P → ∞` along `(0, ∞)` for `d ≤ 4`, and along
/// `(0, i∞)` for `d = 8` through `f_8(is) = f_4(s²)`.
///
/// With `d log Q/d log P = f`, the limit is
/// `∫_0^1 (f(s^m) − 1) ds/s + ∫_1^∞ f(s^m) ds/s` for `m = 1` or `2`; the
/// second integral is mapped onto `(0, 1]` by `s^m = u^{−1/a}`, where
/// `f ~ C·p^{−a}`.
pub fn real_axis_limit(d: TransitionCase) -> Result<RealAxisLimit> {
    let (base, m, phase) = match d {
        TransitionCase::D8 => (TransitionCase::D4, 2.0, ComplexF::new(0.0, PI / 2.0)),
        _ => (d, 1.0, ComplexF::new(0.0, 0.0)),
    };
    let (a, k) = hypergeometric_parameter(base)?;
    let tol = 1e-11;
    let inner_tol = 1e-14;
    let err = std::cell::Cell::new(0.0);
    let fail = std::cell::Cell::new(None);
    let near = |s: f64| {
        let p = s.powf(m);
        match f_minus_one_over_p(a, k, p, inner_tol) {
            Ok((v, e)) => {
                err.set(err.get() + e);
                v * p / s
            }
            Err(e) => {
                fail.set(Some(e));
                0.0
            }
        }
    };
    let far = |u: f64| {
        let p = u.powf(-1.0 / a);
        match euler_beta_integral(a, k * p, &|t| (-a * (k * p * t).ln_1p()).exp(), inner_tol) {
            Ok((v, e)) => {
                err.set(err.get() + e);
                v / (u * m * a)
            }
            Err(e) => {
                fail.set(Some(e));
                0.0
            }
        }
    };
    let (i1, e1) = adaptive_gauss_legendre(&near, 0.0, 1.0, tol)?;
    let (i2, e2) = adaptive_gauss_legendre(&far, 0.0, 1.0, tol)?;
    if let Some(e) = fail.take() {
        return Err(e);
    }
    let error_estimate = e1 + e2 + err.get() * 1e-3;
    if error_estimate > 1e-8 {
        return Err(Error::Quadrature(error_estimate));
    }
    let log_limit = phase + i1 + i2;
    Ok(RealAxisLimit {
        d,
        log_limit,
        q_limit: log_limit.exp(),
        error_estimate,
    })
}

/// Coefficients `a_j/j` of `log(−Q/q) = Σ_{j ≥ 1} (a_j/j)·q^j`, where
/// `𝓔_d = 1 + Σ a_j q^j`.
fn log_q_coefficients(d: TransitionCase, len: usize) -> Result<Vec<ComplexF>> {
    if len > MAX_TERMS {
        return Err(Error::TailBound {
            bound: len as f64,
            tol: MAX_TERMS as f64,
        });
    }
    let mut c = decompose_extremal(d)?.coefficients(len)?;
    if (c[0] - 1.0).norm() > 1e-12 {
        return Err(Error::Verification(format!(
            "𝓔_{d} has constant term {}",
            c[0]
        )));
    }
    c[0] = ComplexF::new(0.0, 0.0);
    for (j, x) in c.iter_mut().enumerate().skip(1) {
        *x /= j as f64;
    }
    Ok(c)
}

/// `log Q^ℓ(τ) = πi + 2πiτ + Σ_{j ≥ 1} (a_j/j) e^{2πijτ}` with the series
/// truncated where its tail falls below `1e−13`.
pub fn q_series_log(d: TransitionCase, tau: ComplexF) -> Result<ComplexF> {
    let q = (ComplexF::new(0.0, 2.0 * PI) * tau).exp();
    let len = terms_needed(q.norm(), 3, 1e-13);
    let c = log_q_coefficients(d, len)?;
    Ok(ComplexF::new(0.0, PI) + ComplexF::new(0.0, 2.0 * PI) * tau + horner(&c, q))
}

/// Tolerance on the spread of the extrapolated values in [`q_path_limit`].
pub const Q_PATH_RESIDUAL_TOL: f64 = 1e-2;

/// Result of [`q_path_limit`].
#[derive(Clone, Debug, PartialEq)]
pub struct QPathLimit {
    /// The extrapolated period integral, comparable with
    /// [`super::CuspLimit::log_value`].
    pub log_limit: ComplexF,
    pub q_limit: ComplexF,
    /// Largest distance of an extrapolated sample from the value at `t_min`.
    pub fit_residual: f64,
    /// `(t, ∫_{i∞}^{r+it}(𝓔_d − 1) d(2πiτ))` at the sample points.
    pub samples: Vec<(f64, ComplexF)>,
}

/// Extrapolates `Q^ℓ(r + it)` to `t → 0` from samples on `[t_min, t_max]`.
///
/// Near a cusp where `𝓔_d` vanishes the integral behaves as `L + 2πt` up to
/// exponentially small terms, so each sample gives the estimate `S(t) − 2πt`;
/// the estimate at `t_min` is returned and the spread over the window is
/// checked against [`Q_PATH_RESIDUAL_TOL`].
pub fn q_path_limit(
    d: TransitionCase,
    r: CuspRep,
    t_min: f64,
    t_max: f64,
    steps: usize,
) -> Result<QPathLimit> {
    if t_min < 0.02 {
        return Err(Error::Precondition(format!(
            "t_min = {t_min} is below 0.02"
        )));
    }
    if t_max <= t_min || steps < 2 {
        return Err(Error::Precondition(
            "need t_max > t_min and at least two steps".into(),
        ));
    }
    let q_min = (-2.0 * PI * t_min).exp();
    let c = log_q_coefficients(d, terms_needed(q_min, 3, 1e-13))?;
    let samples: Vec<(f64, ComplexF)> = (0..steps)
        .map(|k| {
            let t = t_min + (t_max - t_min) * k as f64 / (steps - 1) as f64;
            let q = (ComplexF::new(0.0, 2.0 * PI) * ComplexF::new(r.to_f64(), t)).exp();
            (t, horner(&c, q))
        })
        .collect();
    let estimate = |(t, s): &(f64, ComplexF)| s - 2.0 * PI * t;
    let log_limit = estimate(&samples[0]);
    let fit_residual = samples
        .iter()
        .map(|x| (estimate(x) - log_limit).norm())
        .fold(0.0, f64::max);
    if fit_residual > Q_PATH_RESIDUAL_TOL {
        return Err(Error::Verification(format!(
            "extrapolation residual {fit_residual:e} above {Q_PATH_RESIDUAL_TOL:e}"
        )));
    }
    let q_limit = -ComplexF::from_polar(1.0, 2.0 * PI * r.to_f64()) * log_limit.exp();
    Ok(QPathLimit {
        log_limit,
        q_limit,
        fit_residual,
        samples,
    })
}

/// One sample `(q, P_d(q), Q^ℓ(q))` of [`path_image`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PathRow {
    pub s: f64,
    pub q: ComplexF,
    pub p: ComplexF,
    pub big_q: ComplexF,
}

/// Images of the segment `q = s·e^{2πi/n_dir}`, `0 ≤ s ≤ s_max`, under
/// `P_d` and `Q^ℓ(q) = −q·exp(Σ (a_j/j) q^j)`.
pub fn path_image(
    d: TransitionCase,
    n_dir: u64,
    samples: usize,
    s_max: f64,
) -> Result<Vec<PathRow>> {
    if n_dir == 0 || samples < 2 {
        return Err(Error::Precondition(
            "need n_dir ≥ 1 and at least two samples".into(),
        ));
    }
    if !(0.0..1.0).contains(&s_max) {
        return Err(Error::Precondition(format!(
            "s_max = {s_max} must lie in [0, 1)"
        )));
    }
    let c = log_q_coefficients(d, terms_needed(s_max, 3, 1e-12))?;
    let dir = ComplexF::from_polar(1.0, 2.0 * PI / n_dir as f64);
    (0..samples)
        .map(|k| {
            let s = s_max * k as f64 / (samples - 1) as f64;
            let q = dir * s;
            let p = hauptmodul_eval(d, q)?;
            let big_q = -q * horner(&c, q).exp();
            Ok(PathRow { s, q, p, big_q })
        })
        .collect()
}
