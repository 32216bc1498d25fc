//! Mirror maps of the local models.
//!
//! For a case with constants `(κ, λ, μ)` the function
//! `f = Σ f_m P^m` solves
//! `u·θ²f + (κP − 2μP²)·θf + (λP − μP²)·f = 0` with `u = 1 + κP − μP²`
//! and `θ = P·d/dP`. The mirror map is `g = Σ (f_m/m) P^m`,
//! `Q = P·e^g`, and the extremal function is `u·f³`.

use num_traits::{One, Zero};

use crate::catalog::{case_constants, TransitionCase};
use crate::error::{Error, Result};
use crate::qseries::{int, rat, Rational, Series, Var};

/// `f_d` by the three-term recurrence
/// `(m+1)² f_{m+1} = −(κ(m²+m)+λ) f_m + μ m² f_{m−1}`.
pub fn f_series(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let (k, l, m) = case_constants(d)?;
    let mut f = vec![int(1)];
    for j in 0..n {
        let jj = j as i64;
        let prev = if j == 0 { int(0) } else { f[j - 1].clone() };
        let next = (-(int(k * (jj * jj + jj) + l)) * &f[j] + int(m * jj * jj) * prev)
            / int((jj + 1) * (jj + 1));
        f.push(next);
    }
    Ok(Series::new(Var::P, n, f))
}

/// `g_d = Σ_{m≥1} (f_m/m) P^m`.
pub fn g_series(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let f = f_series(d, n)?;
    Ok(Series::from_fn(Var::P, n, |j| {
        if j == 0 {
            int(0)
        } else {
            f.coeff(j) / int(j as i64)
        }
    }))
}

/// `u_d = 1 + κP − μP²`.
pub fn u_series(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let (k, _, m) = case_constants(d)?;
    Ok(Series::from_ints(Var::P, n, &[1, k, -m]))
}

/// `Q = P·exp(g)`.
pub fn mirror_q(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let e = g_series(d, n)?.exp()?;
    let mut c = vec![int(0)];
    c.extend(e.coeffs()[..n].iter().cloned());
    Ok(Series::new(Var::P, n, c))
}

/// The extremal function `u·f³`.
pub fn extremal_series(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let f = f_series(d, n)?;
    Ok(&u_series(d, n)? * &f.pow(3)?)
}

/// `v = θf/f`.
pub fn v_series(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let f = f_series(d, n)?;
    f.theta().try_div(&f)
}

/// Bundle of the mirror-map series of a case.
#[derive(Clone, Debug, PartialEq)]
pub struct MirrorData {
    pub d: TransitionCase,
    pub f: Series<Rational>,
    pub g: Series<Rational>,
    pub u: Series<Rational>,
    pub q_of_p: Series<Rational>,
    pub extremal: Series<Rational>,
    pub v: Series<Rational>,
}

pub fn mirror_data(d: TransitionCase, n: usize) -> Result<MirrorData> {
    Ok(MirrorData {
        d,
        f: f_series(d, n)?,
        g: g_series(d, n)?,
        u: u_series(d, n)?,
        q_of_p: mirror_q(d, n)?,
        extremal: extremal_series(d, n)?,
        v: v_series(d, n)?,
    })
}

/// The second-order operator `Σ_j A_j(x)·θ^j` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaOperator {
    pub var: Var,
    /// `coeffs[j]` is the polynomial `A_j`, lowest degree first.
    pub coeffs: Vec<Vec<Rational>>,
}

impl ThetaOperator {
    /// The Picard–Fuchs operator of `f_d` in `P`.
    pub fn picard_fuchs(d: TransitionCase) -> Result<Self> {
        let (k, l, m) = case_constants(d)?;
        Ok(ThetaOperator {
            var: Var::P,
            coeffs: vec![
                vec![int(0), int(l), int(-m)],
                vec![int(0), int(k), int(-2 * m)],
                vec![int(1), int(k), int(-m)],
            ],
        })
    }

    /// Rewrites the operator in `y = 1/x`: `θ_x = −θ_y` and the equation is
    /// multiplied by `y^{deg}` to clear denominators.
    pub fn at_infinity(&self) -> Self {
        let deg = self
            .coeffs
            .iter()
            .map(|a| a.len().saturating_sub(1))
            .max()
            .unwrap_or(0);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| {
                let sign = if j % 2 == 0 { int(1) } else { int(-1) };
                (0..=deg)
                    .map(|t| a.get(deg - t).cloned().unwrap_or_else(|| int(0)) * &sign)
                    .collect()
            })
            .collect();
        ThetaOperator {
            var: Var::Y,
            coeffs,
        }
    }

    /// Applies the operator to a series.
    pub fn apply(&self, f: &Series<Rational>) -> Series<Rational> {
        let n = f.order();
        let mut out = Series::zero(f.var(), n);
        let mut th = f.clone();
        for a in &self.coeffs {
            let poly = Series::new(f.var(), n, a.clone());
            out = &out + &(&poly * &th);
            th = th.theta();
        }
        out
    }

    fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|a| a.iter().position(|c| !c.is_zero()))
            .min()
            .unwrap_or(0)
    }

    /// Indicial polynomial `Σ_j [x^v]A_j · ρ^j` at `x = 0`, lowest degree first.
    pub fn indicial(&self) -> Vec<Rational> {
        let v = self.valuation();
        self.coeffs
            .iter()
            .map(|a| a.get(v).cloned().unwrap_or_else(|| int(0)))
            .collect()
    }

    /// Local exponents at `x = 0`, when they are rational.
    pub fn local_exponents(&self) -> Result<(Rational, Rational)> {
        let ind = self.indicial();
        let (c0, c1, c2) = (&ind[0], &ind[1], &ind[2]);
        if c2.is_zero() {
            return Err(Error::Precondition("degenerate indicial equation".into()));
        }
        let disc = c1 * c1 - int(4) * c2 * c0;
        let root = rational_sqrt(&disc)
            .ok_or_else(|| Error::Unsupported("irrational local exponents".into()))?;
        let two_a = int(2) * c2;
        let mut r1 = (-c1 - &root) / &two_a;
        let mut r2 = (-c1 + &root) / &two_a;
        if r1 > r2 {
            std::mem::swap(&mut r1, &mut r2);
        }
        Ok((r1, r2))
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    use num_traits::Signed;
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Residual of the Picard–Fuchs equation on `f_series`; zero to order `n`.
pub fn ode_residual(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    Ok(ThetaOperator::picard_fuchs(d)?.apply(&f_series(d, n)?))
}

/// Local exponents of the Picard–Fuchs equation at `P = ∞`.
pub fn exponents_at_infinity(d: TransitionCase) -> Result<(Rational, Rational)> {
    ThetaOperator::picard_fuchs(d)?
        .at_infinity()
        .local_exponents()
}

/// Checks `f_m = (1/n)_m (1−1/n)_m / (m!)² · (−κ)^m` for `d ∈ {1,2,3,4}` and
/// `f_8(P) = f_4(−P²)`; returns the first differing index on failure.
pub fn hypergeom_check(d: TransitionCase, n: usize) -> Result<bool> {
    use TransitionCase::*;
    let f = f_series(d, n)?;
    let expected = match d {
        D1 | D2 | D3 | D4 => hypergeometric_coeffs(d, n)?,
        D8 => {
            let f4 = hypergeometric_coeffs(D4, n)?;
            f4.substitute_power(2, &int(-1))
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "case {d} is not hypergeometric"
            )))
        }
    };
    match (0..=n).find(|&j| f.coeff(j) != expected.coeff(j)) {
        None => Ok(true),
        Some(j) => Err(Error::Verification(format!(
            "hypergeometric mismatch for {d} at index {j}"
        ))),
    }
}

/// `₂F₁(1/n, 1−1/n; 1; −κP)` coefficients.
pub fn hypergeometric_coeffs(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let (k, _, _) = case_constants(d)?;
    let nd = crate::catalog::base_change_degree(d);
    let a = rat(1, nd);
    let b = int(1) - &a;
    let mut c = vec![int(1)];
    for m in 0..n {
        let mm = int(m as i64);
        let next = &c[m] * (&a + &mm) * (&b + &mm) / ((&mm + int(1)) * (&mm + int(1))) * int(-k);
        c.push(next);
    }
    Ok(Series::new(Var::P, n, c))
}

/// The log-free solution at `y = 1/P = 0` for `μ ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularSolution {
    pub d: TransitionCase,
    /// `f^reg = Σ_{k≥1} c_k y^k` with `c_1 = 1`.
    pub f_reg: Series<Rational>,
    /// `v_reg = −θ_y f^reg / f^reg`.
    pub v_reg: Series<Rational>,
}

/// Solves the equation at infinity coefficientwise with `c_1 = 1`.
pub fn f_reg_series(d: TransitionCase, n: usize) -> Result<RegularSolution> {
    let (_, _, m) = case_constants(d)?;
    if m == 0 {
        return Err(Error::Precondition(format!("case {d} has μ = 0")));
    }
    let op = ThetaOperator::picard_fuchs(d)?.at_infinity();
    let mut c = vec![int(0), int(1)];
    for k in 2..=n + 1 {
        let mut lead = int(0);
        for (j, a) in op.coeffs.iter().enumerate() {
            lead += &a[0] * int(k as i64).pow(j as i32);
        }
        let mut rest = int(0);
        for (j, a) in op.coeffs.iter().enumerate() {
            for (t, at) in a.iter().enumerate().skip(1) {
                if t <= k && !at.is_zero() {
                    rest += at * int((k - t) as i64).pow(j as i32) * &c[k - t];
                }
            }
        }
        if lead.is_zero() {
            return Err(Error::Verification(format!("resonance at order {k}")));
        }
        c.push(-rest / lead);
    }
    let f_reg = Series::new(Var::Y, n + 1, c.clone());
    let shifted = Series::new(Var::Y, n, c[1..].to_vec());
    let theta_shifted = Series::new(
        Var::Y,
        n,
        (1..=n + 1).map(|k| int(k as i64) * &c[k]).collect(),
    );
    let v_reg = -(theta_shifted.try_div(&shifted)?);
    Ok(RegularSolution { d, f_reg, v_reg })
}

/// Residual of the Riccati equation
/// `θ_P v = −(κy − 2μ)/(y²+κy−μ)·v − (λy−μ)/(y²+κy−μ) − v²` with
/// `θ_P = −θ_y`, evaluated on `v_reg`.
pub fn riccati_residual(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let (k, l, m) = case_constants(d)?;
    let v = f_reg_series(d, n)?.v_reg;
    let w = Series::from_ints(Var::Y, n, &[-m, k, 1]);
    let lhs = &(-v.theta()) * &w;
    let rhs = &(&(-(&Series::from_ints(Var::Y, n, &[-2 * m, k]) * &v))
        - &Series::from_ints(Var::Y, n, &[-m, l]))
        - &(&w * &(&v * &v));
    Ok(&lhs - &rhs)
}

/// Polynomial in `r` with rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_default()
                        + o.0.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
        .trim()
    }

    fn mul(&self, o: &Poly) -> Poly {
        if self.0.is_empty() || o.0.is_empty() {
            return Poly(vec![]);
        }
        let mut out = vec![int(0); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trim()
    }

    fn scale(&self, c: &Rational) -> Poly {
        Poly(self.0.iter().map(|x| x * c).collect()).trim()
    }

    fn deriv(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
        .trim()
    }

    fn from_ints(c: &[i64]) -> Poly {
        Poly(c.iter().map(|&x| int(x)).collect()).trim()
    }

    pub fn eval(&self, r: &Rational) -> Rational {
        self.0.iter().rev().fold(int(0), |acc, c| acc * r + c)
    }

    pub fn eval_f64(&self, r: f64) -> f64 {
        self.0
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + crate::qseries::rat_to_f64(c))
    }
}

/// `p(r)·(1+4r)^{−e2/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfPower {
    pub p: Poly,
    pub e2: i64,
}

impl HalfPower {
    /// `θ_r = r·d/dr` by the product rule.
    pub fn theta_r(&self) -> HalfPower {
        let one_4r = Poly::from_ints(&[1, 4]);
        let inner = self
            .p
            .deriv()
            .mul(&one_4r)
            .add(&self.p.scale(&int(-2 * self.e2)));
        HalfPower {
            p: Poly::from_ints(&[0, 1]).mul(&inner),
            e2: self.e2 + 2,
        }
    }

    /// Rewrites with a larger exponent `e2` of the same parity.
    pub fn raise(&self, e2: i64) -> Poly {
        assert!(
            e2 >= self.e2 && (e2 - self.e2) % 2 == 0,
            "exponent must grow by an even step"
        );
        let mut p = self.p.clone();
        for _ in 0..(e2 - self.e2) / 2 {
            p = p.mul(&Poly::from_ints(&[1, 4]));
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> HalfPower {
        HalfPower {
            p: self.p.scale(c),
            e2: self.e2,
        }
    }

    pub fn eval_f64(&self, r: f64) -> f64 {
        self.p.eval_f64(r) * (1.0 + 4.0 * r).powf(-(self.e2 as f64) / 2.0)
    }
}

/// Series data of the two-parameter case in `y = P^{−ℓ_1}` and `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct F7Data {
    /// `b[k−1] = b_k(r)`, `k = 1..=N_y`.
    pub b: Vec<HalfPower>,
    /// Coefficients `−b_k/k` of the power-series part of
    /// `g_7 = log y − Σ_k (b_k/k) y^k`; the log term has coefficient one.
    pub g_series_part: Vec<HalfPower>,
    pub g_log_coefficient: Rational,
}

/// `b_k` from `k² b_{k+1} = −(k² + 3kθ_r + 2θ_r²) b_k`, `b_1 = (1+4r)^{−1/2}`.
pub fn f7_series(n_y: usize) -> Result<F7Data> {
    if n_y == 0 {
        return Err(Error::Precondition("order must be at least 1".into()));
    }
    let mut b = vec![HalfPower {
        p: Poly::from_ints(&[1]),
        e2: 1,
    }];
    for k in 1..n_y {
        let bk = &b[k - 1];
        let t1 = bk.theta_r();
        let t2 = t1.theta_r();
        let e = bk.e2 + 4;
        let kk = int(k as i64);
        let sum = bk
            .raise(e)
            .scale(&(&kk * &kk))
            .add(&t1.raise(e).scale(&(int(3) * &kk)))
            .add(&t2.p.scale(&int(2)));
        b.push(HalfPower {
            p: sum.scale(&(-(int(1)) / (&kk * &kk))),
            e2: e,
        });
    }
    let g_series_part = b
        .iter()
        .enumerate()
        .map(|(i, bk)| bk.scale(&(-(Rational::one()) / int(i as i64 + 1))))
        .collect();
    Ok(F7Data {
        b,
        g_series_part,
        g_log_coefficient: int(1),
    })
}

impl F7Data {
    /// `f_7` restricted to a rational `r`, valid when `r = 0` or when the
    /// half-integer powers are rational; used at `r = 0`.
    pub fn restrict_r0(&self) -> Series<Rational> {
        let n = self.b.len();
        let mut c = vec![int(0)];
        c.extend(self.b.iter().map(|h| h.p.eval(&int(0))));
        Series::new(Var::Y, n, c)
    }

    /// Residual of `((3+3y−4r)θ_y + (7y−2−8r)θ_r − 3) f_7` at `y^k`, as a
    /// polynomial over the common power of `1+4r`.
    pub fn ode2_residual(&self, k: usize) -> Poly {
        let bk = &self.b[k - 1];
        let tk = bk.theta_r();
        let e = tk.e2;
        let kk = int(k as i64);
        let mut acc = bk.raise(e).mul(&Poly::from_ints(&[3, -4])).scale(&kk);
        acc = acc.add(&bk.raise(e).scale(&int(-3)));
        acc = acc.add(&tk.p.mul(&Poly::from_ints(&[-2, -8])));
        if k >= 2 {
            let bp = &self.b[k - 2];
            acc = acc.add(&bp.raise(e).scale(&(int(3) * (&kk - int(1)))));
            acc = acc.add(&bp.theta_r().raise(e).scale(&int(7)));
        }
        acc
    }
}
