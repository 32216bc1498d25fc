use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{int, Coeff, ComplexF, Rational};
use crate::error::{Error, Result};

/// Name of the expansion variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    P,
    Y,
    X,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::Q => "q",
            Var::P => "P",
            Var::Y => "y",
            Var::X => "x",
            Var::T => "t",
        };
        f.write_str(s)
    }
}

/// Default cap on the truncation order.
pub const ORDER_CAP: usize = 64;

/// Truncated power series `Σ_{k=0}^{order} c_k v^k + O(v^{order+1})`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<C> {
    var: Var,
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn new(var: Var, order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { var, order, coeffs }
    }

    /// Builds a series from a coefficient function.
    pub fn from_fn(var: Var, order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            var,
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::new(var, order, vec![])
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::new(var, order, vec![C::one()])
    }

    pub fn constant(var: Var, order: usize, c: C) -> Self {
        Self::new(var, order, vec![c])
    }

    /// The series `c·v^k`.
    pub fn monomial(var: Var, order: usize, k: usize, c: C) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity series `v`.
    pub fn variable(var: Var, order: usize) -> Self {
        Self::monomial(var, order, 1, C::one())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `v^k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Relabels the variable.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// Lowers the truncation order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Series {
            var: self.var,
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Applies a map to every coefficient.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VarMismatch(
                self.var.to_string(),
                other.var.to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order.min(other.order);
        Ok(Self::from_fn(self.var, order, |k| {
            self.coeffs[k].clone() + other.coeffs[k].clone()
        }))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order.min(other.order);
        Ok(Self::from_fn(self.var, order, |k| {
            self.coeffs[k].clone() - other.coeffs[k].clone()
        }))
    }

    /// Truncated Cauchy product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order.min(other.order);
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(Series {
            var: self.var,
            order,
            coeffs: out,
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        let a0 = self.coeffs[0].clone();
        if a0.is_zero() {
            return Err(Error::Precondition(
                "series inverse needs a nonzero constant term".into(),
            ));
        }
        let inv0 = C::one() / a0;
        let mut b = vec![C::zero(); self.order + 1];
        b[0] = inv0.clone();
        for n in 1..=self.order {
            let mut s = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s = s + self.coeffs[k].clone() * b[n - k].clone();
                }
            }
            b[n] = -(s * inv0.clone());
        }
        Ok(Series {
            var: self.var,
            order: self.order,
            coeffs: b,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "series exp needs zero constant term".into(),
            ));
        }
        let mut e = vec![C::zero(); self.order + 1];
        e[0] = C::one();
        for n in 1..=self.order {
            let mut s = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s = s + C::from_i64(k as i64) * self.coeffs[k].clone() * e[n - k].clone();
                }
            }
            e[n] = s / C::from_i64(n as i64);
        }
        Ok(Series {
            var: self.var,
            order: self.order,
            coeffs: e,
        })
    }

    /// Logarithm of a series with constant term one.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::Precondition(
                "series log needs constant term 1".into(),
            ));
        }
        let mut b = vec![C::zero(); self.order + 1];
        for n in 1..=self.order {
            let mut s = C::from_i64(n as i64) * self.coeffs[n].clone();
            for k in 1..n {
                if !b[k].is_zero() {
                    s = s - C::from_i64(k as i64) * b[k].clone() * self.coeffs[n - k].clone();
                }
            }
            b[n] = s / C::from_i64(n as i64);
        }
        Ok(Series {
            var: self.var,
            order: self.order,
            coeffs: b,
        })
    }

    /// The `k`-th root with constant term one.
    pub fn root(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("root index must be positive".into()));
        }
        if self.coeffs[0] != C::one() {
            return Err(Error::Precondition(
                "series root needs constant term 1".into(),
            ));
        }
        let l = self.log()?;
        l.scale(&(C::one() / C::from_i64(k as i64))).exp()
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut result = Self::one(self.var, self.order);
        let mut p = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&p)?;
            }
            e >>= 1;
            if e > 0 {
                p = p.try_mul(&p)?;
            }
        }
        Ok(result)
    }

    /// Euler operator `v·d/dv`.
    pub fn theta(&self) -> Self {
        Self::from_fn(self.var, self.order, |k| {
            C::from_i64(k as i64) * self.coeffs[k].clone()
        })
    }

    /// Substitutes `v ↦ c·v^k`, used for rescaling and `q ↦ q^k`.
    pub fn substitute_power(&self, k: usize, c: &C) -> Self {
        let mut out = Self::zero(self.var, self.order);
        let mut cp = C::one();
        for j in 0..=self.order {
            if j * k > self.order {
                break;
            }
            out.coeffs[j * k] = self.coeffs[j].clone() * cp.clone();
            cp = cp * c.clone();
        }
        out
    }

    /// Composition `self ∘ inner`; the result lives in the inner variable and
    /// has the smaller of the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "inner series must have zero constant term".into(),
            ));
        }
        let order = inner.order.min(self.order);
        let inner = inner.truncate(order);
        let mut acc = Self::zero(inner.var, order);
        for k in (0..=order).rev() {
            acc = acc.try_mul(&inner)?;
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// Compositional inverse of a series `a_1 v + …` with `a_1` invertible.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order == 0 || self.coeffs[1].is_zero() {
            return Err(Error::Precondition(
                "reversion needs the form a1·v + … with a1 ≠ 0".into(),
            ));
        }
        let n = self.order;
        let a1 = self.coeffs[1].clone();
        let mut g = Self::monomial(self.var, n, 1, C::one() / a1.clone());
        for k in 2..=n {
            let comp = self.compose(&g)?;
            let err = comp.coeffs[k].clone();
            g.coeffs[k] = g.coeffs[k].clone() - err / a1.clone();
        }
        Ok(g)
    }

    /// Numeric evaluation at `z0` with a Cauchy-type tail estimate built from
    /// the last retained coefficients at the given radius.
    pub fn eval(&self, z0: ComplexF, radius: f64, tol: f64) -> Result<(ComplexF, f64)> {
        let r = z0.norm();
        if radius <= 0.0 || r >= radius {
            return Err(Error::Precondition(format!(
                "|z0| = {r} not inside radius {radius}"
            )));
        }
        let mut value = ComplexF::zero();
        let mut zp = ComplexF::one();
        for c in &self.coeffs {
            value += c.to_complex() * zp;
            zp *= z0;
        }
        let window = self.order.min(8) + 1;
        let m = (self.order + 1 - window..=self.order)
            .map(|j| self.coeffs[j].magnitude() * radius.powi(j as i32))
            .fold(0.0, f64::max);
        let rho = r / radius;
        let bound = m * rho.powi(self.order as i32 + 1) / (1.0 - rho);
        if bound > tol {
            return Err(Error::TailBound { bound, tol });
        }
        Ok((value, bound))
    }
}

impl Series<Rational> {
    /// Embeds the coefficients into another field.
    pub fn lift<D: Coeff>(&self) -> Series<D> {
        self.map(D::from_rational)
    }

    /// Integer-coefficient constructor.
    pub fn from_ints(var: Var, order: usize, c: &[i64]) -> Self {
        Self::new(var, order, c.iter().map(|&x| int(x)).collect())
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// Solves `t·F'/F = rhs` with `F = sign·t + O(t²)`, i.e.
/// `F = sign·t·exp(Σ_{m≥1} rhs_m t^m / m)`.
pub fn solve_dlog<C: Coeff>(rhs: &Series<C>, sign: i32) -> Result<Series<C>> {
    if rhs.coeff(0) != C::one() {
        return Err(Error::Precondition("solve_dlog needs rhs(0) = 1".into()));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::Precondition("sign must be ±1".into()));
    }
    let n = rhs.order();
    let integ = Series::from_fn(rhs.var(), n, |k| {
        if k == 0 {
            C::zero()
        } else {
            rhs.coeff(k) / C::from_i64(k as i64)
        }
    });
    let e = integ.exp()?;
    let mut out = Series::zero(rhs.var(), n);
    for k in 0..n {
        out.coeffs[k + 1] = C::from_i64(sign as i64) * e.coeff(k);
    }
    Ok(out)
}

/// Solves the self-referential equation `t·F'/F = R(F(t))`, `F = sign·t + …`,
/// order by order by fixed-point iteration; each pass fixes one more
/// coefficient.
pub fn solve_dlog_composed<C: Coeff>(
    r: &Series<C>,
    var: Var,
    order: usize,
    sign: i32,
) -> Result<Series<C>> {
    if r.coeff(0) != C::one() {
        return Err(Error::Precondition("solve_dlog needs R(0) = 1".into()));
    }
    let r = r.clone().with_var(var).truncate(order);
    let mut f = Series::monomial(var, order.min(1), 1, C::from_i64(sign as i64));
    for t in 2..=order {
        let f_t = Series::new(var, t, f.coeffs.clone());
        let rhs = r.truncate(t).compose(&f_t)?;
        f = solve_dlog(&rhs, sign)?;
    }
    Ok(Series::new(var, order, f.coeffs))
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<C: Coeff> $tr for &Series<C> {
            type Output = Series<C>;
            fn $m(self, rhs: &Series<C>) -> Series<C> {
                self.$imp(rhs)
                    .expect("series operands must share a variable")
            }
        }
        impl<C: Coeff> $tr for Series<C> {
            type Output = Series<C>;
            fn $m(self, rhs: Series<C>) -> Series<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        self.map(|c| -c.clone())
    }
}

impl<C: Coeff> Neg for Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        -&self
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}){}", self.var)?,
                _ => write!(f, "({c}){}^{k}", self.var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order + 1)
    }
}
