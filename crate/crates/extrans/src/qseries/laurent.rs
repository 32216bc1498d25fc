use super::field::Coeff;
use super::series::{Series, Var};
use crate::error::{Error, Result};

/// Truncated Laurent series `Σ_{k=min_exp}^{abs_order} c_k v^k`.
///
/// The body stores `c_{min_exp + j}` at index `j`. The absolute truncation
/// order is `min_exp + body.order()`.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentSeries<C> {
    min_exp: i64,
    body: Series<C>,
}

impl<C: Coeff> LaurentSeries<C> {
    /// Normalizes so that the leading stored coefficient is nonzero.
    pub fn new(min_exp: i64, body: Series<C>) -> Self {
        let lead = body.coeffs().iter().position(|c| !c.is_zero());
        match lead {
            None => LaurentSeries {
                min_exp: min_exp + body.order() as i64,
                body: Series::zero(body.var(), 0),
            },
            Some(0) => LaurentSeries { min_exp, body },
            Some(j) => {
                let order = body.order() - j;
                let coeffs = body.coeffs()[j..].to_vec();
                LaurentSeries {
                    min_exp: min_exp + j as i64,
                    body: Series::new(body.var(), order, coeffs),
                }
            }
        }
    }

    /// Zero with absolute truncation order `abs_order`.
    pub fn zero(var: Var, abs_order: i64) -> Self {
        LaurentSeries {
            min_exp: abs_order,
            body: Series::zero(var, 0),
        }
    }

    /// The monomial `c·v^k` known through `abs_order`.
    pub fn monomial(var: Var, k: i64, c: C, abs_order: i64) -> Self {
        if k > abs_order {
            return Self::zero(var, abs_order);
        }
        let mut coeffs = vec![C::zero(); (abs_order - k) as usize + 1];
        coeffs[0] = c;
        Self::new(k, Series::new(var, (abs_order - k) as usize, coeffs))
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn abs_order(&self) -> i64 {
        self.min_exp + self.body.order() as i64
    }

    pub fn var(&self) -> Var {
        self.body.var()
    }

    pub fn body(&self) -> &Series<C> {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.coeffs().iter().all(|c| c.is_zero())
    }

    /// Coefficient of `v^k`.
    pub fn coeff(&self, k: i64) -> C {
        if k < self.min_exp || k > self.abs_order() {
            C::zero()
        } else {
            self.body.coeff((k - self.min_exp) as usize)
        }
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> Vec<(i64, C)> {
        self.body
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (self.min_exp + j as i64, c.clone()))
            .collect()
    }

    fn rebase(&self, lo: i64, hi: i64) -> Series<C> {
        let n = (hi - lo) as usize;
        Series::from_fn(self.var(), n, |j| self.coeff(lo + j as i64))
    }

    pub fn add(&self, other: &Self) -> Self {
        let hi = self.abs_order().min(other.abs_order());
        let lo = self.min_exp.min(other.min_exp).min(hi);
        let a = self.rebase(lo, hi);
        let b = other.rebase(lo, hi);
        Self::new(lo, &a + &b)
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            min_exp: self.min_exp,
            body: -&self.body,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.min_exp, self.body.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let lo = self.min_exp + other.min_exp;
        let hi = (self.abs_order() + other.min_exp).min(other.abs_order() + self.min_exp);
        if hi < lo {
            return Self::zero(self.var(), hi);
        }
        let n = (hi - lo) as usize;
        let a = self.body.truncate(n);
        let b = other.body.truncate(n);
        let a = Series::new(a.var(), n, a.coeffs().to_vec());
        let b = Series::new(b.var(), n, b.coeffs().to_vec());
        Self::new(lo, &a * &b)
    }

    /// Multiplicative inverse; needs a nonzero leading coefficient.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Precondition("Laurent inverse of zero".into()));
        }
        let body_inv = self.body.inv()?;
        Ok(Self::new(-self.min_exp, body_inv).truncated_rel(self.body.order()))
    }

    fn truncated_rel(self, n: usize) -> Self {
        let n = n.min(self.body.order());
        LaurentSeries {
            min_exp: self.min_exp,
            body: self.body.truncate(n),
        }
    }

    /// Lowers the absolute truncation order.
    pub fn truncate_abs(&self, abs_order: i64) -> Self {
        if abs_order < self.min_exp {
            return Self::zero(self.var(), abs_order);
        }
        let n = ((abs_order - self.min_exp) as usize).min(self.body.order());
        LaurentSeries {
            min_exp: self.min_exp,
            body: self.body.truncate(n),
        }
    }

    /// Raises the absolute order by padding zeros; only valid for exact
    /// finite Laurent polynomials.
    pub fn extend_abs(&self, abs_order: i64) -> Self {
        if abs_order <= self.abs_order() {
            return self.clone();
        }
        let n = (abs_order - self.min_exp) as usize;
        Self::new(
            self.min_exp,
            Series::new(self.var(), n, self.body.coeffs().to_vec()),
        )
    }

    pub fn one(var: Var, abs_order: i64) -> Self {
        Self::monomial(var, 0, C::one(), abs_order)
    }
}
