use num_traits::Zero;

use super::character::DirichletCharacter;
use crate::qseries::{int, rat, Coeff, ComplexF, GaussRational, Series, Var};

/// A value that is exact in `Q(i)` when the character allows it.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactOrNumeric {
    Exact(GaussRational),
    Numeric(ComplexF),
}

impl ExactOrNumeric {
    pub fn to_complex(&self) -> ComplexF {
        match self {
            ExactOrNumeric::Exact(g) => g.to_complex(),
            ExactOrNumeric::Numeric(z) => *z,
        }
    }

    pub fn exact(&self) -> Option<&GaussRational> {
        match self {
            ExactOrNumeric::Exact(g) => Some(g),
            ExactOrNumeric::Numeric(_) => None,
        }
    }

    /// Exact zero, or numerically below `1e-12`.
    pub fn is_zero(&self) -> bool {
        match self {
            ExactOrNumeric::Exact(g) => g.is_zero(),
            ExactOrNumeric::Numeric(z) => z.norm() < 1e-12,
        }
    }
}

/// Generalized Bernoulli number `B_{m,χ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BernoulliValue {
    pub m: usize,
    pub value: ExactOrNumeric,
}

/// All `B_{j,χ}` for `j ≤ m`, read off
/// `Σ_{ν=1}^{N} χ(ν) x e^{νx}/(e^{Nx} − 1) = Σ B_{j,χ} x^j/j!`.
fn bernoulli_table<C: Coeff>(chi: &DirichletCharacter, m: usize, val: impl Fn(i64) -> C) -> Vec<C> {
    let n = chi.modulus() as i64;
    let mut fact = vec![int(1)];
    for j in 1..=m + 1 {
        fact.push(&fact[j - 1] * int(j as i64));
    }
    let denom = Series::from_fn(Var::X, m, |j| {
        C::from_rational(
            &(crate::qseries::Rational::from_integer(
                num_bigint::BigInt::from(n).pow(j as u32 + 1),
            ) / &fact[j + 1]),
        )
    });
    let kernel = denom.inv().expect("(e^{Nx}-1)/x has constant term N");
    let sums = Series::from_fn(Var::X, m, |j| {
        let mut s = C::zero();
        for nu in 1..=n {
            let c = val(nu);
            if !c.is_zero() {
                s = s + c * C::from_rational(&crate::qseries::Rational::from_integer(
                    num_bigint::BigInt::from(nu).pow(j as u32),
                ));
            }
        }
        s / C::from_rational(&fact[j])
    });
    let g = &kernel * &sums;
    (0..=m)
        .map(|j| g.coeff(j) * C::from_rational(&fact[j]))
        .collect()
}

/// `B_{m,χ}`, exact in `Q(i)` for characters of order dividing 4.
pub fn bernoulli(chi: &DirichletCharacter, m: usize) -> BernoulliValue {
    let value = if chi.is_gaussian() {
        let t = bernoulli_table::<GaussRational>(chi, m, |a| chi.value_exact(a).unwrap());
        ExactOrNumeric::Exact(t[m].clone())
    } else {
        let t = bernoulli_table::<ComplexF>(chi, m, |a| chi.value(a));
        ExactOrNumeric::Numeric(t[m])
    };
    BernoulliValue { m, value }
}

/// `L(s, χ) = −B_{1−s,χ}/(1−s)` for `s ∈ {0, −1, −2, …}`.
pub fn l_value_negative(s: i64, chi: &DirichletCharacter) -> crate::Result<ExactOrNumeric> {
    if s > 0 {
        return Err(crate::Error::Precondition(format!(
            "s = {s} must be nonpositive"
        )));
    }
    let m = (1 - s) as usize;
    let b = bernoulli(chi, m);
    let f = rat(-1, m as i64);
    Ok(match b.value {
        ExactOrNumeric::Exact(g) => ExactOrNumeric::Exact(g * crate::qseries::gauss_real(f)),
        ExactOrNumeric::Numeric(z) => ExactOrNumeric::Numeric(z * crate::qseries::rat_to_f64(&f)),
    })
}
