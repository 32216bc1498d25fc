use std::fmt;
use std::str::FromStr;

use crate::dirichlet::{chi_3_2, chi_4_2, chi_5_2, DirichletCharacter};
use crate::error::{Error, Result};
use crate::qseries::{gauss, int, rat, Coeff, GaussRational, Rational, Series, Var};

/// A `q`-expansion together with its weight and a free-form level note.
#[derive(Clone, Debug, PartialEq)]
pub struct QExpansion<C: Coeff> {
    pub series: Series<C>,
    pub weight: Rational,
    pub level: String,
}

impl<C: Coeff> QExpansion<C> {
    pub fn new(series: Series<C>, weight: Rational, level: impl Into<String>) -> Self {
        QExpansion {
            series,
            weight,
            level: level.into(),
        }
    }

    pub fn coeff(&self, k: usize) -> C {
        self.series.coeff(k)
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

/// `σ_k(n) = Σ_{d | n} d^k`.
fn sigma(n: usize, k: u32) -> Rational {
    (1..=n)
        .filter(|d| n % d == 0)
        .fold(int(0), |acc, d| acc + int((d as i64).pow(k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicEisenstein {
    E2,
    E4,
    E6,
}

impl FromStr for ClassicEisenstein {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "E2" => Ok(Self::E2),
            "E4" => Ok(Self::E4),
            "E6" => Ok(Self::E6),
            _ => Err(Error::Precondition(format!(
                "unknown Eisenstein series {s}"
            ))),
        }
    }
}

/// `E_2 = 1 − 24Σσ_1(m)q^m`, `E_4 = 1 + 240Σσ_3(m)q^m`, `E_6 = 1 − 504Σσ_5(m)q^m`.
pub fn classic_eisenstein(which: ClassicEisenstein, n: usize) -> QExpansion<Rational> {
    let (c, k, w) = match which {
        ClassicEisenstein::E2 => (-24, 1, 2),
        ClassicEisenstein::E4 => (240, 3, 4),
        ClassicEisenstein::E6 => (-504, 5, 6),
    };
    let s = Series::from_fn(Var::Q, n, |m| {
        if m == 0 {
            int(1)
        } else {
            int(c) * sigma(m, k)
        }
    });
    QExpansion::new(s, int(w), "SL2(Z)")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaKind {
    Theta3,
    Theta4,
    F5,
}

impl FromStr for ThetaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "theta3" | "t3" => Ok(Self::Theta3),
            "theta4" | "t4" => Ok(Self::Theta4),
            "f5" => Ok(Self::F5),
            _ => Err(Error::Precondition(format!("unknown theta series {s}"))),
        }
    }
}

/// `1 + c·Σ_m (Σ_{d | m} w(d)) q^m`: the Lambert series `Σ w(m) q^m/(1 − q^m)`.
fn lambert<C: Coeff>(n: usize, lead: C, w: impl Fn(usize) -> C) -> Series<C> {
    Series::from_fn(Var::Q, n, |m| {
        if m == 0 {
            return lead.clone();
        }
        (1..=m)
            .filter(|d| m % d == 0)
            .fold(C::zero(), |acc, d| acc + w(d))
    })
}

fn real_char_value(chi: &DirichletCharacter, a: usize) -> Rational {
    chi.value_exact(a as i64).expect("quadratic character").re
}

/// `ϑ_3 = 1 + 6Σχ_{3,2}(m) q^m/(1−q^m)`.
pub fn theta3(n: usize) -> QExpansion<Rational> {
    let chi = chi_3_2();
    QExpansion::new(
        lambert(n, int(1), |d| int(6) * real_char_value(&chi, d)),
        int(1),
        "Gamma1(3)",
    )
}

/// `ϑ_4 = 1 + 4Σχ_{4,2}(m) q^m/(1−q^m)`.
pub fn theta4(n: usize) -> QExpansion<Rational> {
    let chi = chi_4_2();
    QExpansion::new(
        lambert(n, int(1), |d| int(4) * real_char_value(&chi, d)),
        int(1),
        "Gamma1(4)",
    )
}

/// `f_5 = 1 + Σ((3−i)/2·χ_{5,2}(m) + (3+i)/2·χ̄_{5,2}(m)) q^m/(1−q^m)`.
pub fn f5(n: usize) -> QExpansion<GaussRational> {
    let chi = chi_5_2();
    let a = gauss(rat(3, 2), rat(-1, 2));
    let b = gauss(rat(3, 2), rat(1, 2));
    let s = lambert(n, GaussRational::from_i64(1), |d| {
        let v = chi.value_exact(d as i64).expect("order 4 character");
        a.clone() * v.clone() + b.clone() * v.conj()
    });
    QExpansion::new(s, int(1), "Gamma1(5)")
}

/// Theta series by name, with Gaussian-rational coefficients.
pub fn theta_series(which: ThetaKind, n: usize) -> QExpansion<GaussRational> {
    match which {
        ThetaKind::Theta3 => lift(&theta3(n)),
        ThetaKind::Theta4 => lift(&theta4(n)),
        ThetaKind::F5 => f5(n),
    }
}

pub(crate) fn lift(q: &QExpansion<Rational>) -> QExpansion<GaussRational> {
    QExpansion::new(q.series.lift(), q.weight.clone(), q.level.clone())
}

/// `Π_δ η(δτ)^{r_δ}` with a global sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    pub factors: Vec<(u64, i64)>,
    pub sign: i64,
}

impl EtaQuotientSpec {
    pub fn new(sign: i64, factors: &[(u64, i64)]) -> Self {
        EtaQuotientSpec {
            factors: factors.to_vec(),
            sign,
        }
    }

    /// `Σ δ·r_δ / 24`, when integral.
    pub fn leading_exponent(&self) -> Result<i64> {
        let s: i64 = self.factors.iter().map(|&(d, r)| d as i64 * r).sum();
        if s % 24 != 0 {
            return Err(Error::Precondition(format!(
                "Σδr_δ = {s} is not divisible by 24"
            )));
        }
        Ok(s / 24)
    }

    pub fn weight(&self) -> Rational {
        rat(self.factors.iter().map(|&(_, r)| r).sum(), 2)
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(d, r)| format!("eta({d}t)^{r}"))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `Π_{m ≥ 1} (1 − q^m)^{e(m)}` by `exp(−Σ_m e(m) Σ_k q^{mk}/k)`.
pub fn euler_product(n: usize, e: impl Fn(usize) -> i64) -> Series<Rational> {
    let mut log = vec![int(0); n + 1];
    for m in 1..=n {
        let em = e(m);
        if em == 0 {
            continue;
        }
        let mut j = m;
        let mut k = 1;
        while j <= n {
            log[j] -= rat(em, k);
            j += m;
            k += 1;
        }
    }
    Series::new(Var::Q, n, log)
        .exp()
        .expect("constant term zero")
}

/// Product expansion of an eta quotient with integral leading power.
pub fn eta_quotient(spec: &EtaQuotientSpec, n: usize) -> Result<QExpansion<Rational>> {
    let lead = spec.leading_exponent()?;
    if lead < 0 {
        return Err(Error::Unsupported("negative leading exponent".into()));
    }
    let lead = lead as usize;
    let body = euler_product(n, |m| {
        spec.factors
            .iter()
            .filter(|&&(d, _)| m as u64 % d == 0)
            .map(|&(_, r)| r)
            .sum()
    });
    let mut c = vec![int(0); n + 1];
    for (k, slot) in c.iter_mut().enumerate().skip(lead) {
        *slot = body.coeff(k - lead) * int(spec.sign);
    }
    Ok(QExpansion::new(
        Series::new(Var::Q, n, c),
        spec.weight(),
        spec.to_string(),
    ))
}

/// `F(q^k)`.
pub fn scale_q<C: Coeff>(s: &Series<C>, k: usize) -> Series<C> {
    s.substitute_power(k, &C::from_i64(1))
}

pub(crate) fn is_zero_series<C: Coeff>(s: &Series<C>) -> Option<usize> {
    (0..=s.order()).find(|&j| !s.coeff(j).is_zero())
}
