use std::fmt;

use num_traits::Zero;

use super::qexp::QExpansion;
use crate::dirichlet::{l_value_negative, DirichletCharacter};
use crate::error::{Error, Result};
use crate::qseries::{int, Coeff, ComplexF, GaussRational, Series, Var};

/// Parameters `(k, χ, ψ, n)` of the normalized Eisenstein series
/// `E_k^{χ,ψ,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinParams {
    pub k: i64,
    pub chi: DirichletCharacter,
    pub psi: DirichletCharacter,
    pub n: u64,
}

impl fmt::Display for EisensteinParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{}^{{{}, {}, {}}}", self.k, self.chi, self.psi, self.n)
    }
}

impl EisensteinParams {
    pub fn new(k: i64, chi: DirichletCharacter, psi: DirichletCharacter, n: u64) -> Result<Self> {
        let p = EisensteinParams { k, chi, psi, n };
        p.check()?;
        Ok(p)
    }

    /// Checks `k ≥ 3`, `n ≥ 1` and `χψ(−1) = (−1)^k`.
    pub fn check(&self) -> Result<()> {
        if self.k < 3 {
            return Err(Error::Precondition("weight must be at least 3".into()));
        }
        if self.n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        let want = if self.k % 2 == 0 { 1 } else { -1 };
        if self.chi.parity() * self.psi.parity() != want {
            return Err(Error::Precondition(format!(
                "parity violation: χψ(−1) ≠ (−1)^{} for {self}",
                self.k
            )));
        }
        Ok(())
    }

    /// `χ = 1_1`.
    pub fn chi_is_trivial_mod_1(&self) -> bool {
        self.chi.modulus() == 1
    }

    fn is_gaussian(&self) -> bool {
        self.chi.is_gaussian() && self.psi.is_gaussian()
    }
}

/// `a_j = Σ_{m·s = j/n} ψ(m)·m^{k−1}·χ(s)` for `n | j`.
fn coefficient<C: Coeff>(
    p: &EisensteinParams,
    j: usize,
    val: &impl Fn(&DirichletCharacter, i64) -> C,
) -> C {
    let n = p.n as usize;
    if j % n != 0 {
        return C::zero();
    }
    let j = j / n;
    let mut acc = C::zero();
    for m in 1..=j {
        if j % m != 0 {
            continue;
        }
        let pm = val(&p.psi, m as i64);
        if pm.is_zero() {
            continue;
        }
        let cs = val(&p.chi, (j / m) as i64);
        if cs.is_zero() {
            continue;
        }
        acc = acc + pm * cs * C::from_i64((m as i64).pow(p.k as u32 - 1));
    }
    acc
}

/// Constant term `½·δ_{χ=1_1}·L(1−k, ψ)`.
pub fn eis_constant_term(p: &EisensteinParams) -> Result<(Option<GaussRational>, ComplexF)> {
    if !p.chi_is_trivial_mod_1() {
        return Ok((Some(GaussRational::zero()), ComplexF::zero()));
    }
    let l = l_value_negative(1 - p.k, &p.psi)?;
    let half = GaussRational::new(int(1) / int(2), int(0));
    Ok((l.exact().map(|e| e.clone() * half), l.to_complex() * 0.5))
}

/// Exact expansion of `E_k^{χ,ψ,n}` for characters of order dividing 4.
pub fn eis_general(p: &EisensteinParams, n: usize) -> Result<QExpansion<GaussRational>> {
    p.check()?;
    if !p.is_gaussian() {
        return Err(Error::Unsupported(format!(
            "{p} has values outside Q(i); use eis_general_numeric"
        )));
    }
    let (c0, _) = eis_constant_term(p)?;
    let c0 = c0.expect("Gaussian character gives an exact L-value");
    let val = |chi: &DirichletCharacter, a: i64| chi.value_exact(a).expect("Gaussian character");
    let s = Series::from_fn(Var::Q, n, |j| {
        if j == 0 {
            c0.clone()
        } else {
            coefficient(p, j, &val)
        }
    });
    Ok(QExpansion::new(s, int(p.k), p.to_string()))
}

/// Floating-point expansion of `E_k^{χ,ψ,n}` for any characters.
pub fn eis_general_numeric(p: &EisensteinParams, n: usize) -> Result<QExpansion<ComplexF>> {
    let c = eis_coefficients_numeric(p, n)?;
    Ok(QExpansion::new(
        Series::new(Var::Q, n, c),
        int(p.k),
        p.to_string(),
    ))
}

/// Coefficients `a_0..=a_len` as a plain vector, for long numeric sums.
pub fn eis_coefficients_numeric(p: &EisensteinParams, len: usize) -> Result<Vec<ComplexF>> {
    p.check()?;
    let (_, c0) = eis_constant_term(p)?;
    let nn = p.n as usize;
    let mut out = vec![ComplexF::zero(); len + 1];
    out[0] = c0;
    let top = len / nn;
    let kk = p.k as i32 - 1;
    for m in 1..=top {
        let pm = p.psi.value(m as i64);
        if pm == ComplexF::zero() {
            continue;
        }
        let w = pm * (m as f64).powi(kk);
        for s in 1..=top / m {
            let cs = p.chi.value(s as i64);
            if cs != ComplexF::zero() {
                out[m * s * nn] += w * cs;
            }
        }
    }
    Ok(out)
}

/// Evaluates `Σ_j a_j q^j` with terms up to `|q|^j < tol·10^{−3}`; fails if
/// `|q| ≥ 1`.
pub fn eis_eval(p: &EisensteinParams, q: ComplexF, tol: f64) -> Result<ComplexF> {
    let r = q.norm();
    if r >= 1.0 {
        return Err(Error::Precondition(format!("|q| = {r} must be below 1")));
    }
    let len = terms_needed(r, p.k, tol);
    let c = eis_coefficients_numeric(p, len)?;
    Ok(horner(&c, q))
}

/// Smallest `J` with `J^{k}·r^J` below `tol/1000`.
pub(crate) fn terms_needed(r: f64, k: i64, tol: f64) -> usize {
    if r == 0.0 {
        return 1;
    }
    let mut j = 8usize;
    while (j as f64).powi(k as i32) * r.powi(j as i32) > tol * 1e-3 {
        j += 8;
    }
    j
}

pub(crate) fn horner(c: &[ComplexF], q: ComplexF) -> ComplexF {
    c.iter().rev().fold(ComplexF::zero(), |acc, a| acc * q + a)
}
