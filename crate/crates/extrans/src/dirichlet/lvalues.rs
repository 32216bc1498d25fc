use std::f64::consts::PI;

use num_traits::{One, Zero};

use super::arith::{mobius, prime_divisors};
use super::bernoulli::{bernoulli, l_value_negative, ExactOrNumeric};
use super::character::{euler_factor, DirichletCharacter};
use crate::error::{Error, Result};
use crate::qseries::{gauss, gauss_i, gauss_real, int, rat, ComplexF, GaussRational};

/// Exact Gauss sum `coef·√radicand` for real characters.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussSumExact {
    pub coef: GaussRational,
    pub radicand: u64,
}

impl GaussSumExact {
    pub fn to_complex(&self) -> ComplexF {
        use crate::qseries::Coeff;
        self.coef.to_complex() * (self.radicand as f64).sqrt()
    }

    /// The value as an element of `Q(i)` when the radicand is a square.
    pub fn as_gaussian(&self) -> Option<GaussRational> {
        let r = (self.radicand as f64).sqrt().round() as u64;
        (r * r == self.radicand).then(|| self.coef.clone() * gauss_real(int(r as i64)))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussSum {
    pub value: ComplexF,
    pub exact: Option<GaussSumExact>,
}

/// `𝔤(χ) = Σ_a χ(a) e^{2πia/N}`.
pub fn gauss_sum(chi: &DirichletCharacter) -> GaussSum {
    let n = chi.modulus();
    let value = (0..n as i64)
        .map(|a| chi.value(a) * ComplexF::from_polar(1.0, 2.0 * PI * a as f64 / n as f64))
        .sum();
    GaussSum {
        value,
        exact: gauss_sum_exact(chi),
    }
}

fn gauss_sum_exact(chi: &DirichletCharacter) -> Option<GaussSumExact> {
    if chi.order() > 2 {
        return None;
    }
    let prim = chi.primitive();
    let f = prim.conductor();
    let q = chi.modulus() / f;
    let chi_q = prim.value_exact(q as i64)?;
    let factor = chi_q * gauss_real(int(mobius(q)));
    let base = if f == 1 {
        gauss(int(1), int(0))
    } else if prim.is_odd() {
        gauss_i()
    } else {
        gauss(int(1), int(0))
    };
    Some(GaussSumExact {
        coef: factor * base,
        radicand: f,
    })
}

/// `L(1, χ)` for an odd character.
#[derive(Clone, Debug, PartialEq)]
pub struct LOne {
    /// `L(1, χ)`.
    pub value: ComplexF,
    /// Exact `𝔤(χ̄)·L(1, χ)/π` in `Q(i)` when the character allows it.
    pub gauss_conj_times_value_over_pi: Option<GaussRational>,
    /// The same product, numerically.
    pub gauss_conj_times_value: ComplexF,
    /// Independent value from accelerated partial sums of `Σ χ(m)/m`.
    pub partial_sum_value: ComplexF,
}

/// `L(1, χ) = −πi·B_{1,χ̄}/𝔤(χ̄)` for primitive odd `χ`, extended to
/// imprimitive characters through Euler factors.
pub fn l_one_odd(chi: &DirichletCharacter) -> Result<LOne> {
    if !chi.is_odd() {
        return Err(Error::Precondition(
            "L(1, χ) closed form needs an odd character".into(),
        ));
    }
    let prim = chi.primitive();
    let pconj = prim.conj();
    let b1 = bernoulli(&pconj, 1).value;
    let g_prim_conj = gauss_sum(&pconj).value;
    let ipi = ComplexF::new(0.0, PI);
    let mut euler_num = ComplexF::one();
    let mut euler_ex = chi.is_gaussian().then(|| gauss(int(1), int(0)));
    for p in prime_divisors(chi.modulus()) {
        let (ex, num) = euler_factor(&prim, p, 1);
        euler_num *= num;
        euler_ex = match (euler_ex, ex) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
    }
    let value = euler_num * (-ipi * b1.to_complex() / g_prim_conj);

    let q = chi.modulus() / prim.conductor();
    let mu = mobius(q);
    let gauss_conj_times_value = gauss_sum(&chi.conj()).value * value;
    let exact = match (euler_ex, &b1, pconj.value_exact(q as i64)) {
        (Some(e), ExactOrNumeric::Exact(b), Some(cq)) => {
            Some(cq * gauss_real(int(mu)) * e * b.clone() * gauss(int(0), int(-1)))
        }
        _ => None,
    };
    Ok(LOne {
        value,
        gauss_conj_times_value_over_pi: exact,
        gauss_conj_times_value,
        partial_sum_value: l_one_partial_sums(chi, 2000),
    })
}

/// Digamma by recurrence and the asymptotic series.
pub(crate) fn digamma(mut x: f64) -> f64 {
    let mut acc = 0.0;
    while x < 20.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let x2 = 1.0 / (x * x);
    acc + x.ln()
        - 0.5 / x
        - x2 * (1.0 / 12.0 - x2 * (1.0 / 120.0 - x2 * (1.0 / 252.0 - x2 / 240.0)))
}

/// `Σ_{m ≤ KN} χ(m)/m` plus the digamma tail `−(1/N) Σ_a χ(a) ψ(K + a/N)`.
pub fn l_one_partial_sums(chi: &DirichletCharacter, k: u64) -> ComplexF {
    let n = chi.modulus();
    let mut s = ComplexF::zero();
    for m in 1..=k * n {
        s += chi.value(m as i64) / m as f64;
    }
    let mut tail = ComplexF::zero();
    for a in 1..=n {
        tail += chi.value(a as i64) * digamma(k as f64 + a as f64 / n as f64);
    }
    s - tail / n as f64
}

/// `L(2, χ)` by direct summation with an asymptotic tail; returns the value
/// and the magnitude of the first omitted tail term.
pub fn l_two(chi: &DirichletCharacter) -> (ComplexF, f64) {
    let n = chi.modulus();
    let k = (100_000 / n).max(1);
    let mut s = ComplexF::zero();
    for m in 1..=k * n {
        s += chi.value(m as i64) / (m as f64 * m as f64);
    }
    let mut tail = ComplexF::zero();
    let mut bound = 0.0;
    for a in 1..=n {
        let x = k as f64 + a as f64 / n as f64;
        let h = 1.0 / x;
        let z2 = h + 0.5 * h * h + h.powi(3) / 6.0 - h.powi(5) / 30.0 + h.powi(7) / 42.0;
        bound += h.powi(9) / 30.0;
        tail += chi.value(a as i64) * z2;
    }
    let nn = (n * n) as f64;
    (s + tail / nn, bound / nn)
}

/// `L'(−1, χ) = N·𝔤(χ)/(4πi)·L(2, χ̄)` for odd primitive `χ`.
pub fn l_prime_minus1(chi: &DirichletCharacter) -> Result<ComplexF> {
    if !chi.is_odd() || !chi.is_primitive() {
        return Err(Error::Precondition(
            "L'(-1, χ) closed form needs an odd primitive character".into(),
        ));
    }
    let n = chi.modulus() as f64;
    let g = gauss_sum(chi).value;
    let (l2, _) = l_two(&chi.conj());
    Ok(g * n / ComplexF::new(0.0, 4.0 * PI) * l2)
}

/// `L'(−1, ψ)` for any `ψ` whose primitive part is odd, through the Euler
/// factors `Π_{p | N} (1 − ψ*(p)·p)`. Returns the exact multiplier of
/// `L'(−1, ψ*)` when available, its numeric value, and `ψ*`.
pub fn l_prime_minus1_imprimitive(
    psi: &DirichletCharacter,
) -> Result<(Option<GaussRational>, ComplexF, DirichletCharacter)> {
    let prim = psi.primitive();
    let mut ex = prim.is_gaussian().then(|| gauss(int(1), int(0)));
    let mut num = ComplexF::one();
    for p in prime_divisors(psi.modulus()) {
        let (e, z) = euler_factor(&prim, p, -1);
        num *= z;
        ex = match (ex, e) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
    }
    let base = l_prime_minus1(&prim)?;
    Ok((ex, num * base, prim))
}

/// Exact record of a period-integral limit.
#[derive(Clone, Debug, PartialEq)]
pub struct LExact {
    /// Terms `c·L'(−1, ψ*)` with `ψ*` primitive.
    pub lprime: Vec<(GaussRational, DirichletCharacter)>,
    /// Coefficient of `πi`.
    pub pi_i: GaussRational,
    pub constant: GaussRational,
}

impl LExact {
    pub fn evaluate(&self) -> Result<ComplexF> {
        use crate::qseries::Coeff;
        let mut v = self.constant.to_complex() + self.pi_i.to_complex() * ComplexF::new(0.0, PI);
        for (c, psi) in &self.lprime {
            v += c.to_complex() * l_prime_minus1(psi)?;
        }
        Ok(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitKind {
    Finite,
    Divergent,
}

/// `I_k^{χ,ψ,n} = n^{−1} lim_{s→0} L(s+1, χ)·L(s+2−k, ψ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LLimit {
    pub kind: LimitKind,
    pub value: ComplexF,
    pub exact_part: Option<LExact>,
}

/// Evaluates the period-integral limit.
pub fn i_limit(
    k: i64,
    chi: &DirichletCharacter,
    psi: &DirichletCharacter,
    n: u64,
) -> Result<LLimit> {
    if k < 2 {
        return Err(Error::Precondition("weight must be at least 2".into()));
    }
    let parity = chi.parity() * psi.parity();
    if parity != if k % 2 == 0 { 1 } else { -1 } {
        return Err(Error::Precondition(format!(
            "parity violation: χψ(−1) ≠ (−1)^{k}"
        )));
    }
    let inv_n = gauss_real(rat(1, n as i64));
    let lneg = l_value_negative(2 - k, psi)?;
    if !chi.is_principal() {
        if lneg.is_zero() {
            let zero = gauss(int(0), int(0));
            return Ok(LLimit {
                kind: LimitKind::Finite,
                value: ComplexF::zero(),
                exact_part: Some(LExact {
                    lprime: vec![],
                    pi_i: zero.clone(),
                    constant: zero,
                }),
            });
        }
        if !chi.is_odd() {
            return Err(Error::Unsupported("L(1, χ) for even nonprincipal χ".into()));
        }
        let l1 = l_one_odd(chi)?;
        let value = l1.value * lneg.to_complex() / n as f64;
        let g = gauss_sum(&chi.conj());
        let exact = match (
            &l1.gauss_conj_times_value_over_pi,
            g.exact.and_then(|e| e.as_gaussian()),
            lneg.exact(),
        ) {
            (Some(gl), Some(gq), Some(ln)) => {
                let pi_coef = gl.clone() / gq * gauss(int(0), int(-1)) * ln.clone() * inv_n.clone();
                Some(LExact {
                    lprime: vec![],
                    pi_i: pi_coef,
                    constant: gauss(int(0), int(0)),
                })
            }
            _ => None,
        };
        return Ok(LLimit {
            kind: LimitKind::Finite,
            value,
            exact_part: exact,
        });
    }
    if !lneg.is_zero() {
        return Err(Error::Divergent(format!(
            "ζ-pole times L({}, ψ) ≠ 0 for ψ = {psi}",
            2 - k
        )));
    }
    if k != 3 {
        return Err(Error::Unsupported(
            "derivative L'(2−k, ψ) only implemented for k = 3".into(),
        ));
    }
    let mut local = gauss(int(1), int(0));
    for p in prime_divisors(chi.modulus()) {
        local = local * gauss_real(int(1) - rat(1, p as i64));
    }
    let (ex, num, prim) = l_prime_minus1_imprimitive(psi)?;
    use crate::qseries::Coeff;
    let value = local.to_complex() * num / n as f64;
    let exact = ex.map(|e| LExact {
        lprime: vec![(e * local.clone() * inv_n.clone(), prim.clone())],
        pi_i: gauss(int(0), int(0)),
        constant: gauss(int(0), int(0)),
    });
    Ok(LLimit {
        kind: LimitKind::Finite,
        value,
        exact_part: exact,
    })
}

/// `L(k, χ)` for `k ≥ 1` and `χ(−1) = (−1)^k`, from
/// `L(k, χ*) = (−1)^{k−1}·𝔤(χ*)/2·(2πi/N)^k·B_{k,χ̄*}/k!` and the Euler
/// factors of the imprimitive part.
pub fn l_value_positive(k: i64, chi: &DirichletCharacter) -> Result<ComplexF> {
    if k < 1 || chi.parity() != if k % 2 == 0 { 1 } else { -1 } {
        return Err(Error::Precondition(format!(
            "L({k}, χ) closed form needs χ(−1) = (−1)^{k}"
        )));
    }
    if chi.is_principal() {
        return Err(Error::Precondition("principal character".into()));
    }
    let prim = chi.primitive();
    let n = prim.modulus() as f64;
    let b = bernoulli(&prim.conj(), k as usize).value.to_complex();
    let fact: f64 = (1..=k).map(|j| j as f64).product();
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    let mut v =
        gauss_sum(&prim).value * 0.5 * sign * ComplexF::new(0.0, 2.0 * PI / n).powi(k as i32) * b
            / fact;
    for p in prime_divisors(chi.modulus()) {
        v *= euler_factor(&prim, p, k).1;
    }
    Ok(v)
}
