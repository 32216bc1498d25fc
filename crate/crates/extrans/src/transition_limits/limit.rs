use std::f64::consts::PI;

use num_traits::Zero;

use super::combo::{translated_extremal, CuspRep, EisCombo};
use crate::catalog::TransitionCase;
use crate::dirichlet::arith::euler_phi;
use crate::dirichlet::{
    bernoulli, i_limit, l_one_odd, l_prime_minus1, l_value_positive, DirichletCharacter,
};
use crate::error::{Error, Result};
use crate::modular::{eis_constant_term, EisensteinParams};
use crate::qseries::{gauss, gauss_real, int, rat, Coeff, ComplexF, GaussRational, Rational};

/// Largest denominator accepted when recognising a root of unity.
pub const ROOT_DENOMINATOR_CAP: u64 = 360;

/// Tolerance for root-of-unity recognition and the cusp-value checks.
pub const ROOT_TOL: f64 = 1e-9;

/// The limit `Q_r = −e^{2πir}·exp(∫_{i∞}^{0}(𝓔_d(τ + r) − 1) d(2πiτ))`.
#[derive(Clone, Debug, PartialEq)]
pub struct CuspLimit {
    pub d: TransitionCase,
    pub r: CuspRep,
    /// The period integral `Σ α·I`.
    pub log_value: ComplexF,
    /// Multipliers `c_ψ` of `L'(−1, ψ)` for primitive `ψ`, zero entries
    /// dropped.
    pub trivial_part: Vec<(DirichletCharacter, GaussRational)>,
    pub trivial_value: ComplexF,
    pub nontrivial_part: ComplexF,
    /// `nontrivial_part/(πi)` in `Q(i)`, when every character involved has
    /// order dividing 4.
    pub nontrivial_pi_i: Option<GaussRational>,
    pub q_value: ComplexF,
    /// `Q_r = e^{2πi·num/den}` with `−den/2 < num ≤ den/2`.
    pub root_of_unity: Option<(i64, u64)>,
}

impl CuspLimit {
    /// `exp(Σ c_ψ·L'(−1, ψ))` times the root-of-unity part.
    pub fn modulus(&self) -> f64 {
        self.q_value.norm()
    }
}

/// Cusp value `a_{0,0}` of `E_3^{χ,ψ,n}`: the coefficient of `τ^{−3}` as
/// `τ → 0`, which is nonzero only for principal `ψ = 1_M`, where it equals
/// `(φ(M)/M)·L(3, χ)·2!/(−2πi n)^3`.
pub fn cusp_value_at_zero(p: &EisensteinParams) -> Result<ComplexF> {
    if !p.psi.is_principal() {
        return Ok(ComplexF::zero());
    }
    let m = p.psi.modulus();
    let density = euler_phi(m) as f64 / m as f64;
    let l3 = l_value_positive(p.k, &p.chi)?;
    let fact: f64 = (1..p.k).map(|j| j as f64).product();
    let denom = ComplexF::new(0.0, -2.0 * PI * p.n as f64).powi(p.k as i32);
    Ok(l3 * density * fact / denom)
}

/// `(Σ α·a_{i∞,0}, Σ α·a_{0,0})` over a combination.
pub fn constant_term_sums(combo: &EisCombo) -> Result<(ComplexF, ComplexF)> {
    let mut inf = ComplexF::zero();
    let mut zero = ComplexF::zero();
    for t in &combo.terms {
        let c = t.coefficient();
        inf += c * eis_constant_term(&t.params)?.1;
        zero += c * cusp_value_at_zero(&t.params)?;
    }
    Ok((inf, zero))
}

/// The constant-term sums of `𝓔_d(τ + r)`; these are `(1, 0)` whenever
/// `r` is not equivalent to `i∞`.
pub fn constant_term_consistency(d: TransitionCase, r: CuspRep) -> Result<(ComplexF, ComplexF)> {
    constant_term_sums(&translated_extremal(d, r)?)
}

fn add_multiplier(
    acc: &mut Vec<(DirichletCharacter, GaussRational)>,
    psi: DirichletCharacter,
    c: GaussRational,
) {
    match acc.iter_mut().find(|(p, _)| *p == psi) {
        Some((_, v)) => *v = v.clone() + c,
        None => acc.push((psi, c)),
    }
}

/// The best rational `p/q` with `q ≤ cap` and `|x − p/q| < tol`, by
/// continued-fraction convergents.
pub fn rational_reconstruct(x: f64, cap: u64, tol: f64) -> Option<(i64, u64)> {
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        let (h2, k2) = (a as i64 * h1 + h0, a as i64 * k1 + k0);
        if k2 as u64 > cap {
            return None;
        }
        if (x - h2 as f64 / k2 as f64).abs() < tol {
            return Some((h2, k2 as u64));
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - a;
        if frac.abs() < 1e-15 {
            return None;
        }
        y = 1.0 / frac;
    }
    None
}

/// `θ ↦ θ − round(θ)` into `(−1/2, 1/2]`.
fn reduce_unit(num: i64, den: u64) -> (i64, u64) {
    let d = den as i64;
    let mut n = num.rem_euclid(d);
    if 2 * n > d {
        n -= d;
    }
    (n, den)
}

fn rational_reduce_unit(x: &Rational) -> (i64, u64) {
    let den: i64 = x.denom().try_into().expect("small denominator");
    let num: i64 = x.numer().try_into().expect("small numerator");
    reduce_unit(num, den as u64)
}

/// Assembles `Q_r` for `d ∈ {3, 4, 5, 6I, 6II, 8}` and `r` not equivalent
/// to `i∞`, exactly where the characters allow.
pub fn cusp_limit(d: TransitionCase, r: CuspRep) -> Result<CuspLimit> {
    let combo = translated_extremal(d, r)?;
    let (inf, zero) = constant_term_sums(&combo)?;
    if zero.norm() > ROOT_TOL {
        return Err(Error::Precondition(format!(
            "𝓔_{d} does not vanish at r = {r} (cusp value {zero:.3e}); r is equivalent to i∞"
        )));
    }
    if (inf - 1.0).norm() > ROOT_TOL {
        return Err(Error::Verification(format!(
            "constant terms at i∞ sum to {inf}, not 1"
        )));
    }

    let mut trivial = Vec::new();
    let mut trivial_value = ComplexF::zero();
    let mut nontrivial_value = ComplexF::zero();
    let mut pi_i = Some(GaussRational::zero());
    for t in &combo.terms {
        let p = &t.params;
        let lim = i_limit(p.k, &p.chi, &p.psi, p.n)?;
        let contribution = t.coefficient() * lim.value;
        if p.chi.is_principal() {
            trivial_value += contribution;
            let coef = t.coefficient_exact().ok_or_else(|| {
                Error::Unsupported(format!("trivial-part coefficient of {t} is not in Q(i)"))
            })?;
            let ex = lim
                .exact_part
                .ok_or_else(|| Error::Unsupported(format!("L'(−1, {}) multiplier", p.psi)))?;
            for (c, prim) in ex.lprime {
                add_multiplier(&mut trivial, prim, c * coef.clone());
            }
        } else {
            nontrivial_value += contribution;
            pi_i = match (pi_i, nontrivial_exact(t.beta_exact.as_ref(), p)?) {
                (Some(acc), Some(x)) => Some(acc + x),
                _ => None,
            };
        }
    }
    trivial.retain(|(_, c)| !c.is_zero());

    let log_value = trivial_value + nontrivial_value;
    let theta = r.to_f64() + 0.5;
    let q_value = -ComplexF::from_polar(1.0, 2.0 * PI * r.to_f64()) * log_value.exp();
    let root_of_unity = if trivial.is_empty() {
        root_from_parts(r, theta, log_value, pi_i.as_ref())?
    } else {
        None
    };
    Ok(CuspLimit {
        d,
        r,
        log_value,
        trivial_part: trivial,
        trivial_value,
        nontrivial_part: nontrivial_value,
        nontrivial_pi_i: pi_i,
        q_value,
        root_of_unity,
    })
}

/// `β·𝔤(χ̄)·I_3^{χ,ψ,n}/(πi) = β·(𝔤(χ̄)L(1,χ)/π)·(−i)·L(−1,ψ)/n` for odd
/// `χ`, and `0` for even nonprincipal `χ`.
fn nontrivial_exact(
    beta: Option<&GaussRational>,
    p: &EisensteinParams,
) -> Result<Option<GaussRational>> {
    if !p.chi.is_odd() {
        return Ok(Some(GaussRational::zero()));
    }
    let ln = bernoulli(&p.psi, 2).value;
    let gl = l_one_odd(&p.chi)?.gauss_conj_times_value_over_pi;
    Ok(match (beta, gl, ln.exact()) {
        (Some(b), Some(g), Some(b2)) => {
            let l_minus1 = b2.clone() * gauss_real(rat(-1, 2));
            Some(b.clone() * g * gauss(int(0), int(-1)) * l_minus1 * gauss_real(rat(1, p.n as i64)))
        }
        _ => None,
    })
}

fn root_from_parts(
    r: CuspRep,
    theta: f64,
    log_value: ComplexF,
    pi_i: Option<&GaussRational>,
) -> Result<Option<(i64, u64)>> {
    if log_value.re.abs() > ROOT_TOL {
        return Ok(None);
    }
    let x = theta + log_value.im / (2.0 * PI);
    let numeric = rational_reconstruct(x - x.floor(), ROOT_DENOMINATOR_CAP, ROOT_TOL)
        .map(|(n, d)| reduce_unit(n, d));
    let exact = match pi_i {
        Some(g) if g.im.is_zero() => {
            let t = Rational::new(r.a().into(), (r.c() as i64).into())
                + rat(1, 2)
                + g.re.clone() / int(2);
            Some(rational_reduce_unit(&t))
        }
        _ => None,
    };
    match (numeric, exact) {
        (Some(a), Some(b)) if a != b => Err(Error::Verification(format!(
            "root of unity {a:?} from the numeric value disagrees with {b:?}"
        ))),
        (_, Some(b)) => Ok(Some(b)),
        (a, None) => Ok(a),
    }
}

/// `exp(Σ c_ψ·L'(−1, ψ))` for a list of multipliers.
pub fn lprime_exponential(terms: &[(DirichletCharacter, GaussRational)]) -> Result<ComplexF> {
    let mut s = ComplexF::zero();
    for (psi, c) in terms {
        s += c.to_complex() * l_prime_minus1(psi)?;
    }
    Ok(s.exp())
}
