use super::qexp::{
    classic_eisenstein, eta_quotient, euler_product, ClassicEisenstein, EtaQuotientSpec, QExpansion,
};
use crate::catalog::TransitionCase;
use crate::error::{Error, Result};
use crate::local_model::{f_series, u_series};
use crate::qseries::{int, solve_dlog_composed, ComplexF, Rational, Series, Var};

/// The eta-quotient form of `P_d` for `d ∈ {4, 6I, 6II, 8}`.
pub fn hauptmodul_eta_spec(d: TransitionCase) -> Option<EtaQuotientSpec> {
    use TransitionCase::*;
    match d {
        D4 => Some(EtaQuotientSpec::new(-1, &[(1, 8), (4, 16), (2, -24)])),
        D6I => Some(EtaQuotientSpec::new(
            -1,
            &[(1, 3), (6, 9), (2, -3), (3, -9)],
        )),
        D6II => Some(EtaQuotientSpec::new(
            -1,
            &[(1, 4), (6, 8), (2, -8), (3, -4)],
        )),
        D8 => Some(EtaQuotientSpec::new(-1, &[(2, 4), (8, 8), (4, -12)])),
        _ => None,
    }
}

/// `−η(Nτ)^r/(η(τ)^r + K·η(Nτ)^r)` with `(N−1)r = 24`, i.e.
/// `−q·A/(B + K·q·A)` with `A = Π(1−q^{Nm})^r`, `B = Π(1−q^m)^r`.
fn level_ratio(level: usize, r: i64, k: i64, n: usize) -> Result<Series<Rational>> {
    let a = euler_product(n, |m| if m % level == 0 { r } else { 0 });
    let b = euler_product(n, |_| r);
    let qa = Series::from_fn(Var::Q, n, |j| if j == 0 { int(0) } else { a.coeff(j - 1) });
    let den = &b + &qa.scale(&int(k));
    Ok(-(qa.try_div(&den)?))
}

/// Legendre symbol `(m/5)`.
fn legendre5(m: usize) -> i64 {
    match m % 5 {
        1 | 4 => 1,
        2 | 3 => -1,
        _ => 0,
    }
}

/// The Hauptmodul `P_d(q) = −q + O(q²)` from its modular expression.
pub fn hauptmodul_p(d: TransitionCase, n: usize) -> Result<QExpansion<Rational>> {
    use TransitionCase::*;
    let s = match d {
        D1 => {
            let e4 = classic_eisenstein(ClassicEisenstein::E4, n).series;
            let e6 = classic_eisenstein(ClassicEisenstein::E6, n).series;
            let e4_32 = e4.root(2)?.pow(3)?;
            let ratio = e6.try_div(&e4_32)?;
            (&ratio - &Series::one(Var::Q, n)).scale(&(int(1) / int(864)))
        }
        D2 => level_ratio(2, 24, 64, n)?,
        D3 => level_ratio(3, 12, 27, n)?,
        D5 => {
            let body = euler_product(n, |m| 5 * legendre5(m));
            Series::from_fn(
                Var::Q,
                n,
                |j| if j == 0 { int(0) } else { -body.coeff(j - 1) },
            )
        }
        D4 | D6I | D6II | D8 => eta_quotient(&hauptmodul_eta_spec(d).expect("eta form"), n)?.series,
        D7 => return Err(Error::Unsupported("no Hauptmodul for d = 7".into())),
    };
    Ok(QExpansion::new(s, int(0), format!("P_{}", d.label())))
}

/// The unique `P(q) = −q + O(q²)` with `D_q log P = (u f²)∘P`.
pub fn canonical_p_of_q(d: TransitionCase, n: usize) -> Result<QExpansion<Rational>> {
    if d == TransitionCase::D7 {
        return Err(Error::Unsupported(
            "d = 7 has no one-variable mirror map".into(),
        ));
    }
    let f = f_series(d, n)?;
    let r = &u_series(d, n)? * &(&f * &f);
    let p = solve_dlog_composed(&r, Var::Q, n, -1)?;
    Ok(QExpansion::new(p, int(0), format!("P_{}", d.label())))
}

/// `t_d` in terms of `P_d` for the Γ₀(6) relation:
/// `−72P_{6I}/(1+8P_{6I})` and `−72P_{6II}/(1+9P_{6II})`.
pub fn six_level_hauptmoduln(n: usize) -> Result<(Series<Rational>, Series<Rational>)> {
    let t = |d: TransitionCase, k: i64| -> Result<Series<Rational>> {
        let p = hauptmodul_p(d, n)?.series;
        let den = &Series::one(Var::Q, n) + &p.scale(&int(k));
        Ok(p.scale(&int(-72)).try_div(&den)?)
    };
    Ok((t(TransitionCase::D6I, 8)?, t(TransitionCase::D6II, 9)?))
}

/// `Π_{m ≥ 1} (1 − q^m)^{e(m)}` in floating point.
fn euler_product_eval(q: ComplexF, e: impl Fn(usize) -> i64) -> Result<ComplexF> {
    let r = q.norm();
    if r >= 1.0 {
        return Err(Error::Precondition(format!("|q| = {r} must be below 1")));
    }
    let mut log = ComplexF::new(0.0, 0.0);
    let mut qm = q;
    let mut m = 1;
    while qm.norm() > 1e-18 {
        let em = e(m);
        if em != 0 {
            log += (ComplexF::new(1.0, 0.0) - qm).ln() * em as f64;
        }
        qm *= q;
        m += 1;
    }
    Ok(log.exp())
}

/// `Σ_{m ≥ 1} m^k q^m/(1 − q^m)` in floating point.
fn lambert_eval(q: ComplexF, k: i32) -> ComplexF {
    let mut s = ComplexF::new(0.0, 0.0);
    let mut qm = q;
    let mut m = 1;
    while (m as f64).powi(k) * qm.norm() > 1e-18 {
        s += qm / (ComplexF::new(1.0, 0.0) - qm) * (m as f64).powi(k);
        qm *= q;
        m += 1;
    }
    s
}

/// `P_d(q)` evaluated at a point of the unit disc from its product or
/// Eisenstein form, with the principal branch of `E_4^{3/2}` for `d = 1`.
pub fn hauptmodul_eval(d: TransitionCase, q: ComplexF) -> Result<ComplexF> {
    use TransitionCase::*;
    if q.norm() >= 1.0 {
        return Err(Error::Precondition(format!(
            "|q| = {} must be below 1",
            q.norm()
        )));
    }
    let one = ComplexF::new(1.0, 0.0);
    let ratio = |level: usize, r: i64, k: f64| -> Result<ComplexF> {
        let a = euler_product_eval(q, |m| if m % level == 0 { r } else { 0 })?;
        let b = euler_product_eval(q, |_| r)?;
        Ok(-(q * a) / (b + q * a * k))
    };
    match d {
        D1 => {
            let e4 = one + lambert_eval(q, 3) * 240.0;
            let e6 = one - lambert_eval(q, 5) * 504.0;
            Ok((e6 / e4.sqrt().powi(3) - one) / 864.0)
        }
        D2 => ratio(2, 24, 64.0),
        D3 => ratio(3, 12, 27.0),
        D5 => Ok(-q * euler_product_eval(q, |m| 5 * legendre5(m))?),
        D4 | D6I | D6II | D8 => {
            let spec = hauptmodul_eta_spec(d).expect("eta form");
            let lead = spec.leading_exponent()?;
            let body = euler_product_eval(q, |m| {
                spec.factors
                    .iter()
                    .filter(|&&(dd, _)| m as u64 % dd == 0)
                    .map(|&(_, r)| r)
                    .sum()
            })?;
            Ok(q.powi(lead as i32) * body * spec.sign as f64)
        }
        D7 => Err(Error::Unsupported("no Hauptmodul for d = 7".into())),
    }
}
