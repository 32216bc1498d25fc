use super::eisenstein::{eis_general, EisensteinParams};
use super::hauptmodul::{canonical_p_of_q, hauptmodul_p, six_level_hauptmoduln};
use super::qexp::{
    classic_eisenstein, f5, is_zero_series, scale_q, theta3, theta4, ClassicEisenstein,
};
use crate::catalog::TransitionCase;
use crate::dirichlet::{chi_3_2, chi_4_2, chi_5_2, chi_5_3, DirichletCharacter};
use crate::error::{Error, Result};
use crate::local_model::{extremal_series, f_series};
use crate::qseries::{gauss, int, rat, GaussRational, Rational, Series};

/// `𝓔_d` as a combination `Σ α·E_3^{1_1,ψ,n}`, for `d ∈ {3, 4, 5, 6I, 6II, 8}`.
pub fn extremal_eisenstein_combo(
    d: TransitionCase,
) -> Result<Vec<(GaussRational, EisensteinParams)>> {
    use TransitionCase::*;
    let one = DirichletCharacter::principal(1);
    let e3 = |psi: DirichletCharacter, n: u64| EisensteinParams::new(3, one.clone(), psi, n);
    let re = |x: i64| gauss(int(x), int(0));
    Ok(match d {
        D3 => vec![(re(-9), e3(chi_3_2(), 1)?)],
        D4 => vec![(re(-4), e3(chi_4_2(), 1)?)],
        D5 => vec![
            (gauss(int(-1), rat(1, 2)), e3(chi_5_2(), 1)?),
            (gauss(int(-1), rat(-1, 2)), e3(chi_5_3(), 1)?),
        ],
        D6I | D6II => vec![(re(-1), e3(chi_3_2(), 1)?), (re(-8), e3(chi_3_2(), 2)?)],
        D8 => vec![(re(-4), e3(chi_4_2(), 2)?)],
        _ => {
            return Err(Error::Unsupported(format!(
                "no Eisenstein decomposition for case {d}"
            )))
        }
    })
}

/// Sums a combination of Eisenstein series to order `n`.
pub fn combo_expansion(
    combo: &[(GaussRational, EisensteinParams)],
    n: usize,
) -> Result<Series<GaussRational>> {
    let mut acc: Option<Series<GaussRational>> = None;
    for (c, p) in combo {
        let term = eis_general(p, n)?.series.scale(c);
        acc = Some(match acc {
            None => term,
            Some(a) => &a + &term,
        });
    }
    acc.ok_or_else(|| Error::Precondition("empty combination".into()))
}

/// The theta-side object compared with `f_d∘P_d` (or its power) and the
/// power used.
pub fn theta_object(d: TransitionCase, n: usize) -> Result<(Series<GaussRational>, u32)> {
    use TransitionCase::*;
    let third = |a: Rational, b: Rational| -> Series<Rational> {
        let t = theta3(n).series;
        &t.scale(&a) + &scale_q(&t, 2).scale(&b)
    };
    Ok(match d {
        D1 => (
            classic_eisenstein(ClassicEisenstein::E4, n).series.lift(),
            4,
        ),
        D2 => {
            let e2 = classic_eisenstein(ClassicEisenstein::E2, n).series;
            ((&scale_q(&e2, 2).scale(&int(2)) - &e2).lift(), 2)
        }
        D3 => (theta3(n).series.lift(), 1),
        D4 => (theta4(n).series.lift(), 1),
        D5 => (f5(n).series, 1),
        D6I => (third(rat(1, 3), rat(2, 3)).lift(), 1),
        D6II => (third(rat(1, 2), rat(1, 2)).lift(), 1),
        D8 => (scale_q(&theta4(n).series, 2).lift(), 1),
        D7 => return Err(Error::Unsupported("no theta object for d = 7".into())),
    })
}

/// Result of [`identity_suite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub d: TransitionCase,
    pub order: usize,
    /// `f_d∘P_d` (to the stated power) equals the theta object.
    pub theta: bool,
    /// `𝓔_d∘P_d` equals the Eisenstein combination, where one is known.
    pub eisenstein: Option<bool>,
    /// `canonical_P_of_q` equals `hauptmodul_P`.
    pub canonical: bool,
}

fn compare(what: &str, a: &Series<GaussRational>, b: &Series<GaussRational>) -> Result<()> {
    match is_zero_series(&(a - b)) {
        None => Ok(()),
        Some(j) => Err(Error::Verification(format!("{what} differs at q^{j}"))),
    }
}

/// Checks the modular identities of case `d` to `q`-order `n`.
pub fn identity_suite(d: TransitionCase, n: usize) -> Result<IdentityReport> {
    let p = hauptmodul_p(d, n)?.series;
    let fp = f_series(d, n)?.compose(&p)?.lift::<GaussRational>();
    let (theta, power) = theta_object(d, n)?;
    compare(
        "f_d∘P_d against the theta object",
        &fp.pow(power as i64)?,
        &theta,
    )?;

    let eisenstein = match extremal_eisenstein_combo(d) {
        Ok(combo) => {
            let e = extremal_series(d, n)?.compose(&p)?.lift::<GaussRational>();
            compare(
                "𝓔_d∘P_d against the Eisenstein combination",
                &e,
                &combo_expansion(&combo, n)?,
            )?;
            Some(true)
        }
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };

    let canon = canonical_p_of_q(d, n)?.series;
    compare(
        "canonical P(q) against the Hauptmodul",
        &canon.lift(),
        &p.lift(),
    )?;
    Ok(IdentityReport {
        d,
        order: n,
        theta: true,
        eisenstein,
        canonical: true,
    })
}

/// `−72P_{6I}/(1+8P_{6I}) = −72P_{6II}/(1+9P_{6II})` to order `n`.
pub fn six_level_relation(n: usize) -> Result<bool> {
    let (a, b) = six_level_hauptmoduln(n)?;
    compare("Γ₀(6) Hauptmodul relation", &a.lift(), &b.lift())?;
    Ok(true)
}

/// `2E_2(q²) − E_2(q) = (f_2∘P_2)²` to order `n`.
pub fn e2_combination_check(n: usize) -> Result<bool> {
    let p = hauptmodul_p(TransitionCase::D2, n)?.series;
    let f = f_series(TransitionCase::D2, n)?.compose(&p)?;
    let (theta, _) = theta_object(TransitionCase::D2, n)?;
    compare(
        "2E_2(q²) − E_2(q) against (f_2∘P_2)²",
        &f.pow(2)?.lift(),
        &theta,
    )?;
    Ok(true)
}
