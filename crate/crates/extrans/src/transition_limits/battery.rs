use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::combo::{translate_eisenstein, translate_numeric_check, CuspRep, EisCombo};
use crate::dirichlet::{chi_3_2, enumerate_characters, gauss_sum, DirichletCharacter};
use crate::error::{Error, Result};
use crate::modular::EisensteinParams;
use crate::qseries::{gauss, int, rat, ComplexF, GaussRational};

/// A combination in normal form: `Σ coef·√radicand·E` with the Gauss sums
/// of real characters evaluated exactly.
pub type ExactCombo = Vec<(GaussRational, u64, EisensteinParams)>;

/// Normal form of a combination; `None` when a coefficient is not of the
/// form `Q(i)·√m`.
pub fn exact_normal_form(combo: &EisCombo) -> Option<ExactCombo> {
    let mut out: ExactCombo = Vec::new();
    for t in &combo.terms {
        let g = gauss_sum(&t.gauss_char).exact?;
        let c = t.beta_exact.clone()? * g.coef;
        push_term(&mut out, c, g.radicand, t.params.clone());
    }
    out.retain(|(c, _, _)| !c.is_zero());
    Some(out)
}

fn push_term(acc: &mut ExactCombo, c: GaussRational, radicand: u64, params: EisensteinParams) {
    match acc
        .iter_mut()
        .find(|(_, r, p)| *r == radicand && *p == params)
    {
        Some((v, _, _)) => *v = v.clone() + c,
        None => acc.push((c, radicand, params)),
    }
}

/// Equality of normal forms up to term order.
pub fn same_exact_combo(a: &ExactCombo, b: &ExactCombo) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x))
}

fn params(chi: DirichletCharacter, psi: DirichletCharacter, n: u64) -> Result<EisensteinParams> {
    EisensteinParams::new(3, chi, psi, n)
}

/// The two worked translations of `E_3^{1_1,χ_{3,2},1}`, at `r = 1/2` and
/// `r = 1/3`, with their expected normal forms.
pub fn translation_examples() -> Result<Vec<(DirichletCharacter, CuspRep, ExactCombo)>> {
    let chi = chi_3_2();
    let one = DirichletCharacter::principal(1);
    let one2 = DirichletCharacter::principal(2);
    let one3 = DirichletCharacter::principal(3);
    let chi6 = one2.mul(&chi);
    let re = |x| gauss(x, int(0));
    Ok(vec![
        (
            chi.clone(),
            CuspRep::new(1, 2)?,
            vec![
                (re(int(-4)), 1, params(one.clone(), chi.clone(), 2)?),
                (re(int(1)), 1, params(one.clone(), chi6.clone(), 2)?),
                (re(int(-1)), 1, params(one2, chi6, 1)?),
            ],
        ),
        (
            chi.clone(),
            CuspRep::new(1, 3)?,
            vec![
                (re(int(1)), 1, params(one.clone(), chi.clone(), 3)?),
                (re(rat(-1, 2)), 1, params(one3.clone(), chi.clone(), 1)?),
                (gauss(int(0), rat(1, 2)), 3, params(chi, one3, 1)?),
            ],
        ),
    ])
}

/// Checks every worked translation exactly; fails on the first mismatch.
pub fn translation_examples_check() -> Result<usize> {
    let examples = translation_examples()?;
    for (psi, r, want) in &examples {
        let got = exact_normal_form(&translate_eisenstein(psi, *r)?).ok_or_else(|| {
            Error::Unsupported(format!("translation of ψ = {psi} at {r} is not exact"))
        })?;
        if !same_exact_combo(&got, want) {
            return Err(Error::Verification(format!(
                "translation of ψ = {psi} at r = {r} differs from the worked example"
            )));
        }
    }
    Ok(examples.len())
}

/// One random case of [`translation_battery`].
#[derive(Clone, Debug, PartialEq)]
pub struct TranslationCase {
    pub psi: DirichletCharacter,
    pub r: CuspRep,
    pub q0: ComplexF,
    pub residual: f64,
}

/// `count` reproducible random translation checks with odd `ψ` of modulus
/// at most 12, `c ≤ max_c` and `|q0| ≤ 0.3`; fails on the first residual
/// above `1e−10`.
pub fn translation_battery(seed: u64, count: usize, max_c: u64) -> Result<Vec<TranslationCase>> {
    if max_c == 0 {
        return Err(Error::Precondition("max_c must be positive".into()));
    }
    let mut odd = Vec::new();
    for m in 1..=12 {
        odd.extend(enumerate_characters(m)?.into_iter().filter(|c| c.is_odd()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = rng.random_range(1..=max_c);
        let a = rng.random_range(0..c as i64);
        let Ok(r) = CuspRep::new(a, c) else { continue };
        let psi = odd[rng.random_range(0..odd.len())].clone();
        let q0 = ComplexF::from_polar(
            rng.random_range(0.01..0.3),
            rng.random_range(0.0..std::f64::consts::TAU),
        );
        let residual = translate_numeric_check(&psi, r, q0, 80)?;
        out.push(TranslationCase {
            psi,
            r,
            q0,
            residual,
        });
    }
    Ok(out)
}
