use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::catalog::{transition_point, TransitionCase, TransitionPoint};
use crate::dirichlet::arith::{divisors, euler_phi, mobius};
use crate::dirichlet::{enumerate_characters, gauss_sum, DirichletCharacter, MODULUS_CAP};
use crate::error::{Error, Result};
use crate::modular::{extremal_eisenstein_combo, EisensteinParams};
use crate::qseries::{gauss_real, int, Coeff, ComplexF, GaussRational};

/// A cusp representative `a/c` with `gcd(a, c) = 1` and `c > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CuspRep {
    a: i64,
    c: u64,
}

impl CuspRep {
    pub fn new(a: i64, c: u64) -> Result<Self> {
        if c == 0 {
            return Err(Error::Precondition(
                "cusp denominator must be positive".into(),
            ));
        }
        if a.gcd(&(c as i64)) != 1 {
            return Err(Error::Precondition(format!("gcd({a}, {c}) ≠ 1")));
        }
        Ok(CuspRep { a, c })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn to_f64(&self) -> f64 {
        self.a as f64 / self.c as f64
    }

    /// The representative of the transition point of `d`, when it is a cusp.
    pub fn transition(d: TransitionCase) -> Result<Self> {
        match transition_point(d)? {
            TransitionPoint::Cusp { a, c } => CuspRep::new(a, c as u64),
            TransitionPoint::Elliptic(label) => Err(Error::Unsupported(format!(
                "the transition point of case {d} is the elliptic point {label}"
            ))),
        }
    }
}

impl fmt::Display for CuspRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.c)
    }
}

impl FromStr for CuspRep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("cannot parse cusp {s:?}; expected a/c"));
        match s.split_once('/') {
            Some((a, c)) => CuspRep::new(
                a.trim().parse().map_err(|_| bad())?,
                c.trim().parse().map_err(|_| bad())?,
            ),
            None => CuspRep::new(s.trim().parse().map_err(|_| bad())?, 1),
        }
    }
}

/// One term `β·𝔤(ϑ)·E_3^{χ,ψ,n}` of an Eisenstein combination.
#[derive(Clone, Debug, PartialEq)]
pub struct ComboTerm {
    /// The algebraic prefactor `β`.
    pub beta: ComplexF,
    /// `β` in `Q(i)`, when the characters allow it.
    pub beta_exact: Option<GaussRational>,
    /// The character `ϑ` whose Gauss sum multiplies `β`.
    pub gauss_char: DirichletCharacter,
    pub params: EisensteinParams,
}

impl ComboTerm {
    /// The full coefficient `β·𝔤(ϑ)`.
    pub fn coefficient(&self) -> ComplexF {
        self.beta * gauss_sum(&self.gauss_char).value
    }

    /// The full coefficient in `Q(i)`, when both factors lie there.
    pub fn coefficient_exact(&self) -> Option<GaussRational> {
        let g = gauss_sum(&self.gauss_char).exact?.as_gaussian()?;
        Some(self.beta_exact.clone()? * g)
    }
}

impl fmt::Display for ComboTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.beta_exact {
            Some(b) => write!(f, "({b})")?,
            None => write!(f, "({:.12})", self.beta)?,
        }
        if self.gauss_char.modulus() > 1 {
            write!(f, "*g({})", self.gauss_char)?;
        }
        write!(f, "*{}", self.params)
    }
}

/// A linear combination of weight-3 Eisenstein series.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct EisCombo {
    pub terms: Vec<ComboTerm>,
}

impl EisCombo {
    /// Coefficients `a_0..=a_len` of the combination.
    pub fn coefficients(&self, len: usize) -> Result<Vec<ComplexF>> {
        let mut out = vec![ComplexF::new(0.0, 0.0); len + 1];
        for t in &self.terms {
            let c = t.coefficient();
            for (slot, a) in out
                .iter_mut()
                .zip(crate::modular::eis_coefficients_numeric(&t.params, len)?)
            {
                *slot += c * a;
            }
        }
        Ok(out)
    }

    /// Scales every `n`-parameter by `m`, i.e. substitutes `τ ↦ mτ`.
    pub fn rescale(mut self, m: u64) -> Self {
        for t in &mut self.terms {
            t.params.n *= m;
        }
        self
    }

    /// Multiplies every coefficient by `α`.
    pub fn times(mut self, alpha: ComplexF, alpha_exact: Option<&GaussRational>) -> Self {
        for t in &mut self.terms {
            t.beta *= alpha;
            t.beta_exact = match (t.beta_exact.take(), alpha_exact) {
                (Some(b), Some(a)) => Some(b * a.clone()),
                _ => None,
            };
        }
        self
    }
}

impl fmt::Display for EisCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `𝔤(χ) = 0` exactly: `χ` mod `N` with conductor `f` has
/// `𝔤(χ) = μ(N/f)·χ*(N/f)·𝔤(χ*)`.
fn gauss_sum_vanishes(chi: &DirichletCharacter) -> bool {
    let f = chi.conductor();
    let q = chi.modulus() / f;
    mobius(q) == 0 || q.gcd(&f) > 1
}

/// `E_3^{1_1,ψ,1}(τ + a/c)` as a combination of untranslated Eisenstein
/// series:
/// `Σ_{c = c₁c₂c₃} Σ_{χ mod c₃} χ(a)𝔤(χ̄)ψ(c₁)c₁²/φ(c₃) · E_3^{χ, 1_{c₂c₃}χψ, c₁c₂}`.
/// Terms whose Gauss sum vanishes are dropped.
pub fn translate_eisenstein(psi: &DirichletCharacter, r: CuspRep) -> Result<EisCombo> {
    let c = r.c();
    if c > MODULUS_CAP {
        return Err(Error::ModulusCap {
            modulus: c,
            cap: MODULUS_CAP,
        });
    }
    if !psi.is_odd() {
        return Err(Error::Precondition("E_3^{1_1,ψ,n} needs an odd ψ".into()));
    }
    let mut terms = Vec::new();
    for c1 in divisors(c) {
        let psi_c1 = psi.value(c1 as i64);
        if psi_c1.norm() == 0.0 {
            continue;
        }
        let psi_c1_exact = psi.value_exact(c1 as i64);
        for c2 in divisors(c / c1) {
            let c3 = c / c1 / c2;
            let phi = euler_phi(c3) as i64;
            let scale = int((c1 * c1) as i64) / int(phi);
            for chi in enumerate_characters(c3)? {
                if gauss_sum_vanishes(&chi) {
                    continue;
                }
                let beta = chi.value(r.a()) * psi_c1 * crate::qseries::rat_to_f64(&scale);
                let beta_exact = match (chi.value_exact(r.a()), &psi_c1_exact) {
                    (Some(x), Some(y)) => Some(x * y.clone() * gauss_real(scale.clone())),
                    _ => None,
                };
                let psi_new = DirichletCharacter::principal(c2 * c3).mul(&chi).mul(psi);
                let params = EisensteinParams::new(3, chi.clone(), psi_new, c1 * c2)?;
                terms.push(ComboTerm {
                    beta,
                    beta_exact,
                    gauss_char: chi.conj(),
                    params,
                });
            }
        }
    }
    Ok(EisCombo { terms })
}

/// `𝓔_d` as a combination of `E_3^{1_1,ψ,n}`, for `d ∈ {3, 4, 5, 6I, 6II, 8}`.
pub fn decompose_extremal(d: TransitionCase) -> Result<EisCombo> {
    let terms = extremal_eisenstein_combo(d)?
        .into_iter()
        .map(|(alpha, params)| ComboTerm {
            beta: alpha.to_complex(),
            beta_exact: Some(alpha),
            gauss_char: DirichletCharacter::principal(1),
            params,
        })
        .collect();
    Ok(EisCombo { terms })
}

/// `𝓔_d(τ + r)` as a combination of untranslated Eisenstein series, using
/// `E_3^{1_1,ψ,n}(τ + r) = E_{nr}^ψ(nτ)`.
pub fn translated_extremal(d: TransitionCase, r: CuspRep) -> Result<EisCombo> {
    let mut out = EisCombo::default();
    for t in decompose_extremal(d)?.terms {
        let n = t.params.n;
        let g = r.c().gcd(&n);
        let shifted = CuspRep::new(r.a() * (n / g) as i64, r.c() / g)?;
        let part = translate_eisenstein(&t.params.psi, shifted)?
            .rescale(n)
            .times(t.beta, t.beta_exact.as_ref());
        out.terms.extend(part.terms);
    }
    Ok(out)
}

/// `|LHS − RHS|` of the translation formula at `q0`, with
/// `LHS = Σ a_j ω^j q0^j` for `ω = e^{2πir}` and the right side summed term
/// by term, both to `q`-order `n`. Fails above `1e−10`.
pub fn translate_numeric_check(
    psi: &DirichletCharacter,
    r: CuspRep,
    q0: ComplexF,
    n: usize,
) -> Result<f64> {
    if q0.norm() > 0.3 {
        return Err(Error::Precondition(format!(
            "|q0| = {} exceeds 0.3",
            q0.norm()
        )));
    }
    let one = DirichletCharacter::principal(1);
    let base = EisensteinParams::new(3, one, psi.clone(), 1)?;
    let lhs_coeffs = crate::modular::eis_coefficients_numeric(&base, n)?;
    let omega = ComplexF::from_polar(1.0, 2.0 * std::f64::consts::PI * r.to_f64());
    let lhs = crate::modular::horner(&lhs_coeffs, omega * q0);
    let combo = translate_eisenstein(psi, r)?;
    let rhs = crate::modular::horner(&combo.coefficients(n)?, q0);
    let residual = (lhs - rhs).norm();
    if residual > 1e-10 {
        return Err(Error::Verification(format!(
            "translation residual {residual:e} at ψ = {psi}, r = {r}"
        )));
    }
    Ok(residual)
}
