use std::collections::BTreeMap;

use num_traits::Zero;

use super::ifunc::{ix_table, iy_from_x};
use super::ring::{CohomClass, H_IDX};
use crate::catalog::{case_constants, TransitionCase};
use crate::error::{Error, Result};
use crate::local_model::{f_reg_series, f_series, u_series};
use crate::qseries::{int, Rational, Series, Var};

/// Series in `P^ℓ` graded by `γ`-degree: `Σ_k P^{kγ}·s_k(P^ℓ)`, with
/// `Q^{γ̃}` recorded as `P^γ P^ℓ`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaGradedSeries {
    pub order: usize,
    pub terms: BTreeMap<u32, Series<Rational>>,
}

impl GammaGradedSeries {
    pub fn new(order: usize) -> Self {
        GammaGradedSeries {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(k: u32, s: Series<Rational>) -> Self {
        let order = s.order();
        let mut terms = BTreeMap::new();
        terms.insert(k, s);
        GammaGradedSeries { order, terms }
    }

    /// The `P^ℓ`-series at `γ`-degree `k`.
    pub fn get(&self, k: u32) -> Series<Rational> {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Series::zero(Var::P, self.order))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut terms = BTreeMap::new();
        for k in self.terms.keys().chain(o.terms.keys()) {
            let s = &self.get(*k).truncate(order) - &o.get(*k).truncate(order);
            if (0..=order).any(|j| !s.coeff(j).is_zero()) {
                terms.insert(*k, s);
            }
        }
        GammaGradedSeries { order, terms }
    }
}

/// `φ^*`: `Q^{kγ̄} ↦ Q^{kγ̃} = P^{kγ}P^{kℓ}`.
pub fn phi_pullback(s: &Series<Rational>, order: usize) -> GammaGradedSeries {
    let mut out = GammaGradedSeries::new(order);
    for k in 0..=s.order() {
        let c = s.coeff(k);
        if !c.is_zero() && k <= order {
            out.terms
                .insert(k as u32, Series::monomial(Var::P, order, k, c));
        }
    }
    out
}

/// The generating functions of `X_d`, as series in `Q^{γ̄}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GwX {
    /// `⟨pt⟩^X`.
    pub pt: Series<Rational>,
    /// `⟨h², h²⟩^X`.
    pub h2h2: Series<Rational>,
    /// `⟨pt, pt⟩^X`.
    pub ptpt: Series<Rational>,
}

/// The generating functions of `Y_d`.
#[derive(Clone, Debug, PartialEq)]
pub struct GwY {
    pub pt: GammaGradedSeries,
    pub h2h2: GammaGradedSeries,
    pub ptpt: GammaGradedSeries,
    pub h2e2: GammaGradedSeries,
    pub eee: GammaGradedSeries,
}

fn degree(d: TransitionCase) -> i64 {
    d.degree()
}

/// `⟨pt⟩`, `⟨h², h²⟩` and `⟨pt, pt⟩` of `X_d` read off `I^X`:
/// `⟨ψ^k T⟩ = [z^{−k−2}] ∫_T I`, the divisor equation and the
/// reconstruction `d⟨pt,pt⟩ = 8⟨ψ²pt⟩ − 2⟨pt⟩² − (1/d)⟨h²,h²⟩⟨pt⟩`.
pub fn gw_x_closed(d: TransitionCase) -> Result<GwX> {
    let dd = degree(d);
    let order = 2;
    let table = ix_table(d, order as u64)?;
    let pt = Series::from_fn(Var::Q, order, |m| table[m].coeff(0, -2));
    let h2h2 = Series::from_fn(Var::Q, order, |m| {
        int(2 * dd) * table[m].coeff(0, -2) + int(dd) * table[m].coeff(1, -3)
    });
    let psi2 = Series::from_fn(Var::Q, order, |m| table[m].coeff(0, -4));
    let ptpt = reconstruct_ptpt(dd, &psi2, &pt, &h2h2);
    Ok(GwX { pt, h2h2, ptpt })
}

fn reconstruct_ptpt(
    dd: i64,
    psi2: &Series<Rational>,
    pt: &Series<Rational>,
    h2h2: &Series<Rational>,
) -> Series<Rational> {
    let inv_d = int(1) / int(dd);
    let body = &(&psi2.scale(&int(8)) - &(pt * pt).scale(&int(2))) - &(h2h2 * pt).scale(&inv_d);
    body.scale(&inv_d)
}

/// `I^Y_{mℓ+nγ}` for `m ≤ order` and fixed `n`.
fn iy_row(d: TransitionCase, n: u64, order: usize) -> Result<Vec<CohomClass>> {
    let table = ix_table(d, order as u64)?;
    table
        .iter()
        .enumerate()
        .map(|(m, ix)| iy_from_x(ix, m as u64, n))
        .collect()
}

/// The five generating functions of `Y_d` to order `n` in `P^ℓ`.
///
/// `⟨pt⟩` and `⟨H², H²⟩` are read off `I^Y_{mℓ+γ}`; `⟨pt, pt⟩` follows from
/// the reconstruction with `⟨ψ²pt⟩` read off `I^Y_{mℓ+2γ}`, and the
/// remaining two come from `f` and `u`.
pub fn gw_y_closed(d: TransitionCase, n: usize) -> Result<GwY> {
    let dd = degree(d);
    let row1 = iy_row(d, 1, n)?;
    let row2 = iy_row(d, 2, n)?;
    let pt = Series::from_fn(Var::P, n, |m| row1[m].coeff(0, -2));
    let h2h2 = Series::from_fn(Var::P, n, |m| {
        int(2 * dd) * row1[m].coeff(0, -2) + int(dd) * row1[m].coeff(H_IDX, -3)
    });
    let psi2 = Series::from_fn(Var::P, n, |m| row2[m].coeff(0, -4));

    let f = f_series(d, n)?;
    let u = u_series(d, n)?;
    let f_plus_theta = &f + &f.theta();
    let h2e2 = (&u * &f_plus_theta).scale(&int(-dd));
    let eee = u.try_mul(&f.pow(3)?)?.inv()?.scale(&int(dd));
    let last = (&u * &f_plus_theta).try_div(&f)?;
    let ptpt = &reconstruct_ptpt(dd, &psi2, &pt, &h2h2) + &last.scale(&(int(1) / int(dd)));

    Ok(GwY {
        pt: GammaGradedSeries::single(1, pt),
        h2h2: GammaGradedSeries::single(1, h2h2),
        ptpt: GammaGradedSeries::single(2, ptpt),
        h2e2: GammaGradedSeries::single(1, h2e2),
        eee: GammaGradedSeries::single(0, eee),
    })
}

/// The closed forms `(i)–(v)` of the `Y_d` generating functions with
/// `v = θf/f`, for comparison with [`gw_y_closed`].
pub fn gw_y_formulas(d: TransitionCase, n: usize) -> Result<GwY> {
    let (k, l, mu) = case_constants(d)?;
    let dd = degree(d);
    let f = f_series(d, n)?;
    let u = u_series(d, n)?;
    let v = f.theta().try_div(&f)?;
    let pt = Series::from_ints(Var::P, n, &[1, l]);
    let h2h2 = Series::from_ints(Var::P, n, &[dd, dd * (k - 2 * l)]);
    let poly = Series::new(
        Var::P,
        n,
        vec![int(0), int(l), (int(l * l) - int(mu)) / int(2)],
    );
    let ptpt = (&poly + &(&u * &v)).scale(&(int(1) / int(dd)));
    let h2e2 = (&u * &(&f + &f.theta())).scale(&int(-dd));
    let eee = u.try_mul(&f.pow(3)?)?.inv()?.scale(&int(dd));
    Ok(GwY {
        pt: GammaGradedSeries::single(1, pt),
        h2h2: GammaGradedSeries::single(1, h2h2),
        ptpt: GammaGradedSeries::single(2, ptpt),
        h2e2: GammaGradedSeries::single(1, h2e2),
        eee: GammaGradedSeries::single(0, eee),
    })
}

/// The `γ`-degree-2 part of `⟨pt,pt⟩^Y − φ^*⟨pt,pt⟩^X` written as
/// `A(P) + B(P)·v` with `v = θf/f`; returns the polynomial coefficients of
/// `A` and `B`, lowest degree first.
pub fn ptpt_difference_polynomials(d: TransitionCase) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let dd = degree(d);
    let order = 4;
    let row1 = iy_row(d, 1, order)?;
    let row2 = iy_row(d, 2, order)?;
    let pt = Series::from_fn(Var::P, order, |m| row1[m].coeff(0, -2));
    let h2h2 = Series::from_fn(Var::P, order, |m| {
        int(2 * dd) * row1[m].coeff(0, -2) + int(dd) * row1[m].coeff(H_IDX, -3)
    });
    let psi2 = Series::from_fn(Var::P, order, |m| row2[m].coeff(0, -4));
    let u = u_series(d, order)?;
    let inv_d = int(1) / int(dd);
    let a_y = &reconstruct_ptpt(dd, &psi2, &pt, &h2h2) + &u.scale(&inv_d);
    let x = gw_x_closed(d)?;
    let a = &a_y - &phi_pullback(&x.ptpt, order).get(2);
    let b = u.scale(&inv_d);
    if (3..=order).any(|j| !a.coeff(j).is_zero() || !b.coeff(j).is_zero()) {
        return Err(Error::Verification(
            "difference is not quadratic in P".into(),
        ));
    }
    Ok((
        (0..=2).map(|j| a.coeff(j)).collect(),
        (0..=2).map(|j| b.coeff(j)).collect(),
    ))
}

/// The `Q^{2γ̃}`-coefficient of the difference in `y = P^{−ℓ}`:
/// `P^{−2}(A + B·v)` becomes `a(y) + b(y)·v`; returns `(a, b)` lowest first.
pub fn ptpt_difference_in_y(d: TransitionCase) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let (a, b) = ptpt_difference_polynomials(d)?;
    Ok((a.into_iter().rev().collect(), b.into_iter().rev().collect()))
}

/// Substitutes `v ↦ v_reg(y)` into the `Q^{2γ̃}`-coefficient of the
/// difference.
pub fn regularized_difference(d: TransitionCase, n: usize) -> Result<Series<Rational>> {
    let (_, _, mu) = case_constants(d)?;
    if mu == 0 {
        return Err(Error::Precondition(format!(
            "case {d} has μ = 0; no regularization needed"
        )));
    }
    let (a, b) = ptpt_difference_in_y(d)?;
    let v_reg = f_reg_series(d, n)?.v_reg;
    let a = Series::new(Var::Y, n, a);
    let b = Series::new(Var::Y, n, b);
    Ok(&a + &(&b * &v_reg))
}

/// Checks that the regularized difference lies in `y·Q[[y]]`.
pub fn regularized_limit_check(d: TransitionCase, n: usize) -> Result<bool> {
    let r = regularized_difference(d, n)?;
    if !r.coeff(0).is_zero() {
        return Err(Error::Verification(format!(
            "regularized difference has constant term {}",
            r.coeff(0)
        )));
    }
    Ok(true)
}
