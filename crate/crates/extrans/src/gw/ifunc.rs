use super::ring::{pochhammer, pochhammer_reciprocal, CohomClass, RingKind};
use crate::catalog::{case_constants, TransitionCase};
use crate::error::{Error, Result};
use crate::qseries::{int, rat};

/// Largest degree accepted by [`pf_verify`].
pub const PF_CAP: u64 = 24;

/// A coefficient of an I-function at the curve class `mℓ + nγ`
/// (`n = None` for `X`, where the class is `mγ̄`).
#[derive(Clone, Debug, PartialEq)]
pub struct ICoeff {
    pub m: u64,
    pub n: Option<u64>,
    pub value: CohomClass,
}

/// `κD² + κzD + λz²` for a class `D`.
fn quadratic_factor(d: &CohomClass, k: i64, l: i64) -> CohomClass {
    let kind = d.kind();
    d.mul(d)
        .scale(&int(k))
        .add(&d.shift(1).scale(&int(k)))
        .add(&CohomClass::z_power(kind, 2, int(l)))
}

/// `I^{X}_{0..=m}` by the recursion
/// `(h+(j+1)z)⁴ I_{j+1} = (κ(h+jz)² + κz(h+jz) + λz²) I_j + μ I_{j−1}`.
pub fn ix_table(d: TransitionCase, m: u64) -> Result<Vec<CohomClass>> {
    let (k, l, mu) = case_constants(d)?;
    let h = CohomClass::h();
    let mut out = vec![CohomClass::one(RingKind::X)];
    for j in 0..m {
        let hj = h.plus_z(&int(j as i64));
        let mut rhs = quadratic_factor(&hj, k, l).mul(&out[j as usize]);
        if j >= 1 && mu != 0 {
            rhs = rhs.add(&out[j as usize - 1].scale(&int(mu)));
        }
        let lead = h.plus_z(&int(j as i64 + 1)).pow(4);
        out.push(rhs.div(&lead)?);
    }
    Ok(out)
}

/// `I^{X_d}_{mγ̄}`; `z_depth` drops terms below `z^{−z_depth}`.
pub fn ix_coeff(d: TransitionCase, m: u64, z_depth: Option<i64>) -> Result<ICoeff> {
    let mut value = ix_table(d, m)?.pop().expect("table has m+1 entries");
    if let Some(depth) = z_depth {
        value = value.truncate(depth);
    }
    Ok(ICoeff { m, n: None, value })
}

/// The explicit product formula for `I^{X_d}_{mγ̄}`, `d ∈ {1, 2, 3, 4, 8}`.
pub fn ix_product(d: TransitionCase, m: u64) -> Result<CohomClass> {
    use TransitionCase::*;
    let h = CohomClass::h();
    let ph = |c: i64, n: u64| pochhammer(&h.scale(&int(c)), n);
    match d {
        D1 | D2 | D3 => {
            let (nd, alphas): (i64, [i64; 4]) = match d {
                D1 => (6, [3, 2, 1, 1]),
                D2 => (4, [2, 1, 1, 1]),
                _ => (3, [1, 1, 1, 1]),
            };
            let mut den = ph(1, m);
            for a in alphas {
                den = den.mul(&ph(a, a as u64 * m));
            }
            ph(nd, nd as u64 * m).div(&den)
        }
        D4 => ph(2, 2 * m).pow(2).div(&ph(1, m).pow(6)),
        D8 => {
            if m % 2 == 1 {
                return Ok(CohomClass::zero(RingKind::X));
            }
            let half = pochhammer(&h.scale(&rat(1, 2)), m / 2);
            CohomClass::one(RingKind::X).div(&half.pow(4))
        }
        _ => Err(Error::Unsupported(format!(
            "no product formula for case {d}"
        ))),
    }
}

/// `I^{Y}_{mℓ+nγ} = π^*i^* I^X_{mγ̄} · (F)^{\overline m} / ((E)^{\overline{n−m}} (H)^{\overline n})`.
pub fn iy_from_x(ix: &CohomClass, m: u64, n: u64) -> Result<CohomClass> {
    let f = CohomClass::f();
    let base = ix.pullback_to_y()?.mul(&pochhammer(&f, m));
    let e_part = pochhammer_reciprocal(&CohomClass::e(), n as i64 - m as i64)?;
    let h_part = pochhammer_reciprocal(&CohomClass::big_h(), n as i64)?;
    Ok(base.mul(&e_part).mul(&h_part))
}

/// `I^{Y_d}_{mℓ+nγ}`; `z_depth` drops terms below `z^{−z_depth}`.
pub fn iy_coeff(d: TransitionCase, m: u64, n: u64, z_depth: Option<i64>) -> Result<ICoeff> {
    let ix = ix_table(d, m)?.pop().expect("table has m+1 entries");
    let mut value = iy_from_x(&ix, m, n)?;
    if let Some(depth) = z_depth {
        value = value.truncate(depth);
    }
    Ok(ICoeff {
        m,
        n: Some(n),
        value,
    })
}

/// Summary of a Picard–Fuchs verification.
#[derive(Clone, Debug, PartialEq)]
pub struct PfReport {
    pub d: TransitionCase,
    pub order: u64,
    /// Number of `□_γ̄` residuals checked on `X`.
    pub x_checked: usize,
    /// Number of product-formula comparisons on `X`.
    pub x_product_checked: usize,
    /// Number of `□_γ` and `□_ℓ` residuals checked on `Y`.
    pub y_checked: usize,
}

/// `□_γ̄` residual at degree `m`.
fn box_gamma_bar(table: &[CohomClass], m: usize, k: i64, l: i64, mu: i64) -> CohomClass {
    let h = CohomClass::h();
    let mut r = h.plus_z(&int(m as i64)).pow(4).mul(&table[m]);
    if m >= 1 {
        let hm = h.plus_z(&int(m as i64 - 1));
        r = r.sub(&quadratic_factor(&hm, k, l).mul(&table[m - 1]));
    }
    if m >= 2 {
        r = r.sub(&table[m - 2].scale(&int(mu)));
    }
    r
}

/// Applies `□_γ̄` to `I^X` and `□_γ`, `□_ℓ` to `I^Y` up to degree `order`,
/// with the quantizations `ĥ = h + mz`, `Ê = E + (n−m)z`, `Ĥ = H + nz`,
/// `F̂ = F + mz` on the class `mℓ + nγ`.
pub fn pf_verify(d: TransitionCase, order: u64) -> Result<PfReport> {
    if order > PF_CAP {
        return Err(Error::Precondition(format!(
            "order {order} exceeds cap {PF_CAP}"
        )));
    }
    let (k, l, mu) = case_constants(d)?;
    let table = ix_table(d, order)?;
    let mut report = PfReport {
        d,
        order,
        x_checked: 0,
        x_product_checked: 0,
        y_checked: 0,
    };
    for m in 0..=order as usize {
        let r = box_gamma_bar(&table, m, k, l, mu);
        if m >= 1 && !r.is_zero() {
            return Err(Error::Verification(format!(
                "□_γ̄ residual nonzero at m = {m}: {r}"
            )));
        }
        report.x_checked += 1;
        if let Ok(p) = ix_product(d, m as u64) {
            if p != table[m] {
                return Err(Error::Verification(format!(
                    "product formula differs from recursion at m = {m}"
                )));
            }
            report.x_product_checked += 1;
        }
    }

    let n_max = order as usize;
    let mut iy = vec![vec![CohomClass::zero(RingKind::Y); n_max + 1]; n_max + 1];
    for (m, row) in iy.iter_mut().enumerate() {
        for (n, slot) in row.iter_mut().enumerate() {
            *slot = iy_from_x(&table[m], m as u64, n as u64)?;
        }
    }
    let get = |m: i64, n: i64| -> CohomClass {
        if m < 0 || n < 0 {
            CohomClass::zero(RingKind::Y)
        } else {
            iy[m as usize][n as usize].clone()
        }
    };
    let e = CohomClass::e();
    let hh = CohomClass::big_h();
    let f = CohomClass::f();
    for m in 0..=n_max as i64 {
        for n in 0..=n_max as i64 {
            if (m, n) == (0, 0) {
                continue;
            }
            let box_gamma = e
                .plus_z(&int(n - m))
                .mul(&hh.plus_z(&int(n)))
                .mul(&get(m, n))
                .sub(&get(m, n - 1));
            if !box_gamma.is_zero() {
                return Err(Error::Verification(format!(
                    "□_γ residual nonzero at (m, n) = ({m}, {n}): {box_gamma}"
                )));
            }
            let fm1 = f.plus_z(&int(m - 1));
            let mut box_ell = f.plus_z(&int(m)).pow(3).mul(&get(m, n));
            box_ell = box_ell.sub(
                &quadratic_factor(&fm1, k, l)
                    .mul(&e.plus_z(&int(n - m + 1)))
                    .mul(&get(m - 1, n)),
            );
            let mu_term = fm1
                .mul(&e.plus_z(&int(n - m + 2)))
                .mul(&e.plus_z(&int(n - m + 1)))
                .mul(&get(m - 2, n))
                .scale(&int(mu));
            box_ell = box_ell.sub(&mu_term);
            if !box_ell.is_zero() {
                return Err(Error::Verification(format!(
                    "□_ℓ residual nonzero at (m, n) = ({m}, {n}): {box_ell}"
                )));
            }
            report.y_checked += 2;
        }
    }
    Ok(report)
}
