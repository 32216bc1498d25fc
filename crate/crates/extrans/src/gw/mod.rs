//! Cohomology rings of the local models, I-function coefficients with
//! Picard–Fuchs checks, and the closed-form Gromov–Witten generating
//! functions.
//!
//! Classes carry finite Laurent polynomials in `z`. All ring elements met
//! here are a monomial in `z` plus a nilpotent part, so division is exact.

mod closed;
mod ifunc;
mod ring;

pub use closed::{
    gw_x_closed, gw_y_closed, gw_y_formulas, phi_pullback, ptpt_difference_in_y,
    ptpt_difference_polynomials, regularized_difference, regularized_limit_check,
    GammaGradedSeries, GwX, GwY,
};
pub use ifunc::{
    ix_coeff, ix_product, ix_table, iy_coeff, iy_from_x, pf_verify, ICoeff, PfReport, PF_CAP,
};
pub use ring::{
    pochhammer, pochhammer_reciprocal, CohomClass, CohomClassX, CohomClassY, RingKind, ZLaurent,
    E_IDX, H_IDX,
};
