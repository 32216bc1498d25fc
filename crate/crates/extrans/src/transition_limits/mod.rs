//! Limits of the Kähler coordinate `Q^ℓ` at the transition point.
//!
//! Along a path ending at a cusp `r` of the modular curve,
//! `Q_r = −e^{2πir}·exp(∫_{i∞}^{0}(𝓔_d(τ + r) − 1) d(2πiτ))`. The translated
//! extremal function `𝓔_d(τ + r)` is rewritten as a combination of
//! untranslated Eisenstein series by the translation formula, and each
//! period integral is an L-value limit. The result splits into a trivial
//! part, a rational combination of `L'(−1, ψ)`, and a nontrivial part in
//! `πi·Q` whenever the characters involved have order dividing 4.
//!
//! Two independent numerical routes check the closed forms: summing the
//! `q`-series of `log Q` along a vertical path towards the cusp, and, for
//! `d ≤ 4` and `d = 8`, integrating `f_d` along a ray of the `P`-line with
//! `f_d` given by its Euler integral.

mod battery;
mod combo;
mod limit;
mod numeric;
mod remark;

pub use battery::{
    exact_normal_form, same_exact_combo, translation_battery, translation_examples,
    translation_examples_check, ExactCombo, TranslationCase,
};
pub use combo::{
    decompose_extremal, translate_eisenstein, translate_numeric_check, translated_extremal,
    ComboTerm, CuspRep, EisCombo,
};
pub use limit::{
    constant_term_consistency, constant_term_sums, cusp_limit, cusp_value_at_zero,
    lprime_exponential, rational_reconstruct, CuspLimit, ROOT_DENOMINATOR_CAP, ROOT_TOL,
};
pub use numeric::{
    adaptive_gauss_legendre, f_euler_integral, path_image, q_path_limit, q_series_log,
    real_axis_limit, PathRow, QPathLimit, RealAxisLimit, Q_PATH_RESIDUAL_TOL,
};
pub use remark::{
    check_limit, remark_battery, remark_table_check, ExpectedLimit, RemarkItem, RemarkReport,
};
