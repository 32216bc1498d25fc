//! `q`-expansions of Eisenstein series, theta series and eta quotients, the
//! Hauptmoduln `P_d(q)`, and the modular identities they satisfy with the
//! mirror-map functions.

mod eisenstein;
mod hauptmodul;
mod identities;
mod qexp;

pub use eisenstein::{
    eis_coefficients_numeric, eis_constant_term, eis_eval, eis_general, eis_general_numeric,
    EisensteinParams,
};
pub(crate) use eisenstein::{horner, terms_needed};
pub use hauptmodul::{
    canonical_p_of_q, hauptmodul_eta_spec, hauptmodul_eval, hauptmodul_p, six_level_hauptmoduln,
};
pub use identities::{
    combo_expansion, e2_combination_check, extremal_eisenstein_combo, identity_suite,
    six_level_relation, theta_object, IdentityReport,
};
pub use qexp::{
    classic_eisenstein, eta_quotient, euler_product, f5, scale_q, theta3, theta4, theta_series,
    ClassicEisenstein, EtaQuotientSpec, QExpansion, ThetaKind,
};
