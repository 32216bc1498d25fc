//! Exact and numeric toolkit for the local mirror models of Type II
//! extremal transitions.
//!
//! The crate covers the mirror maps `f_d`, `g_d`, `Q(P)` of the local
//! models, the I-functions of `X_d` and `Y_d` with Picard–Fuchs checks, the
//! Gromov–Witten generating functions of the local models, Hauptmoduln and
//! Eisenstein series, Dirichlet L-values, and the limits of the Kähler
//! coordinate at cusps.
//!
//! ```
//! use extrans::catalog::{case_constants, TransitionCase};
//! use extrans::local_model::mirror_q;
//! use extrans::qseries::int;
//!
//! assert_eq!(case_constants(TransitionCase::D3).unwrap(), (27, 6, 0));
//! let q = mirror_q(TransitionCase::D3, 4).unwrap();
//! assert_eq!(q.coeff(2), int(-6));
//! assert_eq!(q.coeff(3), int(63));
//! ```

pub mod catalog;
pub mod dirichlet;
pub mod error;
pub mod gw;
pub mod local_model;
pub mod modular;
pub mod qseries;
pub mod transition_limits;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/mirror_maps.md")]
    mod mirror_maps {}
    #[doc = include_str!("../../../book/src/i_functions.md")]
    mod i_functions {}
    #[doc = include_str!("../../../book/src/modular.md")]
    mod modular {}
    #[doc = include_str!("../../../book/src/l_values.md")]
    mod l_values {}
    #[doc = include_str!("../../../book/src/cusp_limits.md")]
    mod cusp_limits {}
}
