//! Dirichlet characters, Gauss sums, generalized Bernoulli numbers and the
//! special L-values that enter period integrals.
//!
//! Character values are stored as root-of-unity exponents. Arithmetic is
//! exact in `Q(i)` when the order divides 4 and double precision otherwise.

pub mod arith;
mod bernoulli;
mod character;
mod lvalues;

pub use bernoulli::{bernoulli, l_value_negative, BernoulliValue, ExactOrNumeric};
pub use character::{
    chi_3_2, chi_4_2, chi_5_2, chi_5_3, enumerate_characters, DirichletCharacter, MODULUS_CAP,
};
pub use lvalues::{
    gauss_sum, i_limit, l_one_odd, l_one_partial_sums, l_prime_minus1, l_prime_minus1_imprimitive,
    l_two, l_value_positive, GaussSum, GaussSumExact, LExact, LLimit, LOne, LimitKind,
};
