//! Rational functions `N(X, T) / ∏ (1 - X^a T)` with `N` an integer Laurent
//! polynomial in `X` and a polynomial in `T`.
//!
//! Every value is kept in reduced form: no denominator factor divides the
//! numerator. Since the factors are pairwise non-associate irreducibles and
//! the denominator has constant term 1, the reduced form is unique and derived
//! equality is equality of functions.

mod display;
mod hadamard;
mod laurent;
mod rational;
mod tpoly;
mod univariate;

pub use laurent::{rational_pow, LaurentPoly};
pub use rational::BivariateRational;
pub use tpoly::TPoly;
pub use univariate::UnivariateRational;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BivError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is not a product of factors (1 - X^a*T) times a unit monomial")]
    NonFactorDenominator,
    #[error("evaluation at X = 0")]
    ZeroX,
    #[error("evaluation at a pole")]
    Pole,
}
