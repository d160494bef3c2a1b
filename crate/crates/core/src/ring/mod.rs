//! Exact arithmetic in `Z[t, t^-1]` and its fraction field `Q(t)`.
//!
//! Every graded dimension in this crate is one of these two types. Values are
//! immutable and canonical, so `==` is mathematical equality.

mod laurent;
mod ratfunc;
mod upoly;

pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("series expansion leaves the integers")]
    NonIntegralSeries,
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
}

/// `prod_k (1 - t^k)` over the given exponents.
pub fn cyclotomic_product<I: IntoIterator<Item = i64>>(exponents: I) -> LaurentPoly {
    exponents
        .into_iter()
        .fold(LaurentPoly::one(), |acc, k| &acc * &(&LaurentPoly::one() - &LaurentPoly::t_pow(k)))
}
