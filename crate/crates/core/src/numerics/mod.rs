//! Ball arithmetic, precision contexts and the basic constants.

mod ball;
mod bernoulli;
mod constants;
mod context;

use thiserror::Error;

pub use ball::{format_fixed, format_sci_upper, parse_decimal, Ball};
pub use bernoulli::{bernoulli, binomial, factorial, gosper_check, gosper_sides, zeta_even_pi_ratio};
pub use constants::{const_ln2, const_pi, const_zeta, const_zeta_bar};
pub use context::{PrecisionContext, GUARD_BITS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("zeta({0}) is not available: the exponent must be at least 2")]
    BadExponent(u32),
    #[error("division by a ball that contains zero")]
    DivisionByZero,
    #[error("logarithm of a ball that is not strictly positive")]
    LogOfNonPositive,
    #[error("invalid precision context: {0}")]
    BadContext(String),
    #[error("cannot parse number {0:?}")]
    Parse(String),
}
