//! Certified evaluation of Li, Le, μ, alternating sums and MZVs.

mod mu;
mod nested;
mod points;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::numerics::NumericError;

pub use mu::{alt_zeta_ones, mu_blocks, mu_eval};
pub use nested::{le_series, li_series, truncation_point};
pub use points::{le_at, li_at_minus_one, mzv_eval, Evaluator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("argument {0} is outside the direct summation regime |z| <= 1/2")]
    OutOfRegime(String),
    #[error("argument list does not have the form (z, 1, ..., z, 1, ...): {0}")]
    BadPattern(String),
    #[error("the first sign must be -1")]
    BadSigns,
    #[error("zeta({0}) diverges")]
    Divergent(String),
    #[error("term {0} has no numeric point")]
    SymbolicPoint(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
