//! Integer relation search and the experiments built on it.

mod experiments;
mod pslq;

pub use experiments::{
    conjecture_check, denominators_within, exact_basis_expansion, expansion_config, expansion_digits, pure_zeta_le_half,
    span_equivalence_check, verify_basis_expansion, verify_basis_expansion_capped, weight6_constants,
    weight6_experiment, BasisExpansion, Weight6Report, DEFAULT_EXPANSION_CAP,
};
pub use pslq::{normalize_relation, pslq, relation_i64, PslqConfig, RelationResult, RelationStatus};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::series::EvalError;
use crate::symbolic::SymbolicError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("need at least 2 inputs, got {0}")]
    TooFewInputs(usize),
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
