//! Exact closed forms: the polynomial ring over `ln 2`, `ζ(k)`, `Li_k(1/2)` and
//! the value tables built on it.

mod closed_forms;
mod expr;
mod mzv_table;
mod numeric;
mod tables;

pub use closed_forms::{
    eq8_identity, gen_func_values, le_1n_minus1, le_mn_minus1, li121_closed, li_half, normalize_low, zeta_bar,
    GenFuncValues, LinearRelation,
};
pub use expr::{monomial_basis, Generator, Monomial, SymExpr};
pub use mzv_table::{mzv_table_load, MzvTable};
pub use numeric::sym_to_numeric;
pub use tables::{
    appendix_tables, check_relations, diff_tables, eval_formal_sum, golden_tables, li_half_values, parse_tables,
    solve_weight5, table_basis, weight5_system, AppendixRow, AppendixTable, CellDiff, Column, HalfValues,
    LinearEquation, Weight5System, MAX_TABLE_WEIGHT,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::linalg::LinalgError;
use crate::series::EvalError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("no closed form for Le_{{{m},{n}}}(-1): need m, n >= 1 and m + n odd")]
    ParityError { m: u32, n: u32 },
    #[error("singular linear system")]
    SingularSystem,
    #[error("consistency check failed: {0}")]
    ConsistencyFailure(String),
    #[error("weight {0} is outside the supported range")]
    WeightOutOfRange(u32),
    #[error("bad table data at line {line}: {reason}")]
    BadTable { line: usize, reason: String },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<LinalgError> for SymbolicError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::Singular => SymbolicError::SingularSystem,
            LinalgError::Shape(s) => SymbolicError::ConsistencyFailure(s),
        }
    }
}
