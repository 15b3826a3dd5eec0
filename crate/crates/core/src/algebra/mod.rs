//! Formal objects: compositions, words, polylogarithm terms and the exact
//! transformations between them.

mod composition;
mod formal_sum;
mod shuffle;
mod term;
mod transforms;
mod word;

use thiserror::Error;

pub use composition::{enumerate_basis, enumerate_weight, Composition};
pub use formal_sum::{FormalSum, TermProduct};
pub use shuffle::{shuffle, shuffle_product, WordSum};
pub use term::{Kind, Point, PolylogTerm, SignedComposition};
pub use transforms::{
    basis_transform_matrix, dual, expand_le, expand_li, holder_at_half, holder_decompose, le_to_li, li_to_le,
    li_transform, li_transform_terms, merge_patterns, transform_matrix, transform_matrix_capped,
    CompositionMatrix, DEFAULT_MATRIX_CAP,
};
pub use word::{decode_word, encode_word, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("composition must have at least one part")]
    EmptyComposition,
    #[error("part {position} is zero")]
    ZeroPart { position: usize },
    #[error("part {position} is not a positive integer: {text:?}")]
    BadPart { position: usize, text: String },
    #[error("letter {position} is {letter:?}, expected '0' or '1'")]
    BadLetter { position: usize, letter: char },
    #[error("word {0:?} does not end in x1")]
    NotDecodable(String),
    #[error("value at 1 diverges for index ({0}) with leading 1")]
    DivergentAtOne(String),
    #[error("sign {position} must be +1 or -1")]
    BadSign { position: usize },
    #[error("weight {weight} exceeds the cap {cap}")]
    CapExceeded { weight: u32, cap: u32 },
    #[error("word {0:?} must start with x0 and end with x1")]
    BadBoundary(String),
    #[error("composition ({0}) is outside the basis")]
    OutsideBasis(String),
}
