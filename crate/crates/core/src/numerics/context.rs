use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::NumericError;

/// Extra bits carried through every internal evaluation.
pub const GUARD_BITS: u32 = 24;

/// Working precision and the absolute error every result must meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    working_bits: u32,
    target_abs_error: BigRational,
}

impl PrecisionContext {
    pub fn new(working_bits: u32, target_abs_error: BigRational) -> Result<Self, NumericError> {
        if working_bits < 64 {
            return Err(NumericError::BadContext(format!("working_bits {working_bits} < 64")));
        }
        if !target_abs_error.is_positive() {
            return Err(NumericError::BadContext("target error must be positive".into()));
        }
        Ok(PrecisionContext { working_bits, target_abs_error })
    }

    /// `bits` of working precision with target `2^{-bits}`.
    pub fn from_bits(bits: u32) -> Self {
        let bits = bits.max(64);
        PrecisionContext { working_bits: bits, target_abs_error: BigRational::new(BigInt::one(), BigInt::one() << bits) }
    }

    /// Target `10^{-digits}`, working precision `⌈digits·log2 10⌉ + 16`.
    pub fn from_digits(digits: u32) -> Self {
        let bits = ((f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 16).max(64);
        let target = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize));
        PrecisionContext { working_bits: bits, target_abs_error: target }
    }

    pub fn working_bits(&self) -> u32 {
        self.working_bits
    }

    pub fn target_abs_error(&self) -> &BigRational {
        &self.target_abs_error
    }

    /// Smallest `b` with `2^{-b} ≤ target`.
    pub fn target_bits(&self) -> u32 {
        let t = &self.target_abs_error;
        let mut b = (t.denom().bits() as i64 - t.numer().bits() as i64).max(0) as u32;
        while BigRational::new(BigInt::one(), BigInt::one() << b) > *t {
            b += 1;
        }
        b
    }

    /// Fixed-point precision used for internal sums.
    pub fn eval_bits(&self) -> u32 {
        self.working_bits.max(self.target_bits() + 1) + GUARD_BITS
    }

    /// Target divided by `2^k`, with `k` more working bits.
    pub fn tightened(&self, k: u32) -> Self {
        PrecisionContext {
            working_bits: self.working_bits + k,
            target_abs_error: &self.target_abs_error / BigRational::from_integer(BigInt::one() << k),
        }
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext::from_digits(50)
    }
}
