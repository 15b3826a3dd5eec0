//! Numeric values of symbolic expressions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::expr::{Generator, SymExpr};
use crate::algebra::Composition;
use crate::numerics::{const_ln2, const_zeta, Ball, PrecisionContext};
use crate::series::{li_series, EvalError};

/// Extra target bits for generator values, absorbing coefficient growth.
const GENERATOR_BITS: u32 = 32;

/// Substitutes ball values for `ln 2`, `ζ(k)` and `Li_k(1/2)`.
pub fn sym_to_numeric(e: &SymExpr, ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    let inner = ctx.tightened(GENERATOR_BITS);
    let prec = inner.eval_bits();
    let mut cache: HashMap<Generator, Ball> = HashMap::new();
    let mut acc = Ball::zero(prec);
    for (m, c) in e.iter() {
        let mut term = Ball::from_int(1, prec);
        for g in m.generators() {
            if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(g) {
                let v = match g {
                    Generator::Ln2 => const_ln2(&inner),
                    Generator::Zeta(k) => const_zeta(k, &inner)?,
                    Generator::LiHalf(k) => {
                        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
                        li_series(&Composition::new(vec![k])?, &half, &inner)?
                    }
                };
                e.insert(v);
            }
            term = &term * &cache[&g];
        }
        acc = &acc + &term.mul_rational(c);
    }
    Ok(acc)
}
