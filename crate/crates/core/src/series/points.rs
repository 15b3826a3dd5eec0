//! Values at `1/2`, `−1` and `1` via the argument transformation and the
//! Hölder convolution, with a per-evaluator memo of the series at `1/2`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{li_series, EvalError};
use crate::algebra::{
    encode_word, holder_at_half, le_to_li, li_transform_terms, Composition, FormalSum, Kind, Point, PolylogTerm,
};
use crate::numerics::{Ball, PrecisionContext};

/// Extra target bits for the pieces of a composite evaluation.
const INNER_BITS: u32 = 48;

/// Evaluates terms and formal sums at one precision, caching every
/// `Li_s(z)` series it sums. Each evaluator owns its cache.
#[derive(Debug)]
pub struct Evaluator {
    ctx: PrecisionContext,
    inner: PrecisionContext,
    memo: HashMap<(Composition, BigRational), Ball>,
}

impl Evaluator {
    pub fn new(ctx: &PrecisionContext) -> Self {
        Evaluator { ctx: ctx.clone(), inner: ctx.tightened(INNER_BITS), memo: HashMap::new() }
    }

    pub fn context(&self) -> &PrecisionContext {
        &self.ctx
    }

    fn prec(&self) -> u32 {
        self.inner.eval_bits()
    }

    /// `Li_s(z)` for `|z| ≤ 1/2`, memoized.
    pub fn li(&mut self, c: &Composition, z: &BigRational) -> Result<Ball, EvalError> {
        let key = (c.clone(), z.clone());
        if let Some(b) = self.memo.get(&key) {
            return Ok(b.clone());
        }
        let b = li_series(c, z, &self.inner)?;
        self.memo.insert(key, b.clone());
        Ok(b)
    }

    pub fn li_half(&mut self, c: &Composition) -> Result<Ball, EvalError> {
        self.li(c, &half())
    }

    /// `Li_s(−1)` as `Σ ± Li_t(1/2)` over the transformed compositions.
    pub fn li_at_minus_one(&mut self, c: &Composition) -> Result<Ball, EvalError> {
        let mut acc = Ball::zero(self.prec());
        for (t, sign) in li_transform_terms(c) {
            let v = self.li_half(&t)?;
            acc = if sign > 0 { &acc + &v } else { &acc - &v };
        }
        Ok(acc)
    }

    /// `ζ(s)` for `s_1 ≥ 2` through the Hölder convolution at `1/2`.
    pub fn mzv(&mut self, c: &Composition) -> Result<Ball, EvalError> {
        if !c.is_admissible() {
            return Err(EvalError::Divergent(c.to_string()));
        }
        let sum = holder_at_half(&encode_word(c))?;
        self.sum(&sum)
    }

    /// `Le_s` at `1/2`, `−1` or `1` through the merge expansion.
    pub fn le_at(&mut self, c: &Composition, point: Point) -> Result<Ball, EvalError> {
        let sum = le_to_li(c, point)?;
        self.sum(&sum)
    }

    pub fn term(&mut self, t: &PolylogTerm) -> Result<Ball, EvalError> {
        match (t.kind(), t.point()) {
            (_, Point::SymbolicZ) => Err(EvalError::SymbolicPoint(t.to_string())),
            (Kind::Li, Point::Half) => self.li_half(t.index()),
            (Kind::Li, Point::MinusOne) => self.li_at_minus_one(t.index()),
            (Kind::Li, Point::One) => self.mzv(t.index()),
            (Kind::Le, p) => self.le_at(t.index(), p),
        }
    }

    /// A term with `SymbolicZ` evaluated at the rational `z`.
    pub fn term_at(&mut self, t: &PolylogTerm, z: &BigRational) -> Result<Ball, EvalError> {
        match t.kind() {
            Kind::Li => self.li(t.index(), z),
            Kind::Le => {
                let mut acc = Ball::zero(self.prec());
                for (p, _) in crate::algebra::merge_patterns(t.index()) {
                    acc = &acc + &self.li(&p, z)?;
                }
                Ok(acc)
            }
        }
    }

    /// Numeric value of a formal sum whose terms all carry numeric points.
    pub fn sum(&mut self, s: &FormalSum) -> Result<Ball, EvalError> {
        let prec = self.prec();
        let mut acc = Ball::zero(prec);
        for (product, coeff) in s.iter() {
            let mut v = Ball::from_int(1, prec);
            for t in product.terms() {
                v = &v * &self.term(t)?;
            }
            acc = &acc + &v.mul_rational(coeff);
        }
        Ok(acc)
    }

    /// Formal sum in `SymbolicZ` terms evaluated at a rational `z`.
    pub fn sum_at(&mut self, s: &FormalSum, z: &BigRational) -> Result<Ball, EvalError> {
        let prec = self.prec();
        let mut acc = Ball::zero(prec);
        for (product, coeff) in s.iter() {
            let mut v = Ball::from_int(1, prec);
            for t in product.terms() {
                let x = if t.point() == Point::SymbolicZ { self.term_at(t, z)? } else { self.term(t)? };
                v = &v * &x;
            }
            acc = &acc + &v.mul_rational(coeff);
        }
        Ok(acc)
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// `Li_s(−1)` for any composition, via `z ↦ −z/(1−z)` at `z = 1/2`.
pub fn li_at_minus_one(c: &Composition, ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    Evaluator::new(ctx).li_at_minus_one(c)
}

/// `Le_s(1/2)` or `Le_s(−1)` (or `ζ*`-type values at `1`).
pub fn le_at(c: &Composition, point: Point, ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    Evaluator::new(ctx).le_at(c, point)
}

/// Convergent multiple zeta value `ζ(s)`, `s_1 ≥ 2`.
pub fn mzv_eval(c: &Composition, ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    Evaluator::new(ctx).mzv(c)
}
