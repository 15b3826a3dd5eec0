//! The function `μ(a_1, …, a_l)` and the alternating sums `ζ(⟨1⟩_l; σ)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{EvalError, Evaluator};
use crate::algebra::{li_transform_terms, Composition, SignedComposition};
use crate::numerics::{Ball, PrecisionContext};

/// Splits `(z, ⟨1⟩_{t_1}, z, ⟨1⟩_{t_2}, …)` into `z` and the composition
/// `(t_l + 1, …, t_1 + 1)`: the first block belongs to the last part.
pub fn mu_blocks(args: &[BigRational]) -> Result<(BigRational, Composition), EvalError> {
    let show = || args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
    let z = args.first().ok_or_else(|| EvalError::BadPattern(String::new()))?.clone();
    if z.is_one() {
        return Err(EvalError::BadPattern(show()));
    }
    let mut blocks = Vec::new();
    for a in args {
        if *a == z {
            blocks.push(1u32);
        } else if a.is_one() {
            *blocks.last_mut().unwrap() += 1;
        } else {
            return Err(EvalError::BadPattern(show()));
        }
    }
    blocks.reverse();
    Ok((z, Composition::new(blocks)?))
}

/// `μ(a) = Σ_{w(p_j) = s_j − 1} Li_{p_1 x1 ⋯ p_l x1}(z)`; `z = −1` goes through the
/// values at `−1`, otherwise `|z| ≤ 1/2` is required.
pub fn mu_eval(args: &[BigRational], ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    let (z, c) = mu_blocks(args)?;
    let minus_one = -BigRational::one();
    if z != minus_one && z.abs() > BigRational::new(BigInt::one(), BigInt::from(2)) {
        return Err(EvalError::OutOfRegime(z.to_string()));
    }
    let mut ev = Evaluator::new(ctx);
    let mut acc = Ball::zero(ctx.eval_bits());
    for (t, _) in li_transform_terms(&c) {
        let v = if z == minus_one { ev.li_at_minus_one(&t)? } else { ev.li(&t, &z)? };
        acc = &acc + &v;
    }
    Ok(acc)
}

/// `ζ(⟨1⟩_l; σ)` with `σ_1 = −1`, through `a_1 = −1`, `a_j = σ_j a_{j−1}`.
pub fn alt_zeta_ones(signs: &[i8], ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    let sc = SignedComposition::ones(signs)?;
    if sc.signs()[0] != -1 {
        return Err(EvalError::BadSigns);
    }
    let mut a = Vec::with_capacity(signs.len());
    let mut prev = -1i64;
    a.push(BigRational::from_integer(BigInt::from(prev)));
    for &s in &signs[1..] {
        prev *= i64::from(s);
        a.push(BigRational::from_integer(BigInt::from(prev)));
    }
    mu_eval(&a, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::numerics::const_ln2;
    use crate::series::li_series;

    fn ctx() -> PrecisionContext {
        PrecisionContext::from_digits(50)
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    #[test]
    fn blocks_reverse_order() {
        let (z, c) = mu_blocks(&[r(-1), r(1), r(1), r(-1)]).unwrap();
        assert_eq!(z, r(-1));
        assert_eq!(c, comp![1, 3]);
        assert!(matches!(mu_blocks(&[r(-1), r(2)]), Err(EvalError::BadPattern(_))));
        assert!(matches!(mu_blocks(&[r(1), r(1)]), Err(EvalError::BadPattern(_))));
        assert!(matches!(mu_blocks(&[]), Err(EvalError::BadPattern(_))));
    }

    #[test]
    fn simple_values() {
        let c = ctx();
        let ln2 = const_ln2(&c);
        assert!(mu_eval(&[r(-1)], &c).unwrap().overlaps(&-&ln2));
        // Li_2(1/2) = −μ(−1, 1)
        let li2 = li_series(&comp![2], &half(), &c).unwrap();
        assert!(mu_eval(&[r(-1), r(1)], &c).unwrap().overlaps(&-li2));
        // μ(⟨−1, 1⟩_2) = Li_{2,2}(1/2)
        let li22 = li_series(&comp![2, 2], &half(), &c).unwrap();
        assert!(mu_eval(&[r(-1), r(1), r(-1), r(1)], &c).unwrap().overlaps(&li22));
    }

    #[test]
    fn mu_at_rational_point_matches_transform() {
        // Li_s(−z/(1−z)) = (−1)^l μ(z, ⟨1⟩_{s_l − 1}, …) at z = −1/2, image 1/3
        let c = ctx();
        let z = BigRational::new((-1).into(), 2.into());
        let v = mu_eval(&[z.clone(), r(1), z.clone()], &c).unwrap();
        let direct = li_series(&comp![1, 2], &BigRational::new(1.into(), 3.into()), &c).unwrap();
        assert!(v.overlaps(&direct));
    }

    #[test]
    fn alternating_ones() {
        let c = ctx();
        assert!(alt_zeta_ones(&[-1], &c).unwrap().overlaps(&-const_ln2(&c)));
        // ζ(⟨1̄⟩_2) = −Li_2(1/2), ζ(⟨1̄⟩_3) = Li_{1,2}(1/2)
        let li2 = li_series(&comp![2], &half(), &c).unwrap();
        assert!(alt_zeta_ones(&[-1, -1], &c).unwrap().overlaps(&-li2));
        let li12 = li_series(&comp![1, 2], &half(), &c).unwrap();
        assert!(alt_zeta_ones(&[-1, -1, -1], &c).unwrap().overlaps(&li12));
        assert_eq!(alt_zeta_ones(&[1, -1], &c), Err(EvalError::BadSigns));
    }
}
