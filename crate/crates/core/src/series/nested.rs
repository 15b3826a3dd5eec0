//! Nested-sum dynamic programme for `Li_s(z)` and `Le_s(z)` with `|z| ≤ 1/2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::EvalError;
use crate::algebra::{Composition, Kind};
use crate::numerics::{Ball, PrecisionContext};

/// Bound on `Σ_{n>N} n^{l−1}|z|^n`, or `None` while the ratio test fails.
fn tail_bound(l: usize, az: &BigRational, n: u64) -> Option<BigRational> {
    let e = (l - 1) as u32;
    let n1 = BigInt::from(n + 1);
    let n2 = BigInt::from(n + 2);
    let rho = BigRational::new(num_traits::pow(n2, e as usize), num_traits::pow(n1.clone(), e as usize)) * az;
    if rho >= BigRational::one() {
        return None;
    }
    let a = BigRational::from_integer(num_traits::pow(n1, e as usize)) * num_traits::pow(az.clone(), (n + 1) as usize);
    Some(a / (BigRational::one() - rho))
}

/// Smallest `N` found by a geometric search with tail bound at most `target`,
/// together with that bound.
pub fn truncation_point(l: usize, z: &BigRational, target: &BigRational) -> (u64, BigRational) {
    let az = z.abs();
    let lz = -num_traits::ToPrimitive::to_f64(&az).unwrap().log2();
    let lt = -(target.denom().bits() as f64 - target.numer().bits() as f64);
    // first guess from (l−1) log2 N − N log2(1/|z|) ≤ log2 target
    let mut n = ((-lt) / lz).ceil().max(4.0) as u64;
    for _ in 0..64 {
        let guess = ((-lt + (l as f64 - 1.0) * (n as f64).log2()) / lz).ceil() as u64;
        if guess <= n {
            break;
        }
        n = guess;
    }
    loop {
        if let Some(t) = tail_bound(l, &az, n) {
            if t <= *target {
                return (n, t);
            }
        }
        n += n / 16 + 1;
    }
}

fn check_regime(z: &BigRational) -> Result<(), EvalError> {
    if z.abs() > BigRational::new(BigInt::one(), BigInt::from(2)) {
        return Err(EvalError::OutOfRegime(z.to_string()));
    }
    Ok(())
}

fn nested_sum(kind: Kind, c: &Composition, z: &BigRational, ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    check_regime(z)?;
    if z.is_zero() {
        return Ok(Ball::zero(ctx.eval_bits()));
    }
    let s = c.parts();
    let l = s.len();
    let half_target = ctx.target_abs_error() / BigRational::from_integer(BigInt::from(2));
    let (n_max, tail) = truncation_point(l, z, &half_target);
    let q = ctx.eval_bits() + (64 - (n_max * l as u64).leading_zeros()) + 4;

    // inner[j] is the partial nested sum over (s_j, ..., s_{l−1}), j ≥ 1
    let mut inner: Vec<Ball> = vec![Ball::zero(q); l + 1];
    inner[l] = Ball::from_int(1, q);
    let mut zpow = Ball::from_int(1, q);
    let mut acc = Ball::zero(q);
    for n in 1..=n_max {
        zpow = zpow.mul_rational(z);
        let nb = BigInt::from(n);
        match kind {
            Kind::Li => {
                let term = (&zpow * &inner[1.min(l)]).div_int(num_traits::pow(nb.clone(), s[0] as usize));
                acc = &acc + &term;
                for j in 1..l {
                    let add = inner[j + 1].div_int(num_traits::pow(nb.clone(), s[j] as usize));
                    inner[j] = &inner[j] + &add;
                }
            }
            Kind::Le => {
                for j in (1..l).rev() {
                    let add = inner[j + 1].div_int(num_traits::pow(nb.clone(), s[j] as usize));
                    inner[j] = &inner[j] + &add;
                }
                let term = (&zpow * &inner[1.min(l)]).div_int(num_traits::pow(nb, s[0] as usize));
                acc = &acc + &term;
            }
        }
    }
    Ok(acc.widen(&tail).with_prec(ctx.eval_bits()))
}

/// `Li_s(z) = Σ_{n_1 > ⋯ > n_l ≥ 1} z^{n_1} / (n_1^{s_1} ⋯ n_l^{s_l})` for `|z| ≤ 1/2`.
pub fn li_series(c: &Composition, z: &BigRational, ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    nested_sum(Kind::Li, c, z, ctx)
}

/// `Le_s(z)`, the same sum with `n_1 ≥ ⋯ ≥ n_l ≥ 1`.
pub fn le_series(c: &Composition, z: &BigRational, ctx: &PrecisionContext) -> Result<Ball, EvalError> {
    nested_sum(Kind::Le, c, z, ctx)
}
