//! ln 2, π, ζ(k) and the alternating values ζ(k̄), memoized per precision.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Ball, NumericError, PrecisionContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Constant {
    Ln2,
    Pi,
    Zeta(u32),
}

type Cache = Mutex<HashMap<(Constant, u32), Ball>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(c: Constant, bits: u32, compute: impl FnOnce(u32) -> Ball) -> Ball {
    if let Some(b) = cache().lock().unwrap_or_else(|e| e.into_inner()).get(&(c, bits)) {
        return b.clone();
    }
    let b = compute(bits);
    cache().lock().unwrap_or_else(|e| e.into_inner()).insert((c, bits), b.clone());
    b
}

fn ulps(n: u64) -> BigUint {
    BigUint::from(n)
}

// Σ_{n≥1} 1/(n 2^n) in q-bit fixed point; tail after N terms ≤ 2·2^{−N}/(N+1).
fn ln2_fixed(bits: u32) -> Ball {
    let q = bits + 16;
    let n_terms = q + 2;
    let one = BigInt::one() << q;
    let mut sum = BigInt::zero();
    for n in 1..=n_terms {
        sum += (&one >> n) / n;
    }
    // every term is truncated by less than one ulp; the tail is below one ulp
    let b = Ball::from_raw(sum, ulps(u64::from(n_terms) + 1), q);
    b.with_prec(bits)
}

// atan(1/k) in q-bit fixed point via the alternating Gregory series.
fn atan_inv(k: u32, q: u32) -> Ball {
    let k2 = BigInt::from(u64::from(k) * u64::from(k));
    let mut power = (BigInt::one() << q) / k;
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        j += 1;
    }
    // power carries < 2 ulp of error, each term < 3; the tail is below 2 ulp
    Ball::from_raw(sum, ulps(3 * j + 4), q)
}

fn pi_fixed(bits: u32) -> Ball {
    let q = bits + 16;
    let a = atan_inv(5, q).mul_int(16);
    let b = atan_inv(239, q).mul_int(4);
    (&a - &b).with_prec(bits)
}

// Borwein's algorithm 2 for η(s): with d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!),
// η(s) = (1/d_n) Σ_{k<n} (−1)^k (d_n − d_k)/(k+1)^s + γ, |γ| ≤ 2/(3+√8)^n ≤ 2^{1−2.5n}.
fn eta_fixed(s: u32, bits: u32) -> Ball {
    let q = bits + 16;
    let n = (q + 2) * 2 / 5 + 2;
    let mut d = Vec::with_capacity(n as usize + 1);
    let mut t = BigInt::one();
    let mut acc = BigInt::one();
    d.push(acc.clone());
    for i in 1..=n {
        let num = BigInt::from(2) * (n + i - 1) * (n - i + 1);
        let den = BigInt::from(i) * (2 * i - 1);
        t *= num;
        debug_assert!(t.is_multiple_of(&den));
        t /= den;
        acc += &t;
        d.push(acc.clone());
    }
    let dn = &d[n as usize];
    let one = BigInt::one() << q;
    let mut sum = BigInt::zero();
    for k in 0..n {
        let num = (dn - &d[k as usize]) * &one;
        let den = dn * num_traits::pow(BigInt::from(k + 1), s as usize);
        let term = num / den;
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    // truncation < 1 ulp per term; the acceleration error is below 2^{1−2.5n} ≤ 1 ulp
    Ball::from_raw(sum, ulps(u64::from(n) + 2), q)
}

fn zeta_fixed(s: u32, bits: u32) -> Ball {
    let q = bits + 8;
    let eta = eta_fixed(s, q);
    // ζ(s) = η(s) · 2^{s−1} / (2^{s−1} − 1)
    let p = BigInt::one() << (s - 1);
    eta.mul_rational(&BigRational::new(p.clone(), p - 1)).with_prec(bits)
}

/// ln 2 with radius at most the context target.
pub fn const_ln2(ctx: &PrecisionContext) -> Ball {
    cached(Constant::Ln2, ctx.eval_bits(), ln2_fixed)
}

/// π via `16 atan(1/5) − 4 atan(1/239)`.
pub fn const_pi(ctx: &PrecisionContext) -> Ball {
    cached(Constant::Pi, ctx.eval_bits(), pi_fixed)
}

/// ζ(k) for `k ≥ 2` from the accelerated alternating series for η(k).
pub fn const_zeta(k: u32, ctx: &PrecisionContext) -> Result<Ball, NumericError> {
    if k < 2 {
        return Err(NumericError::BadExponent(k));
    }
    Ok(cached(Constant::Zeta(k), ctx.eval_bits(), |b| zeta_fixed(k, b)))
}

/// `ζ(k̄) = Σ (−1)^n / n^k`: `−1/2` at `k = 0`, `−ln 2` at `k = 1`, else `−(1 − 2^{1−k}) ζ(k)`.
pub fn const_zeta_bar(k: u32, ctx: &PrecisionContext) -> Ball {
    let bits = ctx.eval_bits();
    match k {
        0 => Ball::from_rational(&BigRational::new(BigInt::from(-1), BigInt::from(2)), bits),
        1 => -const_ln2(ctx),
        _ => {
            let z = const_zeta(k, ctx).expect("k ≥ 2");
            let f = BigRational::one() - BigRational::new(BigInt::one(), BigInt::one() << (k - 1));
            -z.mul_rational(&f)
        }
    }
}
