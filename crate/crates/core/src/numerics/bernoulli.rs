//! Bernoulli numbers, factorials and the Gosper identity.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

static BERNOULLI: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `B_n` with `B_1 = −1/2`, from `Σ_{j=0}^{n} C(n+1, j) B_j = 0`.
pub fn bernoulli(n: u32) -> BigRational {
    let mut cache = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if cache.is_empty() {
        cache.push(BigRational::one());
    }
    while cache.len() <= n as usize {
        let m = cache.len() as u32;
        let mut s = BigRational::zero();
        for (j, b) in cache.iter().enumerate() {
            if !b.is_zero() {
                s += b * BigRational::from_integer(binomial(m + 1, j as u32));
            }
        }
        cache.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    cache[n as usize].clone()
}

/// `ζ(2q) / π^{2q} = (−1)^{q+1} 2^{2q−1} B_{2q} / (2q)!`.
pub fn zeta_even_pi_ratio(q: u32) -> BigRational {
    assert!(q >= 1, "ζ(0) is not an even zeta value");
    let sign = if q % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let num = sign * (BigInt::one() << (2 * q - 1));
    BigRational::from_integer(num) * bernoulli(2 * q) / BigRational::from_integer(factorial(2 * q))
}

fn one_minus_two_pow(p: u32) -> BigRational {
    // 1 − 2^{1−p}
    let one = BigRational::one();
    if p == 0 {
        one - BigRational::from_integer(2.into())
    } else {
        &one - BigRational::new(BigInt::one(), BigInt::one() << (p - 1))
    }
}

/// Both sides of `Σ_{p=0}^{r} (1−2^{1−p})(1−2^{1−(r−p)}) B_p B_{r−p}/(p!(r−p)!) = −(r−1) B_r / r!`.
pub fn gosper_sides(r: u32) -> (BigRational, BigRational) {
    let mut lhs = BigRational::zero();
    for p in 0..=r {
        let bp = bernoulli(p);
        let bq = bernoulli(r - p);
        if bp.is_zero() || bq.is_zero() {
            continue;
        }
        let den = BigRational::from_integer(factorial(p) * factorial(r - p));
        lhs += one_minus_two_pow(p) * one_minus_two_pow(r - p) * bp * bq / den;
    }
    let rhs = -BigRational::from_integer(BigInt::from(i64::from(r) - 1)) * bernoulli(r)
        / BigRational::from_integer(factorial(r));
    (lhs, rhs)
}

pub fn gosper_check(r: u32) -> bool {
    let (l, r) = gosper_sides(r);
    l == r
}
