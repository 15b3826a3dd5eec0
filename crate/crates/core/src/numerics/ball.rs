//! Midpoint-radius balls over binary fixed point.
//!
//! A ball at precision `p` holds integers `mid` and `rad` and stands for the
//! interval `[(mid − rad)/2^p, (mid + rad)/2^p]`. Every operation rounds the
//! midpoint to nearest and pushes the rounding error into the radius.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::NumericError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    mid: BigInt,
    rad: BigUint,
    prec: u32,
}

/// `round(n / 2^s)` to nearest, with an inexact flag.
fn round_shift(n: &BigInt, s: u32) -> (BigInt, bool) {
    if s == 0 {
        return (n.clone(), false);
    }
    let half = BigInt::one() << (s - 1);
    let q = (n + &half) >> s;
    let inexact = n.magnitude().trailing_zeros().is_some_and(|tz| tz < u64::from(s));
    (q, inexact)
}

fn ceil_shift(n: &BigUint, s: u32) -> BigUint {
    if s == 0 || n.is_zero() {
        return n.clone();
    }
    let q = n >> s;
    if (&q << s) == *n {
        q
    } else {
        q + 1u32
    }
}

/// `round(n / d)` to nearest for `d > 0`, with an inexact flag.
fn round_div(n: &BigInt, d: &BigInt) -> (BigInt, bool) {
    let (q, r) = n.div_mod_floor(d);
    let inexact = !r.is_zero();
    if (&r << 1u32) >= *d {
        (q + 1, inexact)
    } else {
        (q, inexact)
    }
}

fn ceil_div(n: &BigUint, d: &BigUint) -> BigUint {
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

fn pow2(p: u32) -> BigInt {
    BigInt::one() << p
}

impl Ball {
    pub fn zero(prec: u32) -> Ball {
        Ball { mid: BigInt::zero(), rad: BigUint::zero(), prec }
    }

    /// Builds a ball from raw fixed-point parts.
    pub fn from_raw(mid: BigInt, rad: BigUint, prec: u32) -> Ball {
        Ball { mid, rad, prec }
    }

    pub fn from_int<T: Into<BigInt>>(n: T, prec: u32) -> Ball {
        Ball { mid: n.into() << prec, rad: BigUint::zero(), prec }
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Ball {
        let (mid, inexact) = round_div(&(r.numer() << prec), r.denom());
        Ball { mid, rad: BigUint::from(u32::from(inexact)), prec }
    }

    /// Parses `[-]digits[.digits][e[+-]digits]` exactly, then rounds to `prec`.
    pub fn from_decimal(text: &str, prec: u32) -> Result<Ball, NumericError> {
        Ok(Ball::from_rational(&parse_decimal(text)?, prec))
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mid_raw(&self) -> &BigInt {
        &self.mid
    }

    pub fn rad_raw(&self) -> &BigUint {
        &self.rad
    }

    pub fn mid(&self) -> BigRational {
        BigRational::new(self.mid.clone(), pow2(self.prec))
    }

    pub fn rad(&self) -> BigRational {
        BigRational::new(BigInt::from(self.rad.clone()), pow2(self.prec))
    }

    pub fn lower(&self) -> BigRational {
        self.mid() - self.rad()
    }

    pub fn upper(&self) -> BigRational {
        self.mid() + self.rad()
    }

    /// Upper bound on `|x|` over the ball.
    pub fn abs_upper(&self) -> BigRational {
        self.mid().abs() + self.rad()
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.magnitude() <= &self.rad
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        (x - self.mid()).abs() <= self.rad()
    }

    pub fn overlaps(&self, other: &Ball) -> bool {
        (self.mid() - other.mid()).abs() <= self.rad() + other.rad()
    }

    /// Radius at most `bound`.
    pub fn rad_le(&self, bound: &BigRational) -> bool {
        self.rad() <= *bound
    }

    /// `log2` of the radius rounded up, or `None` for an exact ball.
    pub fn rad_log2(&self) -> Option<i64> {
        if self.rad.is_zero() {
            None
        } else {
            Some(self.rad.bits() as i64 - i64::from(self.prec))
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        if self.contains_zero() {
            None
        } else {
            Some(self.mid.sign())
        }
    }

    /// Same interval (or a superset) at precision `p`.
    pub fn with_prec(&self, p: u32) -> Ball {
        if p >= self.prec {
            let s = p - self.prec;
            return Ball { mid: &self.mid << s, rad: &self.rad << s, prec: p };
        }
        let s = self.prec - p;
        let (mid, inexact) = round_shift(&self.mid, s);
        let rad = ceil_shift(&self.rad, s) + u32::from(inexact);
        Ball { mid, rad, prec: p }
    }

    /// Adds `e ≥ 0` to the radius.
    pub fn widen(&self, e: &BigRational) -> Ball {
        let scaled = (e.abs() * BigRational::from_integer(pow2(self.prec))).ceil().to_integer();
        Ball { mid: self.mid.clone(), rad: &self.rad + scaled.magnitude(), prec: self.prec }
    }

    /// Smallest ball at this precision containing both inputs.
    pub fn hull(&self, other: &Ball) -> Ball {
        let p = self.prec.max(other.prec);
        let (a, b) = (self.with_prec(p), other.with_prec(p));
        let lo = (&a.mid - BigInt::from(a.rad.clone())).min(&b.mid - BigInt::from(b.rad.clone()));
        let hi = (&a.mid + BigInt::from(a.rad.clone())).max(&b.mid + BigInt::from(b.rad.clone()));
        let sum = &lo + &hi;
        let mid = sum.div_floor(&BigInt::from(2));
        let rad = (&hi - &mid).max(&mid - &lo);
        Ball { mid, rad: rad.magnitude().clone(), prec: p }
    }

    fn aligned(&self, other: &Ball) -> (Ball, Ball) {
        let p = self.prec.max(other.prec);
        (self.with_prec(p), other.with_prec(p))
    }

    pub fn mul_int<T: Into<BigInt>>(&self, k: T) -> Ball {
        let k: BigInt = k.into();
        Ball { mid: &self.mid * &k, rad: &self.rad * k.magnitude(), prec: self.prec }
    }

    /// Division by a non-zero integer.
    pub fn div_int<T: Into<BigInt>>(&self, k: T) -> Ball {
        let k: BigInt = k.into();
        assert!(!k.is_zero(), "division of a ball by the integer 0");
        let (mut mid, inexact) = round_div(&self.mid, &k.abs());
        if k.is_negative() {
            mid = -mid;
        }
        let rad = ceil_div(&self.rad, k.magnitude()) + u32::from(inexact);
        Ball { mid, rad, prec: self.prec }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Ball {
        self.mul_int(q.numer().clone()).div_int(q.denom().clone())
    }

    pub fn mul_pow2(&self, e: i32) -> Ball {
        if e >= 0 {
            self.mul_int(pow2(e as u32))
        } else {
            self.div_int(pow2(e.unsigned_abs()))
        }
    }

    pub fn sqr(&self) -> Ball {
        self * self
    }

    pub fn pow(&self, n: u32) -> Ball {
        let mut result = Ball::from_int(1, self.prec);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        result
    }

    /// Fails when the divisor ball contains zero.
    pub fn div(&self, other: &Ball) -> Result<Ball, NumericError> {
        let (a, b) = self.aligned(other);
        if b.contains_zero() {
            return Err(NumericError::DivisionByZero);
        }
        let p = a.prec;
        let (mid, _) = round_div(&((&a.mid << p) * b.mid.signum()), &b.mid.abs());
        // |x/y − ma/mb| ≤ (ra|mb| + |ma|rb) / ((|mb| − rb)|mb|)
        let mb = b.mid.magnitude();
        let num = (&a.rad * mb + a.mid.magnitude() * &b.rad) << p;
        let den = (mb - &b.rad) * mb;
        let rad = ceil_div(&num, &den) + 1u32;
        Ok(Ball { mid, rad, prec: p })
    }

    pub fn recip(&self) -> Result<Ball, NumericError> {
        Ball::from_int(1, self.prec).div(self)
    }

    /// `e^x`, computed at both interval endpoints (exp is monotone).
    pub fn exp(&self) -> Ball {
        let lo = &self.mid - BigInt::from(self.rad.clone());
        let a = exp_point(&lo, self.prec);
        if self.rad.is_zero() {
            return a;
        }
        let hi = &self.mid + BigInt::from(self.rad.clone());
        a.hull(&exp_point(&hi, self.prec))
    }

    /// Natural logarithm; the whole ball must be positive.
    pub fn ln(&self) -> Result<Ball, NumericError> {
        if self.contains_zero() || self.mid.is_negative() {
            return Err(NumericError::LogOfNonPositive);
        }
        let lo = &self.mid - BigInt::from(self.rad.clone());
        let a = ln_point(&lo, self.prec);
        if self.rad.is_zero() {
            return Ok(a);
        }
        let hi = &self.mid + BigInt::from(self.rad.clone());
        Ok(a.hull(&ln_point(&hi, self.prec)))
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.mid();
        r.to_f64().unwrap_or(f64::NAN)
    }

    /// Midpoint rounded to `digits` places after the decimal point.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_fixed(&self.mid(), digits)
    }

    /// Decimal places that carry information at this precision.
    pub fn natural_digits(&self) -> usize {
        ((f64::from(self.prec)) * std::f64::consts::LOG10_2).ceil() as usize + 1
    }
}

/// Exact decimal parse, accepting an optional exponent.
pub fn parse_decimal(text: &str) -> Result<BigRational, NumericError> {
    let t = text.trim();
    let bad = || NumericError::Parse(t.to_string());
    let (body, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match body.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, body.strip_prefix('+').unwrap_or(body)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        BigRational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, scale.unsigned_abs() as usize))
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

/// `r` rounded to nearest with `digits` places after the point.
pub fn format_fixed(r: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let (q, _) = round_div(&(r.numer() * &scale), r.denom());
    let neg = q.is_negative();
    let s = q.magnitude().to_string();
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (i, f) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{i}")
    } else {
        format!("{sign}{i}.{f}")
    }
}

/// Upper bound for a non-negative rational as `d.dde±x` (mantissa rounded up).
pub fn format_sci_upper(r: &BigRational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let r = r.abs();
    let ten = BigRational::from_integer(BigInt::from(10));
    let est = ((r.numer().bits() as f64) - (r.denom().bits() as f64)) * std::f64::consts::LOG10_2;
    let mut e = est.floor() as i64;
    let scaled = |e: i64| -> BigRational {
        if e >= 0 {
            &r / num_traits::pow(ten.clone(), e as usize)
        } else {
            &r * num_traits::pow(ten.clone(), e.unsigned_abs() as usize)
        }
    };
    let mut m = scaled(e);
    while m >= ten {
        e += 1;
        m = scaled(e);
    }
    while m < BigRational::one() {
        e -= 1;
        m = scaled(e);
    }
    let hundred = BigRational::from_integer(BigInt::from(100));
    let mut c = (m * hundred).ceil().to_integer();
    if c >= BigInt::from(1000) {
        c = BigInt::from(100);
        e += 1;
    }
    let s = c.to_string();
    format!("{}.{}e{}", &s[..1], &s[1..], e)
}

// Fixed-point exp at a dyadic point x = m/2^p.
fn exp_point(m: &BigInt, p: u32) -> Ball {
    let x = BigRational::new(m.clone(), pow2(p));
    let xf = x.to_f64().unwrap_or(0.0);
    // halve until |y| ≤ 2^-10
    let mag = m.bits() as i64 - i64::from(p);
    let k = (mag + 10).max(0) as u32;
    let growth = if xf > 0.0 { (xf * std::f64::consts::LOG2_E).ceil() as u32 } else { 0 };
    let q = p + 2 * k + growth + 40;
    // y = m / 2^(p+k) in q-bit fixed point
    let (y, y_inexact) = if q >= p + k {
        (m << (q - p - k), false)
    } else {
        round_shift(m, p + k - q)
    };
    let one = pow2(q);
    let mut sum = one.clone();
    let mut term = one;
    let mut n = 0u32;
    let mut steps = 0u32;
    loop {
        n += 1;
        term = (&term * &y) >> q;
        term = term.div_floor(&BigInt::from(n));
        steps += 1;
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    // each step loses < 2 ulp; the tail after a zero term is below 2 ulp
    let mut rad = BigUint::from(2 * steps + 4);
    if y_inexact {
        rad += 4u32;
    }
    let mut b = Ball { mid: sum, rad, prec: q };
    for _ in 0..k {
        b = b.sqr();
    }
    b.with_prec(p)
}

// ln at a positive dyadic point a = m/2^p: Newton on exp, then a rigorous
// correction from δ = a·e^{−y} − 1, using |ln(1+δ) − δ| ≤ δ² for |δ| ≤ 1/2.
fn ln_point(m: &BigInt, p: u32) -> Ball {
    let q = p + 32;
    let a = Ball::from_int(m.clone(), q).mul_pow2(-(p as i32));
    let guess = (m.bits() as f64 - f64::from(p)) * std::f64::consts::LN_2
        + {
            let shift = m.bits().saturating_sub(53);
            let top = (m >> shift).to_f64().unwrap_or(1.0);
            (top / 2f64.powi((m.bits() - shift) as i32)).ln()
        };
    let mut y = Ball::from_rational(
        &BigRational::from_float(guess).unwrap_or_else(BigRational::zero),
        q,
    );
    for _ in 0..64 {
        let e = (-&y).exp();
        let delta = &(&a * &e) - &Ball::from_int(1, q);
        y = &y + &Ball { mid: delta.mid.clone(), rad: BigUint::zero(), prec: q };
        if delta.mid.magnitude().bits() <= 8 {
            break;
        }
    }
    // final rigorous correction
    let e = (-&y).exp();
    let d = &(&a * &e) - &Ball::from_int(1, q);
    let dmax = d.abs_upper();
    let sq = &dmax * &dmax;
    let ln = &y + &Ball { mid: d.mid.clone(), rad: d.rad.clone(), prec: q };
    ln.widen(&sq).with_prec(p)
}

impl Neg for &Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        Ball { mid: -&self.mid, rad: self.rad.clone(), prec: self.prec }
    }
}

impl Neg for Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        Ball { mid: -self.mid, rad: self.rad, prec: self.prec }
    }
}

impl Add<&Ball> for &Ball {
    type Output = Ball;
    fn add(self, other: &Ball) -> Ball {
        if self.prec == other.prec {
            return Ball { mid: &self.mid + &other.mid, rad: &self.rad + &other.rad, prec: self.prec };
        }
        let (a, b) = self.aligned(other);
        Ball { mid: a.mid + b.mid, rad: a.rad + b.rad, prec: a.prec }
    }
}

impl Sub<&Ball> for &Ball {
    type Output = Ball;
    fn sub(self, other: &Ball) -> Ball {
        self + &(-other)
    }
}

impl Mul<&Ball> for &Ball {
    type Output = Ball;
    fn mul(self, other: &Ball) -> Ball {
        let (a, b);
        let (x, y) = if self.prec == other.prec {
            (self, other)
        } else {
            (a, b) = self.aligned(other);
            (&a, &b)
        };
        let p = x.prec;
        let prod = &x.mid * &y.mid;
        let err = x.mid.magnitude() * &y.rad + y.mid.magnitude() * &x.rad + &x.rad * &y.rad;
        let (mid, inexact) = round_shift(&prod, p);
        let rad = ceil_shift(&err, p) + u32::from(inexact);
        Ball { mid, rad, prec: p }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Ball> for Ball {
            type Output = Ball;
            fn $f(self, other: Ball) -> Ball {
                (&self).$f(&other)
            }
        }
        impl $tr<&Ball> for Ball {
            type Output = Ball;
            fn $f(self, other: &Ball) -> Ball {
                (&self).$f(other)
            }
        }
        impl $tr<Ball> for &Ball {
            type Output = Ball;
            fn $f(self, other: Ball) -> Ball {
                self.$f(&other)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Ball {
    pub fn sum<'a, I: IntoIterator<Item = &'a Ball>>(items: I, prec: u32) -> Ball {
        items.into_iter().fold(Ball::zero(prec), |acc, b| &acc + b)
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| self.natural_digits().min(60));
        write!(f, "{} +/- {}", self.to_decimal(digits), format_sci_upper(&self.rad()))
    }
}

#[derive(Serialize, Deserialize)]
struct BallJson {
    mid: String,
    rad: String,
    bits: u32,
}

impl Ball {
    /// Decimal midpoint and an upward-rounded radius that also covers the
    /// decimal rounding of the midpoint.
    fn to_json_parts(&self) -> BallJson {
        let digits = self.natural_digits();
        let half_ulp = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits) * 2);
        let rad = if self.is_exact() && self.mid().is_integer() { BigRational::zero() } else { self.rad() + half_ulp };
        BallJson { mid: self.to_decimal(digits), rad: format_sci_upper(&rad), bits: self.prec }
    }

    fn from_json_parts(j: BallJson) -> Result<Ball, NumericError> {
        let mid = parse_decimal(&j.mid)?;
        let rad = parse_decimal(&j.rad)?;
        if rad.is_negative() {
            return Err(NumericError::Parse(j.rad));
        }
        Ok(Ball::from_rational(&mid, j.bits).widen(&rad))
    }
}

impl Serialize for Ball {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ball {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Ball, D::Error> {
        let j = BallJson::deserialize(d)?;
        Ball::from_json_parts(j).map_err(serde::de::Error::custom)
    }
}
