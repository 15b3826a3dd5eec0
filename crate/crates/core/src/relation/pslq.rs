//! Integer relation detection (PSLQ) on ball inputs.
//!
//! Fixed-point implementation: reals are `BigInt`s scaled by `2^prec`, the
//! transformation matrices `A` and `B = A^{-1}` are kept as exact integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::RelationError;
use crate::numerics::Ball;

#[derive(Clone, Debug, PartialEq)]
pub struct PslqConfig {
    /// Must exceed `2/√3`.
    pub gamma: f64,
    pub max_iterations: usize,
    /// A reduced entry below this (relative to the input norm) signals a relation.
    /// `None` picks `2^{-bits/2}` from the input precision.
    pub detection_threshold: Option<BigRational>,
    /// Largest admissible `|coefficient|`.
    pub coefficient_bound: u64,
}

impl Default for PslqConfig {
    fn default() -> Self {
        PslqConfig {
            gamma: 2.0 / 3f64.sqrt() + 1e-9,
            max_iterations: 100_000,
            detection_threshold: None,
            coefficient_bound: 1_000_000,
        }
    }
}

impl PslqConfig {
    pub fn with_bound(bound: u64) -> Self {
        PslqConfig { coefficient_bound: bound, ..PslqConfig::default() }
    }

    /// Input bits needed for this bound and input count.
    pub fn required_bits(&self, n: usize) -> u32 {
        let v = (self.coefficient_bound as f64) * (n as f64);
        4 * v.log2().ceil().max(1.0) as u32
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationStatus {
    Found(Vec<BigInt>),
    NoneWithinBound,
    PrecisionExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationResult {
    pub status: RelationStatus,
    /// `Σ m_i x_i` for the returned (or best candidate) vector.
    pub residual: Ball,
    /// Input precision in bits (relative to the input norm).
    pub bits: u32,
    pub iterations: usize,
}

impl RelationResult {
    pub fn relation(&self) -> Option<&[BigInt]> {
        match &self.status {
            RelationStatus::Found(v) => Some(v),
            _ => None,
        }
    }

    pub fn status_name(&self) -> &'static str {
        match self.status {
            RelationStatus::Found(_) => "Found",
            RelationStatus::NoneWithinBound => "NoneWithinBound",
            RelationStatus::PrecisionExhausted => "PrecisionExhausted",
        }
    }

    /// `{"status", "vector", "residual", "digits"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let vector: Vec<String> = self.relation().map(|v| v.iter().map(|x| x.to_string()).collect()).unwrap_or_default();
        serde_json::json!({
            "status": self.status_name(),
            "vector": vector,
            "residual": self.residual,
            "digits": (f64::from(self.bits) * std::f64::consts::LN_2 / std::f64::consts::LN_10).floor() as u32,
        })
    }
}

/// Divides by the gcd and makes the first non-zero entry positive.
pub fn normalize_relation(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if neg {
            *x = -&*x;
        }
    }
}

fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}

fn round_shift(x: &BigInt, prec: u32) -> BigInt {
    (x + pow2(prec - 1)) >> prec
}

fn log2_floor(x: &BigRational) -> i64 {
    let n = x.numer().abs();
    let d = x.denom();
    let e = n.bits() as i64 - d.bits() as i64;
    // 2^e is within a factor 2 of n/d
    if e >= 0 {
        if n >= (d << e as u32) {
            e
        } else {
            e - 1
        }
    } else if (n.clone() << (-e) as u32) >= *d {
        e
    } else {
        e - 1
    }
}

fn residual_of(xs: &[Ball], v: &[BigInt], prec: u32) -> Ball {
    xs.iter().zip(v).fold(Ball::zero(prec), |acc, (x, m)| &acc + &x.mul_int(m.clone()))
}

/// Relative precision of the inputs: `log2 |x| − log2 max rad`.
fn input_bits(xs: &[Ball]) -> u32 {
    let norm2: BigRational = xs.iter().map(|x| x.mid() * x.mid()).sum();
    let norm_log = log2_floor(&norm2) / 2;
    xs.iter()
        .map(|x| {
            let rad_log = x.rad_log2().unwrap_or(-i64::from(x.prec()));
            (norm_log - rad_log).max(0)
        })
        .min()
        .unwrap_or(0) as u32
}

/// Runs PSLQ on the midpoints, then certifies the outcome against the radii.
pub fn pslq(xs: &[Ball], cfg: &PslqConfig) -> Result<RelationResult, RelationError> {
    let n = xs.len();
    if n < 2 {
        return Err(RelationError::TooFewInputs(n));
    }
    if cfg.gamma.is_nan() || cfg.gamma <= 2.0 / 3f64.sqrt() {
        return Err(RelationError::BadConfig(format!("gamma {} must exceed 2/sqrt(3)", cfg.gamma)));
    }
    if cfg.coefficient_bound == 0 {
        return Err(RelationError::BadConfig("coefficient bound must be positive".into()));
    }
    if let Some(t) = &cfg.detection_threshold {
        if !t.is_positive() || t >= &BigRational::one() {
            return Err(RelationError::BadConfig(format!("threshold {t} must lie in (0, 1)")));
        }
    }
    let eval_prec = xs.iter().map(Ball::prec).max().unwrap_or(64);
    // an exact zero is its own relation
    if let Some(i) = xs.iter().position(|x| x.is_exact() && x.contains_zero()) {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        return Ok(RelationResult {
            residual: residual_of(xs, &v, eval_prec),
            status: RelationStatus::Found(v),
            bits: eval_prec,
            iterations: 0,
        });
    }
    let bits = input_bits(xs);
    let exhausted = |residual: Ball, iterations: usize| RelationResult {
        status: RelationStatus::PrecisionExhausted,
        residual,
        bits,
        iterations,
    };
    if xs.iter().any(Ball::contains_zero) || bits < cfg.required_bits(n) {
        return Ok(exhausted(Ball::zero(eval_prec), 0));
    }
    let threshold = cfg
        .detection_threshold
        .clone()
        .unwrap_or_else(|| BigRational::new(BigInt::one(), pow2(bits / 2)));
    let prec = bits + 32;
    let tol = (threshold.numer() << prec) / threshold.denom();
    let bound = BigInt::from(cfg.coefficient_bound);

    // fixed-point inputs scaled to unit norm
    let norm2: BigRational = xs.iter().map(|x| x.mid() * x.mid()).sum();
    let scale = BigRational::new(pow2(2 * prec), BigInt::one()) / norm2;
    let scale_root = (scale.to_integer()).sqrt();
    // threshold relative to the input norm |x| = 2^prec / scale_root
    let abs_threshold = &threshold * BigRational::new(pow2(prec), scale_root.clone());
    let x: Vec<BigInt> = xs
        .iter()
        .map(|b| {
            let v = b.mid() * BigRational::from_integer(scale_root.clone());
            v.round().to_integer()
        })
        .collect();

    let g = {
        let gq = BigRational::from_f64(cfg.gamma).expect("finite gamma");
        (gq * BigRational::from_integer(pow2(prec))).to_integer()
    };
    let mut a: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect()).collect();
    let mut b = a.clone();
    let mut h = vec![vec![BigInt::zero(); n - 1]; n];

    // partial norms s_k = sqrt(Σ_{j≥k} x_j^2)
    let mut s = vec![BigInt::zero(); n];
    for k in 0..n {
        let t: BigInt = x[k..].iter().map(|v| (v * v) >> prec).sum();
        s[k] = (t << prec).sqrt();
    }
    let s0 = s[0].clone();
    let mut y: Vec<BigInt> = x.iter().map(|v| (v << prec).div_floor(&s0)).collect();
    for v in s.iter_mut() {
        *v = (&*v << prec).div_floor(&s0);
    }
    for i in 0..n {
        if i < n - 1 {
            h[i][i] = if s[i].is_zero() { BigInt::zero() } else { (&s[i + 1] << prec).div_floor(&s[i]) };
        }
        for j in 0..i.min(n - 1) {
            let sjj1 = &s[j] * &s[j + 1];
            h[i][j] = if sjj1.is_zero() { BigInt::zero() } else { ((-&y[i] * &y[j]) << prec).div_floor(&sjj1) };
        }
    }
    let reduce = |i: usize, j: usize, h: &mut Vec<Vec<BigInt>>, y: &mut Vec<BigInt>, a: &mut Vec<Vec<BigInt>>, b: &mut Vec<Vec<BigInt>>| -> bool {
        if h[j][j].is_zero() {
            return false;
        }
        let t = round_shift(&(&h[i][j] << prec).div_floor(&h[j][j]), prec);
        if t.is_zero() {
            return true;
        }
        y[j] = &y[j] + &t * &y[i];
        for k in 0..=j {
            h[i][k] = &h[i][k] - &t * &h[j][k];
        }
        for k in 0..n {
            a[i][k] = &a[i][k] - &t * &a[j][k];
            b[k][j] = &b[k][j] + &t * &b[k][i];
        }
        true
    };
    for i in 1..n {
        for j in (0..i.min(n - 1)).rev() {
            reduce(i, j, &mut h, &mut y, &mut a, &mut b);
        }
    }

    let sqrt_n = BigInt::from((n as f64).sqrt().ceil() as u64);
    let best_residual = |y: &[BigInt], b: &[Vec<BigInt>]| {
        let i = (0..n).min_by_key(|&i| y[i].abs()).unwrap_or(0);
        let col: Vec<BigInt> = (0..n).map(|j| b[j][i].clone()).collect();
        residual_of(xs, &col, eval_prec)
    };
    for iter in 1..=cfg.max_iterations {
        // exchange at the row maximizing γ^i |H_ii|
        let mut m = 0;
        let mut best = BigInt::zero();
        let mut gi = BigInt::one() << prec;
        for i in 0..n - 1 {
            gi = (&gi * &g) >> prec;
            let sz = (&gi * h[i][i].abs()) >> prec;
            if sz > best {
                best = sz;
                m = i;
            }
        }
        y.swap(m, m + 1);
        h.swap(m, m + 1);
        a.swap(m, m + 1);
        for row in b.iter_mut() {
            row.swap(m, m + 1);
        }
        if m + 2 < n {
            let t0 = ((&h[m][m] * &h[m][m] + &h[m][m + 1] * &h[m][m + 1]) >> prec << prec).sqrt();
            if t0.is_zero() {
                return Ok(exhausted(best_residual(&y, &b), iter));
            }
            let t1 = (&h[m][m] << prec).div_floor(&t0);
            let t2 = (&h[m][m + 1] << prec).div_floor(&t0);
            for row in h.iter_mut().skip(m) {
                let (t3, t4) = (row[m].clone(), row[m + 1].clone());
                row[m] = (&t1 * &t3 + &t2 * &t4) >> prec;
                row[m + 1] = (-&t2 * &t3 + &t1 * &t4) >> prec;
            }
        }
        for i in m + 1..n {
            for j in (0..(i.min(m + 2)).min(n - 1)).rev() {
                if !reduce(i, j, &mut h, &mut y, &mut a, &mut b) {
                    return Ok(exhausted(best_residual(&y, &b), iter));
                }
            }
        }

        // a tiny entry of y marks a candidate relation (a column of B)
        for i in 0..n {
            if y[i].abs() < tol {
                let mut v: Vec<BigInt> = (0..n).map(|j| b[j][i].clone()).collect();
                normalize_relation(&mut v);
                let residual = residual_of(xs, &v, eval_prec);
                let fits = v.iter().all(|c| c.abs() <= bound);
                let certified = residual.mid().abs() < &abs_threshold + residual.rad();
                if fits && certified {
                    return Ok(RelationResult { status: RelationStatus::Found(v), residual, bits, iterations: iter });
                }
                return Ok(exhausted(residual, iter));
            }
        }

        // every relation has Euclidean norm ≥ 1 / max |H_jj|
        let hmax = (0..n - 1).map(|j| h[j][j].abs()).max().unwrap_or_default();
        if hmax.is_zero() || (&hmax * &bound * &sqrt_n) < pow2(prec) {
            return Ok(RelationResult {
                status: RelationStatus::NoneWithinBound,
                residual: best_residual(&y, &b),
                bits,
                iterations: iter,
            });
        }
        // coefficients so large that the midpoints no longer determine y
        let bmax = b.iter().flatten().map(|v| v.abs()).max().unwrap_or_default();
        if bmax.bits() + (n as u64).ilog2() as u64 + 2 > u64::from(bits - bits / 2) {
            return Ok(exhausted(best_residual(&y, &b), iter));
        }
    }
    Ok(exhausted(best_residual(&y, &b), cfg.max_iterations))
}

/// Convenience for small tests: the relation vector as `i64`s.
pub fn relation_i64(r: &RelationResult) -> Option<Vec<i64>> {
    r.relation().map(|v| v.iter().map(|x| x.to_i64().expect("small coefficient")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::numerics::{const_ln2, const_pi, const_zeta, PrecisionContext};
    use crate::series::{le_series, li_series};

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    #[test]
    fn exact_ratio() {
        let xs = [Ball::from_int(1, 200), Ball::from_int(2, 200)];
        let r = pslq(&xs, &PslqConfig::default()).unwrap();
        assert_eq!(relation_i64(&r), Some(vec![2, -1]));
    }

    #[test]
    fn li2_half_relation() {
        let ctx = PrecisionContext::from_digits(150);
        let li2 = li_series(&comp![2], &half(), &ctx).unwrap();
        let z2 = const_zeta(2, &ctx).unwrap();
        let l2 = const_ln2(&ctx).sqr();
        let r = pslq(&[li2, z2, l2], &PslqConfig::default()).unwrap();
        assert_eq!(relation_i64(&r), Some(vec![2, -1, 1]));
        assert!(r.residual.rad_le(&BigRational::new(1.into(), pow2(400))));
    }

    #[test]
    fn le21_relation() {
        let ctx = PrecisionContext::from_digits(150);
        let le21 = le_series(&comp![2, 1], &half(), &ctx).unwrap();
        let z3 = const_zeta(3, &ctx).unwrap();
        let z2l = &const_zeta(2, &ctx).unwrap() * &const_ln2(&ctx);
        let r = pslq(&[le21, z3, z2l], &PslqConfig::default()).unwrap();
        assert_eq!(relation_i64(&r), Some(vec![2, -2, 1]));
    }

    #[test]
    fn no_small_relation_between_pi_and_ln2() {
        let ctx = PrecisionContext::from_digits(60);
        let xs = [Ball::from_int(1, 250), const_pi(&ctx), const_ln2(&ctx), const_zeta(3, &ctx).unwrap()];
        let r = pslq(&xs, &PslqConfig::with_bound(1000)).unwrap();
        assert_eq!(r.status, RelationStatus::NoneWithinBound);
    }

    #[test]
    fn scaling_leaves_relation_unchanged() {
        let ctx = PrecisionContext::from_digits(80);
        let xs = [const_zeta(2, &ctx).unwrap(), const_pi(&ctx).sqr()];
        let r1 = pslq(&xs, &PslqConfig::default()).unwrap();
        let k = BigRational::new(7.into(), 3.into());
        let scaled: Vec<Ball> = xs.iter().map(|x| x.mul_rational(&k)).collect();
        let r2 = pslq(&scaled, &PslqConfig::default()).unwrap();
        assert_eq!(relation_i64(&r1), Some(vec![6, -1]));
        assert_eq!(r1.status, r2.status);
        let again = pslq(&xs, &PslqConfig::default()).unwrap();
        assert_eq!(again, r1);
    }

    #[test]
    fn bad_inputs() {
        let one = Ball::from_int(1, 100);
        assert_eq!(pslq(std::slice::from_ref(&one), &PslqConfig::default()), Err(RelationError::TooFewInputs(1)));
        let cfg = PslqConfig { gamma: 1.0, ..PslqConfig::default() };
        assert!(matches!(pslq(&[one.clone(), one.clone()], &cfg), Err(RelationError::BadConfig(_))));
        let fuzzy_zero = Ball::from_raw(BigInt::zero(), 5u32.into(), 100);
        let r = pslq(&[one.clone(), fuzzy_zero], &PslqConfig::default()).unwrap();
        assert_eq!(r.status, RelationStatus::PrecisionExhausted);
        let r = pslq(&[one, Ball::zero(100)], &PslqConfig::default()).unwrap();
        assert_eq!(relation_i64(&r), Some(vec![0, 1]));
    }

    #[test]
    fn normalization() {
        let mut v: Vec<BigInt> = [0, -4, 6, 2].iter().map(|&x| BigInt::from(x)).collect();
        normalize_relation(&mut v);
        assert_eq!(v, [0, 2, -3, -1].iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
    }
}
