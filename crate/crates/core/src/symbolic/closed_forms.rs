//! Closed forms at `1/2` and `−1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::expr::{Generator, SymExpr};
use super::SymbolicError;
use crate::algebra::Composition;
use crate::numerics::binomial;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn sign(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Li_k(1/2)` for `1 ≤ k ≤ 3` in terms of `ln 2` and zeta values.
pub fn normalize_low(k: u32) -> SymExpr {
    let ln = SymExpr::ln2();
    match k {
        1 => ln,
        2 => SymExpr::zeta(2).scale(&q(1, 2)).sub(&ln.pow(2).scale(&q(1, 2))),
        3 => SymExpr::zeta(3)
            .scale(&q(7, 8))
            .sub(&SymExpr::zeta(2).mul(&ln).scale(&q(1, 2)))
            .add(&ln.pow(3).scale(&q(1, 6))),
        _ => panic!("normalize_low expects 1 ≤ k ≤ 3, got {k}"),
    }
}

/// `Li_k(1/2)`: the reduced form for `k ≤ 3`, the generator otherwise.
pub fn li_half(k: u32) -> SymExpr {
    if k <= 3 {
        normalize_low(k)
    } else {
        SymExpr::gen(Generator::LiHalf(k))
    }
}

/// `ζ(k̄) = Σ (−1)^n / n^k`, with `ζ(0̄) = −1/2` and `ζ(1̄) = −ln 2`.
pub fn zeta_bar(k: u32) -> SymExpr {
    match k {
        0 => SymExpr::constant(q(-1, 2)),
        1 => SymExpr::ln2().neg(),
        _ => {
            let two = BigInt::from(2).pow(k - 1);
            let c = -(BigRational::one() - BigRational::new(BigInt::one(), two));
            SymExpr::zeta(k).scale(&c)
        }
    }
}

/// `Li_{⟨1⟩_m, 2, ⟨1⟩_n}(1/2)`.
pub fn li121_closed(m: u32, n: u32) -> SymExpr {
    let mut out = SymExpr::zero();
    for k in 0..=m {
        let c = int(binomial(n + 1 + k, n + 1) * sign(k));
        out = out.add(&SymExpr::zeta(n + 2 + k).mul(&SymExpr::ln_pow_over_factorial(m - k)).scale(&c));
    }
    for k in 0..=n + 1 {
        let c = int(binomial(m + k, m) * sign(m + 1));
        out = out.add(&li_half(m + 1 + k).mul(&SymExpr::ln_pow_over_factorial(n + 1 - k)).scale(&c));
    }
    out
}

/// `Li_lhs(1/2) = Σ coeff_i · Li_{rhs_i}(1/2)` with symbolic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRelation {
    pub lhs: Composition,
    pub rhs: Vec<(SymExpr, Composition)>,
}

impl LinearRelation {
    /// Both sides after substituting values for the `Li` terms.
    pub fn evaluate<F>(&self, mut value: F) -> (SymExpr, SymExpr)
    where
        F: FnMut(&Composition) -> SymExpr,
    {
        let lhs = value(&self.lhs);
        let rhs = self.rhs.iter().fold(SymExpr::zero(), |acc, (c, t)| acc.add(&c.mul(&value(t))));
        (lhs, rhs)
    }
}

fn ones_two_ones(m: u32, n: u32) -> Composition {
    Composition::ones_two_ones(m as usize, n as usize)
}

/// The two re-expansions of `Li_{⟨1⟩_m,2,⟨1⟩_n}(1/2)`: over `Li_{2,⟨1⟩_{n+k}}(1/2)`
/// and over `Li_{⟨1⟩_{m+k},2}(1/2)`.
pub fn eq8_identity(m: u32, n: u32) -> [LinearRelation; 2] {
    let lhs = ones_two_ones(m, n);
    let first = (0..=m)
        .map(|k| {
            let c = int(binomial(n + 1 + k, n + 1) * sign(k));
            (SymExpr::ln_pow_over_factorial(m - k).scale(&c), ones_two_ones(0, n + k))
        })
        .collect();
    let second = (0..=n)
        .map(|k| {
            let c = BigRational::new(binomial(m + k, m) * sign(k), BigInt::from(n + 1));
            (SymExpr::ln_pow_over_factorial(n - k).scale(&c), ones_two_ones(m + k, 0))
        })
        .collect();
    [LinearRelation { lhs: lhs.clone(), rhs: first }, LinearRelation { lhs, rhs: second }]
}

/// Values of `Li_{⟨2⟩_m}(1/2)` and `Li_{1,⟨2⟩_m}(1/2)` for `m = 0..=m_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFuncValues {
    /// `Li_{⟨2⟩_m}(1/2)`; index 0 is the empty product 1.
    pub twos: Vec<SymExpr>,
    /// `Li_{1,⟨2⟩_m}(1/2)`.
    pub one_twos: Vec<SymExpr>,
}

/// Power-series expansion of `exp(Σ_k (−1)^{k−1} Li_k((−1)^k) z^k / k)`.
pub fn gen_func_values(m_max: u32) -> GenFuncValues {
    let n_max = (2 * m_max + 1) as usize;
    // f_k = (−1)^{k−1} L_k / k with L_1 = −ln2, L_{2j} = ζ(2j), L_{odd} = ζ(k̄)
    let f: Vec<SymExpr> = (0..=n_max as u32)
        .map(|k| match k {
            0 => SymExpr::zero(),
            _ => {
                let l = if k % 2 == 0 { SymExpr::zeta(k) } else { zeta_bar(k) };
                l.scale(&q(-sign(k), i64::from(k)))
            }
        })
        .collect();
    // g_0 = 1, n g_n = Σ_{k=1}^n k f_k g_{n−k}
    let mut g = vec![SymExpr::int(1)];
    for n in 1..=n_max {
        let mut acc = SymExpr::zero();
        for k in 1..=n {
            acc = acc.add(&f[k].mul(&g[n - k]).scale_int(k as i64));
        }
        g.push(acc.scale(&q(1, n as i64)));
    }
    let twos = (0..=m_max).map(|m| g[2 * m as usize].scale_int(sign(m))).collect();
    let one_twos = (0..=m_max).map(|m| g[2 * m as usize + 1].scale_int(sign(m + 1))).collect();
    GenFuncValues { twos, one_twos }
}

/// `Le_{m,n}(−1)` for `m + n` odd.
pub fn le_mn_minus1(m: u32, n: u32) -> Result<SymExpr, SymbolicError> {
    if m == 0 || n == 0 || (m + n).is_multiple_of(2) {
        return Err(SymbolicError::ParityError { m, n });
    }
    let sn = sign(n);
    let mut two_le = zeta_bar(m + n);
    // (1 − (−1)^n) ζ(n) ζ(m̄); for n = 1 it cancels the i = 0 term below
    if n % 2 == 1 && n > 1 {
        two_le = two_le.add(&SymExpr::zeta(n).mul(&zeta_bar(m)).scale_int(2));
    }
    for j in (n % 2..=n).step_by(2) {
        let k = (n - j) / 2;
        let c = binomial(m + j - 1, m - 1) * 2 * sn;
        two_le = two_le.add(&zeta_bar(m + j).mul(&zeta_bar(2 * k)).scale(&int(c)));
    }
    for i in (m % 2..=m).step_by(2) {
        if n == 1 && i == 0 {
            continue;
        }
        let k = (m - i) / 2;
        let c = binomial(n + i - 1, n - 1) * 2 * sn;
        two_le = two_le.add(&SymExpr::zeta(n + i).mul(&zeta_bar(2 * k)).scale(&int(c)));
    }
    Ok(two_le.scale(&q(1, 2)))
}

/// `Le_{1,n}(−1)`.
pub fn le_1n_minus1(n: u32) -> SymExpr {
    assert!(n >= 1, "le_1n_minus1 expects n ≥ 1");
    let mut two_le = SymExpr::zeta(n + 1).scale_int(-i64::from(n));
    for k in 1..=n {
        two_le = two_le.add(&zeta_bar(k).mul(&zeta_bar(n - k + 1)));
    }
    two_le.scale(&q(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::symbolic::expr::monomial_basis;

    fn v(e: &SymExpr) -> Vec<BigRational> {
        e.coords(&monomial_basis(e.weight().unwrap())).unwrap()
    }

    fn r(s: &[(i64, i64)]) -> Vec<BigRational> {
        s.iter().map(|&(n, d)| q(n, d)).collect()
    }

    #[test]
    fn low_forms() {
        assert_eq!(v(&normalize_low(1)), r(&[(1, 1)]));
        assert_eq!(v(&normalize_low(2)), r(&[(1, 2), (-1, 2)]));
        assert_eq!(v(&normalize_low(3)), r(&[(7, 8), (-1, 2), (1, 6)]));
    }

    #[test]
    fn li121_examples() {
        assert_eq!(li121_closed(0, 0), normalize_low(2));
        assert_eq!(v(&li121_closed(1, 0)), r(&[(-1, 4), (1, 2), (-1, 6)]));
        assert_eq!(v(&li121_closed(0, 1)), r(&[(1, 8), (0, 1), (-1, 6)]));
        assert_eq!(v(&li121_closed(0, 2)), r(&[(1, 1), (-7, 8), (1, 4), (-1, 12), (-1, 1)]));
    }

    #[test]
    fn eq8_reexpansions() {
        for total in 0..=4u32 {
            for m in 0..=total {
                let n = total - m;
                for rel in eq8_identity(m, n) {
                    let (lhs, rhs) = rel.evaluate(|c| {
                        let parts = c.parts();
                        let pos = parts.iter().position(|&p| p == 2).unwrap() as u32;
                        li121_closed(pos, parts.len() as u32 - pos - 1)
                    });
                    assert_eq!(lhs, rhs, "m={m} n={n}");
                    assert_eq!(lhs.weight(), Some(m + n + 2));
                }
            }
        }
        let [a, _] = eq8_identity(0, 3);
        assert_eq!(a.rhs.len(), 1);
        assert_eq!(a.rhs[0].1, comp![2, 1, 1, 1]);
    }

    #[test]
    fn generating_function() {
        let g = gen_func_values(2);
        assert_eq!(g.twos[0], SymExpr::int(1));
        assert_eq!(g.one_twos[0], SymExpr::ln2());
        assert_eq!(g.twos[1], normalize_low(2));
        assert_eq!(g.one_twos[1], li121_closed(1, 0));
        assert_eq!(v(&g.twos[2]), r(&[(1, 16), (1, 4), (-1, 4), (1, 24), (0, 1)]));
        assert_eq!(g.one_twos[2].weight(), Some(5));
        assert_eq!(
            v(&g.one_twos[2]),
            r(&[(3, 16), (-1, 8), (1, 16), (1, 8), (-1, 12), (1, 120), (0, 1), (0, 1)])
        );
    }

    #[test]
    fn le_at_minus_one() {
        assert_eq!(v(&le_mn_minus1(2, 1).unwrap()), r(&[(-5, 8), (0, 1), (0, 1)]));
        assert_eq!(v(&le_mn_minus1(1, 2).unwrap()), r(&[(-1, 1), (1, 2), (0, 1)]));
        let le32 = le_mn_minus1(3, 2).unwrap();
        assert_eq!(v(&le32), r(&[(11, 32), (-5, 8), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]));
        assert_eq!(le_mn_minus1(2, 2), Err(SymbolicError::ParityError { m: 2, n: 2 }));
        assert_eq!(le_mn_minus1(0, 1), Err(SymbolicError::ParityError { m: 0, n: 1 }));

        assert_eq!(v(&le_1n_minus1(1)), r(&[(-1, 2), (1, 2)]));
        assert_eq!(v(&le_1n_minus1(3)), r(&[(-19, 16), (3, 4), (0, 1), (0, 1), (0, 1)]));
        for n in [2, 4, 6] {
            assert_eq!(le_1n_minus1(n), le_mn_minus1(1, n).unwrap());
        }
    }
}
