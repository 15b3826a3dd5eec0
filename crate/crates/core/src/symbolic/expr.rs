//! Weight-graded polynomials in `ln 2`, `ζ(k)` and `Li_k(1/2)` with rational coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numerics::zeta_even_pi_ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Ln2,
    /// `ζ(k)`, `k ≥ 2`.
    Zeta(u32),
    /// `Li_k(1/2)`, `k ≥ 4`; lower indices reduce to the other generators.
    LiHalf(u32),
}

impl Generator {
    pub fn weight(self) -> u32 {
        match self {
            Generator::Ln2 => 1,
            Generator::Zeta(k) | Generator::LiHalf(k) => k,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Ln2 => f.write_str("ln2"),
            Generator::Zeta(k) => write!(f, "zeta({k})"),
            Generator::LiHalf(k) => write!(f, "Li{k}(1/2)"),
        }
    }
}

/// A product of generators in canonical form.
///
/// Products of even zeta values are folded into one `ζ(2K)` (both are rational
/// multiples of `π^{2K}`), so at most one even index appears.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    ln: u32,
    /// descending
    zetas: Vec<u32>,
    /// descending
    lis: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn ln_pow(k: u32) -> Monomial {
        Monomial { ln: k, ..Monomial::default() }
    }

    /// The monomial of a single generator. Panics on `Zeta(k < 2)` or `LiHalf(k < 4)`.
    pub fn generator(g: Generator) -> Monomial {
        match g {
            Generator::Ln2 => Monomial::ln_pow(1),
            Generator::Zeta(k) => {
                assert!(k >= 2, "zeta({k}) is not a generator");
                Monomial { zetas: vec![k], ..Monomial::default() }
            }
            Generator::LiHalf(k) => {
                assert!(k >= 4, "Li{k}(1/2) is not a generator");
                Monomial { lis: vec![k], ..Monomial::default() }
            }
        }
    }

    pub fn ln_power(&self) -> u32 {
        self.ln
    }

    pub fn zetas(&self) -> &[u32] {
        &self.zetas
    }

    pub fn lis(&self) -> &[u32] {
        &self.lis
    }

    pub fn is_one(&self) -> bool {
        self.ln == 0 && self.zetas.is_empty() && self.lis.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.ln + self.zetas.iter().sum::<u32>() + self.lis.iter().sum::<u32>()
    }

    /// Generators with multiplicity.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> = self.lis.iter().map(|&k| Generator::LiHalf(k)).collect();
        out.extend(self.zetas.iter().map(|&k| Generator::Zeta(k)));
        out.extend(std::iter::repeat_n(Generator::Ln2, self.ln as usize));
        out
    }

    /// Product, returned as `coefficient · monomial` after folding even zeta values.
    pub fn mul(&self, other: &Monomial) -> (BigRational, Monomial) {
        let mut zetas: Vec<u32> = self.zetas.iter().chain(&other.zetas).copied().collect();
        let mut lis: Vec<u32> = self.lis.iter().chain(&other.lis).copied().collect();
        lis.sort_unstable_by(|a, b| b.cmp(a));
        let evens: Vec<u32> = zetas.iter().copied().filter(|k| k % 2 == 0).collect();
        let mut coeff = BigRational::one();
        if evens.len() > 1 {
            zetas.retain(|k| k % 2 == 1);
            let total: u32 = evens.iter().sum();
            // ζ(2a)ζ(2b)⋯ = (r_a r_b ⋯ / r_{a+b+⋯}) ζ(2a+2b+⋯) with ζ(2q) = r_q π^{2q}
            for &e in &evens {
                coeff *= zeta_even_pi_ratio(e / 2);
            }
            coeff /= zeta_even_pi_ratio(total / 2);
            zetas.push(total);
        }
        zetas.sort_unstable_by(|a, b| b.cmp(a));
        (coeff, Monomial { ln: self.ln + other.ln, zetas, lis })
    }
}

impl Ord for Monomial {
    /// Weight first; then monomials without `Li_k(1/2)` by ascending power of
    /// `ln 2` and descending zeta indices; then `Li` monomials by descending
    /// `Li` indices, descending `ln 2` power and descending zeta indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| (!self.lis.is_empty()).cmp(&!other.lis.is_empty()))
            .then_with(|| {
                if self.lis.is_empty() {
                    self.ln.cmp(&other.ln).then_with(|| other.zetas.cmp(&self.zetas))
                } else {
                    other
                        .lis
                        .cmp(&self.lis)
                        .then_with(|| other.ln.cmp(&self.ln))
                        .then_with(|| other.zetas.cmp(&self.zetas))
                }
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut parts = grouped(&self.lis, |k| format!("Li{k}(1/2)"));
        let mut zs = self.zetas.clone();
        zs.sort_unstable();
        parts.extend(grouped(&zs, |k| format!("zeta({k})")));
        match self.ln {
            0 => {}
            1 => parts.push("ln2".into()),
            k => parts.push(format!("ln2^{k}")),
        }
        f.write_str(&parts.join("*"))
    }
}

// Runs of equal indices print as powers: zeta(3)^2.
fn grouped(ks: &[u32], name: impl Fn(u32) -> String) -> Vec<String> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &k in ks {
        match out.last_mut() {
            Some((prev, n)) if *prev == k => *n += 1,
            _ => out.push((k, 1)),
        }
    }
    out.into_iter()
        .map(|(k, n)| if n == 1 { name(k) } else { format!("{}^{n}", name(k)) })
        .collect()
}

/// All canonical monomials of weight `w`, in basis order.
pub fn monomial_basis(w: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    // Li part: descending parts ≥ 4; zeta part: descending parts ≥ 2 with at most one even
    let mut li_parts = Vec::new();
    partitions(w, 4, w, &mut Vec::new(), &mut li_parts);
    li_parts.push(Vec::new());
    for lis in li_parts {
        let rest = w - lis.iter().sum::<u32>();
        let mut zeta_parts = Vec::new();
        partitions(rest, 2, rest, &mut Vec::new(), &mut zeta_parts);
        zeta_parts.push(Vec::new());
        for zetas in zeta_parts {
            if zetas.iter().filter(|k| *k % 2 == 0).count() > 1 {
                continue;
            }
            let ln = rest - zetas.iter().sum::<u32>();
            out.push(Monomial { ln, zetas, lis: lis.clone() });
        }
    }
    out.sort();
    out.dedup();
    out
}

// Non-empty partitions of at most `total` into descending parts in [min, max].
fn partitions(total: u32, min: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    for p in (min..=max.min(total)).rev() {
        current.push(p);
        out.push(current.clone());
        partitions(total - p, min, p, current, out);
        current.pop();
    }
}

/// Map from monomials to non-zero rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymExpr {
    terms: BTreeMap<Monomial, BigRational>,
}

impl SymExpr {
    pub fn zero() -> SymExpr {
        SymExpr::default()
    }

    pub fn constant(c: BigRational) -> SymExpr {
        SymExpr::monomial(Monomial::one(), c)
    }

    pub fn int(n: i64) -> SymExpr {
        SymExpr::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn monomial(m: Monomial, c: BigRational) -> SymExpr {
        let mut e = SymExpr::zero();
        e.add_monomial(m, c);
        e
    }

    pub fn gen(g: Generator) -> SymExpr {
        SymExpr::monomial(Monomial::generator(g), BigRational::one())
    }

    pub fn ln2() -> SymExpr {
        SymExpr::gen(Generator::Ln2)
    }

    pub fn zeta(k: u32) -> SymExpr {
        SymExpr::gen(Generator::Zeta(k))
    }

    /// `ln^k 2 / k!`.
    pub fn ln_pow_over_factorial(k: u32) -> SymExpr {
        let f = crate::numerics::factorial(k);
        SymExpr::monomial(Monomial::ln_pow(k), BigRational::new(BigInt::one(), f))
    }

    /// Builds `Σ c_i m_i` from coordinates over a basis.
    pub fn from_coords(basis: &[Monomial], coords: &[BigRational]) -> SymExpr {
        assert_eq!(basis.len(), coords.len(), "coordinate vector length");
        let mut e = SymExpr::zero();
        for (m, c) in basis.iter().zip(coords) {
            e.add_monomial(m.clone(), c.clone());
        }
        e
    }

    pub fn add_monomial(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Common weight of all monomials; `None` for zero or mixed weights.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.weight());
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.weight().is_some()
    }

    /// Coordinates over `basis`, or `None` if a monomial falls outside it.
    pub fn coords(&self, basis: &[Monomial]) -> Option<Vec<BigRational>> {
        if self.terms.keys().any(|m| !basis.contains(m)) {
            return None;
        }
        Some(basis.iter().map(|m| self.coefficient(m)).collect())
    }

    pub fn add(&self, other: &SymExpr) -> SymExpr {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_monomial(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymExpr) -> SymExpr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymExpr {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, k: &BigRational) -> SymExpr {
        let mut out = SymExpr::zero();
        for (m, c) in &self.terms {
            out.add_monomial(m.clone(), c * k);
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> SymExpr {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn mul(&self, other: &SymExpr) -> SymExpr {
        let mut out = SymExpr::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                let (k, p) = m.mul(n);
                out.add_monomial(p, k * c * d);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> SymExpr {
        let mut out = SymExpr::int(1);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &BigRational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn names(w: u32) -> Vec<String> {
        monomial_basis(w).iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn low_weight_bases() {
        assert_eq!(names(1), ["ln2"]);
        assert_eq!(names(2), ["zeta(2)", "ln2^2"]);
        assert_eq!(names(3), ["zeta(3)", "zeta(2)*ln2", "ln2^3"]);
        assert_eq!(names(4), ["zeta(4)", "zeta(3)*ln2", "zeta(2)*ln2^2", "ln2^4", "Li4(1/2)"]);
    }

    #[test]
    fn weight_five_basis() {
        assert_eq!(
            names(5),
            [
                "zeta(5)", "zeta(2)*zeta(3)", "zeta(4)*ln2", "zeta(3)*ln2^2", "zeta(2)*ln2^3", "ln2^5",
                "Li5(1/2)", "Li4(1/2)*ln2"
            ]
        );
    }

    #[test]
    fn weight_six_basis_has_twelve() {
        assert_eq!(
            names(6),
            [
                "zeta(6)", "zeta(3)^2", "zeta(5)*ln2", "zeta(2)*zeta(3)*ln2", "zeta(4)*ln2^2",
                "zeta(3)*ln2^3", "zeta(2)*ln2^4", "ln2^6", "Li6(1/2)", "Li5(1/2)*ln2", "Li4(1/2)*ln2^2",
                "Li4(1/2)*zeta(2)"
            ]
        );
    }

    #[test]
    fn even_zeta_products_fold() {
        let z2 = SymExpr::zeta(2);
        assert_eq!(z2.mul(&z2), SymExpr::zeta(4).scale(&q(5, 2)));
        // ζ(2)ζ(4) = 7/4 ζ(6)
        assert_eq!(z2.mul(&SymExpr::zeta(4)), SymExpr::zeta(6).scale(&q(7, 4)));
        // ζ(2)^3 = 35/8 ζ(6)
        assert_eq!(z2.pow(3), SymExpr::zeta(6).scale(&q(35, 8)));
        let z3 = SymExpr::zeta(3);
        assert_eq!(z3.mul(&z3).len(), 1);
        assert_eq!(z3.mul(&z3).weight(), Some(6));
    }

    #[test]
    fn arithmetic_and_display() {
        let e = SymExpr::zeta(2).scale(&q(1, 2)).sub(&SymExpr::ln2().pow(2).scale(&q(1, 2)));
        assert_eq!(e.to_string(), "1/2*zeta(2) - 1/2*ln2^2");
        assert!(e.sub(&e).is_zero());
        assert_eq!(e.weight(), Some(2));
        assert!(!e.add(&SymExpr::int(1)).is_homogeneous());
        assert_eq!(e.coords(&monomial_basis(2)).unwrap(), vec![q(1, 2), q(-1, 2)]);
        assert_eq!(SymExpr::ln_pow_over_factorial(3), SymExpr::ln2().pow(3).scale(&q(1, 6)));
    }
}
