//! Exact rational linear combinations of products of polylogarithm terms.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, Point, PolylogTerm};

/// A finite multiset of terms, kept sorted. The empty product is the constant 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermProduct(Vec<PolylogTerm>);

impl TermProduct {
    pub fn one() -> Self {
        TermProduct(Vec::new())
    }

    pub fn single(t: PolylogTerm) -> Self {
        TermProduct(vec![t])
    }

    pub fn from_terms(mut terms: Vec<PolylogTerm>) -> Self {
        terms.sort();
        TermProduct(terms)
    }

    pub fn terms(&self) -> &[PolylogTerm] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|t| t.weight()).sum()
    }

    pub fn mul(&self, other: &TermProduct) -> TermProduct {
        let mut terms = self.0.clone();
        terms.extend_from_slice(&other.0);
        TermProduct::from_terms(terms)
    }
}

impl fmt::Display for TermProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Map from [`TermProduct`] to a non-zero rational coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<TermProduct, BigRational>,
}

impl FormalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_product(TermProduct::one(), BigRational::one())
    }

    pub fn from_term(t: PolylogTerm) -> Self {
        Self::from_product(TermProduct::single(t), BigRational::one())
    }

    pub fn from_product(p: TermProduct, coeff: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_product(p, coeff);
        s
    }

    pub fn add_product(&mut self, p: TermProduct, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_term(&mut self, t: PolylogTerm, coeff: BigRational) {
        self.add_product(TermProduct::single(t), coeff);
    }

    pub fn add_int(&mut self, t: PolylogTerm, coeff: i64) {
        self.add_term(t, BigRational::from_integer(BigInt::from(coeff)));
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

    pub fn iter(&self) -> impl Iterator<Item = (&TermProduct, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &TermProduct) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of a single linear term.
    pub fn coefficient_of(&self, t: &PolylogTerm) -> BigRational {
        self.coefficient(&TermProduct::single(t.clone()))
    }

    /// Common weight of all products, or `None` if the sum is empty or mixed.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|p| p.weight());
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_empty() || self.weight().is_some()
    }

    pub fn add(&self, other: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_product(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FormalSum) -> FormalSum {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> FormalSum {
        let mut out = FormalSum::zero();
        for (p, c) in &self.terms {
            out.add_product(p.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &FormalSum) -> FormalSum {
        let mut out = FormalSum::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                out.add_product(p.mul(q), c * d);
            }
        }
        out
    }

    /// Replaces every term by a formal sum, expanding products.
    pub fn substitute<F>(&self, mut f: F) -> Result<FormalSum, AlgebraError>
    where
        F: FnMut(&PolylogTerm) -> Result<FormalSum, AlgebraError>,
    {
        let mut out = FormalSum::zero();
        for (p, c) in &self.terms {
            let mut acc = FormalSum::from_product(TermProduct::one(), c.clone());
            for t in p.terms() {
                acc = acc.mul(&f(t)?);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Retags every `SymbolicZ` term with `point`.
    pub fn at(&self, point: Point) -> Result<FormalSum, AlgebraError> {
        self.substitute(|t| {
            let t = if t.point() == Point::SymbolicZ { t.at(point)? } else { t.clone() };
            Ok(FormalSum::from_term(t))
        })
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("({c})*{p}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;
    use crate::comp;

    fn li(c: crate::algebra::Composition) -> PolylogTerm {
        PolylogTerm::new(Kind::Li, c, Point::SymbolicZ).unwrap()
    }

    #[test]
    fn cancellation_removes_keys() {
        let mut s = FormalSum::zero();
        s.add_int(li(comp![2]), 3);
        s.add_int(li(comp![2]), -3);
        assert!(s.is_zero());
        assert_eq!(s, FormalSum::zero());
    }

    #[test]
    fn products_are_canonical() {
        let a = FormalSum::from_term(li(comp![1]));
        let b = FormalSum::from_term(li(comp![2]));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).weight(), Some(3));
    }

    #[test]
    fn homogeneity_flag() {
        let mut s = FormalSum::from_term(li(comp![1]));
        assert!(s.is_homogeneous());
        s.add_int(li(comp![2]), 1);
        assert!(!s.is_homogeneous());
    }
}
