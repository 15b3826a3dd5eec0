//! Shuffle product of words and the resulting polylogarithm product rule.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{decode_word, encode_word, AlgebraError, Composition, FormalSum, Letter, Point, PolylogTerm, Word};

/// Word combination with positive integer multiplicities.
pub type WordSum = BTreeMap<Word, BigUint>;

/// All order-preserving interleavings of `u` and `v`, with multiplicity.
///
/// `table[i][j]` holds the shuffle of the suffixes `u[i..]` and `v[j..]`;
/// it is filled from the back so each cell is computed once.
pub fn shuffle(u: &Word, v: &Word) -> WordSum {
    let (a, b) = (u.letters(), v.letters());
    let mut table: Vec<Vec<Vec<(Vec<Letter>, BigUint)>>> =
        vec![vec![Vec::new(); b.len() + 1]; a.len() + 1];
    table[a.len()][b.len()] = vec![(Vec::new(), BigUint::one())];
    for i in (0..=a.len()).rev() {
        for j in (0..=b.len()).rev() {
            if i == a.len() && j == b.len() {
                continue;
            }
            let mut acc: BTreeMap<Vec<Letter>, BigUint> = BTreeMap::new();
            if i < a.len() {
                for (tail, mult) in &table[i + 1][j] {
                    let mut w = Vec::with_capacity(tail.len() + 1);
                    w.push(a[i]);
                    w.extend_from_slice(tail);
                    *acc.entry(w).or_insert_with(BigUint::zero) += mult;
                }
            }
            if j < b.len() {
                for (tail, mult) in &table[i][j + 1] {
                    let mut w = Vec::with_capacity(tail.len() + 1);
                    w.push(b[j]);
                    w.extend_from_slice(tail);
                    *acc.entry(w).or_insert_with(BigUint::zero) += mult;
                }
            }
            table[i][j] = acc.into_iter().collect();
        }
    }
    std::mem::take(&mut table[0][0])
        .into_iter()
        .map(|(w, m)| (Word::new(w), m))
        .collect()
}

/// `Li_a(z) · Li_b(z)` as a combination of single `Li_t(z)` via the shuffle of words.
pub fn shuffle_product(a: &Composition, b: &Composition, point: Point) -> Result<FormalSum, AlgebraError> {
    let mut out = FormalSum::zero();
    for (w, m) in shuffle(&encode_word(a), &encode_word(b)) {
        let t = PolylogTerm::li(decode_word(&w)?, point)?;
        out.add_term(t, BigRational::from_integer(BigInt::from(m)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn coeff(sum: &FormalSum, c: Composition) -> i64 {
        let r = sum.coefficient_of(&PolylogTerm::li(c, Point::SymbolicZ).unwrap());
        r.to_integer().try_into().unwrap()
    }

    #[test]
    fn x1_with_x0x1() {
        let s = shuffle(&w("1"), &w("01"));
        assert_eq!(s.len(), 2);
        assert_eq!(s[&w("101")], BigUint::from(1u32));
        assert_eq!(s[&w("011")], BigUint::from(2u32));
    }

    #[test]
    fn li1_li2() {
        let p = shuffle_product(&comp![1], &comp![2], Point::SymbolicZ).unwrap();
        assert_eq!(coeff(&p, comp![2, 1]), 2);
        assert_eq!(coeff(&p, comp![1, 2]), 1);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn li2_squared() {
        let p = shuffle_product(&comp![2], &comp![2], Point::SymbolicZ).unwrap();
        assert_eq!(coeff(&p, comp![2, 2]), 2);
        assert_eq!(coeff(&p, comp![3, 1]), 4);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn weight_five_shuffles() {
        let p = shuffle_product(&comp![1], &comp![4], Point::SymbolicZ).unwrap();
        assert_eq!(coeff(&p, comp![4, 1]), 2);
        assert_eq!(coeff(&p, comp![3, 2]), 1);
        assert_eq!(coeff(&p, comp![2, 3]), 1);
        assert_eq!(coeff(&p, comp![1, 4]), 1);
        assert_eq!(p.len(), 4);

        let p = shuffle_product(&comp![2], &comp![3], Point::SymbolicZ).unwrap();
        assert_eq!(coeff(&p, comp![4, 1]), 6);
        assert_eq!(coeff(&p, comp![3, 2]), 3);
        assert_eq!(coeff(&p, comp![2, 3]), 1);
        assert_eq!(p.len(), 3);

        let p = shuffle_product(&comp![1], &comp![2, 2], Point::SymbolicZ).unwrap();
        assert_eq!(coeff(&p, comp![2, 2, 1]), 2);
        assert_eq!(coeff(&p, comp![2, 1, 2]), 2);
        assert_eq!(coeff(&p, comp![1, 2, 2]), 1);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn empty_word_is_unit() {
        let s = shuffle(&Word::empty(), &w("011"));
        assert_eq!(s.len(), 1);
        assert_eq!(s[&w("011")], BigUint::one());
    }
}
