//! Duality, Le ↔ Li conversion, the `z ↦ −z/(1−z)` transformation and the
//! Hölder convolution decomposition.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{
    decode_word, encode_word, enumerate_basis, enumerate_weight, AlgebraError, Composition, FormalSum, Kind,
    Letter, Point, PolylogTerm, TermProduct, Word,
};

/// Default weight cap for [`transform_matrix`].
pub const DEFAULT_MATRIX_CAP: u32 = 10;

/// The dual composition: swap letters on the word prefix `v` of `v·x1`.
pub fn dual(c: &Composition) -> Composition {
    let word = encode_word(c);
    let (prefix, _) = word.letters().split_at(word.len() - 1);
    let mut flipped = Word::new(prefix.iter().map(|l| l.flip()).collect());
    flipped.push(Letter::X1);
    decode_word(&flipped).expect("flipped word ends in x1")
}

/// Every way of replacing the `l-1` separators of `c` by `,` or `+`.
/// Returns the merged composition and the number of `+` signs.
pub fn merge_patterns(c: &Composition) -> Vec<(Composition, u32)> {
    let parts = c.parts();
    let gaps = parts.len() - 1;
    let mut out = Vec::with_capacity(1 << gaps);
    for mask in 0u64..(1u64 << gaps) {
        let mut merged = vec![parts[0]];
        for (g, &p) in parts[1..].iter().enumerate() {
            if mask >> g & 1 == 1 {
                *merged.last_mut().unwrap() += p;
            } else {
                merged.push(p);
            }
        }
        out.push((Composition::new(merged).unwrap(), mask.count_ones()));
    }
    out
}

/// `Le_c(z) = Σ Li_p(z)` over all merge patterns `p`.
pub fn le_to_li(c: &Composition, point: Point) -> Result<FormalSum, AlgebraError> {
    let mut out = FormalSum::zero();
    for (p, _) in merge_patterns(c) {
        out.add_int(PolylogTerm::li(p, point)?, 1);
    }
    Ok(out)
}

/// `Li_c(z) = Σ (−1)^{α(p)} Le_p(z)` where `α` counts merges.
pub fn li_to_le(c: &Composition, point: Point) -> Result<FormalSum, AlgebraError> {
    let mut out = FormalSum::zero();
    for (p, plus) in merge_patterns(c) {
        out.add_int(PolylogTerm::le(p, point)?, if plus % 2 == 0 { 1 } else { -1 });
    }
    Ok(out)
}

/// Rewrites every `Le` term of a sum through [`le_to_li`].
pub fn expand_le(sum: &FormalSum) -> Result<FormalSum, AlgebraError> {
    sum.substitute(|t| match t.kind() {
        Kind::Le => le_to_li(t.index(), t.point()),
        Kind::Li => Ok(FormalSum::from_term(t.clone())),
    })
}

/// Rewrites every `Li` term of a sum through [`li_to_le`].
pub fn expand_li(sum: &FormalSum) -> Result<FormalSum, AlgebraError> {
    sum.substitute(|t| match t.kind() {
        Kind::Li => li_to_le(t.index(), t.point()),
        Kind::Le => Ok(FormalSum::from_term(t.clone())),
    })
}

/// The compositions `t` and signs with `Li_c(−z/(1−z)) = Σ sign · Li_t(z)`.
///
/// Each block `x0^{s_j−1}` of the word is replaced by an arbitrary word of the
/// same length, so there are `Π 2^{s_j−1}` distinct terms, all with sign `(−1)^l`.
pub fn li_transform_terms(c: &Composition) -> Vec<(Composition, i64)> {
    let free = (c.weight() as usize) - c.len();
    let sign = if c.len().is_multiple_of(2) { 1 } else { -1 };
    let mut out = Vec::with_capacity(1 << free);
    for mask in 0u64..(1u64 << free) {
        let mut bit = 0;
        let mut word = Word::empty();
        for &s in c.parts() {
            for _ in 0..s - 1 {
                word.push(if mask >> bit & 1 == 1 { Letter::X1 } else { Letter::X0 });
                bit += 1;
            }
            word.push(Letter::X1);
        }
        out.push((decode_word(&word).unwrap(), sign));
    }
    out
}

/// `Li_c(−z/(1−z))` expanded over `Li_t(z)` with `SymbolicZ` tags.
pub fn li_transform(c: &Composition) -> FormalSum {
    let mut out = FormalSum::zero();
    for (t, sign) in li_transform_terms(c) {
        out.add_int(PolylogTerm::li(t, Point::SymbolicZ).unwrap(), sign);
    }
    out
}

/// Square integer matrix of a linear map on compositions of one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionMatrix {
    pub basis: Vec<Composition>,
    pub entries: Vec<Vec<i64>>,
}

impl CompositionMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mul(&self, other: &CompositionMatrix) -> CompositionMatrix {
        assert_eq!(self.basis, other.basis, "matrices over different bases");
        let n = self.dim();
        let mut entries = vec![vec![0i64; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (k, &a) in self.entries[i].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell += a * other.entries[k][j];
                }
            }
        }
        CompositionMatrix { basis: self.basis.clone(), entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    pub fn row(&self, c: &Composition) -> Option<&[i64]> {
        self.basis.iter().position(|b| b == c).map(|i| self.entries[i].as_slice())
    }
}

fn matrix_over(basis: Vec<Composition>) -> Result<CompositionMatrix, AlgebraError> {
    let n = basis.len();
    let mut entries = vec![vec![0i64; n]; n];
    for (i, c) in basis.iter().enumerate() {
        for (t, sign) in li_transform_terms(c) {
            let j = basis
                .binary_search_by(|b| b.canonical_cmp(&t))
                .map_err(|_| AlgebraError::OutsideBasis(t.to_string()))?;
            entries[i][j] += sign;
        }
    }
    Ok(CompositionMatrix { basis, entries })
}

/// Matrix of [`li_transform`] on all compositions of weight `w` (rows: inputs,
/// columns: output coefficients), with the default cap.
pub fn transform_matrix(w: u32) -> Result<CompositionMatrix, AlgebraError> {
    transform_matrix_capped(w, DEFAULT_MATRIX_CAP)
}

pub fn transform_matrix_capped(w: u32, cap: u32) -> Result<CompositionMatrix, AlgebraError> {
    if w > cap {
        return Err(AlgebraError::CapExceeded { weight: w, cap });
    }
    matrix_over(enumerate_weight(w))
}

/// [`li_transform`] restricted to `B_w`; it maps `B_w` into itself.
pub fn basis_transform_matrix(w: u32) -> Result<CompositionMatrix, AlgebraError> {
    matrix_over(enumerate_basis(w))
}

/// Pairs `(y_i ⋯ y_m, τ(y_{i−1}) ⋯ τ(y_1))` for `i = 1..m+1`.
///
/// An empty word in either slot stands for the constant 1.
pub fn holder_decompose(word: &Word) -> Result<Vec<(Word, Word)>, AlgebraError> {
    let letters = word.letters();
    if letters.len() < 2 || letters[0] != Letter::X0 || letters[letters.len() - 1] != Letter::X1 {
        return Err(AlgebraError::BadBoundary(word.to_string()));
    }
    let m = letters.len();
    let mut out = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let suffix = Word::new(letters[i..].to_vec());
        let prefix = Word::new(letters[..i].iter().rev().map(|l| l.flip()).collect());
        out.push((suffix, prefix));
    }
    Ok(out)
}

/// The Hölder convolution at `z = 1/2`:
/// `ζ(word) = Σ Li_{suffix}(1/2) · Li_{flipped prefix}(1/2)`.
pub fn holder_at_half(word: &Word) -> Result<FormalSum, AlgebraError> {
    let mut out = FormalSum::zero();
    for (suffix, prefix) in holder_decompose(word)? {
        let mut factors = Vec::new();
        for w in [&suffix, &prefix] {
            if !w.is_empty() {
                factors.push(PolylogTerm::li(decode_word(w)?, Point::Half)?);
            }
        }
        out.add_product(TermProduct::from_terms(factors), BigRational::from_integer(BigInt::from(1)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn li(c: Composition) -> PolylogTerm {
        PolylogTerm::li(c, Point::SymbolicZ).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&comp![2, 1, 3]), comp![1, 3, 1, 1]);
        assert_eq!(dual(&comp![5]), Composition::repeated(1, 5));
        let c = comp![3, 2, 1];
        assert_eq!(dual(&dual(&c)), c);
    }

    #[test]
    fn le_to_li_examples() {
        let s = le_to_li(&comp![1, 1], Point::SymbolicZ).unwrap();
        let mut want = FormalSum::zero();
        want.add_int(li(comp![1, 1]), 1);
        want.add_int(li(comp![2]), 1);
        assert_eq!(s, want);

        let s = le_to_li(&comp![3, 5, 7], Point::Half).unwrap();
        assert_eq!(s.len(), 4);
        for c in [comp![3, 5, 7], comp![8, 7], comp![3, 12], comp![15]] {
            assert_eq!(s.coefficient_of(&PolylogTerm::li(c, Point::Half).unwrap()), BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn li_to_le_signs() {
        let s = li_to_le(&comp![1, 2, 3], Point::MinusOne).unwrap();
        let le = |c| PolylogTerm::le(c, Point::MinusOne).unwrap();
        let one = BigRational::from_integer(1.into());
        assert_eq!(s.coefficient_of(&le(comp![1, 2, 3])), one);
        assert_eq!(s.coefficient_of(&le(comp![3, 3])), -one.clone());
        assert_eq!(s.coefficient_of(&le(comp![1, 5])), -one.clone());
        assert_eq!(s.coefficient_of(&le(comp![6])), one);
    }

    #[test]
    fn round_trip_two_one() {
        let le = li_to_le(&comp![2, 1], Point::SymbolicZ).unwrap();
        let back = expand_le(&le).unwrap();
        assert_eq!(back, FormalSum::from_term(li(comp![2, 1])));
    }

    #[test]
    fn transform_examples() {
        let s = li_transform(&comp![3, 1]);
        assert_eq!(s.len(), 4);
        for c in [comp![3, 1], comp![2, 1, 1], comp![1, 2, 1], comp![1, 1, 1, 1]] {
            assert_eq!(s.coefficient_of(&li(c)), BigRational::from_integer(1.into()));
        }
        let s = li_transform(&comp![1]);
        assert_eq!(s, {
            let mut f = FormalSum::zero();
            f.add_int(li(comp![1]), -1);
            f
        });
        // (1, 2, 1): sign (−1)^3, terms Li_{1,2,1} + Li_{1,1,1,1}
        let s = li_transform(&Composition::ones_two_ones(1, 1));
        assert_eq!(s.len(), 2);
        assert_eq!(s.coefficient_of(&li(comp![1, 2, 1])), BigRational::from_integer((-1).into()));
        assert_eq!(s.coefficient_of(&li(comp![1, 1, 1, 1])), BigRational::from_integer((-1).into()));
    }

    #[test]
    fn small_matrices() {
        let m1 = transform_matrix(1).unwrap();
        assert_eq!(m1.entries, vec![vec![-1]]);
        let m2 = transform_matrix(2).unwrap();
        assert!(m2.mul(&m2).is_identity());
        let m5 = transform_matrix(5).unwrap();
        assert_eq!(m5.dim(), 16);
        assert!(m5.mul(&m5).is_identity());
        assert!(matches!(transform_matrix(11), Err(AlgebraError::CapExceeded { .. })));
        assert!(transform_matrix_capped(11, 12).is_ok());
    }

    #[test]
    fn basis_matrix_is_closed() {
        for w in 1..=8 {
            let m = basis_transform_matrix(w).unwrap();
            assert!(m.mul(&m).is_identity());
        }
    }

    #[test]
    fn holder_pairs() {
        let pairs = holder_decompose(&w("01")).unwrap();
        assert_eq!(pairs, vec![(w("01"), Word::empty()), (w("1"), w("1")), (Word::empty(), w("01"))]);
        assert!(matches!(holder_decompose(&w("11")), Err(AlgebraError::BadBoundary(_))));
        assert!(matches!(holder_decompose(&w("00")), Err(AlgebraError::BadBoundary(_))));
        assert!(matches!(holder_decompose(&w("0")), Err(AlgebraError::BadBoundary(_))));
    }

    #[test]
    fn holder_of_zeta_m() {
        // x0^{m-1} x1: Σ_{i=1}^m Li_{m−i+1}·Li_{⟨1⟩_{i−1}} + Li_{2,⟨1⟩_{m−2}}
        for m in 2..=6usize {
            let mut word = Word::new(vec![Letter::X0; m - 1]);
            word.push(Letter::X1);
            let got = holder_at_half(&word).unwrap();
            let half = |c: Composition| PolylogTerm::li(c, Point::Half).unwrap();
            let mut want = FormalSum::zero();
            for i in 1..=m {
                let mut f = vec![half(comp![(m - i + 1) as u32])];
                if i > 1 {
                    f.push(half(Composition::repeated(1, i - 1)));
                }
                want.add_product(TermProduct::from_terms(f), BigRational::from_integer(1.into()));
            }
            let mut tail = vec![2u32];
            tail.extend(std::iter::repeat_n(1, m - 2));
            want.add_product(
                TermProduct::single(half(Composition::new(tail).unwrap())),
                BigRational::from_integer(1.into()),
            );
            assert_eq!(got, want, "m = {m}");
        }
    }

    #[test]
    fn holder_of_four_one() {
        // ζ(4,1) = Li_{4,1} + Li_{3,1}Li_1 + Li_{2,1}Li_{1,1} + Li_{1,1}Li_{1,1,1} + Li_1 Li_{2,1,1} + Li_{3,1,1}
        let pairs = holder_decompose(&w("00011")).unwrap();
        let decoded: Vec<(Option<Composition>, Option<Composition>)> = pairs
            .iter()
            .map(|(a, b)| (decode_word(a).ok(), decode_word(b).ok()))
            .collect();
        assert_eq!(
            decoded,
            vec![
                (Some(comp![4, 1]), None),
                (Some(comp![3, 1]), Some(comp![1])),
                (Some(comp![2, 1]), Some(comp![1, 1])),
                (Some(comp![1, 1]), Some(comp![1, 1, 1])),
                (Some(comp![1]), Some(comp![2, 1, 1])),
                (None, Some(comp![3, 1, 1])),
            ]
        );
    }
}
