use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Composition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// Strict nesting `n_1 > n_2 > ⋯`.
    Li,
    /// Non-strict nesting `n_1 ≥ n_2 ≥ ⋯`.
    Le,
}

/// Evaluation point tag of a polylogarithm term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Point {
    SymbolicZ,
    Half,
    MinusOne,
    One,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Point::SymbolicZ => "z",
            Point::Half => "1/2",
            Point::MinusOne => "-1",
            Point::One => "1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolylogTerm {
    kind: Kind,
    index: Composition,
    point: Point,
}

impl PolylogTerm {
    /// Rejects divergent values at `z = 1` (`s_1 = 1`).
    pub fn new(kind: Kind, index: Composition, point: Point) -> Result<Self, AlgebraError> {
        if point == Point::One && index.first() == 1 {
            return Err(AlgebraError::DivergentAtOne(index.to_string()));
        }
        Ok(PolylogTerm { kind, index, point })
    }

    pub fn li(index: Composition, point: Point) -> Result<Self, AlgebraError> {
        Self::new(Kind::Li, index, point)
    }

    pub fn le(index: Composition, point: Point) -> Result<Self, AlgebraError> {
        Self::new(Kind::Le, index, point)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn index(&self) -> &Composition {
        &self.index
    }

    pub fn point(&self) -> Point {
        self.point
    }

    pub fn weight(&self) -> u32 {
        self.index.weight()
    }

    /// Same term with a different point tag.
    pub fn at(&self, point: Point) -> Result<Self, AlgebraError> {
        Self::new(self.kind, self.index.clone(), point)
    }
}

impl fmt::Display for PolylogTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            Kind::Li => "Li",
            Kind::Le => "Le",
        };
        write!(f, "{name}[{}]({})", self.index, self.point)
    }
}

/// Exponents with signs `σ_j = ±1`: the index of an alternating Euler sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedComposition {
    parts: Vec<(u32, i8)>,
}

impl SignedComposition {
    pub fn new(parts: Vec<(u32, i8)>) -> Result<Self, AlgebraError> {
        if parts.is_empty() {
            return Err(AlgebraError::EmptyComposition);
        }
        for (i, &(s, sigma)) in parts.iter().enumerate() {
            if s == 0 {
                return Err(AlgebraError::ZeroPart { position: i + 1 });
            }
            if sigma != 1 && sigma != -1 {
                return Err(AlgebraError::BadSign { position: i + 1 });
            }
        }
        Ok(SignedComposition { parts })
    }

    /// `ζ(⟨1⟩_l; σ)` with the given signs.
    pub fn ones(signs: &[i8]) -> Result<Self, AlgebraError> {
        Self::new(signs.iter().map(|&s| (1, s)).collect())
    }

    pub fn parts(&self) -> &[(u32, i8)] {
        &self.parts
    }

    pub fn signs(&self) -> Vec<i8> {
        self.parts.iter().map(|p| p.1).collect()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `s_1 ≥ 2` or `σ_1 = −1`.
    pub fn is_convergent(&self) -> bool {
        let (s, sigma) = self.parts[0];
        s >= 2 || sigma == -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    #[test]
    fn divergent_mzv_rejected() {
        assert!(PolylogTerm::li(comp![1, 2], Point::One).is_err());
        assert!(PolylogTerm::li(comp![2, 1], Point::One).is_ok());
        assert!(PolylogTerm::li(comp![1, 2], Point::Half).is_ok());
    }

    #[test]
    fn signed_convergence() {
        assert!(SignedComposition::new(vec![(1, -1), (1, 1)]).unwrap().is_convergent());
        assert!(!SignedComposition::new(vec![(1, 1)]).unwrap().is_convergent());
        assert!(SignedComposition::new(vec![(2, 1)]).unwrap().is_convergent());
        assert!(SignedComposition::new(vec![(2, 3)]).is_err());
        assert!(SignedComposition::new(vec![]).is_err());
    }
}
