//! Compositions: the integer index vectors `(s_1, ..., s_l)` of polylogarithms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// A non-empty ordered list of positive integers.
///
/// The derived `Ord` is ascending lexicographic on parts and is only used for
/// map keys. Enumeration order is given by [`Composition::canonical_cmp`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, AlgebraError> {
        if parts.is_empty() {
            return Err(AlgebraError::EmptyComposition);
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(AlgebraError::ZeroPart { position: pos + 1 });
        }
        Ok(Composition(parts))
    }

    /// `⟨a⟩_n`: n copies of `a`. Panics if `n == 0` or `a == 0`.
    pub fn repeated(a: u32, n: usize) -> Self {
        Composition::new(vec![a; n]).expect("repeated part must be positive and n > 0")
    }

    /// `(⟨1⟩_m, 2, ⟨1⟩_n)`.
    pub fn ones_two_ones(m: usize, n: usize) -> Self {
        let mut parts = vec![1; m];
        parts.push(2);
        parts.extend(std::iter::repeat_n(1, n));
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    /// True when `ζ(s)` converges, i.e. `s_1 ≥ 2`.
    pub fn is_admissible(&self) -> bool {
        self.first() >= 2
    }

    /// Canonical enumeration order: descending lexicographic on parts.
    ///
    /// With this order `(2)` precedes `(1,1)` and the weight-5 compositions come
    /// out in the same order as the reference value tables.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.0.cmp(&self.0)
    }

    /// Parses the text form `"2,1,3"`. Errors carry the 1-based part position.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(AlgebraError::EmptyComposition);
        }
        let mut parts = Vec::new();
        for (i, piece) in text.split(',').enumerate() {
            let piece = piece.trim();
            let value: u32 = piece.parse().map_err(|_| AlgebraError::BadPart {
                position: i + 1,
                text: piece.to_string(),
            })?;
            if value == 0 {
                return Err(AlgebraError::ZeroPart { position: i + 1 });
            }
            parts.push(value);
        }
        Ok(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Composition::parse(s)
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = AlgebraError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

/// Builds a composition from a literal list of parts. Panics on invalid input.
#[macro_export]
macro_rules! comp {
    ($($p:expr),+ $(,)?) => {
        $crate::algebra::Composition::new(vec![$($p),+]).expect("valid composition literal")
    };
}

/// All `2^{w-1}` compositions of `w`, in canonical (descending lexicographic) order.
pub fn enumerate_weight(w: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    if w == 0 {
        return out;
    }
    let mut current = Vec::new();
    fill_parts(w, &mut current, &mut out, &|_| true);
    out
}

/// The set `B_w` of compositions of `w` with every part in `{1, 2}`.
pub fn enumerate_basis(w: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    if w == 0 {
        return out;
    }
    let mut current = Vec::new();
    fill_parts(w, &mut current, &mut out, &|p| p <= 2);
    out
}

// Largest first part first gives descending lexicographic order directly.
fn fill_parts(
    remaining: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Composition>,
    allowed: &dyn Fn(u32) -> bool,
) {
    if remaining == 0 {
        out.push(Composition(current.clone()));
        return;
    }
    for p in (1..=remaining).rev() {
        if !allowed(p) {
            continue;
        }
        current.push(p);
        fill_parts(remaining - p, current, out, allowed);
        current.pop();
    }
}
