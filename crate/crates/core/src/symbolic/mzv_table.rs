//! Closed forms of multiple zeta values up to weight 5.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::expr::SymExpr;
use super::numeric::sym_to_numeric;
use super::SymbolicError;
use crate::algebra::Composition;
use crate::numerics::PrecisionContext;
use crate::series::mzv_eval;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MzvTable {
    entries: BTreeMap<Composition, SymExpr>,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn z(k: u32) -> SymExpr {
    SymExpr::zeta(k)
}

impl MzvTable {
    /// The table without the numeric check.
    pub fn exact() -> MzvTable {
        let z23 = z(2).mul(&z(3));
        let z41 = z(5).scale_int(2).sub(&z23);
        let z32 = z(5).scale(&q(-11, 2)).add(&z23.scale_int(3));
        let z23v = z(5).scale(&q(9, 2)).sub(&z23.scale_int(2));
        let raw: Vec<(Vec<u32>, SymExpr)> = vec![
            (vec![2], z(2)),
            (vec![3], z(3)),
            (vec![2, 1], z(3)),
            (vec![4], z(4)),
            (vec![3, 1], z(4).scale(&q(1, 4))),
            (vec![2, 2], z(4).scale(&q(3, 4))),
            (vec![2, 1, 1], z(4)),
            (vec![5], z(5)),
            (vec![4, 1], z41.clone()),
            (vec![3, 2], z32.clone()),
            (vec![3, 1, 1], z41),
            (vec![2, 3], z23v.clone()),
            (vec![2, 2, 1], z32),
            (vec![2, 1, 2], z23v),
            (vec![2, 1, 1, 1], z(5)),
        ];
        let entries = raw.into_iter().map(|(p, e)| (Composition::new(p).expect("valid"), e)).collect();
        MzvTable { entries }
    }

    /// Loads the table and checks every entry against the series value.
    pub fn load(ctx: &PrecisionContext) -> Result<MzvTable, SymbolicError> {
        let t = MzvTable::exact();
        for (c, e) in &t.entries {
            let sym = sym_to_numeric(e, ctx)?;
            let num = mzv_eval(c, ctx)?;
            if !sym.overlaps(&num) {
                return Err(SymbolicError::ConsistencyFailure(format!("zeta({c}): {sym} vs {num}")));
            }
        }
        Ok(t)
    }

    pub fn get(&self, c: &Composition) -> Option<&SymExpr> {
        self.entries.get(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &SymExpr)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `mzv_table_load` at 128 bits.
pub fn mzv_table_load() -> Result<MzvTable, SymbolicError> {
    MzvTable::load(&PrecisionContext::from_bits(128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_weight;
    use crate::comp;

    #[test]
    fn covers_all_convergent_up_to_five() {
        let t = MzvTable::exact();
        let mut count = 0;
        for w in 2..=5 {
            for c in enumerate_weight(w) {
                if c.is_admissible() {
                    assert!(t.get(&c).is_some(), "{c}");
                    assert_eq!(t.get(&c).unwrap().weight(), Some(w));
                    count += 1;
                }
            }
        }
        assert_eq!(count, t.len());
        assert_eq!(t.get(&comp![4, 1]).unwrap().to_string(), "2*zeta(5) - zeta(2)*zeta(3)");
    }

    #[test]
    fn load_checks_numerically() {
        assert_eq!(mzv_table_load().unwrap().len(), 15);
    }
}
