//! Numeric experiments on the space spanned by values at `1/2` and `−1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::pslq::{pslq, PslqConfig, RelationResult, RelationStatus};
use super::RelationError;
use crate::algebra::{basis_transform_matrix, enumerate_basis, enumerate_weight, transform_matrix, Composition, Point};
use crate::linalg::solve_exact;
use crate::numerics::{const_ln2, factorial, Ball, PrecisionContext};
use crate::series::Evaluator;
use crate::symbolic::{appendix_tables, monomial_basis, sym_to_numeric, Column, Monomial, SymExpr, MAX_TABLE_WEIGHT};

/// Default weight cap for the basis-expansion checks.
pub const DEFAULT_EXPANSION_CAP: u32 = 7;

/// Precision that comfortably resolves the weight-`w` expansions.
///
/// Relation vectors grow fast with `w` (entries near `10^7` at weight 6,
/// `10^13` at weight 7), and below these precisions spurious relations slip
/// under the default threshold.
pub fn expansion_digits(w: u32) -> u32 {
    match w {
        0..=4 => 60,
        5 => 100,
        6 => 300,
        _ => 150 * w,
    }
}

/// PSLQ settings for the basis expansions: the default config with a
/// coefficient bound sized for weight `w`.
pub fn expansion_config(w: u32) -> PslqConfig {
    let digits = match w {
        0..=5 => 6,
        6 => 9,
        7 => 15,
        _ => 18,
    };
    PslqConfig::with_bound(10u64.pow(digits))
}

/// `Li_{s0}(1/2)` over `{Li_b(1/2) : b ∈ B_w}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub target: Composition,
    pub basis: Vec<Composition>,
    pub result: RelationResult,
    /// `Li_{s0} = Σ c_b Li_b` when the relation involves the target.
    pub coefficients: Option<Vec<BigRational>>,
    /// For `w ≤ 5`: whether the coefficients equal the exact table expansion.
    pub exact_match: Option<bool>,
}

impl BasisExpansion {
    pub fn succeeded(&self) -> bool {
        self.coefficients.is_some() && self.exact_match != Some(false)
    }

    pub fn max_denominator(&self) -> Option<BigInt> {
        self.coefficients.as_ref().map(|c| c.iter().map(|x| x.denom().clone()).max().unwrap_or_else(BigInt::one))
    }

    /// Re-evaluates the found relation with `ev` (meant to run at a higher
    /// precision than the search) and checks `|Σ m_i x_i| < 10^{-digits}`.
    /// A spurious relation stalls near the search threshold and fails here.
    pub fn confirm(&self, ev: &mut Evaluator, digits: u32) -> Result<bool, RelationError> {
        let Some(m) = self.result.relation() else {
            return Ok(false);
        };
        let mut sum = ev.li_half(&self.target)?.mul_int(m[0].clone());
        for (b, k) in self.basis.iter().zip(&m[1..]) {
            sum = &sum + &ev.li_half(b)?.mul_int(k.clone());
        }
        let tol = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize));
        Ok(sum.mid().abs() + sum.rad() < tol)
    }
}

/// The exact expansion of `Li_{s0}(1/2)` over `B_w` from the value tables (`w ≤ 5`).
pub fn exact_basis_expansion(s0: &Composition) -> Result<Vec<BigRational>, RelationError> {
    let w = s0.weight();
    let table = appendix_tables(w)?;
    let basis = enumerate_basis(w);
    let coords = |c: &Composition| table.coords(c, Column::LiHalf).expect("composition in table");
    // Σ_b c_b coords(b) = coords(s0): the transpose system
    let rows: Vec<Vec<BigRational>> = basis.iter().map(coords).collect();
    let dim = rows[0].len();
    if dim != basis.len() {
        return Err(RelationError::BadConfig(format!("basis of {} for {dim} coordinates", basis.len())));
    }
    let at: Vec<Vec<BigRational>> = (0..dim).map(|i| rows.iter().map(|r| r[i].clone()).collect()).collect();
    let rhs: Vec<Vec<BigRational>> = coords(s0).into_iter().map(|x| vec![x]).collect();
    let sol = solve_exact(&at, &rhs).map_err(crate::symbolic::SymbolicError::from)?;
    Ok(sol.into_iter().map(|mut r| r.remove(0)).collect())
}

/// Searches for `Li_{s0}(1/2)` as a rational combination of the `B_w` values.
pub fn verify_basis_expansion(
    s0: &Composition,
    ctx: &PrecisionContext,
    cfg: &PslqConfig,
) -> Result<BasisExpansion, RelationError> {
    verify_basis_expansion_capped(s0, ctx, cfg, DEFAULT_EXPANSION_CAP)
}

pub fn verify_basis_expansion_capped(
    s0: &Composition,
    ctx: &PrecisionContext,
    cfg: &PslqConfig,
    cap: u32,
) -> Result<BasisExpansion, RelationError> {
    let mut ev = Evaluator::new(ctx);
    verify_with(s0, &mut ev, cfg, cap)
}

fn verify_with(
    s0: &Composition,
    ev: &mut Evaluator,
    cfg: &PslqConfig,
    cap: u32,
) -> Result<BasisExpansion, RelationError> {
    let w = s0.weight();
    if w > cap {
        return Err(RelationError::BadConfig(format!("weight {w} above the cap {cap}")));
    }
    let basis = enumerate_basis(w);
    let mut xs = vec![ev.li_half(s0)?];
    for b in &basis {
        xs.push(ev.li_half(b)?);
    }
    let result = pslq(&xs, cfg)?;
    let coefficients = match &result.status {
        RelationStatus::Found(v) if !v[0].is_zero() => {
            let m0 = BigRational::from_integer(v[0].clone());
            Some(v[1..].iter().map(|m| -BigRational::from_integer(m.clone()) / &m0).collect())
        }
        _ => None,
    };
    let exact_match = match (&coefficients, w <= MAX_TABLE_WEIGHT) {
        (Some(c), true) => Some(*c == exact_basis_expansion(s0)?),
        _ => None,
    };
    Ok(BasisExpansion { target: s0.clone(), basis, result, coefficients, exact_match })
}

/// Expansions of every composition of weight `w`, sharing one evaluator.
pub fn conjecture_check(w: u32, ctx: &PrecisionContext, cfg: &PslqConfig) -> Result<Vec<BasisExpansion>, RelationError> {
    let mut ev = Evaluator::new(ctx);
    enumerate_weight(w).iter().map(|c| verify_with(c, &mut ev, cfg, w.max(DEFAULT_EXPANSION_CAP))).collect()
}

/// The `z ↦ −z/(1−z)` matrix on `B_w` is an integer involution, and it carries
/// the values at `1/2` to the values at `−1` and back within radii.
pub fn span_equivalence_check(w: u32) -> Result<bool, RelationError> {
    if w == 0 || w > 8 {
        return Err(RelationError::BadConfig(format!("weight {w} outside 1..=8")));
    }
    let full = transform_matrix(w)?;
    let t = basis_transform_matrix(w)?;
    if !full.mul(&full).is_identity() || !t.mul(&t).is_identity() {
        return Ok(false);
    }
    let ctx = PrecisionContext::from_bits(128);
    let mut ev = Evaluator::new(&ctx);
    let half: Vec<Ball> = t.basis.iter().map(|b| ev.li_half(b)).collect::<Result<_, _>>()?;
    let apply = |v: &[Ball]| -> Vec<Ball> {
        t.entries
            .iter()
            .map(|row| {
                row.iter().zip(v).fold(Ball::zero(v[0].prec()), |acc, (&k, x)| &acc + &x.mul_int(k))
            })
            .collect()
    };
    let minus = apply(&half);
    let back = apply(&minus);
    if !back.iter().zip(&half).all(|(a, b)| a.overlaps(b)) {
        return Ok(false);
    }
    // independent value: Li_{1^w}(−1) = (−ln 2)^w / w!
    let i = t.basis.iter().position(|b| b.parts().iter().all(|&p| p == 1)).expect("1^w in B_w");
    let ln2 = const_ln2(&ctx);
    let mut expect = ln2.pow(w).mul_rational(&BigRational::new(BigInt::one(), factorial(w)));
    if w % 2 == 1 {
        expect = -&expect;
    }
    Ok(minus[i].overlaps(&expect))
}

/// The twelve classical weight-6 constants.
pub fn weight6_constants() -> Vec<Monomial> {
    monomial_basis(6)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight6Report {
    pub constants: Vec<Monomial>,
    /// `Li_{2,2,1,1}(1/2)` against the constants.
    pub alone: RelationResult,
    /// `Li_{2,2,1,1}(1/2) + 9/4 Le_{5,1}(−1)` against the constants.
    pub combined: RelationResult,
}

impl Weight6Report {
    /// The combined value as a rational combination of the constants, if found.
    pub fn combined_expansion(&self) -> Option<SymExpr> {
        let v = self.combined.relation()?;
        if v[0].is_zero() {
            return None;
        }
        let m0 = BigRational::from_integer(v[0].clone());
        let coords: Vec<BigRational> = v[1..].iter().map(|m| -BigRational::from_integer(m.clone()) / &m0).collect();
        Some(SymExpr::from_coords(&self.constants, &coords))
    }
}

/// Requires at least 300 digits.
pub fn weight6_experiment(ctx: &PrecisionContext, cfg: &PslqConfig) -> Result<Weight6Report, RelationError> {
    if ctx.target_bits() < 996 {
        return Err(RelationError::BadConfig("the weight-6 experiment needs at least 300 digits".into()));
    }
    let constants = weight6_constants();
    let values: Vec<Ball> = constants
        .iter()
        .map(|m| sym_to_numeric(&SymExpr::monomial(m.clone(), BigRational::one()), ctx))
        .collect::<Result<_, _>>()?;
    let mut ev = Evaluator::new(ctx);
    let li2211 = ev.li_half(&Composition::new(vec![2, 2, 1, 1])?)?;
    let le51 = ev.le_at(&Composition::new(vec![5, 1])?, Point::MinusOne)?;
    let combined_value = &li2211 + &le51.mul_rational(&BigRational::new(BigInt::from(9), BigInt::from(4)));
    let run = |x: Ball| {
        let mut xs = vec![x];
        xs.extend(values.iter().cloned());
        pslq(&xs, cfg)
    };
    Ok(Weight6Report { alone: run(li2211)?, combined: run(combined_value)?, constants })
}

/// Compositions whose `Le_s(1/2)` is a polynomial in zeta values alone.
///
/// The duality gives this for `(⟨1⟩_m, 2, ⟨1⟩_n)` with `m + n` odd; `(1,3,1)` is
/// the first case outside that family. Weights `≤ 5` are decided exactly; higher
/// weights by PSLQ against the zeta-only monomials.
pub fn pure_zeta_le_half(w: u32, ctx: &PrecisionContext, cfg: &PslqConfig) -> Result<Vec<(Composition, SymExpr)>, RelationError> {
    let zeta_only: Vec<Monomial> =
        monomial_basis(w).into_iter().filter(|m| m.ln_power() == 0 && m.lis().is_empty()).collect();
    let mut out = Vec::new();
    if w <= MAX_TABLE_WEIGHT {
        let t = appendix_tables(w)?;
        for row in &t.rows {
            let v = &row.values[1];
            if v.iter().all(|(m, _)| zeta_only.contains(m)) {
                out.push((row.composition.clone(), v.clone()));
            }
        }
        return Ok(out);
    }
    let values: Vec<Ball> = zeta_only
        .iter()
        .map(|m| sym_to_numeric(&SymExpr::monomial(m.clone(), BigRational::one()), ctx))
        .collect::<Result<_, _>>()?;
    let mut ev = Evaluator::new(ctx);
    for c in enumerate_weight(w) {
        let mut xs = vec![ev.le_at(&c, Point::Half)?];
        xs.extend(values.iter().cloned());
        let r = pslq(&xs, cfg)?;
        if let Some(v) = r.relation() {
            if !v[0].is_zero() {
                let m0 = BigRational::from_integer(v[0].clone());
                let coords: Vec<BigRational> =
                    v[1..].iter().map(|m| -BigRational::from_integer(m.clone()) / &m0).collect();
                out.push((c, SymExpr::from_coords(&zeta_only, &coords)));
            }
        }
    }
    Ok(out)
}

/// Whether `|x| ≤ bound` for every denominator.
pub fn denominators_within(c: &[BigRational], bound: &BigInt) -> bool {
    c.iter().all(|x| x.denom().abs() <= *bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    #[test]
    fn trivial_expansion() {
        let ctx = PrecisionContext::from_digits(60);
        let e = verify_basis_expansion(&comp![2], &ctx, &PslqConfig::default()).unwrap();
        assert_eq!(e.basis, vec![comp![2], comp![1, 1]]);
        assert_eq!(e.coefficients, Some(vec![BigRational::one(), BigRational::zero()]));
        assert_eq!(e.exact_match, Some(true));
    }

    #[test]
    fn weight3_expansion_matches_table() {
        let ctx = PrecisionContext::from_digits(60);
        let e = verify_basis_expansion(&comp![3], &ctx, &PslqConfig::default()).unwrap();
        assert_eq!(e.exact_match, Some(true));
        assert_eq!(e.coefficients.unwrap(), exact_basis_expansion(&comp![3]).unwrap());
    }

    #[test]
    fn weight4_and_5_sweeps() {
        for w in 4..=5 {
            let ctx = PrecisionContext::from_digits(expansion_digits(w));
            for e in conjecture_check(w, &ctx, &PslqConfig::default()).unwrap() {
                assert!(e.succeeded(), "{}: {:?}", e.target, e.result.status);
                assert_eq!(e.exact_match, Some(true));
            }
        }
    }

    #[test]
    fn span_equivalence() {
        for w in 1..=6 {
            assert!(span_equivalence_check(w).unwrap(), "w={w}");
        }
        assert!(span_equivalence_check(9).is_err());
    }

    #[test]
    fn weight6_constant_list() {
        let names: Vec<String> = weight6_constants().iter().map(|m| m.to_string()).collect();
        assert_eq!(names.len(), 12);
        assert_eq!(names[0], "zeta(6)");
        assert_eq!(names[11], "Li4(1/2)*zeta(2)");
    }

    #[test]
    fn pure_zeta_rows_low_weight() {
        let ctx = PrecisionContext::from_digits(60);
        let cfg = PslqConfig::default();
        let found: Vec<String> =
            pure_zeta_le_half(5, &ctx, &cfg).unwrap().iter().map(|(c, _)| c.to_string()).collect();
        assert!(found.contains(&"1,3,1".to_string()));
        assert!(found.contains(&"1,1,1,2".to_string()));
        assert!(!found.contains(&"2,1,1,1".to_string()));
    }
}
