//! Value tables at `1/2` and `−1` for weights up to 5.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

use super::closed_forms::{gen_func_values, li121_closed, li_half};
use super::expr::{monomial_basis, Monomial, SymExpr};
use super::mzv_table::MzvTable;
use super::SymbolicError;
use crate::algebra::{
    encode_word, enumerate_weight, holder_at_half, le_to_li, li_transform_terms, shuffle_product, Composition,
    FormalSum, Kind, Point, PolylogTerm,
};
use crate::linalg::solve_exact;

const GOLDEN: &str = include_str!("../../data/appendix.txt");

/// Highest weight with a complete table.
pub const MAX_TABLE_WEIGHT: u32 = 5;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Column {
    LiHalf,
    LeHalf,
    LiMinusOne,
    LeMinusOne,
}

impl Column {
    pub const ALL: [Column; 4] = [Column::LiHalf, Column::LeHalf, Column::LiMinusOne, Column::LeMinusOne];

    pub fn kind(self) -> Kind {
        match self {
            Column::LiHalf | Column::LiMinusOne => Kind::Li,
            Column::LeHalf | Column::LeMinusOne => Kind::Le,
        }
    }

    pub fn point(self) -> Point {
        match self {
            Column::LiHalf | Column::LeHalf => Point::Half,
            Column::LiMinusOne | Column::LeMinusOne => Point::MinusOne,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Column::LiHalf => "Li@1/2",
            Column::LeHalf => "Le@1/2",
            Column::LiMinusOne => "Li@-1",
            Column::LeMinusOne => "Le@-1",
        }
    }

    pub fn from_label(s: &str) -> Option<Column> {
        Column::ALL.into_iter().find(|c| c.label() == s)
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Values of `Li_s(1/2)` for every composition of weight `≤ max_weight`.
pub type HalfValues = BTreeMap<Composition, SymExpr>;

/// Evaluates a formal sum whose terms all sit at one point.
pub fn eval_formal_sum<F>(sum: &FormalSum, mut value: F) -> SymExpr
where
    F: FnMut(&PolylogTerm) -> SymExpr,
{
    let mut out = SymExpr::zero();
    for (p, c) in sum.iter() {
        let v = p.terms().iter().fold(SymExpr::int(1), |acc, t| acc.mul(&value(t)));
        out = out.add(&v.scale(c));
    }
    out
}

fn li_of(values: &HalfValues, t: &PolylogTerm) -> SymExpr {
    assert_eq!(t.kind(), Kind::Li, "expected an Li term, got {t}");
    values.get(t.index()).unwrap_or_else(|| panic!("no value for {t}")).clone()
}

fn ones(n: u32) -> Composition {
    Composition::repeated(1, n as usize)
}

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).expect("valid composition")
}

/// One linear equation `Σ coefficients_i · Li_{unknown_i}(1/2) = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEquation {
    pub label: String,
    pub coefficients: Vec<BigRational>,
    pub rhs: SymExpr,
}

/// The weight-5 system for the values not given by closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight5System {
    pub unknowns: Vec<Composition>,
    pub equations: Vec<LinearEquation>,
}

/// Splits `sum = value` into unknown coefficients and a right-hand side,
/// evaluating every other term from `known`.
fn linearize(
    label: String,
    sum: &FormalSum,
    value: &SymExpr,
    unknowns: &[Composition],
    known: &HalfValues,
) -> LinearEquation {
    let mut coefficients = vec![BigRational::from_integer(BigInt::from(0)); unknowns.len()];
    let mut rhs = value.clone();
    for (p, c) in sum.iter() {
        if let [t] = p.terms() {
            if let Some(i) = unknowns.iter().position(|u| u == t.index()) {
                coefficients[i] += c;
                continue;
            }
        }
        let v = p.terms().iter().fold(SymExpr::int(1), |acc, t| acc.mul(&li_of(known, t)));
        rhs = rhs.sub(&v.scale(c));
    }
    LinearEquation { label, coefficients, rhs }
}

fn constant_weight_sum(w: u32) -> FormalSum {
    let mut s = FormalSum::zero();
    for c in enumerate_weight(w) {
        s.add_int(PolylogTerm::li(c, Point::Half).expect("Li at 1/2"), 1);
    }
    s
}

/// `Σ_{w(p)=w} Li_p(1/2) = (1 − 2^{1−w}) ζ(w)`, `w ≥ 2`.
fn constant_weight_value(w: u32) -> SymExpr {
    let c = BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(2).pow(w - 1));
    SymExpr::zeta(w).scale(&c)
}

fn weight5_known(golden: &[AppendixTable]) -> Result<HalfValues, SymbolicError> {
    let mut k = HalfValues::new();
    k.insert(comp(&[5]), li_half(5));
    k.insert(ones(5), SymExpr::ln_pow_over_factorial(5));
    for m in 0..=3u32 {
        k.insert(Composition::ones_two_ones(m as usize, 3 - m as usize), li121_closed(m, 3 - m));
    }
    k.insert(comp(&[1, 2, 2]), gen_func_values(2).one_twos[2].clone());
    // no closed form available here: taken from the reference table
    let t5 = golden.iter().find(|t| t.weight == 5).ok_or(SymbolicError::WeightOutOfRange(5))?;
    for c in [comp(&[1, 1, 3]), comp(&[1, 3, 1])] {
        let v = t5.get(&c, Column::LiHalf).ok_or_else(|| SymbolicError::ConsistencyFailure(format!("missing {c}")))?;
        k.insert(c, v.clone());
    }
    Ok(k)
}

/// Builds the weight-5 system from the constant-weight sum, three Hölder
/// convolutions and three shuffle products. `known` must hold every value of
/// weight `< 5` and the nine closed-form values of weight 5.
pub fn weight5_system(known: &HalfValues, mzv: &MzvTable) -> Result<Weight5System, SymbolicError> {
    let unknowns: Vec<Composition> =
        [&[4, 1][..], &[3, 2], &[3, 1, 1], &[2, 3], &[2, 2, 1], &[2, 1, 2], &[1, 4]].iter().map(|p| comp(p)).collect();
    let mut equations = vec![linearize(
        "sum of weight 5".into(),
        &constant_weight_sum(5),
        &constant_weight_value(5),
        &unknowns,
        known,
    )];
    for c in [comp(&[4, 1]), comp(&[3, 2]), comp(&[2, 3])] {
        let z = mzv.get(&c).ok_or_else(|| SymbolicError::ConsistencyFailure(format!("no zeta({c})")))?;
        equations.push(linearize(format!("holder zeta({c})"), &holder_at_half(&encode_word(&c))?, z, &unknowns, known));
    }
    for (a, b) in [(comp(&[1]), comp(&[4])), (comp(&[2]), comp(&[3])), (comp(&[1]), comp(&[2, 2]))] {
        let value = known[&a].mul(&known[&b]);
        let sum = shuffle_product(&a, &b, Point::Half)?;
        equations.push(linearize(format!("shuffle Li{a}*Li{b}"), &sum, &value, &unknowns, known));
    }
    Ok(Weight5System { unknowns, equations })
}

impl Weight5System {
    /// Exact solution; the coordinate space is the weight-5 monomial basis.
    pub fn solve(&self) -> Result<HalfValues, SymbolicError> {
        let basis = monomial_basis(5);
        let a: Vec<Vec<BigRational>> = self.equations.iter().map(|e| e.coefficients.clone()).collect();
        let b = self
            .equations
            .iter()
            .map(|e| {
                e.rhs.coords(&basis).ok_or_else(|| SymbolicError::ConsistencyFailure(format!("{}: {}", e.label, e.rhs)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let x = solve_exact(&a, &b)?;
        Ok(self.unknowns.iter().cloned().zip(x.iter().map(|row| SymExpr::from_coords(&basis, row))).collect())
    }
}

/// Checks every shuffle product and Hölder convolution of weight `w` against `values`.
pub fn check_relations(w: u32, values: &HalfValues, mzv: &MzvTable) -> Result<(), SymbolicError> {
    let value_of = |t: &PolylogTerm| li_of(values, t);
    let fail = |what: String| SymbolicError::ConsistencyFailure(what);
    for wa in 1..=w / 2 {
        for a in enumerate_weight(wa) {
            for b in enumerate_weight(w - wa) {
                let lhs = values[&a].mul(&values[&b]);
                let rhs = eval_formal_sum(&shuffle_product(&a, &b, Point::Half)?, value_of);
                if lhs != rhs {
                    return Err(fail(format!("shuffle Li{a}*Li{b}")));
                }
            }
        }
    }
    for c in enumerate_weight(w).into_iter().filter(|c| c.is_admissible()) {
        let z = mzv.get(&c).ok_or_else(|| fail(format!("no zeta({c})")))?;
        if &eval_formal_sum(&holder_at_half(&encode_word(&c))?, value_of) != z {
            return Err(fail(format!("holder zeta({c})")));
        }
    }
    if w >= 2 && eval_formal_sum(&constant_weight_sum(w), value_of) != constant_weight_value(w) {
        return Err(fail(format!("sum of weight {w}")));
    }
    Ok(())
}

fn low_weight_values(w: u32) -> HalfValues {
    let mut k = HalfValues::new();
    k.insert(ones(w), SymExpr::ln_pow_over_factorial(w));
    k.insert(comp(&[w]), li_half(w));
    if w >= 2 {
        for m in 0..=w - 2 {
            k.insert(Composition::ones_two_ones(m as usize, (w - 2 - m) as usize), li121_closed(m, w - 2 - m));
        }
    }
    if w == 4 {
        let li1 = li_half(1);
        let li2 = li_half(2);
        let li3 = li_half(3);
        let li22 = gen_func_values(2).twos[2].clone();
        // Li_2^2 = 2 Li_{2,2} + 4 Li_{3,1}; 2 Li_{1,3} = 2 Li_1 Li_3 − Li_2^2
        k.insert(comp(&[3, 1]), li2.mul(&li2).sub(&li22.scale_int(2)).scale(&q(1, 4)));
        k.insert(comp(&[1, 3]), li1.mul(&li3).sub(&li2.mul(&li2).scale(&q(1, 2))));
        k.insert(comp(&[2, 2]), li22);
    }
    k
}

/// `Li_s(1/2)` for all compositions of weight `≤ max_weight ≤ 5`.
pub fn li_half_values(max_weight: u32) -> Result<HalfValues, SymbolicError> {
    if max_weight > MAX_TABLE_WEIGHT {
        return Err(SymbolicError::WeightOutOfRange(max_weight));
    }
    let mzv = MzvTable::exact();
    let mut values = HalfValues::new();
    for w in 1..=max_weight.min(4) {
        values.extend(low_weight_values(w));
    }
    if max_weight == 5 {
        values.extend(weight5_known(&golden_tables()?)?);
        let solved = weight5_system(&values, &mzv)?.solve()?;
        values.extend(solved);
    }
    for w in 2..=max_weight {
        check_relations(w, &values, &mzv)?;
    }
    Ok(values)
}

/// `solve_weight5`: all sixteen values `Li_s(1/2)` of weight 5.
pub fn solve_weight5() -> Result<BTreeMap<Composition, SymExpr>, SymbolicError> {
    Ok(li_half_values(5)?.into_iter().filter(|(c, _)| c.weight() == 5).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixRow {
    pub composition: Composition,
    /// Indexed like [`Column::ALL`].
    pub values: [SymExpr; 4],
}

/// All four columns for one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixTable {
    pub weight: u32,
    pub basis: Vec<Monomial>,
    pub rows: Vec<AppendixRow>,
}

impl AppendixTable {
    pub fn get(&self, c: &Composition, col: Column) -> Option<&SymExpr> {
        let i = Column::ALL.iter().position(|x| *x == col)?;
        self.rows.iter().find(|r| &r.composition == c).map(|r| &r.values[i])
    }

    /// Coordinate vector of one cell.
    pub fn coords(&self, c: &Composition, col: Column) -> Option<Vec<BigRational>> {
        self.get(c, col)?.coords(&self.basis)
    }

    pub fn to_json(&self) -> Value {
        let mut rows = Map::new();
        for r in &self.rows {
            let mut cols = Map::new();
            for (col, v) in Column::ALL.iter().zip(&r.values) {
                let cells: Vec<String> = self.cell(v).iter().map(|x| x.to_string()).collect();
                cols.insert(col.label().into(), json!(cells));
            }
            rows.insert(r.composition.to_string(), Value::Object(cols));
        }
        json!({
            "weight": self.weight,
            "basis": self.basis.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "rows": rows,
        })
    }

    pub fn from_json(v: &Value) -> Result<AppendixTable, SymbolicError> {
        let bad = |reason: &str| SymbolicError::BadTable { line: 0, reason: reason.into() };
        let weight = v["weight"].as_u64().ok_or_else(|| bad("weight"))? as u32;
        let names: Vec<&str> = v["basis"]
            .as_array()
            .ok_or_else(|| bad("basis"))?
            .iter()
            .map(|x| x.as_str().ok_or_else(|| bad("basis entry")))
            .collect::<Result<_, _>>()?;
        let basis = resolve_basis(weight, &names).map_err(|e| bad(&e))?;
        let mut rows = Vec::new();
        for (key, cols) in v["rows"].as_object().ok_or_else(|| bad("rows"))? {
            let composition = Composition::parse(key)?;
            let mut values: [SymExpr; 4] = Default::default();
            for (i, col) in Column::ALL.iter().enumerate() {
                let cells = cols[col.label()].as_array().ok_or_else(|| bad(col.label()))?;
                let coords = cells
                    .iter()
                    .map(|x| x.as_str().and_then(|s| BigRational::from_str(s).ok()).ok_or_else(|| bad("cell")))
                    .collect::<Result<Vec<_>, _>>()?;
                if coords.len() != basis.len() {
                    return Err(bad("cell length"));
                }
                values[i] = SymExpr::from_coords(&basis, &coords);
            }
            rows.push(AppendixRow { composition, values });
        }
        Ok(AppendixTable { weight, basis, rows })
    }

    /// Appendix layout: one row per composition, one quoted vector per column.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,Li(1/2),Le(1/2),Li(-1),Le(-1)\n");
        for r in &self.rows {
            let mut fields = vec![format!("\"{}\"", r.composition)];
            for v in &r.values {
                let cells: Vec<String> = self.cell(v).iter().map(|x| x.to_string()).collect();
                fields.push(format!("\"({})\"", cells.join(",")));
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    fn cell(&self, v: &SymExpr) -> Vec<BigRational> {
        v.coords(&self.basis).expect("table values lie in the weight basis")
    }
}

impl fmt::Display for AppendixTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.basis.iter().map(|m| m.to_string()).collect();
        writeln!(f, "weight {}: ({})", self.weight, names.join(", "))?;
        let mut lines = vec![["s".to_string(), "Li(1/2)".into(), "Le(1/2)".into(), "Li(-1)".into(), "Le(-1)".into()]];
        for r in &self.rows {
            let mut line: [String; 5] = Default::default();
            line[0] = r.composition.to_string();
            for (i, v) in r.values.iter().enumerate() {
                let cells: Vec<String> = self.cell(v).iter().map(|x| x.to_string()).collect();
                line[i + 1] = format!("({})", cells.join(", "));
            }
            lines.push(line);
        }
        let widths: Vec<usize> = (0..5).map(|i| lines.iter().map(|l| l[i].len()).max().unwrap_or(0)).collect();
        for l in &lines {
            let cells: Vec<String> = l.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(f, "{}", cells.join("  ").trim_end())?;
        }
        Ok(())
    }
}

fn resolve_basis(weight: u32, names: &[&str]) -> Result<Vec<Monomial>, String> {
    let all = monomial_basis(weight);
    names
        .iter()
        .map(|n| all.iter().find(|m| m.to_string() == *n).cloned().ok_or_else(|| format!("unknown monomial {n}")))
        .collect()
}

/// The basis used for the weight-`w` table: the full monomial basis for `w ≤ 5`.
pub fn table_basis(w: u32) -> Vec<Monomial> {
    monomial_basis(w)
}

/// Regenerates the weight-`w` table: `Li(1/2)` from the closed forms and the
/// weight-5 solve, `Le` via the `Le → Li` expansion, `Li(−1)` via `z ↦ −z/(1−z)`.
pub fn appendix_tables(w: u32) -> Result<AppendixTable, SymbolicError> {
    if w == 0 || w > MAX_TABLE_WEIGHT {
        return Err(SymbolicError::WeightOutOfRange(w));
    }
    let half = li_half_values(w)?;
    let comps = enumerate_weight(w);
    let mut minus_one = HalfValues::new();
    for lo in 1..=w {
        for c in enumerate_weight(lo) {
            let v = li_transform_terms(&c)
                .into_iter()
                .fold(SymExpr::zero(), |acc, (t, s)| acc.add(&half[&t].scale_int(s)));
            minus_one.insert(c, v);
        }
    }
    let mut rows = Vec::with_capacity(comps.len());
    for c in comps {
        let le_half = eval_formal_sum(&le_to_li(&c, Point::Half)?, |t| li_of(&half, t));
        let le_minus = eval_formal_sum(&le_to_li(&c, Point::MinusOne)?, |t| li_of(&minus_one, t));
        rows.push(AppendixRow { values: [half[&c].clone(), le_half, minus_one[&c].clone(), le_minus], composition: c });
    }
    Ok(AppendixTable { weight: w, basis: table_basis(w), rows })
}

/// The embedded reference tables for weights 1 to 5.
pub fn golden_tables() -> Result<Vec<AppendixTable>, SymbolicError> {
    parse_tables(GOLDEN)
}

/// Parses the text table format:
///
/// ```text
/// weight 2
/// basis zeta(2) ln2^2
/// row 1,1 | 0 1/2 | 1/2 0 | 0 1/2 | -1/2 1/2
/// ```
pub fn parse_tables(text: &str) -> Result<Vec<AppendixTable>, SymbolicError> {
    let mut out: Vec<AppendixTable> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let bad = |reason: String| SymbolicError::BadTable { line: i + 1, reason };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
        match head {
            "weight" => {
                let w: u32 = rest.trim().parse().map_err(|_| bad(format!("bad weight {rest}")))?;
                out.push(AppendixTable { weight: w, basis: Vec::new(), rows: Vec::new() });
            }
            "basis" => {
                let t = out.last_mut().ok_or_else(|| bad("basis before weight".into()))?;
                let names: Vec<&str> = rest.split_whitespace().collect();
                t.basis = resolve_basis(t.weight, &names).map_err(bad)?;
            }
            "row" => {
                let t = out.last_mut().ok_or_else(|| bad("row before weight".into()))?;
                let fields: Vec<&str> = rest.split('|').map(str::trim).collect();
                if fields.len() != 5 {
                    return Err(bad(format!("expected 5 fields, got {}", fields.len())));
                }
                let composition = Composition::parse(fields[0]).map_err(|e| bad(e.to_string()))?;
                let mut values: [SymExpr; 4] = Default::default();
                for (k, f) in fields[1..].iter().enumerate() {
                    let coords = f
                        .split_whitespace()
                        .map(|x| BigRational::from_str(x).map_err(|_| bad(format!("bad rational {x}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    if coords.len() != t.basis.len() {
                        return Err(bad(format!("{} coordinates for a basis of {}", coords.len(), t.basis.len())));
                    }
                    values[k] = SymExpr::from_coords(&t.basis, &coords);
                }
                t.rows.push(AppendixRow { composition, values });
            }
            other => return Err(bad(format!("unknown directive {other}"))),
        }
    }
    Ok(out)
}

/// One mismatch between two tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDiff {
    pub weight: u32,
    pub composition: Composition,
    pub column: Column,
    pub expected: Option<SymExpr>,
    pub actual: Option<SymExpr>,
}

impl fmt::Display for CellDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |e: &Option<SymExpr>| e.as_ref().map_or("missing".to_string(), |x| x.to_string());
        write!(
            f,
            "weight {} row {} {}: expected {}, got {}",
            self.weight,
            self.composition,
            self.column,
            show(&self.expected),
            show(&self.actual)
        )
    }
}

/// Cell-by-cell comparison of a regenerated table against a reference one.
pub fn diff_tables(expected: &AppendixTable, actual: &AppendixTable) -> Vec<CellDiff> {
    let mut out = Vec::new();
    let mut comps: Vec<&Composition> =
        expected.rows.iter().chain(&actual.rows).map(|r| &r.composition).collect();
    comps.sort_by(|a, b| a.canonical_cmp(b));
    comps.dedup();
    for c in comps {
        for col in Column::ALL {
            let (e, a) = (expected.get(c, col), actual.get(c, col));
            if e != a {
                out.push(CellDiff {
                    weight: expected.weight,
                    composition: c.clone(),
                    column: col,
                    expected: e.cloned(),
                    actual: a.cloned(),
                });
            }
        }
    }
    out
}
