use std::fmt;
use std::time::Instant;

use serde_json::{json, Value};

use polylog::algebra::{enumerate_basis, transform_matrix};
use polylog::numerics::{gosper_check, PrecisionContext};
use polylog::relation::{
    conjecture_check, expansion_config, expansion_digits, span_equivalence_check, weight6_experiment, PslqConfig,
    RelationStatus,
};
use polylog::series::Evaluator;
use polylog::symbolic::{appendix_tables, diff_tables, golden_tables};

use crate::args::Suite;
use crate::CliError;

pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

pub struct Report {
    pub suite: &'static str,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> =
            self.checks.iter().map(|c| json!({ "name": c.name, "ok": c.ok, "detail": c.detail })).collect();
        json!({ "suite": self.suite, "passed": self.passed(), "seconds": self.seconds, "checks": checks })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.ok { "OK  " } else { "FAIL" }, c.name, c.detail)?;
        }
        let passed = self.checks.iter().filter(|c| c.ok).count();
        write!(f, "{}: {passed}/{} checks passed ({:.1}s)", self.suite, self.checks.len(), self.seconds)
    }
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), ok, detail: detail.into() }
}

/// Runs one suite. A failed check is reported as [`CliError::Verify`]
/// carrying the full report text.
pub fn run(suite: Suite, max: Option<u32>) -> Result<Report, CliError> {
    let start = Instant::now();
    let (name, checks) = match suite {
        Suite::Appendix => ("appendix", appendix()?),
        Suite::Involution => ("involution", involution(max.unwrap_or(8))?),
        Suite::Gosper => ("gosper", gosper(max.unwrap_or(40))),
        Suite::Fibonacci => ("fibonacci", fibonacci(max.unwrap_or(25))),
        Suite::Weight6 => ("weight6", weight6()?),
        Suite::ConjectureW6 => ("conjecture-w6", conjecture(6)?),
        Suite::ConjectureW7 => ("conjecture-w7", conjecture(7)?),
    };
    let report = Report { suite: name, checks, seconds: start.elapsed().as_secs_f64() };
    if report.passed() {
        Ok(report)
    } else {
        Err(CliError::Verify(report.to_string()))
    }
}

fn appendix() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for golden in golden_tables()? {
        let regenerated = appendix_tables(golden.weight)?;
        let diffs = diff_tables(&golden, &regenerated);
        let cells = 4 * golden.rows.len();
        let detail = match diffs.first() {
            None => format!("{cells} cells identical"),
            Some(d) => format!("{} of {cells} cells differ; first: {d}", diffs.len()),
        };
        out.push(check(format!("weight {}", golden.weight), diffs.is_empty(), detail));
    }
    Ok(out)
}

fn involution(max: u32) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for w in 1..=max {
        let t = transform_matrix(w)?;
        let square = t.mul(&t).is_identity();
        let mut detail = format!("T^2 = I on {} compositions", t.dim());
        let mut ok = square;
        if w <= 8 {
            let spans = span_equivalence_check(w)?;
            ok &= spans;
            detail.push_str(if spans { "; B_w spans at 1/2 and -1 agree" } else { "; B_w span check failed" });
        }
        out.push(check(format!("weight {w}"), ok, detail));
    }
    Ok(out)
}

fn gosper(max: u32) -> Vec<Check> {
    let failed: Vec<u32> = (1..=max).filter(|&r| !gosper_check(r)).collect();
    vec![check(format!("r = 1..{max}"), failed.is_empty(), if failed.is_empty() { "exact".into() } else { format!("fails at {failed:?}") })]
}

fn fibonacci(max: u32) -> Vec<Check> {
    let (mut a, mut b) = (1usize, 1usize);
    let mut bad = Vec::new();
    for w in 1..=max {
        let n = enumerate_basis(w).len();
        if n != b {
            bad.push(format!("|B_{w}| = {n}, f_{w} = {b}"));
        }
        (a, b) = (b, a + b);
    }
    vec![check(format!("|B_w| = f_w for w <= {max}"), bad.is_empty(), if bad.is_empty() { "all equal".into() } else { bad.join("; ") })]
}

fn weight6() -> Result<Vec<Check>, CliError> {
    let ctx = PrecisionContext::from_digits(300);
    let r = weight6_experiment(&ctx, &PslqConfig::default())?;
    let alone = r.alone.status == RelationStatus::NoneWithinBound;
    let combined = r.combined_expansion();
    Ok(vec![
        check("Li[2,2,1,1](1/2) alone", alone, r.alone.status_name()),
        check(
            "Li[2,2,1,1](1/2) + 9/4 Le[5,1](-1)",
            combined.is_some(),
            combined.map_or_else(|| r.combined.status_name().to_string(), |e| format!("= {e}")),
        ),
    ])
}

fn conjecture(w: u32) -> Result<Vec<Check>, CliError> {
    let digits = expansion_digits(w);
    let ctx = PrecisionContext::from_digits(digits);
    let mut fine = Evaluator::new(&PrecisionContext::from_digits(2 * digits));
    let mut out = Vec::new();
    for e in conjecture_check(w, &ctx, &expansion_config(w))? {
        let (ok, detail) = match e.max_denominator() {
            Some(d) => {
                let confirmed = e.confirm(&mut fine, digits)?;
                let note = if confirmed { "confirmed" } else { "NOT confirmed" };
                (e.succeeded() && confirmed, format!("Found, largest denominator {d}, {note} at {} digits", 2 * digits))
            }
            None => (false, e.result.status_name().to_string()),
        };
        out.push(check(format!("Li[{}](1/2)", e.target), ok, detail));
    }
    Ok(out)
}
