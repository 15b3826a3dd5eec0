use num_traits::Signed;
use serde_json::{json, Value};

use polylog::algebra::{
    dual, encode_word, holder_at_half, li_transform, shuffle, shuffle_product, Composition, FormalSum, Kind, Point,
    PolylogTerm,
};
use polylog::numerics::{format_sci_upper, Ball, PrecisionContext};
use polylog::relation::{pslq, PslqConfig};
use polylog::series::Evaluator;
use polylog::symbolic::appendix_tables;

use crate::args::{parse_composition, parse_word, At, Cli, Command, Format, Function, Precision, DEFAULT_DIGITS};
use crate::constants::parse_constant;
use crate::{verify, CliError};

/// Runs one invocation and returns the text to print.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let fmt = cli.format;
    if fmt == Format::Csv && !matches!(cli.command, Command::Table { .. }) {
        return Err(CliError::Usage("--format csv is only available for `table`".into()));
    }
    match &cli.command {
        Command::Eval { function, composition, at, precision } => {
            let (ctx, digits) = context(precision, cli.precision_bits)?;
            let kind = kind_of(*function);
            let mut ev = Evaluator::new(&ctx);
            let v = evaluate(&mut ev, kind, composition, at)?;
            let name = format!("{}[{composition}]({})", kind_name(kind), at_text(at));
            Ok(match fmt {
                Format::Json => pretty(&json!({ "value": name, "ball": v, "digits": digits })),
                _ => format!("{name} = {v:.prec$}", prec = digits as usize),
            })
        }
        Command::Table { weight } => {
            let t = appendix_tables(*weight)?;
            Ok(match fmt {
                Format::Text => t.to_string(),
                Format::Json => pretty(&t.to_json()),
                Format::Csv => t.to_csv(),
            })
        }
        Command::Dual { composition } => {
            let d = dual(composition);
            Ok(match fmt {
                Format::Json => pretty(&json!({ "composition": composition, "dual": d })),
                _ => d.to_string(),
            })
        }
        Command::Shuffle { left, right, words } => {
            if *words {
                let (u, v) = (parse_word(left).map_err(CliError::Usage)?, parse_word(right).map_err(CliError::Usage)?);
                let sum = shuffle(&u, &v);
                Ok(match fmt {
                    Format::Json => {
                        let terms: Vec<Value> =
                            sum.iter().map(|(w, m)| json!({ "word": w, "multiplicity": m.to_string() })).collect();
                        pretty(&json!({ "left": u, "right": v, "terms": terms }))
                    }
                    _ => sum.iter().map(|(w, m)| format!("{m} {w}\n")).collect(),
                })
            } else {
                let a = parse_composition(left).map_err(CliError::Usage)?;
                let b = parse_composition(right).map_err(CliError::Usage)?;
                Ok(formal_sum_output(&shuffle_product(&a, &b, Point::SymbolicZ)?, fmt))
            }
        }
        Command::Transform { composition } => Ok(formal_sum_output(&li_transform(composition), fmt)),
        Command::Holder { composition } => {
            if !composition.is_admissible() {
                return Err(CliError::Compute(format!("zeta({composition}) diverges: the first part must be at least 2")));
            }
            Ok(formal_sum_output(&holder_at_half(&encode_word(composition))?, fmt))
        }
        Command::Pslq { constants, coefficient_bound, precision } => {
            let (ctx, _) = context(precision, cli.precision_bits)?;
            let parsed = constants.iter().map(|c| parse_constant(c)).collect::<Result<Vec<_>, _>>()?;
            let mut ev = Evaluator::new(&ctx);
            let xs = parsed.iter().map(|c| c.eval(&mut ev)).collect::<Result<Vec<_>, _>>()?;
            let r = pslq(&xs, &PslqConfig::with_bound(*coefficient_bound))?;
            Ok(match fmt {
                Format::Json => {
                    let mut j = r.to_json();
                    j["constants"] = json!(constants);
                    pretty(&j)
                }
                _ => match r.relation() {
                    Some(v) => {
                        let terms: Vec<String> =
                            v.iter().zip(&parsed).filter(|(m, _)| m.sign() != num_bigint::Sign::NoSign).map(|(m, c)| format!("({m})*{}", c.text)).collect();
                        format!("Found: {} = 0\n|residual| <= {}", terms.join(" + "), format_sci_upper(&(r.residual.mid().abs() + r.residual.rad())))
                    }
                    None => format!("{} (coefficient bound {coefficient_bound}, {} bits)", r.status_name(), r.bits),
                },
            })
        }
        Command::Verify { suite, max_weight } => {
            let report = verify::run(*suite, *max_weight)?;
            Ok(match fmt {
                Format::Json => pretty(&report.to_json()),
                _ => report.to_string(),
            })
        }
    }
}

fn context(p: &Precision, bits: Option<u32>) -> Result<(PrecisionContext, u32), CliError> {
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(CliError::Usage(format!("{what} must be positive"))) };
    match (p.digits, bits) {
        (Some(d), _) => {
            check(d > 0, "--digits")?;
            Ok((PrecisionContext::from_digits(d), d))
        }
        (None, Some(b)) => {
            check(b > 0, "POLYLOG_PRECISION_BITS")?;
            let ctx = PrecisionContext::from_bits(b);
            let digits = (f64::from(b) * std::f64::consts::LOG10_2).floor().max(1.0) as u32;
            Ok((ctx, digits))
        }
        (None, None) => Ok((PrecisionContext::from_digits(DEFAULT_DIGITS), DEFAULT_DIGITS)),
    }
}

fn kind_of(f: Function) -> Kind {
    match f {
        Function::Li => Kind::Li,
        Function::Le => Kind::Le,
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Li => "Li",
        Kind::Le => "Le",
    }
}

fn at_text(at: &At) -> String {
    match at {
        At::Named(p) => p.to_string(),
        At::Rational(q) => q.to_string(),
    }
}

/// `Li_s` or `Le_s` at a named point or inside `|z| ≤ 1/2`.
pub fn evaluate(ev: &mut Evaluator, kind: Kind, c: &Composition, at: &At) -> Result<Ball, CliError> {
    Ok(match at {
        At::Named(p) => ev.term(&PolylogTerm::new(kind, c.clone(), *p)?)?,
        At::Rational(z) => ev.term_at(&PolylogTerm::new(kind, c.clone(), Point::SymbolicZ)?, z)?,
    })
}

fn formal_sum_output(sum: &FormalSum, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let terms: Vec<Value> = sum
                .iter()
                .map(|(p, c)| json!({ "coefficient": c.to_string(), "product": p.to_string() }))
                .collect();
            pretty(&json!({ "terms": terms }))
        }
        _ => sum.iter().map(|(p, c)| format!("{c} {p}\n")).collect(),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}
