use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use polylog::algebra::{Composition, Point, Word};

#[derive(Debug, Parser)]
#[command(name = "polylog", version, about = "Generalized polylogarithms Li and Le: values, identities, tables, relations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Working precision in bits; used when --digits is not given.
    #[arg(long, global = true, env = "POLYLOG_PRECISION_BITS")]
    pub precision_bits: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Li,
    Le,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Li_s or Le_s at a point with a certified radius.
    Eval {
        function: Function,
        #[arg(value_parser = parse_composition)]
        composition: Composition,
        /// half, minus-one, one, or a rational p/q with |p/q| <= 1/2.
        #[arg(long, default_value = "half", allow_hyphen_values = true, value_parser = parse_at)]
        at: At,
        #[command(flatten)]
        precision: Precision,
    },
    /// Exact value table of one weight (columns Li/Le at 1/2 and -1).
    Table {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=5))]
        weight: u32,
    },
    /// Dual composition (letters swapped, word reversed).
    Dual {
        #[arg(value_parser = parse_composition)]
        composition: Composition,
    },
    /// Shuffle product of two compositions, or of two 0/1 words with --words.
    Shuffle {
        left: String,
        right: String,
        /// Read the arguments as words over {0, 1}.
        #[arg(long)]
        words: bool,
    },
    /// Li_s(-z/(1-z)) as an integer combination of Li_t(z).
    Transform {
        #[arg(value_parser = parse_composition)]
        composition: Composition,
    },
    /// zeta(s) as a combination of Li products at 1/2 (Hölder convolution).
    Holder {
        #[arg(value_parser = parse_composition)]
        composition: Composition,
    },
    /// Integer relation search among constants such as ln2, pi^2, zeta(3), li(2,1)@half.
    Pslq {
        #[arg(required = true, num_args = 2..)]
        constants: Vec<String>,
        #[arg(long, default_value_t = 1_000_000)]
        coefficient_bound: u64,
        #[command(flatten)]
        precision: Precision,
    },
    /// Run a named verification suite.
    Verify {
        suite: Suite,
        /// Upper weight (or index) for the suites that sweep one.
        #[arg(long)]
        max_weight: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Appendix,
    Involution,
    Gosper,
    Fibonacci,
    Weight6,
    #[value(name = "conjecture-w6")]
    ConjectureW6,
    #[value(name = "conjecture-w7")]
    ConjectureW7,
}

#[derive(Debug, Args)]
pub struct Precision {
    /// Decimal digits of the result.
    #[arg(long)]
    pub digits: Option<u32>,
}

pub const DEFAULT_DIGITS: u32 = 50;

/// A named point, or a rational inside the direct summation regime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum At {
    Named(Point),
    Rational(BigRational),
}

pub fn parse_composition(s: &str) -> Result<Composition, String> {
    Composition::parse(s).map_err(|e| e.to_string())
}

pub fn parse_word(s: &str) -> Result<Word, String> {
    Word::parse(s).map_err(|e| e.to_string())
}

pub fn parse_at(s: &str) -> Result<At, String> {
    match s.trim() {
        "half" | "1/2" => return Ok(At::Named(Point::Half)),
        "minus-one" | "-1" => return Ok(At::Named(Point::MinusOne)),
        "one" | "1" => return Ok(At::Named(Point::One)),
        _ => {}
    }
    let z = parse_rational(s)?;
    if z.abs() > BigRational::new(BigInt::one(), BigInt::from(2)) {
        return Err(format!("{s} is outside |z| <= 1/2; use half, minus-one or one for those points"));
    }
    Ok(At::Rational(z))
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}
