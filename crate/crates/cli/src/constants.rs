//! Constant expressions for `pslq`: products of atoms with optional powers.
//!
//! Atoms: `ln2`, `pi`, `zeta(k)` or `zeta(s1,...,sk)`, `li(s)@at`, `le(s)@at`,
//! `Li4(1/2)`-style single-index values, and rational literals.

use num_rational::BigRational;

use polylog::algebra::{Composition, Kind, Point};
use polylog::numerics::{const_ln2, const_pi, const_zeta, Ball, PrecisionContext};
use polylog::series::Evaluator;

use crate::args::{parse_at, parse_composition, parse_rational, At};
use crate::CliError;

/// Parsed form of one factor, before evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Atom {
    Ln2,
    Pi,
    Zeta(Composition),
    Value(Kind, Composition, At),
    Rational(BigRational),
}

pub struct Constant {
    pub text: String,
    factors: Vec<(Atom, u32)>,
}

pub fn parse_constant(text: &str) -> Result<Constant, CliError> {
    let bad = |why: String| CliError::Usage(format!("constant {text:?}: {why}"));
    let mut factors = Vec::new();
    for piece in split_top(text, '*') {
        let (base, power) = match split_power(piece) {
            Some((b, p)) => (b, p.parse::<u32>().map_err(|_| bad(format!("bad exponent {p:?}")))?),
            None => (piece, 1),
        };
        factors.push((parse_atom(base.trim()).map_err(bad)?, power));
    }
    Ok(Constant { text: text.to_string(), factors })
}

// Splits on `sep` outside parentheses.
fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

fn split_power(piece: &str) -> Option<(&str, &str)> {
    let i = piece.rfind('^')?;
    (!piece[i..].contains(')')).then(|| (&piece[..i], &piece[i + 1..]))
}

fn inside<'a>(text: &'a str, head: &str) -> Option<(&'a str, &'a str)> {
    let rest = text.strip_prefix(head)?.strip_prefix('(')?;
    let close = rest.find(')')?;
    Some((&rest[..close], &rest[close + 1..]))
}

fn parse_atom(s: &str) -> Result<Atom, String> {
    match s {
        "ln2" | "log2" => return Ok(Atom::Ln2),
        "pi" => return Ok(Atom::Pi),
        _ => {}
    }
    if let Some((args, rest)) = inside(s, "zeta") {
        if !rest.is_empty() {
            return Err(format!("trailing {rest:?}"));
        }
        return Ok(Atom::Zeta(parse_composition(args)?));
    }
    for (head, kind) in [("li", Kind::Li), ("le", Kind::Le)] {
        if let Some((args, rest)) = inside(s, head) {
            let at = match rest.strip_prefix('@') {
                Some(p) => parse_at(p)?,
                None if rest.is_empty() => At::Named(Point::Half),
                None => return Err(format!("expected @point after {head}(...), got {rest:?}")),
            };
            return Ok(Atom::Value(kind, parse_composition(args)?, at));
        }
    }
    // `Li4(1/2)` as printed in symbolic output
    if let Some(tail) = s.strip_prefix("Li") {
        if let Some((k, arg)) = tail.split_once('(') {
            if let (Ok(k), Some(arg)) = (k.parse::<u32>(), arg.strip_suffix(')')) {
                let c = Composition::new(vec![k]).map_err(|e| e.to_string())?;
                return Ok(Atom::Value(Kind::Li, c, parse_at(arg)?));
            }
        }
    }
    if s.starts_with(|c: char| c.is_ascii_digit() || c == '-') {
        return parse_rational(s).map(Atom::Rational);
    }
    Err(format!("unknown atom {s:?}"))
}

impl Constant {
    pub fn eval(&self, ev: &mut Evaluator) -> Result<Ball, CliError> {
        let ctx = ev.context().clone();
        let mut acc = Ball::from_int(1, ctx.working_bits());
        for (atom, power) in &self.factors {
            acc = &acc * &eval_atom(atom, ev, &ctx)?.pow(*power);
        }
        Ok(acc)
    }
}

fn eval_atom(atom: &Atom, ev: &mut Evaluator, ctx: &PrecisionContext) -> Result<Ball, CliError> {
    Ok(match atom {
        Atom::Ln2 => const_ln2(ctx),
        Atom::Pi => const_pi(ctx),
        Atom::Zeta(c) if c.len() == 1 => const_zeta(c.parts()[0], ctx)?,
        Atom::Zeta(c) => ev.mzv(c)?,
        Atom::Value(kind, c, at) => crate::commands::evaluate(ev, *kind, c, at)?,
        Atom::Rational(q) => Ball::from_rational(q, ctx.working_bits()),
    })
}
