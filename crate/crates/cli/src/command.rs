//! Typed commands built from the untyped syntax trees.

use std::collections::BTreeMap;
use std::fmt;

use euclid_core::calculus::{Direction, Func, FuncExpr, SymReal};
use euclid_core::exponent::Exponent;
use euclid_core::numerosity::Label;
use euclid_core::ordinal::Ordinal;
use euclid_core::rational::{self, Rational};
use euclid_core::{ArithmeticError, EuclideanNumber, SeqExpr, SetExpr};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::syntax::{tokenize, BinOp, Expr, Node, ParseError, Parser, Tok};

/// Arithmetic expression over the number field, evaluated on execution.
#[derive(Clone, Debug, PartialEq)]
pub enum NumExpr {
    Const(EuclideanNumber),
    Alpha,
    Eta,
    Omega,
    Neg(Box<NumExpr>),
    Add(Box<NumExpr>, Box<NumExpr>),
    Sub(Box<NumExpr>, Box<NumExpr>),
    Mul(Box<NumExpr>, Box<NumExpr>),
    Div(Box<NumExpr>, Box<NumExpr>),
    Pow(Box<NumExpr>, Box<NumExpr>),
}

impl NumExpr {
    pub fn eval(&self) -> Result<EuclideanNumber, ArithmeticError> {
        Ok(match self {
            NumExpr::Const(c) => c.clone(),
            NumExpr::Alpha => EuclideanNumber::alpha(),
            NumExpr::Eta => EuclideanNumber::eta(),
            NumExpr::Omega => EuclideanNumber::omega(),
            NumExpr::Neg(a) => -a.eval()?,
            NumExpr::Add(a, b) => a.eval()? + b.eval()?,
            NumExpr::Sub(a, b) => a.eval()? - b.eval()?,
            NumExpr::Mul(a, b) => a.eval()? * b.eval()?,
            NumExpr::Div(a, b) => a.eval()?.checked_div(&b.eval()?)?,
            NumExpr::Pow(a, b) => power(&a.eval()?, &b.eval()?)?,
        })
    }
}

fn rational_power(base: &EuclideanNumber, e: &Rational) -> Result<EuclideanNumber, ArithmeticError> {
    let p = e.numer().to_i64();
    let q = e.denom().to_u32();
    match (p, q) {
        (Some(p), Some(1)) => base.pow(p),
        (Some(p), Some(q)) => base.root(q)?.pow(p),
        _ => Err(ArithmeticError::Unsupported(String::from("exponent too large"))),
    }
}

/// `base^e` for rational `e`, and `2^(c·α + r)`.
fn power(base: &EuclideanNumber, e: &EuclideanNumber) -> Result<EuclideanNumber, ArithmeticError> {
    if let Some(r) = e.as_rational() {
        return rational_power(base, &r);
    }
    let unsupported = || {
        ArithmeticError::Unsupported(format!(
            "power with exponent {}: only rational exponents and 2^(c·α + r) are available",
            e
        ))
    };
    if base.as_rational() != Some(rational::int(2)) {
        return Err(unsupported());
    }
    let series = e.as_series().ok_or_else(unsupported)?;
    let alpha = Exponent::alpha_pow(Rational::one());
    let mut c = Rational::zero();
    let mut r = Rational::zero();
    for (exp, coef) in series.iter() {
        if *exp == alpha {
            c = coef.clone();
        } else if exp.is_zero() {
            r = coef.clone();
        } else {
            return Err(unsupported());
        }
    }
    let two_pow = EuclideanNumber::monomial(Exponent::two_alpha_pow(c), Rational::one());
    Ok(two_pow * rational_power(base, &r)?)
}

impl fmt::Display for NumExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumExpr::Const(c) => write!(f, "{}", crate::render::number(c)),
            NumExpr::Alpha => write!(f, "α"),
            NumExpr::Eta => write!(f, "η"),
            NumExpr::Omega => write!(f, "ω"),
            NumExpr::Neg(a) => write!(f, "neg({})", a),
            NumExpr::Add(a, b) => write!(f, "add({}, {})", a, b),
            NumExpr::Sub(a, b) => write!(f, "sub({}, {})", a, b),
            NumExpr::Mul(a, b) => write!(f, "mul({}, {})", a, b),
            NumExpr::Div(a, b) => write!(f, "div({}, {})", a, b),
            NumExpr::Pow(a, b) => write!(f, "pow({}, {})", a, b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivKind {
    Plus,
    Minus,
    Mean,
    Grid,
}

impl DerivKind {
    fn from_word(w: &str) -> Option<Self> {
        Some(match w {
            "plus" | "right" => DerivKind::Plus,
            "minus" | "left" => DerivKind::Minus,
            "mean" => DerivKind::Mean,
            "grid" => DerivKind::Grid,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            DerivKind::Plus => "plus",
            DerivKind::Minus => "minus",
            DerivKind::Mean => "mean",
            DerivKind::Grid => "grid",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Eval(NumExpr),
    Classify(NumExpr),
    St(NumExpr),
    Ctr(NumExpr),
    Let(String, NumExpr),
    Num(SetExpr),
    Subset(SetExpr, SetExpr),
    Ord(Ordinal),
    Ord2Num(Ordinal),
    Deriv(DerivKind, FuncExpr, SymReal),
    Derivable(FuncExpr, SymReal),
    Differentiable(FuncExpr, SymReal),
    Expand(FuncExpr, SymReal, Direction, Option<i64>),
    Integ(FuncExpr, SymReal, SymReal),
    IntegNum(FuncExpr, SymReal, SymReal, Option<u64>),
    Sum(FuncExpr, NumExpr),
    Alim(SeqExpr),
    Help,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::Classify(_) => "classify",
            Command::St(_) => "st",
            Command::Ctr(_) => "ctr",
            Command::Let(..) => "let",
            Command::Num(_) => "num",
            Command::Subset(..) => "subset",
            Command::Ord(_) => "ord",
            Command::Ord2Num(_) => "ord2num",
            Command::Deriv(..) => "deriv",
            Command::Derivable(..) => "derivable",
            Command::Differentiable(..) => "differentiable",
            Command::Expand(..) => "expand",
            Command::Integ(..) => "integ",
            Command::IntegNum(..) => "integ_num",
            Command::Sum(..) => "sum",
            Command::Alim(_) => "alim",
            Command::Help => "help",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            Command::Eval(e) | Command::Classify(e) | Command::St(e) | Command::Ctr(e) => {
                write!(f, "{}({})", name, e)
            }
            Command::Let(n, e) => write!(f, "let({}, {})", n, e),
            Command::Num(s) => write!(f, "num({})", s),
            Command::Subset(a, b) => write!(f, "subset({}, {})", a, b),
            Command::Ord(o) | Command::Ord2Num(o) => write!(f, "{}({})", name, o),
            Command::Deriv(k, g, p) => write!(f, "deriv({}, {}, {})", k.name(), g, p),
            Command::Derivable(g, p) | Command::Differentiable(g, p) => {
                write!(f, "{}({}, {})", name, g, p)
            }
            Command::Expand(g, p, d, n) => {
                write!(f, "expand({}, {}, {:?}", g, p, d)?;
                if let Some(n) = n {
                    write!(f, ", {}", n)?;
                }
                write!(f, ")")
            }
            Command::Integ(g, a, b) => write!(f, "integ({}, {}, {})", g, a, b),
            Command::IntegNum(g, a, b, n) => {
                write!(f, "integ_num({}, {}, {}", g, a, b)?;
                if let Some(n) = n {
                    write!(f, ", {}", n)?;
                }
                write!(f, ")")
            }
            Command::Sum(t, u) => write!(f, "sum({}, {})", t, u),
            Command::Alim(s) => write!(f, "alim({})", s),
            Command::Help => write!(f, "help"),
        }
    }
}

/// Named numbers bound with `let`.
pub type Bindings = BTreeMap<String, EuclideanNumber>;

const COMMANDS: &[&str] = &[
    "eval",
    "classify",
    "st",
    "ctr",
    "let",
    "num",
    "subset",
    "ord",
    "ord2num",
    "deriv",
    "derivable",
    "differentiable",
    "expand",
    "integ",
    "integ_num",
    "sum",
    "alim",
    "help",
];

const RESERVED: &[&str] = &[
    "alpha", "α", "eta", "η", "omega", "ω", "w", "x", "k", "n", "pi", "π", "e", "ε", "at", "from", "to",
];

/// Parses one input line without bindings.
pub fn parse(input: &str) -> Result<Command, ParseError> {
    parse_with(input, &Bindings::new())
}

/// Parses one input line. A line that does not start with a command name
/// is evaluated as a number expression.
pub fn parse_with(input: &str, bindings: &Bindings) -> Result<Command, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(tokens);
    if p.at_end() {
        return Err(p.unexpected("a command"));
    }
    let name = match &p.peek().tok {
        Tok::Ident(s) if COMMANDS.contains(&s.as_str()) => s.clone(),
        _ => {
            let e = p.expr()?;
            finish(&p)?;
            return Ok(Command::Eval(num_expr(&e, bindings)?));
        }
    };
    let name_column = p.advance().column;
    if name == "help" {
        finish(&p)?;
        return Ok(Command::Help);
    }
    if name == "let" {
        let t = p.advance();
        let var = match t.tok {
            Tok::Ident(v) => v,
            other => return Err(ParseError::new(t.column, format!("expected a name, found {}", other))),
        };
        if RESERVED.contains(&var.as_str()) || COMMANDS.contains(&var.as_str()) {
            return Err(ParseError::new(t.column, format!("'{}' is reserved", var)));
        }
        p.expect_sym('=')?;
        let e = p.expr()?;
        finish(&p)?;
        return Ok(Command::Let(var, num_expr(&e, bindings)?));
    }
    p.x_is_cross = matches!(name.as_str(), "num" | "subset");
    let args = arguments(&mut p)?;
    let arity = |lo: usize, hi: usize| -> Result<(), ParseError> {
        if args.len() < lo || args.len() > hi {
            let expected = if lo == hi {
                format!("{}", lo)
            } else {
                format!("{} to {}", lo, hi)
            };
            Err(ParseError::new(
                name_column,
                format!("{} takes {} argument(s), found {}", name, expected, args.len()),
            ))
        } else {
            Ok(())
        }
    };
    Ok(match name.as_str() {
        "eval" | "classify" | "st" | "ctr" => {
            arity(1, 1)?;
            let e = num_expr(&args[0], bindings)?;
            match name.as_str() {
                "eval" => Command::Eval(e),
                "classify" => Command::Classify(e),
                "st" => Command::St(e),
                _ => Command::Ctr(e),
            }
        }
        "num" => {
            arity(1, 1)?;
            Command::Num(set_expr(&args[0])?)
        }
        "subset" => {
            arity(2, 2)?;
            Command::Subset(set_expr(&args[0])?, set_expr(&args[1])?)
        }
        "ord" | "ord2num" => {
            arity(1, 1)?;
            let o = ordinal(&args[0])?;
            if name == "ord" {
                Command::Ord(o)
            } else {
                Command::Ord2Num(o)
            }
        }
        "deriv" => {
            arity(3, 3)?;
            let kind = args[0]
                .ident()
                .and_then(DerivKind::from_word)
                .ok_or_else(|| ParseError::new(args[0].column, "expected plus, minus, mean or grid"))?;
            Command::Deriv(kind, func(&args[1], "x", bindings)?, point(&args[2], bindings)?)
        }
        "derivable" | "differentiable" => {
            arity(2, 2)?;
            let f = func(&args[0], "x", bindings)?;
            let x0 = point(&args[1], bindings)?;
            if name == "derivable" {
                Command::Derivable(f, x0)
            } else {
                Command::Differentiable(f, x0)
            }
        }
        "expand" => {
            arity(3, 4)?;
            let dir = match args[2].ident() {
                Some("plus") => Direction::Plus,
                Some("minus") => Direction::Minus,
                Some("generic") => Direction::Generic,
                _ => return Err(ParseError::new(args[2].column, "expected plus, minus or generic")),
            };
            let order = match args.get(3) {
                Some(a) => Some(small_integer(a, 1, 64)?),
                None => None,
            };
            Command::Expand(func(&args[0], "x", bindings)?, point(&args[1], bindings)?, dir, order)
        }
        "integ" => {
            arity(3, 3)?;
            Command::Integ(
                func(&args[0], "x", bindings)?,
                point(&args[1], bindings)?,
                point(&args[2], bindings)?,
            )
        }
        "integ_num" => {
            arity(3, 4)?;
            let n = match args.get(3) {
                Some(a) => Some(small_integer(a, 1, 1_000_000_000)? as u64),
                None => None,
            };
            Command::IntegNum(
                func(&args[0], "x", bindings)?,
                point(&args[1], bindings)?,
                point(&args[2], bindings)?,
                n,
            )
        }
        "sum" => {
            arity(2, 2)?;
            Command::Sum(func(&args[0], "k", bindings)?, num_expr(&args[1], bindings)?)
        }
        "alim" => {
            arity(1, 1)?;
            Command::Alim(seq_expr(&args[0])?)
        }
        _ => unreachable!("command list"),
    })
}

fn finish(p: &Parser) -> Result<(), ParseError> {
    if p.at_end() {
        Ok(())
    } else {
        Err(p.unexpected("end of input"))
    }
}

/// Either `(a, b, …)` spanning the rest of the line, or words separated by
/// commas and the connectives `at`, `from`, `to`.
fn arguments(p: &mut Parser) -> Result<Vec<Expr>, ParseError> {
    if p.peek().tok == Tok::Sym('(') {
        let save = p.position();
        p.advance();
        let mut args = Vec::new();
        let mut ok = true;
        if !p.eat_sym(')') {
            loop {
                match p.expr() {
                    Ok(e) => args.push(e),
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
                if p.eat_sym(')') {
                    break;
                }
                if !p.eat_sym(',') {
                    ok = false;
                    break;
                }
            }
        }
        if ok && p.at_end() {
            return Ok(args);
        }
        p.set_position(save);
    }
    let mut args = Vec::new();
    loop {
        args.push(p.expr()?);
        if p.at_end() {
            return Ok(args);
        }
        if !(p.eat_sym(',') || p.eat_ident("at") || p.eat_ident("from") || p.eat_ident("to")) {
            // a bare word such as `mean` may be followed directly by the
            // next argument
            if args.last().and_then(|a| a.ident()).is_none() {
                return Err(p.unexpected("',' or end of input"));
            }
        }
    }
}

fn err(e: &Expr, message: impl Into<String>) -> ParseError {
    ParseError::new(e.column, message)
}

fn small_integer(e: &Expr, lo: i64, hi: i64) -> Result<i64, ParseError> {
    match &e.node {
        Node::Number(r) if r.is_integer() => match r.to_integer().to_i64() {
            Some(v) if v >= lo && v <= hi => Ok(v),
            _ => Err(err(e, format!("expected an integer from {} to {}", lo, hi))),
        },
        _ => Err(err(e, "expected an integer")),
    }
}

pub fn num_expr(e: &Expr, bindings: &Bindings) -> Result<NumExpr, ParseError> {
    let go = |x: &Expr| num_expr(x, bindings).map(Box::new);
    Ok(match &e.node {
        Node::Number(r) => NumExpr::Const(EuclideanNumber::from_rational(r.clone())),
        Node::Ident(s) => match s.as_str() {
            "alpha" | "α" => NumExpr::Alpha,
            "eta" | "η" => NumExpr::Eta,
            "omega" | "ω" => NumExpr::Omega,
            other => match bindings.get(other) {
                Some(v) => NumExpr::Const(v.clone()),
                None => return Err(err(e, format!("unknown name '{}'", other))),
            },
        },
        Node::Neg(a) => NumExpr::Neg(go(a)?),
        Node::Binary(op, a, b) => match op {
            BinOp::Add => NumExpr::Add(go(a)?, go(b)?),
            BinOp::Sub => NumExpr::Sub(go(a)?, go(b)?),
            BinOp::Mul => NumExpr::Mul(go(a)?, go(b)?),
            BinOp::Div => NumExpr::Div(go(a)?, go(b)?),
            BinOp::Pow => NumExpr::Pow(go(a)?, go(b)?),
            BinOp::Union | BinOp::Cross => return Err(err(e, "set operators are not allowed in a number expression")),
        },
        Node::Call { name, .. } => return Err(err(e, format!("'{}' is not a function on numbers", name))),
        Node::Root(_) | Node::Braces(_) => return Err(err(e, "expected a number expression")),
    })
}

fn positive_index(e: &Expr) -> Result<u64, ParseError> {
    small_integer(e, 0, i64::MAX).map(|v| v as u64)
}

pub fn set_expr(e: &Expr) -> Result<SetExpr, ParseError> {
    Ok(match &e.node {
        Node::Ident(s) => match s.as_str() {
            "N+" | "Nplus" | "ℕ⁺" => SetExpr::NPlus,
            "N" | "ℕ" => SetExpr::N,
            "Z" | "ℤ" => SetExpr::Z,
            "Q" | "ℚ" => SetExpr::Q,
            other => return Err(err(e, format!("unknown set '{}'", other))),
        },
        Node::Braces(items) => {
            if items.is_empty() {
                return Ok(SetExpr::Empty);
            }
            let mut labels = Vec::new();
            for it in items {
                labels.push(match &it.node {
                    Node::Number(r) if r.is_integer() => Label::Int(r.to_integer()),
                    Node::Neg(inner) => match &inner.node {
                        Node::Number(r) if r.is_integer() => Label::Int(-r.to_integer()),
                        _ => return Err(err(it, "expected an integer or a name")),
                    },
                    Node::Ident(s) => Label::Sym(s.clone()),
                    _ => return Err(err(it, "expected an integer or a name")),
                });
            }
            SetExpr::finite(labels).map_err(|x| err(e, format!("{}", x)))?
        }
        Node::Call { name, args, closing } => {
            let one = |args: &[Expr]| -> Result<(), ParseError> {
                if args.len() == 1 {
                    Ok(())
                } else {
                    Err(err(e, format!("{} takes one argument", name)))
                }
            };
            if *closing == ']' && name != "Q" {
                return Err(err(e, "expected ')'"));
            }
            match name.as_str() {
                "Q" => {
                    if args.len() != 2 || *closing != ']' {
                        return Err(err(e, "expected an interval Q(q,q+1]"));
                    }
                    let lo = rational_literal(&args[0])?;
                    let hi = rational_literal(&args[1])?;
                    if hi != &lo + Rational::one() {
                        return Err(err(&args[1], "the interval must have length 1"));
                    }
                    SetExpr::QInterval(lo)
                }
                "mult" => {
                    one(args)?;
                    SetExpr::MultiplesOf(positive_index(&args[0])?)
                }
                "pow_k" | "pow" => {
                    one(args)?;
                    SetExpr::KthPowers(positive_index(&args[0])?)
                }
                "Pfin" => {
                    one(args)?;
                    match set_expr(&args[0])? {
                        SetExpr::NPlus => SetExpr::FinPowerSetNPlus,
                        _ => return Err(err(&args[0], "only Pfin(N+) is available")),
                    }
                }
                "tag" => {
                    one(args)?;
                    SetExpr::Tagged(label_text(&args[0])?)
                }
                other => return Err(err(e, format!("unknown set constructor '{}'", other))),
            }
        }
        Node::Binary(BinOp::Union, a, b) => SetExpr::union(set_expr(a)?, set_expr(b)?),
        Node::Binary(BinOp::Cross | BinOp::Mul, a, b) => {
            let left = set_expr(a)?;
            match &b.node {
                Node::Call { name, args, .. } if name == "tag" && args.len() == 1 => {
                    SetExpr::product_singleton(left, label_text(&args[0])?)
                }
                _ => SetExpr::product(left, set_expr(b)?),
            }
        }
        _ => return Err(err(e, "expected a set expression")),
    })
}

fn label_text(e: &Expr) -> Result<String, ParseError> {
    match &e.node {
        Node::Ident(s) => Ok(s.clone()),
        Node::Number(r) if r.is_integer() => Ok(r.to_string()),
        _ => Err(err(e, "expected a tag name")),
    }
}

fn rational_literal(e: &Expr) -> Result<Rational, ParseError> {
    match &e.node {
        Node::Number(r) => Ok(r.clone()),
        Node::Neg(a) => Ok(-rational_literal(a)?),
        Node::Binary(BinOp::Div, a, b) => {
            let d = rational_literal(b)?;
            if d.is_zero() {
                return Err(err(b, "division by zero"));
            }
            Ok(rational_literal(a)? / d)
        }
        _ => Err(err(e, "expected a rational number")),
    }
}

pub fn ordinal(e: &Expr) -> Result<Ordinal, ParseError> {
    Ok(match &e.node {
        Node::Number(r) if r.is_integer() && !r.is_negative() => {
            Ordinal::from_natural(r.to_integer().to_biguint().expect("nonnegative"))
        }
        Node::Ident(s) if matches!(s.as_str(), "w" | "ω" | "omega") => Ordinal::omega(),
        Node::Binary(BinOp::Add, a, b) => ordinal(a)?.natural_sum(&ordinal(b)?),
        Node::Binary(BinOp::Mul, a, b) => ordinal(a)?.natural_prod(&ordinal(b)?),
        Node::Binary(BinOp::Pow, a, b) => {
            let base = ordinal(a)?;
            let exp = ordinal(b)?;
            if base == Ordinal::omega() {
                Ordinal::omega_pow(exp)
            } else {
                let k = exp
                    .as_natural()
                    .and_then(|k| k.to_u32())
                    .ok_or_else(|| err(b, "only ω may be raised to an infinite power"))?;
                let mut acc = Ordinal::one();
                for _ in 0..k {
                    acc = acc.natural_prod(&base);
                }
                acc
            }
        }
        _ => return Err(err(e, "expected an ordinal: naturals, ω, +, *, ^")),
    })
}

pub fn seq_expr(e: &Expr) -> Result<SeqExpr, ParseError> {
    let go = |x: &Expr| seq_expr(x).map(Box::new);
    Ok(match &e.node {
        Node::Number(r) => SeqExpr::Const(r.clone()),
        Node::Ident(s) if s == "n" => SeqExpr::N,
        Node::Neg(a) => SeqExpr::Neg(go(a)?),
        Node::Binary(BinOp::Add, a, b) => SeqExpr::Add(go(a)?, go(b)?),
        Node::Binary(BinOp::Sub, a, b) => SeqExpr::Sub(go(a)?, go(b)?),
        Node::Binary(BinOp::Mul, a, b) => SeqExpr::Mul(go(a)?, go(b)?),
        Node::Binary(BinOp::Div, a, b) => SeqExpr::Div(go(a)?, go(b)?),
        Node::Binary(BinOp::Pow, a, b) => {
            let k = integer_exponent(b)?;
            SeqExpr::Pow(go(a)?, k)
        }
        _ => {
            return Err(err(
                e,
                "expected a sequence in n: rationals, n, + − * / and integer powers",
            ))
        }
    })
}

fn integer_exponent(e: &Expr) -> Result<i64, ParseError> {
    let r = rational_literal(e).map_err(|_| err(e, "expected an integer exponent"))?;
    if !r.is_integer() {
        return Err(err(e, "expected an integer exponent"));
    }
    r.to_integer()
        .to_i64()
        .filter(|k| k.abs() <= 1 << 16)
        .ok_or_else(|| err(e, "exponent too large"))
}

/// Function of `var`; constants are folded into [`SymReal`]s.
pub fn func(e: &Expr, var: &str, bindings: &Bindings) -> Result<FuncExpr, ParseError> {
    let go = |x: &Expr| func(x, var, bindings);
    Ok(match &e.node {
        Node::Number(r) => FuncExpr::Const(SymReal::rational(r.clone())),
        Node::Ident(s) => {
            if s == var || (var == "k" && s == "x") {
                FuncExpr::X
            } else {
                match s.as_str() {
                    "pi" | "π" => FuncExpr::Const(SymReal::Pi),
                    "e" => FuncExpr::Const(SymReal::E),
                    other => match bindings.get(other).and_then(|v| v.as_rational()) {
                        Some(r) => FuncExpr::Const(SymReal::rational(r)),
                        None => return Err(err(e, format!("unknown name '{}' in a function of {}", other, var))),
                    },
                }
            }
        }
        Node::Neg(a) => fold(-go(a)?),
        Node::Root(a) => sqrt(a, &go(a)?)?,
        Node::Binary(op, a, b) => match op {
            BinOp::Add => fold(go(a)? + go(b)?),
            BinOp::Sub => fold(go(a)? - go(b)?),
            BinOp::Mul => fold(go(a)? * go(b)?),
            BinOp::Div => fold(go(a)? / go(b)?),
            BinOp::Pow => fold(go(a)?.powi(integer_exponent(b)?)),
            BinOp::Union | BinOp::Cross => return Err(err(e, "set operators are not allowed in a function")),
        },
        Node::Call { name, args, closing } => {
            if *closing != ')' || args.len() != 1 {
                return Err(err(e, format!("{} takes one argument", name)));
            }
            let arg = go(&args[0])?;
            if name == "sqrt" {
                return sqrt(&args[0], &arg);
            }
            let f = Func::from_name(name).ok_or_else(|| err(e, format!("unknown function '{}'", name)))?;
            fold(FuncExpr::apply(f, arg))
        }
        Node::Braces(_) => return Err(err(e, "expected a function expression")),
    })
}

fn sqrt(at: &Expr, arg: &FuncExpr) -> Result<FuncExpr, ParseError> {
    match arg {
        FuncExpr::Const(SymReal::Rat(r)) => SymReal::sqrt(r.clone())
            .map(FuncExpr::Const)
            .ok_or_else(|| err(at, "square root of a negative number")),
        _ => Err(err(at, "sqrt takes a rational constant")),
    }
}

/// Folds operations on constants into a single constant.
fn fold(f: FuncExpr) -> FuncExpr {
    let constant = |e: &FuncExpr| match e {
        FuncExpr::Const(c) => Some(c.clone()),
        _ => None,
    };
    let folded = match &f {
        FuncExpr::Neg(a) => constant(a).map(|c| c.neg()),
        FuncExpr::Add(a, b) => constant(a).zip(constant(b)).map(|(x, y)| x.add(&y)),
        FuncExpr::Sub(a, b) => constant(a).zip(constant(b)).map(|(x, y)| x.sub(&y)),
        FuncExpr::Mul(a, b) => constant(a).zip(constant(b)).map(|(x, y)| x.mul(&y)),
        FuncExpr::Div(a, b) => constant(a).zip(constant(b)).and_then(|(x, y)| x.div(&y)),
        FuncExpr::Pow(a, k) => constant(a).and_then(|c| c.powi(*k)),
        FuncExpr::Apply(g, a) => match (g.analytic(), constant(a)) {
            (Some(an), Some(c)) => SymReal::apply(an, &c).ok(),
            _ => None,
        },
        _ => None,
    };
    folded.map(FuncExpr::Const).unwrap_or(f)
}

/// A real constant such as `1/3`, `sqrt(2)` or `pi/4`.
pub fn point(e: &Expr, bindings: &Bindings) -> Result<SymReal, ParseError> {
    match func(e, "", bindings)? {
        FuncExpr::Const(c) => Ok(c),
        _ => Err(err(e, "expected a real constant")),
    }
}
