//! Command execution with `let` bindings.

use std::fmt;

use euclid_core::calculus::{self, CalculusError, Confidence, DerivResult, Differentiability, NumericConfig, SymReal};
use euclid_core::{
    alpha_limit, numerosity, subset_check, ArithmeticError, EuclideanNumber, NumerosityError, OrdinalError,
};

use crate::command::{parse_with, Bindings, Command, DerivKind, NumExpr};
use crate::render::{Flag, Record};
use crate::syntax::ParseError;

/// Grid size used when `integ` has to fall back to a numeric sum.
pub const NUMERIC_STEPS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub order: i64,
    pub precision: u32,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order: calculus::DEFAULT_ORDER,
            precision: NumericConfig::default().digits,
            format: Format::Text,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    Parse(ParseError),
    Arithmetic(ArithmeticError),
    Numerosity(NumerosityError),
    Ordinal(OrdinalError),
    Calculus(CalculusError),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(e) => write!(f, "ParseError: {}", e),
            Error::Arithmetic(e) => write!(f, "ArithmeticError: {}", e),
            Error::Numerosity(e) => write!(f, "NumerosityError: {}", e),
            Error::Ordinal(e) => write!(f, "OrdinalError: {}", e),
            Error::Calculus(CalculusError::Arithmetic(e)) => write!(f, "ArithmeticError: {}", e),
            Error::Calculus(e) => write!(f, "CalculusError: {}", e),
        }
    }
}

impl std::error::Error for Error {}

macro_rules! from_error {
    ($($t:ty => $v:ident),*) => {$(
        impl From<$t> for Error {
            fn from(e: $t) -> Self {
                Error::$v(e)
            }
        }
    )*};
}

from_error!(
    ParseError => Parse,
    ArithmeticError => Arithmetic,
    NumerosityError => Numerosity,
    OrdinalError => Ordinal,
    CalculusError => Calculus
);

/// Interpreter state: configuration and named bindings.
#[derive(Clone, Debug, Default)]
pub struct Session {
    pub config: Config,
    bindings: Bindings,
}

impl Session {
    pub fn new(config: Config) -> Self {
        Session {
            config,
            bindings: Bindings::new(),
        }
    }

    pub fn bindings(&self) -> &Bindings {
        &self.bindings
    }

    /// Parses and executes one line.
    pub fn run_line(&mut self, line: &str) -> Result<Record, Error> {
        let cmd = parse_with(line, &self.bindings)?;
        self.execute(&cmd)
    }

    /// Runs one line and renders the result or the error in the configured
    /// format, returning the exit code.
    pub fn render_line(&mut self, line: &str) -> (String, i32) {
        match self.run_line(line) {
            Ok(r) => (self.format(&r), 0),
            Err(e) => {
                let text = match self.config.format {
                    Format::Text => format!("error: {}", e),
                    Format::Structured => serde_json::json!({ "kind": "error", "text": e.to_string() }).to_string(),
                };
                (text, e.exit_code())
            }
        }
    }

    pub fn format(&self, r: &Record) -> String {
        match self.config.format {
            Format::Text => match &r.real_part {
                Some(real) if r.kind == "integral" => format!("{}   [real part: {}]", r.text, real),
                _ => r.text.clone(),
            },
            Format::Structured => r.to_json(),
        }
    }

    fn numeric(&self) -> NumericConfig {
        NumericConfig::with_digits(self.config.precision)
    }

    pub fn execute(&mut self, cmd: &Command) -> Result<Record, Error> {
        let cfg = self.numeric();
        Ok(match cmd {
            Command::Eval(e) => Record::number("number", &e.eval()?),
            Command::Classify(e) => Record::text("classification", e.eval()?.classify().to_string(), Flag::Exact),
            Command::St(e) => {
                let x = e.eval()?;
                let st = EuclideanNumber::from_rational(x.st()?);
                Record::number("number", &st)
            }
            Command::Ctr(e) => Record::number("number", &e.eval()?.ctr()?),
            Command::Let(name, e) => {
                let v = e.eval()?;
                let mut r = Record::number("binding", &v);
                r.text = format!("{} = {}", name, r.text);
                self.bindings.insert(name.clone(), v);
                r
            }
            Command::Num(s) => Record::number("number", &numerosity(s)?),
            Command::Subset(a, b) => Record::text("verdict", subset_check(a, b).to_string(), Flag::Exact),
            Command::Ord(o) => Record::text("ordinal", o.to_string(), Flag::Exact),
            Command::Ord2Num(o) => Record::number("number", &o.to_numerosity()?),
            Command::Deriv(kind, f, x0) => {
                let d = match kind {
                    DerivKind::Plus => calculus::d_plus_with(f, x0, cfg)?,
                    DerivKind::Minus => calculus::d_minus_with(f, x0, cfg)?,
                    DerivKind::Mean => calculus::d_mean_with(f, x0, cfg)?,
                    DerivKind::Grid => calculus::grid_d_plus_with(f, x0, cfg)?,
                };
                deriv_record(&d)
            }
            Command::Derivable(f, x0) => {
                let d = calculus::derivability_with(f, x0, cfg)?;
                let mut text = format!(
                    "D+ = {}, D− = {}, D = {}; derivable: {}",
                    d.plus, d.minus, d.mean, d.derivable
                );
                if d.indeterminate {
                    text.push_str(" (identical indeterminate expressions, no real derivative)");
                }
                let flag = if d.indeterminate {
                    Flag::Indeterminate
                } else {
                    flag_of(&[&d.plus, &d.minus, &d.mean])
                };
                Record::text("derivability", text, flag)
            }
            Command::Differentiable(f, x0) => {
                let Differentiability {
                    differentiable,
                    differential,
                    reason,
                } = calculus::differentiability_with(f, x0, cfg)?;
                let text = match (differential, reason) {
                    (Some(c), _) if differentiable => format!("differentiable: true, df = {}·dx", c),
                    (_, Some(why)) => format!("differentiable: {}, {}", differentiable, why),
                    _ => format!("differentiable: {}", differentiable),
                };
                Record::text("differentiability", text, Flag::Exact)
            }
            Command::Expand(f, x0, dir, order) => {
                let order = order.unwrap_or(self.config.order);
                let s = calculus::expand_with(f, x0, *dir, order, cfg)?;
                let flag = match s.confidence {
                    Confidence::Exact => Flag::Exact,
                    Confidence::Numeric => Flag::Numeric,
                };
                Record::text("expansion", s.to_string(), flag)
            }
            Command::Integ(f, a, b) => match (a.as_rational(), b.as_rational(), f.as_polynomial()) {
                (Some(a), Some(b), Some(_)) => {
                    let i = calculus::e_integral(f, a, b)?;
                    Record::sym_series("integral", &i.value, Flag::Exact).with_real_part(i.real_part.to_string())
                }
                _ => numeric_integral(f, a, b, NUMERIC_STEPS)?,
            },
            Command::IntegNum(f, a, b, n) => numeric_integral(f, a, b, n.unwrap_or(NUMERIC_STEPS))?,
            Command::Sum(term, upper) => {
                let s = calculus::hyperfinite_sum(term, &upper.eval()?)?;
                match calculus::to_euclidean(&s) {
                    Some(x) => Record::number("number", &x),
                    None => Record::sym_series("sum", &s, Flag::Exact),
                }
            }
            Command::Alim(s) => Record::number("number", &alpha_limit(s)?),
            Command::Help => Record::text("help", HELP.trim_end(), Flag::Exact),
        })
    }
}

fn numeric_integral(f: &calculus::FuncExpr, a: &SymReal, b: &SymReal, n: u64) -> Result<Record, Error> {
    let v = calculus::e_integral_numeric(f, a, b, n)?;
    let mut r = Record::text(
        "numeric",
        format!("{}   [numeric: left-endpoint sum, n = {}]", v, n),
        Flag::Numeric,
    );
    r.real_part = Some(v.to_string());
    Ok(r)
}

fn flag_of(results: &[&DerivResult]) -> Flag {
    let mut flag = Flag::Exact;
    for d in results {
        match d {
            DerivResult::Value {
                confidence: Confidence::Numeric,
                ..
            } => flag = Flag::Numeric,
            DerivResult::Indeterminate { .. } => return Flag::Indeterminate,
            _ => {}
        }
    }
    flag
}

fn deriv_record(d: &DerivResult) -> Record {
    let flag = flag_of(&[d]);
    match d {
        DerivResult::Value { value, .. } => {
            Record::text("derivative", value.to_string(), flag).with_real_part(value.to_string())
        }
        DerivResult::NonStandard { center } => Record::text("derivative", format!("{} (not finite)", center), flag),
        DerivResult::Indeterminate { expression, reason } => Record::text(
            "derivative",
            format!("{}   [indeterminate: {}]", expression, reason),
            flag,
        ),
    }
}

/// Evaluates a number expression; used by tests of the round-trip property.
pub fn eval(e: &NumExpr) -> Result<EuclideanNumber, Error> {
    Ok(e.eval()?)
}

pub const HELP: &str = "\
Numbers: alpha (α), eta (η), omega (ω), rationals p/q and decimals, + - * / ^,
  2^alpha, alpha^(p/q), and names bound with `let name = expr`.
  eval EXPR | classify EXPR | st EXPR | ctr EXPR
Sets: N+ N Z Q Q(q,q+1] mult(k) pow_k(k) Pfin(N+) {a,b} tag(b), A (+) B, A x B
  num SET | subset SET, SET
Ordinals: naturals, w, + (natural sum), * (natural product), w^e
  ord ORD | ord2num ORD
Functions of x: + - * / ^k, sin cos exp log abs sign dirichlet, pi, e, sqrt(k)
  deriv plus|minus|mean|grid F at X0
  derivable F at X0 | differentiable F at X0
  expand F at X0, plus|minus|generic[, ORDER]
  integ F from A to B | integ_num F from A to B[, N]
  sum TERM-IN-k to UPPER
Sequences in n: alim SEQ
Every command also accepts the call form, e.g. deriv(mean, abs(x), 0).
";

#[cfg(test)]
mod tests {
    use super::*;

    fn run(line: &str) -> (String, i32) {
        Session::default().render_line(line)
    }

    #[test]
    fn goldens() {
        assert_eq!(run("num(Q)"), ("2·α^2 + 1".into(), 0));
        assert_eq!(run("eval(alpha*eta)"), ("1".into(), 0));
        assert_eq!(
            run("integ(x^2, 0, 1)"),
            ("1/3 − (1/2)·η + (1/6)·η^2   [real part: 1/3]".into(), 0)
        );
    }

    #[test]
    fn errors_and_exit_codes() {
        assert_eq!(
            run("eval 1/(alpha - alpha)"),
            ("error: ArithmeticError: division by zero".into(), 1)
        );
        let (text, code) = run("st alpha");
        assert!(text.starts_with("error: ArithmeticError: not finite"), "{}", text);
        assert_eq!(code, 1);
        let (text, code) = run("ord2num w^w");
        assert!(text.starts_with("error: OrdinalError"), "{}", text);
        assert_eq!(code, 1);
        let (text, code) = run("eval (1 +");
        assert!(text.starts_with("error: ParseError: at column"), "{}", text);
        assert_eq!(code, 2);
    }

    #[test]
    fn bindings_persist() {
        let mut s = Session::default();
        assert_eq!(s.render_line("let h = eta/2").0, "h = (1/2)·η");
        assert_eq!(s.render_line("eval h*alpha").0, "1/2");
        assert_eq!(s.render_line("deriv plus x^3 at 1").0, "3");
    }
}
