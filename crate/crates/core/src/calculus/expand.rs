//! Truncated expansions of `f(x₀ + σh)` in powers of a positive
//! infinitesimal `h`.
//!
//! Internally every expansion is a [`Jet`]: finitely many coefficients of
//! integer powers of `h` plus the exponent `N` of the omitted tail `O(h^N)`.
//! Terms with negative powers stand for infinite numbers. Analytic functions
//! are applied through their Taylor coefficients at the finite part of the
//! argument; `sin` and `cos` of an infinite argument have no center that is
//! independent of the model and become opaque bounded atoms such as
//! `sin(α^2)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::Cell;
use core::fmt;

use num_traits::{One, Zero};

use super::func::{Func, FuncExpr};
use super::symreal::{Analytic, Confidence, EvalError, NumericConfig, SymReal, ZeroTest};
use super::CalculusError;
use crate::number::Sign;
use crate::rational::Rational;

/// Where the expansion is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `f(x₀ + η)`.
    Plus,
    /// `f(x₀ − η)`, expanded in powers of `η`.
    Minus,
    /// `f(x₀ + ε)` for an arbitrary nonzero infinitesimal `ε`; the result must
    /// not depend on the sign or the rationality of `ε`.
    Generic,
}

/// The infinitesimal an expansion is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    Eta,
    Epsilon,
}

impl Variable {
    fn symbol(self) -> &'static str {
        match self {
            Variable::Eta => "η",
            Variable::Epsilon => "ε",
        }
    }
}

/// `Σ cᵢ·tⁱ + O(t^order)` with strictly increasing powers below `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct InfinitesimalSeries {
    pub variable: Variable,
    pub terms: Vec<(Rational, SymReal)>,
    pub order: Rational,
    pub confidence: Confidence,
}

impl InfinitesimalSeries {
    /// Coefficient of `t^power` (zero when absent).
    pub fn coefficient(&self, power: &Rational) -> SymReal {
        self.terms
            .iter()
            .find(|(p, _)| p == power)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(SymReal::zero)
    }
}

impl fmt::Display for InfinitesimalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.variable.symbol();
        let mut first = true;
        for (p, c) in &self.terms {
            let mono = if p.is_zero() {
                String::new()
            } else if p.is_one() {
                String::from(var)
            } else {
                format!("{}^{}", var, p)
            };
            write_term(f, c, &mono, first)?;
            first = false;
        }
        if !first {
            write!(f, " + ")?;
        }
        if self.order.is_one() {
            write!(f, "O({})", var)
        } else {
            write!(f, "O({}^{})", var, self.order)
        }
    }
}

/// Writes `c·mono` in a sum, with the sign folded into the separator.
pub fn write_term(f: &mut fmt::Formatter<'_>, c: &SymReal, mono: &str, first: bool) -> fmt::Result {
    let negative = match c {
        SymReal::Rat(r) => r < &Rational::zero(),
        SymReal::Mul(a, _) => matches!(&**a, SymReal::Rat(r) if r < &Rational::zero()),
        _ => false,
    };
    let c = if negative { c.neg() } else { c.clone() };
    match (first, negative) {
        (true, true) => write!(f, "−")?,
        (false, true) => write!(f, " − ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if mono.is_empty() {
        return write!(f, "{}", c);
    }
    let atomic = match &c {
        SymReal::Rat(r) => {
            if r.is_one() {
                return write!(f, "{}", mono);
            }
            r.is_integer()
        }
        SymReal::Pi | SymReal::E | SymReal::Sqrt(_) | SymReal::Apply(..) | SymReal::Bounded(_) => true,
        _ => false,
    };
    if atomic {
        write!(f, "{}·{}", c, mono)
    } else {
        write!(f, "({})·{}", c, mono)
    }
}

struct TermList<'a>(&'a [(String, SymReal)]);

impl fmt::Display for TermList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.0.iter().enumerate() {
            write_term(f, c, mono, i == 0)?;
        }
        Ok(())
    }
}

/// Coefficients of integer powers of `h` below `order`; `order: None` means
/// the expansion is exact.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Jet {
    pub terms: BTreeMap<i64, SymReal>,
    pub order: Option<i64>,
}

impl Jet {
    fn zero() -> Self {
        Jet {
            terms: BTreeMap::new(),
            order: None,
        }
    }

    fn constant(c: SymReal) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_exact_zero() {
            terms.insert(0, c);
        }
        Jet { terms, order: None }
    }

    fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.order.is_none()
    }

    /// Smallest power present, or the order for an empty inexact jet.
    fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied().or(self.order)
    }

    pub fn coefficient(&self, k: i64) -> SymReal {
        self.terms.get(&k).cloned().unwrap_or_else(SymReal::zero)
    }

    fn insert(&mut self, k: i64, c: SymReal) {
        if let Some(o) = self.order {
            if k >= o {
                return;
            }
        }
        let sum = match self.terms.get(&k) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_exact_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    fn truncate(&mut self, order: i64) {
        if self.order.is_none_or(|o| o > order) {
            let dropped = self.terms.split_off(&order);
            if !dropped.is_empty() || self.order.is_some() {
                self.order = Some(order);
            }
        }
    }

    fn neg(&self) -> Jet {
        Jet {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
            order: self.order,
        }
    }

    fn scale(&self, c: &SymReal) -> Jet {
        let mut out = Jet {
            terms: BTreeMap::new(),
            order: self.order,
        };
        for (k, a) in &self.terms {
            out.insert(*k, a.mul(c));
        }
        out
    }

    fn shift(&self, by: i64) -> Jet {
        Jet {
            terms: self.terms.iter().map(|(k, c)| (k + by, c.clone())).collect(),
            order: self.order.map(|o| o + by),
        }
    }

    fn add(&self, other: &Jet) -> Jet {
        let order = match (self.order, other.order) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = Jet {
            terms: BTreeMap::new(),
            order,
        };
        for (k, c) in self.terms.iter().chain(other.terms.iter()) {
            out.insert(*k, c.clone());
        }
        out
    }

    fn mul(&self, other: &Jet) -> Jet {
        if self.is_exact_zero() || other.is_exact_zero() {
            return Jet::zero();
        }
        let va = self.valuation().unwrap_or(0);
        let vb = other.valuation().unwrap_or(0);
        let order = match (self.order, other.order) {
            (None, None) => None,
            (Some(oa), None) => Some(oa + vb),
            (None, Some(ob)) => Some(ob + va),
            (Some(oa), Some(ob)) => Some((oa + vb).min(ob + va)),
        };
        let mut out = Jet {
            terms: BTreeMap::new(),
            order,
        };
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.insert(i + j, a.mul(b));
            }
        }
        out
    }
}

enum Fail {
    /// More working order might resolve the question.
    More,
    Err(CalculusError),
}

impl From<CalculusError> for Fail {
    fn from(e: CalculusError) -> Self {
        Fail::Err(e)
    }
}

type JResult = Result<Jet, Fail>;

/// The expansion point `x₀ + σh`.
#[derive(Clone, Debug)]
pub(crate) struct Point {
    pub x0: SymReal,
    /// `+1` or `−1`.
    pub sigma: i64,
    /// Whether `h` counts as rational (true for `η`).
    pub h_rational: bool,
    pub variable: Variable,
}

struct Ctx<'a> {
    point: &'a Point,
    cap: i64,
    cfg: NumericConfig,
    numeric: &'a Cell<bool>,
}

impl Ctx<'_> {
    fn capped(&self, mut j: Jet) -> Jet {
        j.truncate(self.cap);
        j
    }

    fn zero_test(&self, c: &SymReal) -> ZeroTest {
        let t = c.zero_test(self.cfg);
        if matches!(
            t,
            ZeroTest::Zero(Confidence::Numeric) | ZeroTest::NonZero(Confidence::Numeric)
        ) {
            self.numeric.set(true);
        }
        t
    }

    fn sign(&self, c: &SymReal) -> Result<Sign, Fail> {
        match c.sign(self.cfg) {
            Some((s, conf)) => {
                if conf == Confidence::Numeric {
                    self.numeric.set(true);
                }
                Ok(s)
            }
            None => Err(Fail::Err(CalculusError::Unresolvable(format!(
                "the sign of {} is not determined",
                c
            )))),
        }
    }

    /// First coefficient that is not zero; `None` for an exact zero.
    fn leading(&self, j: &Jet) -> Result<Option<(i64, SymReal)>, Fail> {
        for (k, c) in &j.terms {
            match self.zero_test(c) {
                ZeroTest::Zero(_) => continue,
                ZeroTest::NonZero(_) => return Ok(Some((*k, c.clone()))),
                ZeroTest::Undetermined => {
                    return Err(Fail::Err(CalculusError::Unresolvable(format!(
                        "cannot decide whether {} vanishes",
                        c
                    ))))
                }
            }
        }
        match j.order {
            None => Ok(None),
            Some(_) => Err(Fail::More),
        }
    }

    fn eval(&self, f: &FuncExpr) -> JResult {
        Ok(match f {
            FuncExpr::Const(c) => Jet::constant(c.clone()),
            FuncExpr::X => {
                let mut j = Jet::constant(self.point.x0.clone());
                j.insert(1, SymReal::int(self.point.sigma));
                self.capped(j)
            }
            FuncExpr::Neg(a) => self.eval(a)?.neg(),
            FuncExpr::Add(a, b) => self.eval(a)?.add(&self.eval(b)?),
            FuncExpr::Sub(a, b) => self.eval(a)?.add(&self.eval(b)?.neg()),
            FuncExpr::Mul(a, b) => self.capped(self.eval(a)?.mul(&self.eval(b)?)),
            FuncExpr::Div(a, b) => {
                let num = self.eval(a)?;
                if num.is_exact_zero() {
                    // still reject a vanishing denominator
                    self.recip(&self.eval(b)?)?;
                    return Ok(Jet::zero());
                }
                let den = self.recip(&self.eval(b)?)?;
                self.capped(num.mul(&den))
            }
            FuncExpr::Pow(a, k) => self.pow(&self.eval(a)?, *k)?,
            FuncExpr::Apply(g, a) => match g.analytic() {
                Some(an) => self.analytic(an, &self.eval(a)?)?,
                None => match g {
                    Func::Abs => {
                        let j = self.eval(a)?;
                        match self.leading(&j)? {
                            None => Jet::zero(),
                            Some((_, c)) => match self.sign(&c)? {
                                Sign::Negative => j.neg(),
                                _ => j,
                            },
                        }
                    }
                    Func::Sign => {
                        let j = self.eval(a)?;
                        match self.leading(&j)? {
                            None => Jet::zero(),
                            Some((_, c)) => Jet::constant(match self.sign(&c)? {
                                Sign::Negative => SymReal::int(-1),
                                Sign::Zero => SymReal::zero(),
                                Sign::Positive => SymReal::one(),
                            }),
                        }
                    }
                    _ => {
                        // evaluate the argument for its domain errors
                        self.eval(a)?;
                        let x_rational = point_rationality(self.point);
                        match rationality(a, x_rational) {
                            Some(true) => Jet::constant(SymReal::one()),
                            Some(false) => Jet::zero(),
                            None => {
                                return Err(Fail::Err(CalculusError::Unresolvable(format!(
                                    "rationality of {} near {}",
                                    a, self.point.x0
                                ))))
                            }
                        }
                    }
                },
            },
        })
    }

    fn recip(&self, a: &Jet) -> JResult {
        let (p, c) = match self.leading(a)? {
            None => return Err(Fail::Err(CalculusError::Pole(String::from("division by zero")))),
            Some(lc) => lc,
        };
        let c_inv = c.recip().expect("nonzero leading coefficient");
        // a = c·h^p·(1 + u)
        let mut u = Jet {
            terms: BTreeMap::new(),
            order: a.order.map(|o| o - p),
        };
        for (k, v) in a.terms.range(p + 1..) {
            u.insert(k - p, v.mul(&c_inv));
        }
        let target = match u.order {
            Some(o) => o.min(self.cap + p),
            None => self.cap + p,
        };
        let mut inv = Jet::constant(SymReal::one());
        if !u.is_exact_zero() {
            let minus_u = u.neg();
            let mut power = Jet::constant(SymReal::one());
            loop {
                power = power.mul(&minus_u);
                power.truncate(target);
                if power.terms.is_empty() {
                    break;
                }
                inv = inv.add(&power);
            }
            inv.truncate(target);
            inv.order = Some(inv.order.map_or(target, |o| o.min(target)));
        }
        Ok(inv.scale(&c_inv).shift(-p))
    }

    fn pow(&self, a: &Jet, k: i64) -> JResult {
        if k < 0 {
            let inv = self.recip(a)?;
            return self.pow(&inv, -k);
        }
        let mut result = Jet::constant(SymReal::one());
        let mut base = a.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = self.capped(result.mul(&base));
            }
            e >>= 1;
            if e > 0 {
                base = self.capped(base.mul(&base));
            }
        }
        Ok(result)
    }

    fn analytic(&self, g: Analytic, a: &Jet) -> JResult {
        if a.order.is_some_and(|o| o <= 0) {
            return Err(Fail::More);
        }
        let mut infinite: Vec<(i64, SymReal)> = Vec::new();
        for (k, c) in a.terms.range(..0) {
            if !matches!(self.zero_test(c), ZeroTest::Zero(_)) {
                infinite.push((*k, c.clone()));
            }
        }
        let c0 = a.coefficient(0);
        let mut delta = Jet {
            terms: a.terms.range(1..).map(|(k, c)| (*k, c.clone())).collect(),
            order: a.order,
        };
        delta.truncate(self.cap.max(1));

        let coefficients: Vec<SymReal>;
        let count = taylor_terms(&delta, self.cap);
        if infinite.is_empty() {
            coefficients = taylor_coefficients(g, &c0, count, self)?;
        } else {
            let text = self.infinite_text(&infinite, &c0);
            let lead = &infinite[0].1;
            match g {
                Analytic::Sin | Analytic::Cos => {
                    let s = SymReal::bounded(format!("sin({})", text));
                    let c = SymReal::bounded(format!("cos({})", text));
                    let (s, c) = if g == Analytic::Sin { (s, c) } else { (c, s.neg()) };
                    coefficients = trig_coefficients(&s, &c, count);
                }
                Analytic::Exp => {
                    return match self.sign(lead)? {
                        Sign::Negative => Ok(Jet {
                            terms: BTreeMap::new(),
                            order: Some(self.cap),
                        }),
                        _ => Err(Fail::Err(CalculusError::Unresolvable(format!("exp({})", text)))),
                    }
                }
                Analytic::Log => {
                    return match self.sign(lead)? {
                        Sign::Negative => Err(Fail::Err(CalculusError::Domain(format!("log({})", text)))),
                        _ => Err(Fail::Err(CalculusError::Unresolvable(format!("log({})", text)))),
                    }
                }
            }
        }
        // Horner evaluation of Σ tⱼ·δʲ
        let mut result = Jet::constant(coefficients.last().cloned().unwrap_or_else(SymReal::zero));
        for t in coefficients.iter().rev().skip(1) {
            result = self.capped(result.mul(&delta)).add(&Jet::constant(t.clone()));
        }
        if let Some(v) = delta.valuation().filter(|_| !delta.is_exact_zero()) {
            let tail = coefficients.len() as i64 * v;
            result.truncate(tail);
            if result.order.is_none() {
                result.order = Some(tail);
            }
        }
        Ok(self.capped(result))
    }

    /// Text of `A + c₀` for the infinite part `A`, in powers of `α = 1/η`
    /// or of `ε`.
    fn infinite_text(&self, infinite: &[(i64, SymReal)], c0: &SymReal) -> String {
        let mut parts: Vec<(String, SymReal)> = Vec::new();
        for (k, c) in infinite {
            let m = -k;
            match self.point.variable {
                Variable::Eta => {
                    let mono = if m == 1 {
                        String::from("α")
                    } else {
                        format!("α^{}", m)
                    };
                    parts.push((mono, c.clone()));
                }
                Variable::Epsilon => {
                    // h = σε
                    let c = if m % 2 == 1 && self.point.sigma < 0 {
                        c.neg()
                    } else {
                        c.clone()
                    };
                    parts.push((format!("ε^-{}", m), c));
                }
            }
        }
        if !c0.is_exact_zero() {
            parts.push((String::new(), c0.clone()));
        }
        format!("{}", TermList(&parts))
    }
}

/// Number of Taylor coefficients needed so that the omitted tail of
/// `Σ tⱼ·δʲ` lies beyond `cap`.
fn taylor_terms(delta: &Jet, cap: i64) -> usize {
    if delta.is_exact_zero() {
        return 1;
    }
    let v = delta.valuation().unwrap_or(1).max(1);
    (cap.max(1) / v + 1) as usize
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| {
        acc * Rational::from_integer((k as i64).into())
    })
}

fn trig_coefficients(s: &SymReal, c: &SymReal, count: usize) -> Vec<SymReal> {
    (0..count)
        .map(|j| {
            let d = match j % 4 {
                0 => s.clone(),
                1 => c.clone(),
                2 => s.neg(),
                _ => c.neg(),
            };
            d.mul(&SymReal::rational(factorial(j).recip()))
        })
        .collect()
}

/// `g⁽ʲ⁾(c₀)/j!` for `j < count`.
fn taylor_coefficients(g: Analytic, c0: &SymReal, count: usize, ctx: &Ctx<'_>) -> Result<Vec<SymReal>, Fail> {
    let applied =
        |g| SymReal::apply(g, c0).map_err(|_| Fail::Err(CalculusError::Domain(format!("{}({})", g.name(), c0))));
    Ok(match g {
        Analytic::Sin => trig_coefficients(&applied(Analytic::Sin)?, &applied(Analytic::Cos)?, count),
        Analytic::Cos => trig_coefficients(&applied(Analytic::Cos)?, &applied(Analytic::Sin)?.neg(), count),
        Analytic::Exp => {
            let e = applied(Analytic::Exp)?;
            (0..count)
                .map(|j| e.mul(&SymReal::rational(factorial(j).recip())))
                .collect()
        }
        Analytic::Log => {
            match ctx.sign(c0)? {
                Sign::Positive => {}
                Sign::Zero => {
                    return Err(Fail::Err(CalculusError::Unresolvable(String::from(
                        "log of an infinitesimal",
                    ))))
                }
                Sign::Negative => return Err(Fail::Err(CalculusError::Domain(format!("log({})", c0)))),
            }
            let inv = c0.recip().expect("positive");
            let mut out = Vec::with_capacity(count);
            out.push(applied(Analytic::Log)?);
            let mut p = SymReal::one();
            for j in 1..count {
                p = p.mul(&inv);
                // (−1)^(j−1) / (j·c₀^j)
                let sign = if j % 2 == 1 { 1 } else { -1 };
                out.push(p.mul(&SymReal::rational(Rational::new(sign.into(), (j as i64).into()))));
            }
            out
        }
    })
}

fn point_rationality(p: &Point) -> Option<bool> {
    let x0 = if p.x0.as_rational().is_some() {
        Some(true)
    } else if p.x0.is_known_irrational() {
        Some(false)
    } else {
        None
    };
    match (x0, p.h_rational) {
        (Some(true), h) => Some(h),
        (Some(false), true) => Some(false),
        _ => None,
    }
}

/// Whether the value of `e` is rational, given the rationality of `x`.
///
/// Rational operations preserve rationality; a rational plus an irrational
/// is irrational; `sign` and `dirichlet` are integer valued. Anything else
/// is undecided.
pub(crate) fn rationality(e: &FuncExpr, x: Option<bool>) -> Option<bool> {
    let nonzero_rational = |e: &FuncExpr| matches!(e, FuncExpr::Const(SymReal::Rat(r)) if !r.is_zero());
    match e {
        FuncExpr::Const(c) => {
            if c.as_rational().is_some() {
                Some(true)
            } else if c.is_known_irrational() {
                Some(false)
            } else {
                None
            }
        }
        FuncExpr::X => x,
        FuncExpr::Neg(a) => rationality(a, x),
        FuncExpr::Add(a, b) | FuncExpr::Sub(a, b) => match (rationality(a, x)?, rationality(b, x)?) {
            (true, true) => Some(true),
            (true, false) | (false, true) => Some(false),
            (false, false) => None,
        },
        FuncExpr::Mul(a, b) | FuncExpr::Div(a, b) => match (rationality(a, x)?, rationality(b, x)?) {
            (true, true) => Some(true),
            (true, false) if nonzero_rational(a) => Some(false),
            (false, true) if nonzero_rational(b) => Some(false),
            _ => None,
        },
        FuncExpr::Pow(a, k) => match rationality(a, x)? {
            true => Some(true),
            false if *k == 1 || *k == -1 => Some(false),
            false => None,
        },
        FuncExpr::Apply(Func::Abs, a) => rationality(a, x),
        FuncExpr::Apply(Func::Sign | Func::DirichletQ, _) => Some(true),
        FuncExpr::Apply(..) => None,
    }
}

/// Most working order used before giving up.
const MAX_EXTRA_ORDER: i64 = 48;

/// Expansion of `f` at the point up to (at least) `order`, with coefficients
/// that vanish under the zero test removed.
pub(crate) fn jet_at(
    f: &FuncExpr,
    point: &Point,
    order: i64,
    cfg: NumericConfig,
) -> Result<(Jet, Confidence), CalculusError> {
    let numeric = Cell::new(false);
    let mut cap = order.max(1);
    while cap <= order + MAX_EXTRA_ORDER {
        let ctx = Ctx {
            point,
            cap,
            cfg,
            numeric: &numeric,
        };
        match ctx.eval(f) {
            Ok(mut j) => {
                let reached = j.order.unwrap_or(i64::MAX);
                if reached >= order {
                    j.truncate(order);
                    j.terms.retain(|_, c| !matches!(ctx.zero_test(c), ZeroTest::Zero(_)));
                    let conf = if numeric.get() {
                        Confidence::Numeric
                    } else {
                        Confidence::Exact
                    };
                    return Ok((j, conf));
                }
                cap += (order - reached).max(2);
            }
            Err(Fail::More) => cap += 2,
            Err(Fail::Err(e)) => return Err(e),
        }
    }
    Err(CalculusError::InsufficientOrder)
}

/// Value of `f` at the real point `x0`.
pub(crate) fn eval_point(
    f: &FuncExpr,
    x0: &SymReal,
    cfg: NumericConfig,
) -> Result<(SymReal, Confidence), CalculusError> {
    let numeric = Cell::new(false);
    let v = eval_point_inner(f, x0, cfg, &numeric)?;
    Ok((
        v,
        if numeric.get() {
            Confidence::Numeric
        } else {
            Confidence::Exact
        },
    ))
}

fn eval_point_inner(
    f: &FuncExpr,
    x0: &SymReal,
    cfg: NumericConfig,
    numeric: &Cell<bool>,
) -> Result<SymReal, CalculusError> {
    let go = |e: &FuncExpr| eval_point_inner(e, x0, cfg, numeric);
    let sign_of = |v: &SymReal| -> Result<Sign, CalculusError> {
        match v.sign(cfg) {
            Some((s, conf)) => {
                if conf == Confidence::Numeric {
                    numeric.set(true);
                }
                Ok(s)
            }
            None => Err(CalculusError::Unresolvable(format!(
                "the sign of {} is not determined",
                v
            ))),
        }
    };
    Ok(match f {
        FuncExpr::Const(c) => c.clone(),
        FuncExpr::X => x0.clone(),
        FuncExpr::Neg(a) => go(a)?.neg(),
        FuncExpr::Add(a, b) => go(a)?.add(&go(b)?),
        FuncExpr::Sub(a, b) => go(a)?.sub(&go(b)?),
        FuncExpr::Mul(a, b) => go(a)?.mul(&go(b)?),
        FuncExpr::Div(a, b) => {
            let d = go(b)?;
            if sign_of(&d)? == Sign::Zero {
                return Err(CalculusError::Pole(format!("{} vanishes at {}", b, x0)));
            }
            go(a)?.div(&d).expect("nonzero")
        }
        FuncExpr::Pow(a, k) => {
            let v = go(a)?;
            if *k < 0 && sign_of(&v)? == Sign::Zero {
                return Err(CalculusError::Pole(format!("{} vanishes at {}", a, x0)));
            }
            v.powi(*k)
                .ok_or_else(|| CalculusError::Pole(format!("{} vanishes at {}", a, x0)))?
        }
        FuncExpr::Apply(g, a) => {
            let v = go(a)?;
            match g.analytic() {
                Some(Analytic::Log) if sign_of(&v)? != Sign::Positive => {
                    return Err(CalculusError::Domain(format!("log({})", v)))
                }
                Some(an) => SymReal::apply(an, &v).map_err(|e| match e {
                    EvalError::Domain => CalculusError::Domain(format!("{}({})", an.name(), v)),
                    _ => CalculusError::NumericFailure(format!("{}({})", an.name(), v)),
                })?,
                None => match g {
                    Func::Abs => match sign_of(&v)? {
                        Sign::Negative => v.neg(),
                        _ => v,
                    },
                    Func::Sign => SymReal::int(match sign_of(&v)? {
                        Sign::Negative => -1,
                        Sign::Zero => 0,
                        Sign::Positive => 1,
                    }),
                    _ => {
                        if v.as_rational().is_some() {
                            SymReal::one()
                        } else if v.is_known_irrational() {
                            SymReal::zero()
                        } else {
                            return Err(CalculusError::Unresolvable(format!("rationality of {}", v)));
                        }
                    }
                },
            }
        }
    })
}

fn jet_to_series(j: &Jet, variable: Variable, order: i64, confidence: Confidence) -> InfinitesimalSeries {
    InfinitesimalSeries {
        variable,
        terms: j
            .terms
            .iter()
            .map(|(k, c)| (Rational::from_integer((*k).into()), c.clone()))
            .collect(),
        order: Rational::from_integer(order.into()),
        confidence,
    }
}

/// Generic expansion: the four cases of sign and rationality of `ε` must
/// agree. Returns the expansion in powers of `ε`.
pub(crate) fn generic_jet(
    f: &FuncExpr,
    x0: &SymReal,
    order: i64,
    cfg: NumericConfig,
) -> Result<(Jet, Confidence), CalculusError> {
    let mut first: Option<(Jet, Confidence, &'static str)> = None;
    let mut order_reached = order;
    let cases: [(i64, bool, &'static str); 4] = [
        (1, true, "ε > 0 rational"),
        (1, false, "ε > 0 irrational"),
        (-1, true, "ε < 0 rational"),
        (-1, false, "ε < 0 irrational"),
    ];
    for (sigma, h_rational, label) in cases {
        let point = Point {
            x0: x0.clone(),
            sigma,
            h_rational,
            variable: Variable::Epsilon,
        };
        let (j, conf) = jet_at(f, &point, order, cfg)?;
        // h = σε
        let mut eps = Jet {
            terms: BTreeMap::new(),
            order: j.order,
        };
        for (k, c) in &j.terms {
            eps.insert(
                *k,
                if k.rem_euclid(2) == 1 && sigma < 0 {
                    c.neg()
                } else {
                    c.clone()
                },
            );
        }
        order_reached = order_reached.min(eps.order.unwrap_or(order));
        match &first {
            None => first = Some((eps, conf, label)),
            Some((base, base_conf, base_label)) => {
                let diff = base.add(&eps.neg());
                for c in diff.terms.values() {
                    if !matches!(c.zero_test(cfg), ZeroTest::Zero(_)) {
                        return Err(CalculusError::CaseDependent(format!(
                            "{} gives {}, {} gives {}",
                            base_label,
                            jet_to_series(base, Variable::Epsilon, order, *base_conf),
                            label,
                            jet_to_series(&eps, Variable::Epsilon, order, conf)
                        )));
                    }
                }
                if conf == Confidence::Numeric {
                    first = Some((base.clone(), Confidence::Numeric, base_label));
                }
            }
        }
    }
    let (mut j, conf, _) = first.expect("four cases");
    j.truncate(order_reached);
    Ok((j, conf))
}

/// Expansion with the default numeric configuration.
pub fn expand(
    f: &FuncExpr,
    x0: &SymReal,
    direction: Direction,
    order: i64,
) -> Result<InfinitesimalSeries, CalculusError> {
    expand_with(f, x0, direction, order, NumericConfig::default())
}

/// Truncated expansion of `f` near `x0`, tagged `O(t^order)`.
///
/// Directions `Plus` and `Minus` are written in powers of `η`; `Generic` is
/// written in powers of `ε` and fails with
/// [`CalculusError::CaseDependent`] when the sign or rationality of `ε`
/// matters.
pub fn expand_with(
    f: &FuncExpr,
    x0: &SymReal,
    direction: Direction,
    order: i64,
    cfg: NumericConfig,
) -> Result<InfinitesimalSeries, CalculusError> {
    let (j, conf, var) = match direction {
        Direction::Plus | Direction::Minus => {
            let point = Point {
                x0: x0.clone(),
                sigma: if direction == Direction::Plus { 1 } else { -1 },
                h_rational: true,
                variable: Variable::Eta,
            };
            let (j, conf) = jet_at(f, &point, order, cfg)?;
            (j, conf, Variable::Eta)
        }
        Direction::Generic => {
            let (j, conf) = generic_jet(f, x0, order, cfg)?;
            (j, conf, Variable::Epsilon)
        }
    };
    Ok(jet_to_series(&j, var, order, conf))
}
