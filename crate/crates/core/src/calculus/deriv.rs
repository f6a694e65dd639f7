//! E-derivatives: centers of difference quotients with step `η`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::expand::{eval_point, generic_jet, jet_at, write_term, Jet, Point, Variable};
use super::func::FuncExpr;
use super::symreal::{Confidence, NumericConfig, SymReal, ZeroTest};
use super::CalculusError;

/// Expansion order used for difference quotients; order 2 of `f(x₀ ± η)`
/// leaves the quotient known up to `O(η)`, enough for its center.
const QUOTIENT_ORDER: i64 = 2;

#[derive(Clone, Debug, PartialEq)]
pub enum DerivResult {
    /// A real center.
    Value { value: SymReal, confidence: Confidence },
    /// The center is infinite, e.g. `α` for `sign` at 0.
    NonStandard { center: String },
    /// The center depends on the model, e.g. `ctr(sin(α^2))`.
    Indeterminate { expression: String, reason: String },
}

impl DerivResult {
    pub fn value(&self) -> Option<&SymReal> {
        match self {
            DerivResult::Value { value, .. } => Some(value),
            _ => None,
        }
    }
}

impl fmt::Display for DerivResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivResult::Value { value, .. } => write!(f, "{}", value),
            DerivResult::NonStandard { center } => write!(f, "{}", center),
            DerivResult::Indeterminate { expression, .. } => write!(f, "{}", expression),
        }
    }
}

struct Terms<'a>(&'a [(String, SymReal)]);

impl fmt::Display for Terms<'_> {
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

/// Center of a quotient given by its coefficients of `η^k`, `k ≤ 0`.
fn center(q: &Jet, cfg: NumericConfig, mut confidence: Confidence) -> DerivResult {
    let mut infinite: Vec<(String, SymReal)> = Vec::new();
    let mut bounded = false;
    for (k, c) in q.terms.range(..=0) {
        match c.zero_test(cfg) {
            ZeroTest::Zero(conf) => {
                confidence = confidence.and(conf);
                continue;
            }
            ZeroTest::NonZero(conf) => confidence = confidence.and(conf),
            ZeroTest::Undetermined => {}
        }
        bounded |= c.has_bounded();
        let mono = match -k {
            0 => String::new(),
            1 => String::from("α"),
            m => format!("α^{}", m),
        };
        infinite.push((mono, c.clone()));
    }
    let text = format!("{}", Terms(&infinite));
    if bounded {
        return DerivResult::Indeterminate {
            expression: format!("ctr({})", text),
            reason: String::from("the center depends on the choice of the model"),
        };
    }
    match infinite.last() {
        None => DerivResult::Value {
            value: SymReal::zero(),
            confidence,
        },
        Some((mono, c)) if mono.is_empty() && infinite.len() == 1 => DerivResult::Value {
            value: c.clone(),
            confidence,
        },
        _ => DerivResult::NonStandard { center: text },
    }
}

fn eta_point(x0: &SymReal, sigma: i64) -> Point {
    Point {
        x0: x0.clone(),
        sigma,
        h_rational: true,
        variable: Variable::Eta,
    }
}

/// `f(x₀)`, or the common standard part of `f(x₀ ± η)` at a removable
/// singularity.
fn value_at(f: &FuncExpr, x0: &SymReal, cfg: NumericConfig) -> Result<(SymReal, Confidence), CalculusError> {
    match eval_point(f, x0, cfg) {
        Err(CalculusError::Pole(reason)) => {
            let mut limits = Vec::new();
            for sigma in [1, -1] {
                let (j, conf) = jet_at(f, &eta_point(x0, sigma), 1, cfg)?;
                let st = j.coefficient(0);
                if j.terms.range(..0).next().is_some() || st.has_bounded() {
                    return Err(CalculusError::Pole(reason));
                }
                limits.push((st, conf));
            }
            let (right, conf_r) = limits.swap_remove(0);
            let (left, conf_l) = limits.swap_remove(0);
            match (&right - &left).zero_test(cfg) {
                ZeroTest::Zero(c) => Ok((right, conf_r.and(conf_l).and(c))),
                _ => Err(CalculusError::Pole(reason)),
            }
        }
        other => other,
    }
}

fn one_sided(f: &FuncExpr, x0: &SymReal, sigma: i64, cfg: NumericConfig) -> Result<DerivResult, CalculusError> {
    let (f0, conf0) = value_at(f, x0, cfg)?;
    let (j, conf) = jet_at(f, &eta_point(x0, sigma), QUOTIENT_ORDER, cfg)?;
    // (f(x₀ + ση) − f(x₀)) / (ση)
    let mut q = Jet {
        terms: Default::default(),
        order: j.order.map(|o| o - 1),
    };
    for (k, c) in &j.terms {
        let c = if *k == 0 { c.sub(&f0) } else { c.clone() };
        if !c.is_exact_zero() {
            q.terms.insert(k - 1, if sigma < 0 { c.neg() } else { c });
        }
    }
    if !j.terms.contains_key(&0) && !f0.is_exact_zero() {
        q.terms.insert(-1, if sigma < 0 { f0.clone() } else { f0.neg() });
    }
    Ok(center(&q, cfg, conf.and(conf0)))
}

/// Right derivative `ctr((f(x₀+η) − f(x₀))/η)`.
pub fn d_plus(f: &FuncExpr, x0: &SymReal) -> Result<DerivResult, CalculusError> {
    d_plus_with(f, x0, NumericConfig::default())
}

pub fn d_plus_with(f: &FuncExpr, x0: &SymReal, cfg: NumericConfig) -> Result<DerivResult, CalculusError> {
    one_sided(f, x0, 1, cfg)
}

/// Left derivative `ctr((f(x₀) − f(x₀−η))/η)`.
pub fn d_minus(f: &FuncExpr, x0: &SymReal) -> Result<DerivResult, CalculusError> {
    d_minus_with(f, x0, NumericConfig::default())
}

pub fn d_minus_with(f: &FuncExpr, x0: &SymReal, cfg: NumericConfig) -> Result<DerivResult, CalculusError> {
    one_sided(f, x0, -1, cfg)
}

/// Mean derivative `ctr((f(x₀+η) − f(x₀−η))/2η)`.
///
/// By additivity of `ctr` this is the average of the one-sided derivatives
/// whenever both are real; unlike them it does not need `f(x₀)`.
pub fn d_mean(f: &FuncExpr, x0: &SymReal) -> Result<DerivResult, CalculusError> {
    d_mean_with(f, x0, NumericConfig::default())
}

pub fn d_mean_with(f: &FuncExpr, x0: &SymReal, cfg: NumericConfig) -> Result<DerivResult, CalculusError> {
    let (plus, conf_p) = jet_at(f, &eta_point(x0, 1), QUOTIENT_ORDER, cfg)?;
    let (minus, conf_m) = jet_at(f, &eta_point(x0, -1), QUOTIENT_ORDER, cfg)?;
    let half = SymReal::rational(crate::rational::rat(1, 2));
    let order = match (plus.order, minus.order) {
        (Some(a), Some(b)) => Some(a.min(b) - 1),
        (a, b) => a.or(b).map(|o| o - 1),
    };
    let mut q = Jet {
        terms: Default::default(),
        order,
    };
    let keys: alloc::collections::BTreeSet<i64> = plus.terms.keys().chain(minus.terms.keys()).copied().collect();
    for k in keys {
        let c = plus.coefficient(k).sub(&minus.coefficient(k)).mul(&half);
        if !c.is_exact_zero() {
            q.terms.insert(k - 1, c);
        }
    }
    Ok(center(&q, cfg, conf_p.and(conf_m)))
}

/// Right derivative on the uniform grid of step `η`, whose points include
/// every rational number.
pub fn grid_d_plus(f: &FuncExpr, x0: &SymReal) -> Result<DerivResult, CalculusError> {
    grid_d_plus_with(f, x0, NumericConfig::default())
}

pub fn grid_d_plus_with(f: &FuncExpr, x0: &SymReal, cfg: NumericConfig) -> Result<DerivResult, CalculusError> {
    if x0.as_rational().is_none() {
        return Err(CalculusError::NotGridPoint(format!("{}", x0)));
    }
    d_plus_with(f, x0, cfg)
}

/// All three derivatives and whether `f` is E-derivable at the point.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivability {
    pub plus: DerivResult,
    pub minus: DerivResult,
    pub mean: DerivResult,
    /// `D f(x₀) = D⁺f(x₀)`.
    pub derivable: bool,
    /// Set when the equality holds only between identical indeterminate
    /// expressions, so no real derivative exists.
    pub indeterminate: bool,
}

pub fn derivability(f: &FuncExpr, x0: &SymReal) -> Result<Derivability, CalculusError> {
    derivability_with(f, x0, NumericConfig::default())
}

pub fn derivability_with(f: &FuncExpr, x0: &SymReal, cfg: NumericConfig) -> Result<Derivability, CalculusError> {
    let plus = d_plus_with(f, x0, cfg)?;
    let minus = d_minus_with(f, x0, cfg)?;
    let mean = d_mean_with(f, x0, cfg)?;
    let (derivable, indeterminate) = match (&mean, &plus) {
        (DerivResult::Value { value: a, .. }, DerivResult::Value { value: b, .. }) => {
            (matches!((a - b).zero_test(cfg), ZeroTest::Zero(_)), false)
        }
        (DerivResult::Indeterminate { expression: a, .. }, DerivResult::Indeterminate { expression: b, .. }) => {
            (a == b, a == b)
        }
        _ => (false, false),
    };
    Ok(Derivability {
        plus,
        minus,
        mean,
        derivable,
        indeterminate,
    })
}

pub fn is_derivable(f: &FuncExpr, x0: &SymReal) -> Result<bool, CalculusError> {
    Ok(derivability(f, x0)?.derivable)
}

/// Outcome of the differentiability check `f(x₀+ε) = f(x₀) + c·ε + ε·ε₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct Differentiability {
    pub differentiable: bool,
    /// The real `c`, so that `df(x₀)[t] = c·t`.
    pub differential: Option<SymReal>,
    pub reason: Option<String>,
}

impl Differentiability {
    fn no(reason: String) -> Self {
        Differentiability {
            differentiable: false,
            differential: None,
            reason: Some(reason),
        }
    }
}

pub fn differentiability(f: &FuncExpr, x0: &SymReal) -> Result<Differentiability, CalculusError> {
    differentiability_with(f, x0, NumericConfig::default())
}

/// Checks that one real `c` serves every nonzero infinitesimal `ε`, whatever
/// its sign and rationality. Failures of the check are reported in the
/// result; only errors in the input itself are returned as `Err`.
pub fn differentiability_with(
    f: &FuncExpr,
    x0: &SymReal,
    cfg: NumericConfig,
) -> Result<Differentiability, CalculusError> {
    let f0 = match value_at(f, x0, cfg) {
        Ok((v, _)) => v,
        Err(e @ (CalculusError::Pole(_) | CalculusError::Unresolvable(_))) => {
            return Ok(Differentiability::no(format!("{}", e)))
        }
        Err(e) => return Err(e),
    };
    let jet = match generic_jet(f, x0, QUOTIENT_ORDER, cfg) {
        Ok((j, _)) => j,
        Err(
            e @ (CalculusError::CaseDependent(_)
            | CalculusError::Unresolvable(_)
            | CalculusError::Pole(_)
            | CalculusError::InsufficientOrder),
        ) => return Ok(Differentiability::no(format!("{}", e))),
        Err(e) => return Err(e),
    };
    if jet.terms.range(..0).next().is_some() {
        return Ok(Differentiability::no(String::from("f(x₀ + ε) is infinite")));
    }
    let c0 = jet.coefficient(0);
    if !matches!((&c0 - &f0).zero_test(cfg), ZeroTest::Zero(_)) {
        return Ok(Differentiability::no(format!(
            "f(x₀ + ε) = {} + … is not infinitely close to f(x₀) = {}",
            c0, f0
        )));
    }
    let c1 = jet.coefficient(1);
    if c1.has_bounded() {
        return Ok(Differentiability::no(format!(
            "the coefficient of ε is {}, which is not a real number",
            c1
        )));
    }
    Ok(Differentiability {
        differentiable: true,
        differential: Some(c1),
        reason: None,
    })
}

pub fn is_differentiable(f: &FuncExpr, x0: &SymReal) -> Result<bool, CalculusError> {
    Ok(differentiability(f, x0)?.differentiable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::func::Func;
    use crate::rational::{int, rat};
    use alloc::string::ToString;
    use core::ops::{Div, Mul};

    fn x() -> FuncExpr {
        FuncExpr::x()
    }

    fn value(r: &DerivResult) -> SymReal {
        r.value().cloned().expect("a real derivative")
    }

    #[test]
    fn square() {
        let f = x().powi(2);
        for x0 in [rat(0, 1), rat(3, 7), rat(-5, 2)] {
            let p = SymReal::rational(x0.clone());
            let two_x0 = SymReal::rational(x0 * int(2));
            assert_eq!(value(&d_plus(&f, &p).unwrap()), two_x0);
            assert_eq!(value(&d_minus(&f, &p).unwrap()), two_x0);
            assert_eq!(value(&d_mean(&f, &p).unwrap()), two_x0);
            assert!(is_derivable(&f, &p).unwrap());
        }
        let r = d_plus(&f, &SymReal::sqrt(int(2)).unwrap()).unwrap();
        assert_eq!(r.to_string(), "2·√2");
    }

    #[test]
    fn abs_at_zero() {
        let f = FuncExpr::apply(Func::Abs, x());
        let d = derivability(&f, &SymReal::zero()).unwrap();
        assert_eq!(value(&d.plus), SymReal::int(1));
        assert_eq!(value(&d.minus), SymReal::int(-1));
        assert_eq!(value(&d.mean), SymReal::int(0));
        assert!(!d.derivable);
        assert!(!is_differentiable(&f, &SymReal::zero()).unwrap());
        assert_eq!(value(&grid_d_plus(&f, &SymReal::zero()).unwrap()), SymReal::int(1));
    }

    #[test]
    fn dirichlet() {
        let f = FuncExpr::apply(Func::DirichletQ, x());
        for x0 in [SymReal::rational(rat(1, 3)), SymReal::sqrt(int(2)).unwrap()] {
            let d = derivability(&f, &x0).unwrap();
            assert_eq!(value(&d.plus), SymReal::zero());
            assert_eq!(value(&d.mean), SymReal::zero());
            assert!(d.derivable);
            assert!(!is_differentiable(&f, &x0).unwrap());
        }
    }

    #[test]
    fn oscillating() {
        let f = x().mul(FuncExpr::apply(Func::Sin, FuncExpr::int(1).div(x().powi(2))));
        let d = derivability(&f, &SymReal::zero()).unwrap();
        let expected = DerivResult::Indeterminate {
            expression: String::from("ctr(sin(α^2))"),
            reason: String::from("the center depends on the choice of the model"),
        };
        assert_eq!(d.plus, expected);
        assert_eq!(d.minus, expected);
        assert!(d.derivable && d.indeterminate);
        assert!(!is_differentiable(&f, &SymReal::zero()).unwrap());
        // x²·sin(1/x) is differentiable at 0 with derivative 0
        let g = x().powi(2).mul(FuncExpr::apply(Func::Sin, x().powi(-1)));
        let r = differentiability(&g, &SymReal::zero()).unwrap();
        assert!(r.differentiable);
        assert_eq!(r.differential, Some(SymReal::zero()));
    }

    #[test]
    fn sign_has_infinite_center() {
        let f = FuncExpr::apply(Func::Sign, x());
        let r = d_plus(&f, &SymReal::zero()).unwrap();
        assert_eq!(
            r,
            DerivResult::NonStandard {
                center: String::from("α")
            }
        );
    }

    #[test]
    fn analytic_functions() {
        let cfg = NumericConfig::default();
        let f = FuncExpr::apply(Func::Exp, FuncExpr::apply(Func::Sin, x()));
        let x0 = SymReal::one();
        // (exp∘sin)′ = cos·exp∘sin
        let r = d_mean(&f, &x0).unwrap();
        let expected = 1f64.cos() * 1f64.sin().exp();
        assert!((value(&r).to_f64().unwrap() - expected).abs() < 1e-14);
        let d = differentiability_with(&x().powi(3), &SymReal::rational(rat(1, 2)), cfg).unwrap();
        assert_eq!(d.differential, Some(SymReal::rational(rat(3, 4))));
        assert!(matches!(
            grid_d_plus(&f, &SymReal::Pi),
            Err(CalculusError::NotGridPoint(_))
        ));
    }
}
