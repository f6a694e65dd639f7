//! Numerosities of a decidable algebra of set expressions.
//!
//! Atom values follow the model in which `α = num(ℕ⁺)` is divisible by every
//! `k` and is a `k`-th power for every `k`: multiples of `k` count `α/k`,
//! `k`-th powers count `α^(1/k)`, `℘_fin(ℕ⁺)` counts `2^α`, `ℤ` counts
//! `2α + 1` and `ℚ` counts `2α² + 1`.
//!
//! Containment and disjointness are decided over concrete element
//! membership: a containment is proven by structural rules and refuted by an
//! explicit witness. Anything neither proven nor refuted is reported as
//! unknown, and a disjoint union whose parts are not proven disjoint is
//! refused.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::number::EuclideanNumber;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumerosityError {
    /// A disjoint union whose parts could not be shown disjoint.
    NotDisjoint { left: String, right: String },
    /// An atom parameter outside its domain, e.g. `mult(0)`.
    InvalidAtom(String),
}

impl fmt::Display for NumerosityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumerosityError::NotDisjoint { left, right } => write!(
                f,
                "disjointness: cannot establish that {} and {} are disjoint",
                left, right
            ),
            NumerosityError::InvalidAtom(what) => write!(f, "invalid set atom: {}", what),
        }
    }
}

impl core::error::Error for NumerosityError {}

/// Label of an element of a [`SetExpr::Finite`] set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Int(BigInt),
    /// An abstract point that belongs to no numeric atom.
    Sym(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(n) => write!(f, "{}", n),
            Label::Sym(s) => write!(f, "{}", s),
        }
    }
}

/// Symbolic set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetExpr {
    Empty,
    Finite(Vec<Label>),
    /// `ℕ⁺ = {1, 2, 3, …}`
    NPlus,
    /// `ℕ = {0, 1, 2, …}`
    N,
    Z,
    Q,
    /// `(q, q+1] ∩ ℚ`
    QInterval(Rational),
    /// `{k, 2k, 3k, …}`
    MultiplesOf(u64),
    /// `{1, 2^k, 3^k, …}`
    KthPowers(u64),
    /// Finite subsets of `ℕ⁺`.
    FinPowerSetNPlus,
    /// The singleton `{b}` of an abstract point.
    Tagged(String),
    DisjointUnion(Box<SetExpr>, Box<SetExpr>),
    Product(Box<SetExpr>, Box<SetExpr>),
    /// `A × {b}`
    ProductSingleton(Box<SetExpr>, String),
}

impl SetExpr {
    /// `Finite` from integer labels; duplicates are an error.
    pub fn finite_ints(labels: impl IntoIterator<Item = i64>) -> Result<Self, NumerosityError> {
        Self::finite(labels.into_iter().map(|n| Label::Int(BigInt::from(n))))
    }

    pub fn finite(labels: impl IntoIterator<Item = Label>) -> Result<Self, NumerosityError> {
        let labels: Vec<Label> = labels.into_iter().collect();
        let distinct: BTreeSet<&Label> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(NumerosityError::InvalidAtom(String::from(
                "finite set with duplicate labels",
            )));
        }
        Ok(SetExpr::Finite(labels))
    }

    pub fn union(a: SetExpr, b: SetExpr) -> Self {
        SetExpr::DisjointUnion(Box::new(a), Box::new(b))
    }

    pub fn product(a: SetExpr, b: SetExpr) -> Self {
        SetExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn product_singleton(a: SetExpr, b: impl Into<String>) -> Self {
        SetExpr::ProductSingleton(Box::new(a), b.into())
    }

    fn validate(&self) -> Result<(), NumerosityError> {
        match self {
            SetExpr::MultiplesOf(0) => Err(NumerosityError::InvalidAtom(String::from("mult(0)"))),
            SetExpr::KthPowers(0) => Err(NumerosityError::InvalidAtom(String::from("pow_k(0)"))),
            SetExpr::Finite(ls) => {
                let distinct: BTreeSet<&Label> = ls.iter().collect();
                if distinct.len() != ls.len() {
                    Err(NumerosityError::InvalidAtom(String::from(
                        "finite set with duplicate labels",
                    )))
                } else {
                    Ok(())
                }
            }
            SetExpr::DisjointUnion(a, b) | SetExpr::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            SetExpr::ProductSingleton(a, _) => a.validate(),
            _ => Ok(()),
        }
    }

    /// `mult(1)` and `pow_k(1)` are `ℕ⁺`; `A × {b}` is a product with a
    /// tagged singleton.
    fn canonical(&self) -> SetExpr {
        match self {
            SetExpr::MultiplesOf(1) | SetExpr::KthPowers(1) => SetExpr::NPlus,
            SetExpr::Finite(ls) if ls.is_empty() => SetExpr::Empty,
            SetExpr::DisjointUnion(a, b) => SetExpr::union(a.canonical(), b.canonical()),
            SetExpr::Product(a, b) => SetExpr::product(a.canonical(), b.canonical()),
            SetExpr::ProductSingleton(a, b) => SetExpr::product(a.canonical(), SetExpr::Tagged(b.clone())),
            other => other.clone(),
        }
    }

    /// Membership test for a concrete element.
    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (SetExpr::Empty, _) => false,
            (SetExpr::Finite(ls), Element::Num(q)) => ls.iter().any(|l| match l {
                Label::Int(n) => q.is_integer() && q.numer() == n,
                Label::Sym(_) => false,
            }),
            (SetExpr::Finite(ls), Element::Tag(t)) => ls.iter().any(|l| matches!(l, Label::Sym(s) if s == t)),
            (SetExpr::Tagged(b), Element::Tag(t)) => b == t,
            (SetExpr::NPlus, Element::Num(q)) => q.is_integer() && q.is_positive(),
            (SetExpr::N, Element::Num(q)) => q.is_integer() && !q.is_negative(),
            (SetExpr::Z, Element::Num(q)) => q.is_integer(),
            (SetExpr::Q, Element::Num(_)) => true,
            (SetExpr::QInterval(lo), Element::Num(q)) => q > lo && *q <= lo + Rational::one(),
            (SetExpr::MultiplesOf(k), Element::Num(q)) => {
                q.is_integer() && q.is_positive() && q.numer().is_multiple_of(&BigInt::from(*k))
            }
            (SetExpr::KthPowers(k), Element::Num(q)) => {
                q.is_integer()
                    && q.is_positive()
                    && u32::try_from(*k)
                        .ok()
                        .and_then(|k| rational::exact_root(q, k))
                        .is_some()
            }
            (SetExpr::FinPowerSetNPlus, Element::FinSet(s)) => s.iter().all(|n| *n >= 1),
            (SetExpr::DisjointUnion(a, b), x) => a.contains(x) || b.contains(x),
            (SetExpr::Product(a, b), Element::Pair(x, y)) => a.contains(x) && b.contains(y),
            (SetExpr::ProductSingleton(a, b), Element::Pair(x, y)) => {
                a.contains(x) && matches!(&**y, Element::Tag(t) if t == b)
            }
            _ => false,
        }
    }

    fn is_empty(&self) -> bool {
        match self {
            SetExpr::Empty => true,
            SetExpr::Finite(ls) => ls.is_empty(),
            SetExpr::DisjointUnion(a, b) => a.is_empty() && b.is_empty(),
            SetExpr::Product(a, b) => a.is_empty() || b.is_empty(),
            SetExpr::ProductSingleton(a, _) => a.is_empty(),
            _ => false,
        }
    }

    /// A finite selection of members used to refute containments.
    pub fn sample_elements(&self) -> Vec<Element> {
        let ints = |it: &mut dyn Iterator<Item = BigInt>| -> Vec<Element> {
            it.map(|n| Element::Num(Rational::from_integer(n))).collect()
        };
        match self {
            SetExpr::Empty => Vec::new(),
            SetExpr::Finite(ls) => ls
                .iter()
                .map(|l| match l {
                    Label::Int(n) => Element::Num(Rational::from_integer(n.clone())),
                    Label::Sym(s) => Element::Tag(s.clone()),
                })
                .collect(),
            SetExpr::Tagged(b) => alloc::vec![Element::Tag(b.clone())],
            SetExpr::NPlus => ints(&mut (1..=48).chain([1_000_003, 999_999_937]).map(BigInt::from)),
            SetExpr::N => ints(&mut (0..=48).chain([1_000_003]).map(BigInt::from)),
            SetExpr::Z => ints(&mut (-48..=48).chain([1_000_003, -1_000_003]).map(BigInt::from)),
            SetExpr::Q => {
                let mut v = SetExpr::Z.sample_elements();
                for k in -48i64..=48 {
                    v.push(Element::Num(rational::rat(2 * k + 1, 2)));
                    v.push(Element::Num(rational::rat(3 * k + 1, 3)));
                }
                v.push(Element::Num(rational::rat(2_000_007, 2)));
                v
            }
            SetExpr::QInterval(lo) => {
                let m = lo.floor() + Rational::one();
                let mut v = alloc::vec![Element::Num(m)];
                for (p, d) in [(1, 1), (1, 2), (1, 3), (2, 3), (1, 1000), (999, 1000)] {
                    v.push(Element::Num(lo + rational::rat(p, d)));
                }
                v
            }
            SetExpr::MultiplesOf(k) => ints(
                &mut (1..=48u64)
                    .chain([1_000_003])
                    .map(|i| BigInt::from(i) * BigInt::from(*k)),
            ),
            SetExpr::KthPowers(k) => {
                let k = usize::try_from(*k).unwrap_or(usize::MAX).min(64);
                ints(&mut (1..=16u64).map(|i| num_traits::pow(BigInt::from(i), k)))
            }
            SetExpr::FinPowerSetNPlus => {
                let mut v = alloc::vec![Element::FinSet(BTreeSet::new())];
                for i in 1..=6u64 {
                    v.push(Element::FinSet([i].into_iter().collect()));
                    v.push(Element::FinSet([i, i + 1].into_iter().collect()));
                }
                v
            }
            SetExpr::DisjointUnion(a, b) => {
                let mut v = a.sample_elements();
                v.extend(b.sample_elements());
                v
            }
            SetExpr::Product(a, b) => {
                let xs = a.sample_elements();
                let ys = b.sample_elements();
                let mut v = Vec::new();
                for x in xs.iter().take(12) {
                    for y in ys.iter().take(12) {
                        v.push(Element::Pair(Box::new(x.clone()), Box::new(y.clone())));
                    }
                }
                // far-out corners of both factors
                for x in xs.iter().rev().take(3) {
                    for y in ys.iter().rev().take(3) {
                        v.push(Element::Pair(Box::new(x.clone()), Box::new(y.clone())));
                    }
                }
                v
            }
            SetExpr::ProductSingleton(a, b) => a
                .sample_elements()
                .into_iter()
                .map(|x| Element::Pair(Box::new(x), Box::new(Element::Tag(b.clone()))))
                .collect(),
        }
    }
}

/// Concrete element used for membership tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Num(Rational),
    Tag(String),
    /// A finite set of naturals, member of `℘_fin(ℕ⁺)` when all are positive.
    FinSet(BTreeSet<u64>),
    Pair(Box<Element>, Box<Element>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubsetVerdict {
    StrictSubset,
    Equal,
    SupersetStrict,
    Incomparable,
    Unknown,
}

impl SubsetVerdict {
    /// The verdict for the swapped pair.
    pub fn flip(self) -> Self {
        match self {
            SubsetVerdict::StrictSubset => SubsetVerdict::SupersetStrict,
            SubsetVerdict::SupersetStrict => SubsetVerdict::StrictSubset,
            v => v,
        }
    }
}

impl fmt::Display for SubsetVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubsetVerdict::StrictSubset => "strict-subset",
            SubsetVerdict::Equal => "equal",
            SubsetVerdict::SupersetStrict => "superset-strict",
            SubsetVerdict::Incomparable => "incomparable",
            SubsetVerdict::Unknown => "unknown",
        })
    }
}

/// Three-valued containment answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Containment {
    Yes,
    No,
    Unknown,
}

fn is_integer_atom(x: &SetExpr) -> bool {
    matches!(
        x,
        SetExpr::NPlus | SetExpr::N | SetExpr::Z | SetExpr::MultiplesOf(_) | SetExpr::KthPowers(_)
    )
}

/// Sound containment proof between canonical atoms.
fn atom_subset(x: &SetExpr, y: &SetExpr) -> bool {
    use SetExpr::*;
    match (x, y) {
        (NPlus, NPlus | N | Z | Q) => true,
        (N, N | Z | Q) => true,
        (Z, Z | Q) => true,
        (Q, Q) => true,
        (MultiplesOf(_) | KthPowers(_), NPlus | N | Z | Q) => true,
        (MultiplesOf(a), MultiplesOf(b)) => a % b == 0,
        (KthPowers(a), KthPowers(b)) => a % b == 0,
        (QInterval(_), Q) => true,
        (QInterval(a), QInterval(b)) => a == b,
        (FinPowerSetNPlus, FinPowerSetNPlus) => true,
        (Tagged(a), Tagged(b)) => a == b,
        _ => false,
    }
}

/// Structural proof of `x ⊆ y` on canonical expressions.
fn proves_subset(x: &SetExpr, y: &SetExpr) -> bool {
    if x.is_empty() {
        return true;
    }
    match x {
        SetExpr::Finite(_) | SetExpr::Tagged(_) => {
            return x.sample_elements().iter().all(|e| y.contains(e));
        }
        SetExpr::DisjointUnion(a, b) => return proves_subset(a, y) && proves_subset(b, y),
        _ => {}
    }
    match y {
        SetExpr::DisjointUnion(c, d) => {
            if proves_subset(x, c) || proves_subset(x, d) {
                return true;
            }
            // ℕ ⊆ ℕ⁺ ∪ {0}-style covers: an integer atom minus ℕ⁺ is finite
            if let SetExpr::N = x {
                return (proves_subset(&SetExpr::NPlus, c) || proves_subset(&SetExpr::NPlus, d))
                    && y.contains(&Element::Num(Rational::zero()));
            }
            false
        }
        _ => match (x, y) {
            (SetExpr::Product(a, b), SetExpr::Product(c, d)) => proves_subset(a, c) && proves_subset(b, d),
            (SetExpr::Product(..), _) | (_, SetExpr::Product(..)) => false,
            _ => atom_subset(x, y),
        },
    }
}

fn refutes_subset(x: &SetExpr, y: &SetExpr) -> bool {
    x.sample_elements().iter().any(|e| !y.contains(e))
}

fn containment(x: &SetExpr, y: &SetExpr) -> Containment {
    if proves_subset(x, y) {
        Containment::Yes
    } else if refutes_subset(x, y) {
        Containment::No
    } else {
        Containment::Unknown
    }
}

/// Sound proof that `x ∩ y = ∅` on canonical expressions.
fn proves_disjoint(x: &SetExpr, y: &SetExpr) -> bool {
    use SetExpr::*;
    if x.is_empty() || y.is_empty() {
        return true;
    }
    match (x, y) {
        (DisjointUnion(a, b), _) => proves_disjoint(a, y) && proves_disjoint(b, y),
        (_, DisjointUnion(..)) => proves_disjoint(y, x),
        (Finite(_) | Tagged(_), _) => x.sample_elements().iter().all(|e| !y.contains(e)),
        (_, Finite(_) | Tagged(_)) => proves_disjoint(y, x),
        (Product(a, b), Product(c, d)) => proves_disjoint(a, c) || proves_disjoint(b, d),
        (Product(..), _) | (_, Product(..)) => true,
        (FinPowerSetNPlus, FinPowerSetNPlus) => false,
        (FinPowerSetNPlus, _) | (_, FinPowerSetNPlus) => true,
        (QInterval(a), QInterval(b)) => (a - b).abs() >= Rational::one(),
        (QInterval(q), other) | (other, QInterval(q)) if is_integer_atom(other) => {
            // (q, q+1] contains exactly one integer
            let m = q.floor() + Rational::one();
            !other.contains(&Element::Num(m))
        }
        _ => false,
    }
}

/// Decides how `a` and `b` are related by inclusion.
pub fn subset_check(a: &SetExpr, b: &SetExpr) -> SubsetVerdict {
    let (a, b) = (a.canonical(), b.canonical());
    match (containment(&a, &b), containment(&b, &a)) {
        (Containment::Yes, Containment::Yes) => SubsetVerdict::Equal,
        (Containment::Yes, Containment::No) => SubsetVerdict::StrictSubset,
        (Containment::No, Containment::Yes) => SubsetVerdict::SupersetStrict,
        (Containment::No, Containment::No) => SubsetVerdict::Incomparable,
        _ => SubsetVerdict::Unknown,
    }
}

/// True when `a` and `b` are provably disjoint.
pub fn disjoint(a: &SetExpr, b: &SetExpr) -> bool {
    proves_disjoint(&a.canonical(), &b.canonical())
}

/// Numerosity of a set expression.
pub fn numerosity(a: &SetExpr) -> Result<EuclideanNumber, NumerosityError> {
    a.validate()?;
    eval(a)
}

fn eval(a: &SetExpr) -> Result<EuclideanNumber, NumerosityError> {
    use SetExpr::*;
    Ok(match a {
        Empty => EuclideanNumber::zero(),
        Finite(ls) => EuclideanNumber::from_integer(ls.len() as i64),
        Tagged(_) => EuclideanNumber::one(),
        NPlus => EuclideanNumber::alpha(),
        // ℕ = ℕ⁺ ⊎ {0}
        N => eval(&SetExpr::union(NPlus, Finite(alloc::vec![Label::Int(BigInt::zero())])))?,
        Z => &(&EuclideanNumber::from_integer(2) * &EuclideanNumber::alpha()) + &EuclideanNumber::one(),
        Q => {
            &(&EuclideanNumber::from_integer(2) * &EuclideanNumber::alpha().pow(2).expect("α ≠ 0"))
                + &EuclideanNumber::one()
        }
        QInterval(_) => EuclideanNumber::alpha(),
        MultiplesOf(k) => {
            let k = Rational::from_integer(BigInt::from(*k));
            EuclideanNumber::alpha()
                .checked_div(&EuclideanNumber::from_rational(k))
                .expect("k ≥ 1")
        }
        KthPowers(k) => EuclideanNumber::alpha_pow(Rational::new(BigInt::one(), BigInt::from(*k))),
        FinPowerSetNPlus => EuclideanNumber::two_pow_alpha(),
        DisjointUnion(x, y) => {
            if !disjoint(x, y) {
                return Err(NumerosityError::NotDisjoint {
                    left: render(x),
                    right: render(y),
                });
            }
            &eval(x)? + &eval(y)?
        }
        Product(x, y) => &eval(x)? * &eval(y)?,
        ProductSingleton(x, _) => eval(x)?,
    })
}

fn render(a: &SetExpr) -> String {
    alloc::format!("{}", a)
}

/// Surface syntax: `N+`, `N`, `Z`, `Q`, `Q(q,q+1]`, `mult(k)`, `pow_k(k)`,
/// `Pfin(N+)`, `{a,b,c}`, `A (+) B`, `A x B`.
impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Empty => write!(f, "{{}}"),
            SetExpr::Finite(ls) => {
                write!(f, "{{")?;
                for (i, l) in ls.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", l)?;
                }
                write!(f, "}}")
            }
            SetExpr::NPlus => write!(f, "N+"),
            SetExpr::N => write!(f, "N"),
            SetExpr::Z => write!(f, "Z"),
            SetExpr::Q => write!(f, "Q"),
            SetExpr::QInterval(q) => write!(f, "Q({},{}]", q, q + Rational::one()),
            SetExpr::MultiplesOf(k) => write!(f, "mult({})", k),
            SetExpr::KthPowers(k) => write!(f, "pow_k({})", k),
            SetExpr::FinPowerSetNPlus => write!(f, "Pfin(N+)"),
            SetExpr::Tagged(b) => write!(f, "tag({})", b),
            SetExpr::DisjointUnion(a, b) => write!(f, "({} (+) {})", a, b),
            SetExpr::Product(a, b) => write!(f, "({} x {})", a, b),
            SetExpr::ProductSingleton(a, b) => write!(f, "({} x tag({}))", a, b),
        }
    }
}

/// Size hint used by callers that want to bound expression depth.
pub fn depth(a: &SetExpr) -> usize {
    match a {
        SetExpr::DisjointUnion(x, y) | SetExpr::Product(x, y) => 1 + depth(x).max(depth(y)),
        SetExpr::ProductSingleton(x, _) => 1 + depth(x),
        _ => 0,
    }
}
