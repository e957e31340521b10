//! Named homomorphisms, retracts, the lower-family refutation and the
//! isomorphism search.

mod iso;
mod refute;
mod retract;

pub use iso::{
    automorphisms, is_bijection_between, isomorphic, isomorphic_families,
    search_generator_consistent_maps, shift_isomorphism, IsoReport,
};
pub use refute::{refute_lower_retraction, RefutationWitness, WITNESS_CASES};
pub use retract::{enumerate_retracts, RetractDescriptor, RetractKind, DEFAULT_RETRACT_BOUND};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ball::BallUniverse;
use crate::element::{project, BicyclicElement, Element};
use crate::error::{Error, Result};
use crate::family::NormalizedFamily;

/// A map out of the semigroup (or, for `Embedding`, out of the bicyclic monoid).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params")]
pub enum ElementMap {
    Identity,
    /// `x ↦ e`.
    Constant(Element),
    /// `(i,j,[a)) ↦ (i,j,[max(a,k)))`.
    Retraction {
        k: u64,
    },
    /// `(i,j,[from_lo + t)) ↦ (i,j,[to_lo + t))`.
    ShiftIso {
        from_lo: u64,
        to_lo: u64,
    },
    /// `(i,j,[a)) ↦ (i,j)`, into the bicyclic monoid.
    Projection,
    /// `(i,j) ↦ (i,j,[a))`, out of the bicyclic monoid.
    Embedding {
        a: u64,
    },
    /// Projection followed by `Embedding { a }`.
    EmbedProject {
        a: u64,
    },
    /// The candidate maps sending the idempotent at cutoff `k+1` just below
    /// `(0,0,[k))`, one per admissible image. Case 1 keeps indices and fixes
    /// cutoffs up to `k`; cases 2 and 3 shift indices by one on cutoffs up to `k+1`.
    ForcedCandidate {
        case: u8,
        k: u64,
    },
    /// `(i,j,[a)) ↦ (i+d, j+d, [k))` with `d = a - k` when `a > k`, identity otherwise.
    LowerTruncation {
        k: u64,
    },
    /// Explicit pairs; undefined off the listed domain.
    Table {
        pairs: Vec<(Element, Element)>,
    },
}

/// A point of the semigroup or of the bicyclic monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Triple(Element),
    Pair(BicyclicElement),
}

impl Value {
    pub fn checked_mul(self, rhs: Value) -> Result<Value> {
        match (self, rhs) {
            (Value::Triple(x), Value::Triple(y)) => x
                .checked_mul(y)
                .map(Value::Triple)
                .ok_or(Error::Overflow(x, y)),
            (Value::Pair(x), Value::Pair(y)) => Ok(Value::Pair(x * y)),
            (x, y) => Err(Error::DomainEscape(format!("cannot multiply {x} by {y}"))),
        }
    }

    pub fn triple(self) -> Option<Element> {
        match self {
            Value::Triple(e) => Some(e),
            Value::Pair(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Triple(e) => e.fmt(f),
            Value::Pair(b) => b.fmt(f),
        }
    }
}

impl From<Element> for Value {
    fn from(e: Element) -> Self {
        Value::Triple(e)
    }
}

impl From<BicyclicElement> for Value {
    fn from(b: BicyclicElement) -> Self {
        Value::Pair(b)
    }
}

fn escape(what: impl fmt::Display) -> Error {
    Error::DomainEscape(what.to_string())
}

impl ElementMap {
    pub fn name(&self) -> &'static str {
        match self {
            ElementMap::Identity => "Identity",
            ElementMap::Constant(_) => "Constant",
            ElementMap::Retraction { .. } => "Retraction",
            ElementMap::ShiftIso { .. } => "ShiftIso",
            ElementMap::Projection => "Projection",
            ElementMap::Embedding { .. } => "Embedding",
            ElementMap::EmbedProject { .. } => "EmbedProject",
            ElementMap::ForcedCandidate { .. } => "ForcedCandidate",
            ElementMap::LowerTruncation { .. } => "LowerTruncation",
            ElementMap::Table { .. } => "Table",
        }
    }

    /// Whether the map takes values in the semigroup itself.
    pub fn is_self_map(&self) -> bool {
        !matches!(self, ElementMap::Projection | ElementMap::Embedding { .. })
    }

    fn takes_pairs(&self) -> bool {
        matches!(self, ElementMap::Embedding { .. })
    }

    pub fn eval(&self, v: Value) -> Result<Value> {
        match (self, v) {
            (ElementMap::Embedding { a }, Value::Pair(b)) => Element::try_new(b.i, b.j, *a)
                .map(Value::Triple)
                .ok_or(Error::CoordinateOutOfRange(b.i.max(b.j))),
            (ElementMap::Embedding { .. }, Value::Triple(e)) => Err(escape(e)),
            (_, Value::Pair(b)) => Err(escape(b)),
            (_, Value::Triple(e)) => self.apply_triple(e),
        }
    }

    /// Evaluates a map defined on the semigroup; errors for `Embedding`.
    pub fn apply(&self, e: Element) -> Result<Value> {
        self.eval(Value::Triple(e))
    }

    /// Evaluates a self-map.
    pub fn apply_self(&self, e: Element) -> Result<Element> {
        self.apply(e)?
            .triple()
            .ok_or(Error::NotSelfMap(self.name()))
    }

    fn apply_triple(&self, e: Element) -> Result<Value> {
        let (i, j, a) = (e.i(), e.j(), e.a());
        let out = match self {
            ElementMap::Identity => e,
            ElementMap::Constant(c) => *c,
            ElementMap::Retraction { k } => Element::new(i, j, a.max(*k)),
            ElementMap::ShiftIso { from_lo, to_lo } => {
                let t = a.checked_sub(*from_lo).ok_or_else(|| escape(e))?;
                Element::try_new(i, j, to_lo + t).ok_or(Error::CoordinateOutOfRange(to_lo + t))?
            }
            ElementMap::Projection => return Ok(Value::Pair(project(e))),
            ElementMap::Embedding { .. } => return Err(escape(e)),
            ElementMap::EmbedProject { a: c } => Element::new(i, j, *c),
            ElementMap::ForcedCandidate { case, k } => {
                let k = *k;
                match case {
                    1 if a == k + 1 => Element::new(i, j, k),
                    1 => e,
                    2 | 3 if a <= k + 1 => {
                        let c = match (a == k + 1, case) {
                            (false, _) => a,
                            (true, 2) => k,
                            (true, _) => k.checked_sub(1).ok_or_else(|| escape(e))?,
                        };
                        Element::try_new(i + 1, j + 1, c)
                            .ok_or(Error::CoordinateOutOfRange(i + 1))?
                    }
                    2 | 3 => e,
                    _ => return Err(escape(format!("forced candidate case {case}"))),
                }
            }
            ElementMap::LowerTruncation { k } => {
                if a <= *k {
                    e
                } else {
                    let d = a - k;
                    Element::try_new(i + d, j + d, *k)
                        .ok_or(Error::CoordinateOutOfRange(i.max(j) + d))?
                }
            }
            ElementMap::Table { pairs } => {
                return pairs
                    .iter()
                    .find(|(x, _)| *x == e)
                    .map(|&(_, y)| Value::Triple(y))
                    .ok_or_else(|| escape(e))
            }
        };
        Ok(Value::Triple(out))
    }

    /// Domain points of `ball`: its elements, or their distinct index pairs
    /// for maps out of the bicyclic monoid.
    fn domain(&self, ball: &BallUniverse) -> Vec<Value> {
        if self.takes_pairs() {
            let mut pairs: Vec<Value> = ball
                .elements()
                .iter()
                .map(|e| Value::Pair(project(*e)))
                .collect();
            pairs.dedup();
            pairs
        } else {
            ball.elements().iter().map(|&e| Value::Triple(e)).collect()
        }
    }
}

impl fmt::Display for ElementMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementMap::Identity | ElementMap::Projection => f.write_str(self.name()),
            ElementMap::Constant(e) => write!(f, "Constant{e}"),
            ElementMap::Retraction { k } => write!(f, "Retraction({k})"),
            ElementMap::ShiftIso { from_lo, to_lo } => write!(f, "ShiftIso({from_lo}->{to_lo})"),
            ElementMap::Embedding { a } => write!(f, "Embedding({a})"),
            ElementMap::EmbedProject { a } => write!(f, "EmbedProject({a})"),
            ElementMap::ForcedCandidate { case, k } => {
                write!(f, "ForcedCandidate(case {case}, k={k})")
            }
            ElementMap::LowerTruncation { k } => write!(f, "LowerTruncation({k})"),
            ElementMap::Table { pairs } => write!(f, "Table({} pairs)", pairs.len()),
        }
    }
}

/// `h_k`: raises every cutoff below `k` to `k`.
pub fn retraction_hk(k: u64, e: Element, fam: &NormalizedFamily) -> Result<Element> {
    fam.check(k)?;
    fam.check(e.a())?;
    Ok(Element::new(e.i(), e.j(), e.a().max(k)))
}

/// Checks `m(x·y) = m(x)·m(y)` for one pair.
pub fn check_pair(m: &ElementMap, x: Value, y: Value) -> Result<Option<(Value, Value)>> {
    let lhs = m.eval(x.checked_mul(y)?)?;
    let rhs = m.eval(x)?.checked_mul(m.eval(y)?)?;
    Ok((lhs != rhs).then_some((lhs, rhs)))
}

/// First pair `(x, y)` of the ball, in canonical order, with
/// `m(x·y) ≠ m(x)·m(y)`; `None` if the map is multiplicative on the ball.
///
/// Products are evaluated even when they leave the ball, so maps undefined
/// there (tables) fail with [`Error::DomainEscape`].
pub fn verify_homomorphism(m: &ElementMap, ball: &BallUniverse) -> Result<Option<(Value, Value)>> {
    let dom = m.domain(ball);
    let images: Vec<Value> = dom.iter().map(|&x| m.eval(x)).collect::<Result<_>>()?;
    for (xi, &x) in dom.iter().enumerate() {
        for (yi, &y) in dom.iter().enumerate() {
            let xy = x.checked_mul(y)?;
            let lhs = m.eval(xy).map_err(|_| escape(format!("{xy} = {x}·{y}")))?;
            if lhs != images[xi].checked_mul(images[yi])? {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Like [`verify_homomorphism`], but only pairs whose product stays in the
/// ball are checked, so maps known only on the ball can be tested.
pub fn verify_homomorphism_within(
    m: &ElementMap,
    ball: &BallUniverse,
) -> Result<Option<(Element, Element)>> {
    let images: HashMap<usize, Value> = ball
        .elements()
        .iter()
        .enumerate()
        .map(|(i, &e)| Ok((i, m.apply(e)?)))
        .collect::<Result<_>>()?;
    let els = ball.elements();
    for x in 0..els.len() {
        for y in 0..els.len() {
            if let Some(p) = ball.product_index(x, y) {
                if images[&p] != images[&x].checked_mul(images[&y])? {
                    return Ok(Some((els[x], els[y])));
                }
            }
        }
    }
    Ok(None)
}

/// Ball elements fixed by a self-map.
pub fn fixed_points(m: &ElementMap, ball: &BallUniverse) -> Result<Vec<Element>> {
    if !m.is_self_map() {
        return Err(Error::NotSelfMap(m.name()));
    }
    let mut out = Vec::new();
    for &e in ball.elements() {
        if m.apply_self(e)? == e {
            out.push(e);
        }
    }
    Ok(out)
}

/// `m ∘ m = m` on the ball.
pub fn is_idempotent_map(m: &ElementMap, ball: &BallUniverse) -> Result<bool> {
    for &e in ball.elements() {
        let once = m.apply_self(e)?;
        if m.apply_self(once)? != once {
            return Ok(false);
        }
    }
    Ok(true)
}
