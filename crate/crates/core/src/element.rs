//! Elements of the semigroup and of the bicyclic monoid.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::family::{Cutoff, NormalizedFamily};

/// Largest admissible coordinate. Sums of two coordinates stay below `u64::MAX`.
pub const MAX_COORD: u64 = 1 << 62;

/// The triple `(i, j, [a))`.
///
/// Ordering is lexicographic on `(i, j, a)`, which is the canonical output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    i: u64,
    j: u64,
    a: u64,
}

impl Element {
    /// Panics if a coordinate exceeds [`MAX_COORD`].
    pub const fn new(i: u64, j: u64, a: u64) -> Self {
        assert!(
            i <= MAX_COORD && j <= MAX_COORD && a <= MAX_COORD,
            "element coordinate out of range"
        );
        Element { i, j, a }
    }

    pub fn try_new(i: u64, j: u64, a: u64) -> Option<Self> {
        (i <= MAX_COORD && j <= MAX_COORD && a <= MAX_COORD).then_some(Element { i, j, a })
    }

    pub fn idempotent(p: u64, a: u64) -> Self {
        Element::new(p, p, a)
    }

    /// The identity `(0, 0, [lo))` of the family's semigroup.
    pub fn unit(fam: &NormalizedFamily) -> Self {
        Element::new(0, 0, fam.lo())
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn cutoff(&self) -> Cutoff {
        Cutoff(self.a)
    }

    pub fn with_cutoff(&self, a: u64) -> Self {
        Element::new(self.i, self.j, a)
    }

    /// Largest of the three coordinates.
    pub fn radius(&self) -> u64 {
        self.i.max(self.j).max(self.a)
    }

    pub fn inverse(self) -> Self {
        Element {
            i: self.j,
            j: self.i,
            a: self.a,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.i == self.j
    }

    /// The product, or `None` if a coordinate would exceed [`MAX_COORD`].
    ///
    /// The cutoff of the product is the least element of the intersected rays;
    /// a shifted cutoff that falls below 0 is absorbed by the `max`.
    pub fn checked_mul(self, rhs: Element) -> Option<Element> {
        let Element {
            i: i1,
            j: j1,
            a: a1,
        } = self;
        let Element {
            i: i2,
            j: j2,
            a: a2,
        } = rhs;
        let (i, j, a) = match j1.cmp(&i2) {
            Ordering::Less => {
                let d = i2 - j1;
                (i1 + d, j2, a1.saturating_sub(d).max(a2))
            }
            Ordering::Equal => (i1, j2, a1.max(a2)),
            Ordering::Greater => {
                let d = j1 - i2;
                (i1, j2 + d, a1.max(a2.saturating_sub(d)))
            }
        };
        Element::try_new(i, j, a)
    }

    pub fn pow(self, n: u32) -> Option<Element> {
        let mut acc = self;
        for _ in 1..n {
            acc = acc.checked_mul(self)?;
        }
        Some(acc)
    }
}

impl Mul for Element {
    type Output = Element;

    /// Panics on coordinate overflow; use [`Element::checked_mul`] near [`MAX_COORD`].
    fn mul(self, rhs: Element) -> Element {
        self.checked_mul(rhs)
            .unwrap_or_else(|| panic!("coordinate overflow in {self} * {rhs}"))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.a)
    }
}

/// Multiplies two members of `fam`. Rejects elements whose cutoff is not a member.
pub fn multiply(e1: Element, e2: Element, fam: &NormalizedFamily) -> Result<Element> {
    fam.check(e1.a)?;
    fam.check(e2.a)?;
    e1.checked_mul(e2).ok_or(Error::Overflow(e1, e2))
}

pub fn inverse(e: Element) -> Element {
    e.inverse()
}

pub fn is_idempotent(e: Element) -> bool {
    e.is_idempotent()
}

/// An element `(i, j)` of the bicyclic monoid `ω × ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BicyclicElement {
    pub i: u64,
    pub j: u64,
}

impl BicyclicElement {
    pub const ONE: BicyclicElement = BicyclicElement { i: 0, j: 0 };

    pub fn new(i: u64, j: u64) -> Self {
        BicyclicElement { i, j }
    }
}

impl Mul for BicyclicElement {
    type Output = BicyclicElement;

    fn mul(self, rhs: BicyclicElement) -> BicyclicElement {
        let m = self.j.min(rhs.i);
        BicyclicElement {
            i: self.i + rhs.i - m,
            j: self.j + rhs.j - m,
        }
    }
}

impl fmt::Display for BicyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Forgets the cutoff: `(i, j, [a)) ↦ (i, j)`.
pub fn project(e: Element) -> BicyclicElement {
    BicyclicElement { i: e.i, j: e.j }
}

/// `(i, j) ↦ (i, j, [a))`, onto the bicyclic copy at cutoff `a`.
pub fn embed(b: BicyclicElement, a: u64, fam: &NormalizedFamily) -> Result<Element> {
    fam.check(a)?;
    Element::try_new(b.i, b.j, a).ok_or(Error::CoordinateOutOfRange(b.i.max(b.j)))
}

/// Label of a class of the least group congruence: `d = j - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaClass(pub i64);

impl SigmaClass {
    pub fn d(&self) -> i64 {
        self.0
    }
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn sigma_class(e: Element) -> SigmaClass {
    SigmaClass(e.j as i64 - e.i as i64)
}

/// Fast path for `s σ t`; agreement with the definition is checked by
/// [`crate::oracle::sigma_by_definition`].
pub fn sigma_equivalent(s: Element, t: Element) -> bool {
    sigma_class(s) == sigma_class(t)
}
