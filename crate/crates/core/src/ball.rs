//! Finite truncations of the semigroup.

use std::sync::{Arc, OnceLock};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::NormalizedFamily;

const OUTSIDE: u32 = u32::MAX;

/// All `(i, j, [a))` with `i, j <= n`, `a <= cutoff_bound` and `[a)` in the family.
///
/// Elements are stored in canonical `(i, j, a)` order. Verdicts that depend on
/// the border are read only on the inner ball `i, j <= inner_radius`.
/// Cloning is cheap and shares the multiplication table.
#[derive(Debug, Clone)]
pub struct BallUniverse(Arc<BallData>);

#[derive(Debug)]
struct BallData {
    family: NormalizedFamily,
    n: u64,
    cutoff_bound: u64,
    inner_radius: u64,
    cutoffs: Vec<u64>,
    elements: Vec<Element>,
    table: OnceLock<Vec<u32>>,
}

/// Builds the ball of radius `n` with cutoffs up to `cutoff_bound`; inner radius `n - 2`.
pub fn make_ball(fam: &NormalizedFamily, n: u64, cutoff_bound: u64) -> Result<BallUniverse> {
    BallUniverse::new(*fam, n, cutoff_bound)
}

impl BallUniverse {
    pub fn new(family: NormalizedFamily, n: u64, cutoff_bound: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BallTooSmall(n));
        }
        let cutoffs: Vec<u64> = family.cutoffs_up_to(cutoff_bound).collect();
        if cutoffs.is_empty() {
            return Err(Error::EmptyBall {
                family: family.to_string(),
                cutoff_bound,
            });
        }
        let mut elements = Vec::with_capacity(((n + 1) * (n + 1)) as usize * cutoffs.len());
        for i in 0..=n {
            for j in 0..=n {
                for &a in &cutoffs {
                    elements.push(Element::new(i, j, a));
                }
            }
        }
        Ok(BallUniverse(Arc::new(BallData {
            family,
            n,
            cutoff_bound,
            inner_radius: n - 2,
            cutoffs,
            elements,
            table: OnceLock::new(),
        })))
    }

    pub fn with_inner_radius(self, inner: u64) -> Result<Self> {
        let max = self.0.n - 2;
        if inner > max {
            return Err(Error::InnerRadiusTooLarge { inner, max });
        }
        let d = &self.0;
        Ok(BallUniverse(Arc::new(BallData {
            family: d.family,
            n: d.n,
            cutoff_bound: d.cutoff_bound,
            inner_radius: inner,
            cutoffs: d.cutoffs.clone(),
            elements: d.elements.clone(),
            table: d.table.clone(),
        })))
    }

    /// True when both handles refer to the same enumeration.
    pub fn same_as(&self, other: &BallUniverse) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.family == other.0.family
                && self.0.n == other.0.n
                && self.0.cutoffs == other.0.cutoffs
                && self.0.inner_radius == other.0.inner_radius)
    }

    pub fn family(&self) -> &NormalizedFamily {
        &self.0.family
    }

    pub fn n(&self) -> u64 {
        self.0.n
    }

    pub fn cutoff_bound(&self) -> u64 {
        self.0.cutoff_bound
    }

    pub fn inner_radius(&self) -> u64 {
        self.0.inner_radius
    }

    /// The admitted cutoffs, ascending.
    pub fn cutoffs(&self) -> &[u64] {
        &self.0.cutoffs
    }

    pub fn elements(&self) -> &[Element] {
        &self.0.elements
    }

    pub fn len(&self) -> usize {
        self.0.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elements.is_empty()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.index_of(e).is_some()
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        if e.i() > self.0.n || e.j() > self.0.n {
            return None;
        }
        let lo = self.0.cutoffs[0];
        let c = e.a().checked_sub(lo)? as usize;
        if c >= self.0.cutoffs.len() {
            return None;
        }
        let width = self.0.cutoffs.len();
        let row = (self.0.n + 1) as usize;
        Some((e.i() as usize * row + e.j() as usize) * width + c)
    }

    pub fn is_inner(&self, e: &Element) -> bool {
        e.i() <= self.0.inner_radius && e.j() <= self.0.inner_radius && self.contains(e)
    }

    pub fn inner_elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.elements.iter().copied().filter(|e| self.is_inner(e))
    }

    pub fn idempotents(&self) -> impl Iterator<Item = Element> + '_ {
        self.0
            .elements
            .iter()
            .copied()
            .filter(Element::is_idempotent)
    }

    pub fn inner_idempotents(&self) -> impl Iterator<Item = Element> + '_ {
        self.inner_elements().filter(Element::is_idempotent)
    }

    /// Index of `x · y` when the product stays in the ball.
    pub fn product_index(&self, x: usize, y: usize) -> Option<usize> {
        let t = self.table()[x * self.len() + y];
        (t != OUTSIDE).then_some(t as usize)
    }

    fn table(&self) -> &[u32] {
        self.0.table.get_or_init(|| {
            let n = self.len();
            let mut table = vec![OUTSIDE; n * n];
            for (xi, &x) in self.0.elements.iter().enumerate() {
                for (yi, &y) in self.0.elements.iter().enumerate() {
                    if let Some(idx) = x.checked_mul(y).and_then(|p| self.index_of(&p)) {
                        table[xi * n + yi] = idx as u32;
                    }
                }
            }
            table
        })
    }

    /// The same family and bounds grown by `dn` in radius and `da` in cutoffs,
    /// keeping the inner radius.
    pub fn grown(&self, dn: u64, da: u64) -> Result<BallUniverse> {
        BallUniverse::new(self.0.family, self.0.n + dn, self.0.cutoff_bound + da)?
            .with_inner_radius(self.0.inner_radius)
    }
}
