//! Brute-force deciders that work straight from the definitions.
//!
//! These search a finite window of idempotents large enough to contain a
//! witness whenever one exists, and are used to check the closed forms.

use crate::element::Element;
use crate::error::Result;
use crate::family::NormalizedFamily;

/// Radius of the idempotent window searched for the given inputs.
///
/// A witness `(m, m, [b))` never needs `m` beyond the largest input coordinate
/// plus the spread of cutoffs involved; two extra steps cover the off-by-one
/// shifts in the product.
pub fn witness_bound(fam: &NormalizedFamily, inputs: &[Element]) -> u64 {
    let top = inputs.iter().map(Element::radius).max().unwrap_or(0);
    let max_a = inputs.iter().map(Element::a).max().unwrap_or(fam.lo());
    let span = fam.span().unwrap_or(max_a.saturating_sub(fam.lo()));
    top + span + 2
}

fn window(fam: &NormalizedFamily, bound: u64) -> impl Iterator<Item = Element> {
    let cutoffs: Vec<u64> = fam.cutoffs_up_to(fam.lo() + bound).collect();
    (0..=bound).flat_map(move |m| {
        cutoffs
            .clone()
            .into_iter()
            .map(move |b| Element::idempotent(m, b))
    })
}

/// `s ≼ t` by searching for an idempotent `e` with `s = t · e`.
pub fn natural_leq_by_search(s: Element, t: Element, fam: &NormalizedFamily) -> Result<bool> {
    fam.check(s.a())?;
    fam.check(t.a())?;
    let bound = witness_bound(fam, &[s, t]);
    Ok(window(fam, bound).any(|e| t * e == s))
}

/// `s σ t` by searching for an idempotent `e` with `e · s = e · t`.
pub fn sigma_by_definition(s: Element, t: Element, fam: &NormalizedFamily) -> Result<bool> {
    fam.check(s.a())?;
    fam.check(t.a())?;
    let bound = witness_bound(fam, &[s, t]);
    Ok(window(fam, bound).any(|e| e * s == e * t))
}

/// Every `y` with cutoff in `fam` and coordinates up to `radius` satisfying
/// `x y x = x` and `y x y = y`.
pub fn inverses_by_search(x: Element, fam: &NormalizedFamily, radius: u64) -> Vec<Element> {
    let cutoffs: Vec<u64> = fam.cutoffs_up_to(radius).collect();
    let mut out = Vec::new();
    for i in 0..=radius {
        for j in 0..=radius {
            for &a in &cutoffs {
                let y = Element::new(i, j, a);
                if x * y * x == x && y * x * y == y {
                    out.push(y);
                }
            }
        }
    }
    out
}
