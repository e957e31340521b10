//! Families of non-empty inductive subsets of ω.
//!
//! Every non-empty inductive subset of ω is a ray `[k) = {k, k+1, ...}`, so a
//! family is described by the set of its cutoffs `k`. An ω-closed family of
//! rays always has contiguous cutoffs, which is why [`NormalizedFamily`] is
//! just an interval `lo..=hi` (or `lo..` when infinite).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// The cutoff `k` of the ray `[k) = {i ∈ ω : i ≥ k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cutoff(pub u64);

impl Cutoff {
    pub fn get(self) -> u64 {
        self.0
    }

    /// Membership of `i` in the ray.
    pub fn admits(self, i: u64) -> bool {
        i >= self.0
    }
}

impl fmt::Display for Cutoff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{})", self.0)
    }
}

/// A subset of ω given by its members below `horizon` plus a flag telling
/// whether every `i >= horizon` belongs to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetPrefix {
    pub members: BTreeSet<u64>,
    pub horizon: u64,
    pub tail_included: bool,
}

impl SubsetPrefix {
    pub fn ray(k: u64) -> Self {
        SubsetPrefix {
            members: BTreeSet::new(),
            horizon: k,
            tail_included: true,
        }
    }

    pub fn contains(&self, i: u64) -> bool {
        if i >= self.horizon {
            self.tail_included || self.members.contains(&i)
        } else {
            self.members.contains(&i)
        }
    }
}

/// Decides whether the described subset is inductive, i.e. `(-1 + s) ∩ s = s`.
///
/// Both sides are compared on the window `0..=horizon + 1`; beyond the horizon
/// the set is either everything or nothing, so the window is conclusive.
pub fn is_inductive(s: &SubsetPrefix) -> Result<bool> {
    if !s.tail_included {
        if let Some(&m) = s.members.range(s.horizon..).next() {
            return Err(Error::MalformedSubset {
                member: m,
                horizon: s.horizon,
            });
        }
    }
    let window = s.horizon.saturating_add(1);
    for i in 0..=window {
        // i ∈ (-1 + s) iff i + 1 ∈ s, so equality fails exactly at an i ∈ s with i + 1 ∉ s.
        if s.contains(i) && !s.contains(i + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An explicit set of cutoffs, finite or of the form `{lo, lo+1, ...}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutoffSet {
    Finite(BTreeSet<u64>),
    From(u64),
}

impl CutoffSet {
    pub fn finite<I: IntoIterator<Item = u64>>(it: I) -> Self {
        CutoffSet::Finite(it.into_iter().collect())
    }

    pub fn contains(&self, k: u64) -> bool {
        match self {
            CutoffSet::Finite(s) => s.contains(&k),
            CutoffSet::From(lo) => k >= *lo,
        }
    }

    pub fn min(&self) -> Option<u64> {
        match self {
            CutoffSet::Finite(s) => s.first().copied(),
            CutoffSet::From(lo) => Some(*lo),
        }
    }
}

impl From<NormalizedFamily> for CutoffSet {
    fn from(f: NormalizedFamily) -> Self {
        match f.hi {
            Some(hi) => CutoffSet::Finite((f.lo..=hi).collect()),
            None => CutoffSet::From(f.lo),
        }
    }
}

/// Checks `max(k1, k2 - n) ∈ cutoffs` for all members `k1, k2` and `0 <= n <= n_max`.
///
/// This is the ray form of `F1 ∩ (-n + F2) ∈ 𝓕`. Infinite sets are checked on
/// the members up to `min + n_max + 1`.
pub fn is_omega_closed(cutoffs: &CutoffSet, n_max: u64) -> bool {
    let members: Vec<u64> = match cutoffs {
        CutoffSet::Finite(s) => s.iter().copied().collect(),
        CutoffSet::From(lo) => (*lo..=lo + n_max + 1).collect(),
    };
    for &k1 in &members {
        for &k2 in &members {
            for n in 0..=n_max {
                let shifted = k2 as i128 - n as i128;
                let meet = (k1 as i128).max(shifted);
                if !cutoffs.contains(meet as u64) {
                    return false;
                }
            }
        }
    }
    true
}

/// An ω-closed family of rays, stored as its cutoff interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalizedFamily {
    lo: u64,
    hi: Option<u64>,
}

impl NormalizedFamily {
    pub fn new(lo: u64, hi: Option<u64>) -> Result<Self> {
        if let Some(hi) = hi {
            if hi < lo {
                return Err(Error::InvertedInterval { lo, hi });
            }
        }
        Ok(NormalizedFamily { lo, hi })
    }

    pub fn finite(lo: u64, hi: u64) -> Result<Self> {
        Self::new(lo, Some(hi))
    }

    pub fn infinite(lo: u64) -> Self {
        NormalizedFamily { lo, hi: None }
    }

    /// The one-ray family `{[k)}`, whose semigroup is the bicyclic monoid.
    pub fn single(k: u64) -> Self {
        NormalizedFamily { lo: k, hi: Some(k) }
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> Option<u64> {
        self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.hi.is_some()
    }

    pub fn is_canonical(&self) -> bool {
        self.lo == 0
    }

    /// Number of rays, `None` when infinite.
    pub fn cardinality(&self) -> Option<u64> {
        self.hi.map(|hi| hi - self.lo + 1)
    }

    /// `hi - lo`, `None` when infinite.
    pub fn span(&self) -> Option<u64> {
        self.hi.map(|hi| hi - self.lo)
    }

    pub fn contains(&self, k: u64) -> bool {
        k >= self.lo && self.hi.is_none_or(|hi| k <= hi)
    }

    pub fn check(&self, k: u64) -> Result<()> {
        if self.contains(k) {
            Ok(())
        } else {
            Err(Error::CutoffNotInFamily {
                cutoff: k,
                family: self.to_string(),
            })
        }
    }

    /// Members `<= bound`, in increasing order.
    pub fn cutoffs_up_to(&self, bound: u64) -> impl Iterator<Item = u64> {
        let top = match self.hi {
            Some(hi) => hi.min(bound),
            None => bound,
        };
        self.lo..=top
    }

    /// The translate `n + 𝓕`, with `n` possibly negative.
    pub fn translate(&self, n: i64) -> Option<Self> {
        let lo = self.lo.checked_add_signed(n)?;
        let hi = match self.hi {
            Some(hi) => Some(hi.checked_add_signed(n)?),
            None => None,
        };
        Some(NormalizedFamily { lo, hi })
    }

    /// Shifts the family down so that its least cutoff is 0.
    pub fn canonicalize(&self) -> CanonicalFamily {
        CanonicalFamily {
            family: NormalizedFamily {
                lo: 0,
                hi: self.hi.map(|hi| hi - self.lo),
            },
            shift: self.lo,
        }
    }
}

impl fmt::Display for NormalizedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(hi) => write!(f, "{}..{}", self.lo, hi),
            None => write!(f, "{}..inf", self.lo),
        }
    }
}

/// A canonical family (`lo = 0`) together with the shift `n₀` that was
/// subtracted from every cutoff of the original family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalFamily {
    pub family: NormalizedFamily,
    pub shift: u64,
}

impl CanonicalFamily {
    /// The family before shifting.
    pub fn original(&self) -> NormalizedFamily {
        NormalizedFamily {
            lo: self.family.lo + self.shift,
            hi: self.family.hi.map(|hi| hi + self.shift),
        }
    }
}

/// Validates an explicit cutoff set and returns its canonical interval form.
pub fn family_canonicalize(cutoffs: &CutoffSet) -> Result<CanonicalFamily> {
    let family = match cutoffs {
        CutoffSet::From(lo) => NormalizedFamily::infinite(*lo),
        CutoffSet::Finite(set) => {
            let (&lo, &hi) = match (set.first(), set.last()) {
                (Some(lo), Some(hi)) => (lo, hi),
                _ => return Err(Error::EmptyFamily),
            };
            let mut prev = lo;
            for &k in set.iter().skip(1) {
                if k != prev + 1 {
                    return Err(Error::NotOmegaClosed {
                        below: prev,
                        missing: prev + 1,
                        above: k,
                    });
                }
                prev = k;
            }
            NormalizedFamily::finite(lo, hi)?
        }
    };
    Ok(family.canonicalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prefix(members: &[u64], horizon: u64, tail_included: bool) -> SubsetPrefix {
        SubsetPrefix {
            members: members.iter().copied().collect(),
            horizon,
            tail_included,
        }
    }

    #[test]
    fn rays_are_inductive() {
        assert_eq!(is_inductive(&SubsetPrefix::ray(3)), Ok(true));
        assert_eq!(is_inductive(&SubsetPrefix::ray(0)), Ok(true));
    }

    #[test]
    fn gap_breaks_inductivity() {
        assert_eq!(is_inductive(&prefix(&[0], 2, true)), Ok(false));
    }

    #[test]
    fn empty_set_is_inductive() {
        assert_eq!(is_inductive(&prefix(&[], 0, false)), Ok(true));
        assert_eq!(is_inductive(&prefix(&[], 10, false)), Ok(true));
    }

    #[test]
    fn finite_nonempty_sets_are_not_inductive() {
        assert_eq!(is_inductive(&prefix(&[4, 5, 6], 7, false)), Ok(false));
    }

    #[test]
    fn inconsistent_prefix_is_rejected() {
        assert_eq!(
            is_inductive(&prefix(&[9], 5, false)),
            Err(Error::MalformedSubset {
                member: 9,
                horizon: 5
            })
        );
    }

    #[test]
    fn canonicalize_shifts_to_zero() {
        let c = family_canonicalize(&CutoffSet::finite([2, 3, 4, 5])).unwrap();
        assert_eq!(c.family, NormalizedFamily::finite(0, 3).unwrap());
        assert_eq!(c.shift, 2);
        assert_eq!(c.original(), NormalizedFamily::finite(2, 5).unwrap());
    }

    #[test]
    fn canonicalize_infinite() {
        let c = family_canonicalize(&CutoffSet::From(0)).unwrap();
        assert_eq!(c.family, NormalizedFamily::infinite(0));
        assert_eq!(c.shift, 0);
    }

    #[test]
    fn canonicalize_rejects_gaps() {
        let err = family_canonicalize(&CutoffSet::finite([0, 2])).unwrap_err();
        assert!(matches!(err, Error::NotOmegaClosed { missing: 1, .. }));
        // The closure oracle agrees.
        assert!(!is_omega_closed(&CutoffSet::finite([0, 2]), 2));
    }

    #[test]
    fn canonicalize_rejects_empty() {
        assert_eq!(
            family_canonicalize(&CutoffSet::finite([])),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn omega_closure_examples() {
        assert!(is_omega_closed(&CutoffSet::finite([0, 1, 2, 3]), 3));
        assert!(is_omega_closed(&CutoffSet::finite([5]), 5));
        assert!(is_omega_closed(&CutoffSet::finite([2, 3, 4, 5]), 5));
        assert!(is_omega_closed(&CutoffSet::From(4), 6));
        assert!(!is_omega_closed(&CutoffSet::finite([0, 1, 3]), 3));
    }

    #[test]
    fn contiguity_matches_closure_for_small_sets() {
        // Every subset of {0..5}: canonicalize succeeds exactly when the set is ω-closed.
        for mask in 1u32..64 {
            let set: BTreeSet<u64> = (0..6).filter(|b| mask & (1 << b) != 0).collect();
            let cs = CutoffSet::Finite(set.clone());
            let max = *set.last().unwrap();
            assert_eq!(
                family_canonicalize(&cs).is_ok(),
                is_omega_closed(&cs, max),
                "{set:?}"
            );
        }
    }

    #[test]
    fn interval_accessors() {
        let f = NormalizedFamily::finite(2, 5).unwrap();
        assert_eq!(f.cardinality(), Some(4));
        assert_eq!(f.span(), Some(3));
        assert!(f.contains(2) && f.contains(5) && !f.contains(1) && !f.contains(6));
        assert_eq!(f.cutoffs_up_to(4).collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!(
            f.translate(-2),
            Some(NormalizedFamily::finite(0, 3).unwrap())
        );
        assert_eq!(f.translate(-3), None);
        assert!(NormalizedFamily::finite(3, 1).is_err());
        assert_eq!(NormalizedFamily::infinite(1).to_string(), "1..inf");
    }
}
