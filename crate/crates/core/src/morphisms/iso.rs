use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{verify_homomorphism, ElementMap};
use crate::ball::BallUniverse;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::{family_canonicalize, CutoffSet, NormalizedFamily};

/// Ball radius used for the map-level evidence in [`isomorphic`].
const EVIDENCE_RADIUS: u64 = 4;

/// `(i,j,[n₁+t)) ↦ (i,j,[n₂+t))` between equipotent families.
pub fn shift_isomorphism(src: &NormalizedFamily, dst: &NormalizedFamily) -> Result<ElementMap> {
    if src.cardinality() != dst.cardinality() {
        return Err(Error::NotIsomorphic(src.to_string(), dst.to_string()));
    }
    if src.lo() == dst.lo() {
        return Ok(ElementMap::Identity);
    }
    Ok(ElementMap::ShiftIso {
        from_lo: src.lo(),
        to_lo: dst.lo(),
    })
}

/// `m` maps the elements of `src` one-to-one onto those of `dst`.
pub fn is_bijection_between(
    m: &ElementMap,
    src: &BallUniverse,
    dst: &BallUniverse,
) -> Result<bool> {
    if src.len() != dst.len() {
        return Ok(false);
    }
    let mut seen = HashSet::with_capacity(src.len());
    for &e in src.elements() {
        let image = m.apply_self(e)?;
        if !dst.contains(&image) || !seen.insert(image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The outcome of comparing two families three ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub f1: NormalizedFamily,
    pub f2: NormalizedFamily,
    /// Same number of cutoffs.
    pub equipotent: bool,
    /// `f2 = n + f1` for some integer `n`.
    pub shift: Option<i64>,
    /// What maps on a small ball say: a verified shift map, or the outcome of
    /// the generator search. `None` when neither applies.
    pub ball_evidence: Option<bool>,
    pub isomorphic: bool,
}

fn ball_for(fam: &NormalizedFamily, n: u64) -> Result<BallUniverse> {
    let top = fam.span().unwrap_or(n).min(n);
    BallUniverse::new(*fam, n, fam.lo() + top)
}

/// Compares two interval families: by cardinality, by integer shift and by
/// maps checked on a small ball. Disagreement between the three is an error.
pub fn isomorphic_families(f1: &NormalizedFamily, f2: &NormalizedFamily) -> Result<IsoReport> {
    let equipotent = f1.cardinality() == f2.cardinality();
    let n = f2.lo() as i64 - f1.lo() as i64;
    let shift = (f1.translate(n) == Some(*f2)).then_some(n);

    let ball_evidence = if equipotent && shift.is_some() {
        let m = shift_isomorphism(f1, f2)?;
        let src = ball_for(f1, EVIDENCE_RADIUS)?;
        let dst = ball_for(f2, EVIDENCE_RADIUS)?;
        Some(is_bijection_between(&m, &src, &dst)? && verify_homomorphism(&m, &src)?.is_none())
    } else if f1.is_finite() && f2.is_finite() {
        let c1 = f1.canonicalize().family;
        let c2 = f2.canonicalize().family;
        Some(!search_generator_consistent_maps(&c1, &c2, EVIDENCE_RADIUS)?.is_empty())
    } else {
        None
    };

    let agree = equipotent == shift.is_some() && ball_evidence.is_none_or(|b| b == equipotent);
    if !agree {
        return Err(Error::CriteriaDisagree(f1.to_string(), f2.to_string()));
    }
    Ok(IsoReport {
        f1: *f1,
        f2: *f2,
        equipotent,
        shift,
        ball_evidence,
        isomorphic: equipotent,
    })
}

/// Whether two ω-closed cutoff sets give isomorphic semigroups.
pub fn isomorphic(f1: &CutoffSet, f2: &CutoffSet) -> Result<bool> {
    let a = family_canonicalize(f1)?.original();
    let b = family_canonicalize(f2)?.original();
    Ok(isomorphic_families(&a, &b)?.isomorphic)
}

/// Pairs of ball indices `(x, y, x·y)` grouped by the larger cutoff position
/// of the two factors, products outside the ball dropped.
fn products_by_level(ball: &BallUniverse) -> Vec<Vec<(usize, usize, usize)>> {
    let lo = ball.cutoffs()[0];
    let mut levels = vec![Vec::new(); ball.cutoffs().len()];
    let els = ball.elements();
    for x in 0..els.len() {
        for y in 0..els.len() {
            if let Some(p) = ball.product_index(x, y) {
                let level = (els[x].a().max(els[y].a()) - lo) as usize;
                levels[level].push((x, y, p));
            }
        }
    }
    levels
}

struct Search<'a> {
    dom: &'a BallUniverse,
    cod: &'a BallUniverse,
    levels: Vec<Vec<(usize, usize, usize)>>,
    /// Powers `h(g⁻¹)^i` and `h(g)^j` for `i, j <= N`.
    left_pows: Vec<Element>,
    right_pows: Vec<Element>,
    images: Vec<Option<Element>>,
    found: Vec<ElementMap>,
}

impl Search<'_> {
    /// `[base, base, base², …, baseⁿ]`; slot 0 is never read.
    fn powers(base: Element, n: u64) -> Option<Vec<Element>> {
        let mut out = vec![base, base];
        for _ in 2..=n {
            out.push(out.last()?.checked_mul(base)?);
        }
        Some(out)
    }

    fn word(&self, i: u64, middle: Element, j: u64) -> Option<Element> {
        let mut w = middle;
        if i > 0 {
            w = self.left_pows[i as usize].checked_mul(w)?;
        }
        if j > 0 {
            w = w.checked_mul(self.right_pows[j as usize])?;
        }
        Some(w)
    }

    /// Fills in images at cutoff level `level` from `middle` and checks every
    /// product whose factors lie at or below it.
    fn assign_level(&mut self, level: usize, middle: Element) -> bool {
        let a = self.dom.cutoffs()[level];
        for (idx, e) in self.dom.elements().iter().enumerate() {
            if e.a() == a {
                match self.word(e.i(), middle, e.j()) {
                    Some(img) => self.images[idx] = Some(img),
                    None => return false,
                }
            }
        }
        self.levels[level].iter().all(|&(x, y, p)| {
            let (ix, iy, ip) = (self.images[x], self.images[y], self.images[p]);
            match (ix, iy, ip) {
                (Some(ix), Some(iy), Some(ip)) => ix.checked_mul(iy) == Some(ip),
                _ => false,
            }
        })
    }

    fn extend(&mut self, level: usize) {
        if level == self.dom.cutoffs().len() {
            self.accept();
            return;
        }
        let candidates: Vec<Element> = self.cod.idempotents().collect();
        for e in candidates {
            if self.assign_level(level, e) {
                self.extend(level + 1);
            }
        }
    }

    fn accept(&mut self) {
        let images: Vec<Element> = self
            .images
            .iter()
            .map(|x| x.expect("all levels assigned"))
            .collect();
        let distinct: HashSet<&Element> = images.iter().collect();
        if distinct.len() != images.len() {
            return;
        }
        if !self.cod.inner_elements().all(|c| distinct.contains(&c)) {
            return;
        }
        let pairs = self.dom.elements().iter().copied().zip(images).collect();
        self.found.push(ElementMap::Table { pairs });
    }
}

/// Maps determined by images of `g = (0,1,[0))`, `g⁻¹ = (1,0,[0))` and the
/// idempotents `(0,0,[a))`, extended by `(i,j,[a)) = g⁻ⁱ (0,0,[a)) gʲ`.
///
/// Images are drawn from the codomain ball. A survivor is multiplicative on
/// every pair whose product stays in the domain ball, injective on the ball,
/// and hits every element of the codomain's inner ball.
pub fn search_generator_consistent_maps(
    f1: &NormalizedFamily,
    f2: &NormalizedFamily,
    n: u64,
) -> Result<Vec<ElementMap>> {
    for f in [f1, f2] {
        if !f.is_canonical() {
            return Err(Error::NotCanonical(f.to_string()));
        }
    }
    let dom = ball_for(f1, n)?;
    let cod = ball_for(f2, n)?;
    let mut search = Search {
        levels: products_by_level(&dom),
        dom: &dom,
        cod: &cod,
        left_pows: Vec::new(),
        right_pows: Vec::new(),
        images: vec![None; dom.len()],
        found: Vec::new(),
    };

    let candidates: Vec<Element> = cod.elements().to_vec();
    for &h in &candidates {
        let Some(right_pows) = Search::powers(h, n) else {
            continue;
        };
        for &hinv in &candidates {
            let Some(unit) = h.checked_mul(hinv) else {
                continue;
            };
            // The unit must map to an idempotent acting trivially on h and h⁻¹.
            if !unit.is_idempotent()
                || unit.checked_mul(h) != Some(h)
                || hinv.checked_mul(unit) != Some(hinv)
            {
                continue;
            }
            let Some(left_pows) = Search::powers(hinv, n) else {
                continue;
            };
            search.left_pows = left_pows;
            search.right_pows = right_pows.clone();
            search.images.iter_mut().for_each(|x| *x = None);
            if search.assign_level(0, unit) {
                search.extend(1);
            }
        }
    }
    Ok(search.found)
}

/// Automorphism candidates of a canonical family on the ball of radius `n`.
pub fn automorphisms(fam: &NormalizedFamily, n: u64) -> Result<Vec<ElementMap>> {
    search_generator_consistent_maps(fam, fam, n)
}

impl ElementMap {
    /// Whether a table map fixes every listed point.
    pub fn is_identity_table(&self) -> bool {
        match self {
            ElementMap::Identity => true,
            ElementMap::Table { pairs } => pairs.iter().all(|(x, y)| x == y),
            _ => false,
        }
    }
}
