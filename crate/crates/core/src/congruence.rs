//! Congruences on a finite ball and the group-congruence classifier.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::ball::BallUniverse;
use crate::element::{sigma_class, Element};
use crate::error::{Error, Result};
use crate::family::NormalizedFamily;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    fn find_const(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Returns `(kept_root, absorbed_root)` or `None` if already joined.
    fn union(&mut self, x: usize, y: usize) -> Option<(usize, usize)> {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return None;
        }
        let (keep, gone) = if self.size[rx] >= self.size[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        self.parent[gone] = keep as u32;
        self.size[keep] += self.size[gone];
        Some((keep, gone))
    }
}

/// An equivalence on the elements of a ball, closed under multiplication on
/// either side whenever both products stay in the ball.
#[derive(Debug, Clone)]
pub struct CongruencePartition {
    universe: BallUniverse,
    uf: UnionFind,
    generators: Vec<(Element, Element)>,
}

/// Least ball congruence containing `gens`.
///
/// Every ball element acts as a multiplier; products leaving the ball are
/// skipped. Each class keeps, for every multiplier `s`, one in-ball
/// representative of `s·C` and of `C·s`, so merging two classes only has to
/// join their representatives.
pub fn congruence_closure(
    gens: &[(Element, Element)],
    ball: &BallUniverse,
) -> Result<CongruencePartition> {
    let n = ball.len();
    let mut idx = Vec::with_capacity(gens.len());
    for &(x, y) in gens {
        let xi = ball.index_of(&x).ok_or(Error::OutsideBall(x))?;
        let yi = ball.index_of(&y).ok_or(Error::OutsideBall(y))?;
        idx.push((xi, yi));
    }

    // left[r * n + s] / right[r * n + s]: representative of s·C / C·s for root r.
    let mut left = vec![NONE; n * n];
    let mut right = vec![NONE; n * n];
    for x in 0..n {
        for s in 0..n {
            if let Some(p) = ball.product_index(s, x) {
                left[x * n + s] = p as u32;
            }
            if let Some(p) = ball.product_index(x, s) {
                right[x * n + s] = p as u32;
            }
        }
    }

    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(usize, usize)> = idx.into_iter().collect();
    while let Some((x, y)) = queue.pop_front() {
        let Some((keep, gone)) = uf.union(x, y) else {
            continue;
        };
        for table in [&mut left, &mut right] {
            for s in 0..n {
                let (a, b) = (table[keep * n + s], table[gone * n + s]);
                match (a, b) {
                    (NONE, NONE) => {}
                    (NONE, _) => table[keep * n + s] = b,
                    (_, NONE) => {}
                    _ => queue.push_back((a as usize, b as usize)),
                }
            }
        }
    }

    Ok(CongruencePartition {
        universe: ball.clone(),
        uf,
        generators: gens.to_vec(),
    })
}

/// Restriction of the relation to one bicyclic copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutoffRestriction {
    pub cutoff: u64,
    /// No two distinct inner-ball elements with this cutoff are related.
    pub identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceVerdict {
    pub group_congruence_on_ball: bool,
    pub idempotents_collapsed: bool,
    pub bicyclic_restrictions: Vec<CutoffRestriction>,
    /// Collapse of idempotents holds exactly when some, and then every,
    /// bicyclic restriction is non-identity.
    pub consistent: bool,
}

impl CongruencePartition {
    pub fn universe(&self) -> &BallUniverse {
        &self.universe
    }

    pub fn generators(&self) -> &[(Element, Element)] {
        &self.generators
    }

    fn root(&self, e: &Element) -> Option<usize> {
        self.universe.index_of(e).map(|i| self.uf.find_const(i))
    }

    /// Errors if either element lies outside the ball.
    pub fn related(&self, x: &Element, y: &Element) -> Result<bool> {
        let rx = self.root(x).ok_or(Error::OutsideBall(*x))?;
        let ry = self.root(y).ok_or(Error::OutsideBall(*y))?;
        Ok(rx == ry)
    }

    fn roots(&self) -> Vec<usize> {
        (0..self.universe.len())
            .map(|i| self.uf.find_const(i))
            .collect()
    }

    /// Classes in canonical order: members sorted, classes by least member.
    pub fn classes(&self) -> Vec<Vec<Element>> {
        let mut by_root: BTreeMap<usize, Vec<Element>> = BTreeMap::new();
        for (i, r) in self.roots().into_iter().enumerate() {
            by_root
                .entry(r)
                .or_default()
                .push(self.universe.elements()[i]);
        }
        let mut classes: Vec<Vec<Element>> = by_root.into_values().collect();
        // Elements are enumerated in canonical order, so members are already sorted.
        classes.sort_by(|a, b| a[0].cmp(&b[0]));
        classes
    }

    /// Number of classes.
    pub fn class_count(&self) -> usize {
        let roots = self.roots();
        roots.iter().enumerate().filter(|&(i, &r)| i == r).count()
    }

    /// For every class and multiplier, all in-ball products on each side
    /// fall in a single class.
    pub fn is_translation_closed(&self) -> bool {
        let ball = &self.universe;
        let n = ball.len();
        let roots = self.roots();
        for s in 0..n {
            let mut left_of = vec![NONE; n];
            let mut right_of = vec![NONE; n];
            for x in 0..n {
                let r = roots[x];
                if let Some(p) = ball.product_index(s, x) {
                    let c = roots[p] as u32;
                    if left_of[r] == NONE {
                        left_of[r] = c;
                    } else if left_of[r] != c {
                        return false;
                    }
                }
                if let Some(p) = ball.product_index(x, s) {
                    let c = roots[p] as u32;
                    if right_of[r] == NONE {
                        right_of[r] = c;
                    } else if right_of[r] != c {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every class of `self` lies inside a class of `other` (same ball).
    pub fn refines(&self, other: &CongruencePartition) -> bool {
        debug_assert!(self.universe.same_as(&other.universe));
        let mine = self.roots();
        let theirs = other.roots();
        let mut image = vec![NONE; mine.len()];
        for (m, t) in mine.into_iter().zip(theirs) {
            if image[m] == NONE {
                image[m] = t as u32;
            } else if image[m] != t as u32 {
                return false;
            }
        }
        true
    }

    /// [`refines`](Self::refines) restricted to pairs of inner-ball elements.
    pub fn refines_on_inner(&self, other: &CongruencePartition) -> bool {
        let ball = &self.universe;
        let mine = self.roots();
        let theirs = other.roots();
        let mut image = vec![NONE; mine.len()];
        for (i, e) in ball.elements().iter().enumerate() {
            if !ball.is_inner(e) {
                continue;
            }
            let (m, t) = (mine[i], theirs[i] as u32);
            if image[m] == NONE {
                image[m] = t;
            } else if image[m] != t {
                return false;
            }
        }
        true
    }

    /// Pairs `(x, rep)` linking every element to the least member of its class.
    pub fn class_pairs(&self) -> Vec<(Element, Element)> {
        self.classes()
            .into_iter()
            .flat_map(|c| {
                let rep = c[0];
                c.into_iter().skip(1).map(move |x| (x, rep))
            })
            .collect()
    }

    pub fn classify(&self) -> CongruenceVerdict {
        let ball = &self.universe;
        let roots = self.roots();
        let inner_roots = |pred: &dyn Fn(&Element) -> bool| -> Vec<usize> {
            ball.elements()
                .iter()
                .enumerate()
                .filter(|(_, e)| ball.is_inner(e) && pred(e))
                .map(|(i, _)| roots[i])
                .collect()
        };

        let ids = inner_roots(&|e| e.is_idempotent());
        let idempotents_collapsed = ids.len() >= 2 && ids.iter().all(|&r| r == ids[0]);

        let bicyclic_restrictions: Vec<CutoffRestriction> = ball
            .cutoffs()
            .iter()
            .map(|&k| {
                let mut rs = inner_roots(&|e| e.a() == k);
                let total = rs.len();
                rs.sort_unstable();
                rs.dedup();
                CutoffRestriction {
                    cutoff: k,
                    identity: rs.len() == total,
                }
            })
            .collect();

        let any = bicyclic_restrictions.iter().any(|r| !r.identity);
        let all = bicyclic_restrictions.iter().all(|r| !r.identity);
        CongruenceVerdict {
            group_congruence_on_ball: idempotents_collapsed,
            idempotents_collapsed,
            bicyclic_restrictions,
            consistent: idempotents_collapsed == any && idempotents_collapsed == all,
        }
    }

    pub fn export(&self) -> PartitionExport {
        let ball = &self.universe;
        PartitionExport {
            ball: BallSpec {
                n: ball.n(),
                a: ball.cutoff_bound(),
                family: *ball.family(),
                inner_radius: ball.inner_radius(),
            },
            generators: self.generators.clone(),
            classes: self.classes(),
            verdict: self.classify(),
        }
    }
}

fn partition_by<K: Ord>(ball: &BallUniverse, key: impl Fn(&Element) -> K) -> CongruencePartition {
    let mut first: BTreeMap<K, usize> = BTreeMap::new();
    let mut uf = UnionFind::new(ball.len());
    let mut generators = Vec::new();
    for (i, e) in ball.elements().iter().enumerate() {
        match first.get(&key(e)) {
            Some(&rep) => {
                uf.union(rep, i);
                generators.push((*e, ball.elements()[rep]));
            }
            None => {
                first.insert(key(e), i);
            }
        }
    }
    CongruencePartition {
        universe: ball.clone(),
        uf,
        generators,
    }
}

/// Kernel of `(i, j, [a)) ↦ (i, j)`: elements differing only in the cutoff.
pub fn projection_kernel(ball: &BallUniverse) -> CongruencePartition {
    partition_by(ball, |e| (e.i(), e.j()))
}

/// The least group congruence, classes indexed by `j - i`.
pub fn sigma_partition(ball: &BallUniverse) -> CongruencePartition {
    partition_by(ball, |e| sigma_class(*e))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallSpec {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "A")]
    pub a: u64,
    pub family: NormalizedFamily,
    pub inner_radius: u64,
}

/// JSON form of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionExport {
    pub ball: BallSpec,
    pub generators: Vec<(Element, Element)>,
    pub classes: Vec<Vec<Element>>,
    pub verdict: CongruenceVerdict,
}

impl PartitionExport {
    /// Rebuilds the partition from its listed classes, checking that they
    /// cover the ball exactly once.
    pub fn rebuild(&self) -> Result<CongruencePartition> {
        let ball = BallUniverse::new(self.ball.family, self.ball.n, self.ball.a)?
            .with_inner_radius(self.ball.inner_radius)?;
        let mut uf = UnionFind::new(ball.len());
        let mut seen = vec![false; ball.len()];
        for class in &self.classes {
            let mut rep = None;
            for e in class {
                let i = ball.index_of(e).ok_or(Error::OutsideBall(*e))?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::DomainEscape(format!("{e} listed twice")));
                }
                match rep {
                    None => rep = Some(i),
                    Some(r) => {
                        uf.union(r, i);
                    }
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::DomainEscape(format!(
                "{} missing from the classes",
                ball.elements()[i]
            )));
        }
        Ok(CongruencePartition {
            universe: ball,
            uf,
            generators: self.generators.clone(),
        })
    }
}
