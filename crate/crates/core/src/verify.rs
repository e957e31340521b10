//! Invariant suites run against one family on one ball.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ball::BallUniverse;
use crate::congruence::{
    congruence_closure, projection_kernel, sigma_partition, CongruenceVerdict,
};
use crate::element::{sigma_equivalent, Element};
use crate::error::Result;
use crate::family::NormalizedFamily;
use crate::morphisms::{
    automorphisms, enumerate_retracts, fixed_points, is_bijection_between, refute_lower_retraction,
    shift_isomorphism, verify_homomorphism, ElementMap,
};
use crate::oracle::{inverses_by_search, natural_leq_by_search, sigma_by_definition};
use crate::order::{hasse_covers, idempotent_leq, natural_leq};

/// Seed for the sampled generator pairs.
pub const DEFAULT_SEED: u64 = 0x5eed_b1c7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: u64,
    /// First few failures, described.
    pub failures: Vec<String>,
    pub failure_count: u64,
}

const KEPT_FAILURES: usize = 5;

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            checks: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn error(&mut self, e: impl fmt::Display) {
        self.check(false, || e.to_string());
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{:<12} {:>9} checks  {:>4} failures  {}",
            self.name, self.checks, self.failure_count, status
        )?;
        for msg in &self.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

pub const SUITES: [&str; 8] = [
    "algebra",
    "order",
    "hasse",
    "sigma",
    "congruence",
    "retracts",
    "refute",
    "iso",
];

/// Runs the named suite; `"all"` runs every suite in [`SUITES`] order.
pub fn run_suite(
    name: &str,
    fam: &NormalizedFamily,
    ball: &BallUniverse,
) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, fam, ball)).collect();
    }
    Ok(vec![run_one(name, fam, ball)?])
}

fn run_one(name: &str, fam: &NormalizedFamily, ball: &BallUniverse) -> Result<SuiteReport> {
    Ok(match name {
        "algebra" => algebra_suite(ball),
        "order" => order_suite(ball),
        "hasse" => hasse_suite(ball),
        "sigma" => sigma_suite(ball),
        "congruence" => congruence_suite(ball, 40, DEFAULT_SEED),
        "retracts" => retract_suite(fam, ball),
        "refute" => refute_suite(fam),
        "iso" => iso_suite(fam),
        other => {
            return Err(crate::error::Error::Parse {
                column: 1,
                message: format!(
                    "unknown suite '{other}' (expected all or one of {})",
                    SUITES.join(", ")
                ),
            })
        }
    })
}

/// Associativity on every triple of the ball, inverse laws, uniqueness of
/// inverses by search, and commuting idempotents.
pub fn algebra_suite(ball: &BallUniverse) -> SuiteReport {
    let mut r = SuiteReport::new("algebra");
    let els = ball.elements();
    for &x in els {
        for &y in els {
            let xy = x * y;
            for &z in els {
                if xy * z != x * (y * z) {
                    r.check(false, || format!("({x}{y}){z} != {x}({y}{z})"));
                } else {
                    r.checks += 1;
                }
            }
        }
        let inv = x.inverse();
        r.check(x * inv * x == x && inv * x * inv == inv, || {
            format!("inverse law fails at {x}")
        });
    }
    let radius = ball.inner_radius().min(3);
    for x in ball.inner_elements().filter(|e| e.radius() <= radius) {
        let found = inverses_by_search(x, ball.family(), ball.n().min(radius + 2));
        r.check(found == vec![x.inverse()], || {
            format!("inverses of {x}: {found:?}")
        });
    }
    let ids: Vec<Element> = ball.idempotents().collect();
    for &e in &ids {
        for &f in &ids {
            r.check(e * f == f * e, || format!("{e} and {f} do not commute"));
        }
    }
    r
}

/// Natural order against the search oracle, and the closed form on idempotents.
pub fn order_suite(ball: &BallUniverse) -> SuiteReport {
    let mut r = SuiteReport::new("order");
    let fam = ball.family();
    let ids: Vec<Element> = ball.idempotents().collect();
    for &e in &ids {
        for &f in &ids {
            let by_product = natural_leq(e, f, fam);
            let by_search = natural_leq_by_search(e, f, fam);
            let by_formula = idempotent_leq(e, f);
            let agree = matches!((&by_product, &by_search, &by_formula), (Ok(a), Ok(b), Ok(c)) if a == b && b == c);
            r.check(agree, || {
                format!("{e} <= {f}: {by_product:?} {by_search:?} {by_formula:?}")
            });
        }
    }
    let inner: Vec<Element> = ball.inner_elements().collect();
    for &s in &inner {
        for &t in &inner {
            let a = natural_leq(s, t, fam);
            let b = natural_leq_by_search(s, t, fam);
            r.check(a.is_ok() && a == b, || {
                format!("{s} <= {t}: {a:?} vs {b:?}")
            });
        }
    }
    r
}

/// Covers form the transitive reduction of the idempotent order.
pub fn hasse_suite(ball: &BallUniverse) -> SuiteReport {
    let mut r = SuiteReport::new("hasse");
    let ids: Vec<Element> = ball.idempotents().collect();
    let covers = hasse_covers(ball);
    let leq = |a: Element, b: Element| idempotent_leq(a, b).unwrap_or(false);
    for &(u, l) in &covers {
        r.check(u != l && leq(l, u), || {
            format!("{u} -> {l} is not downward")
        });
        let between = ids
            .iter()
            .find(|&&m| m != u && m != l && leq(m, u) && leq(l, m));
        r.check(between.is_none(), || {
            format!("{u} -> {l} passes through {between:?}")
        });
    }
    // Every strict comparison is a chain of covers.
    for &u in &ids {
        let mut reach = vec![u];
        let mut frontier = vec![u];
        while let Some(x) = frontier.pop() {
            for &(a, b) in &covers {
                if a == x && !reach.contains(&b) {
                    reach.push(b);
                    frontier.push(b);
                }
            }
        }
        for &l in &ids {
            if leq(l, u) {
                r.check(reach.contains(&l), || {
                    format!("{l} <= {u} not reached through covers")
                });
            }
        }
    }
    r
}

/// σ fast path against the definition, and σ as a group congruence.
pub fn sigma_suite(ball: &BallUniverse) -> SuiteReport {
    let mut r = SuiteReport::new("sigma");
    let fam = ball.family();
    let els = ball.elements();
    for &s in els {
        for &t in els {
            let by_def = sigma_by_definition(s, t, fam);
            r.check(by_def == Ok(sigma_equivalent(s, t)), || {
                format!("{s} σ {t}: {by_def:?}")
            });
        }
    }
    let sigma = sigma_partition(ball);
    r.check(sigma.is_translation_closed(), || {
        "σ is not translation-closed".into()
    });
    let v = sigma.classify();
    r.check(v.group_congruence_on_ball && v.consistent, || {
        format!("σ verdict {v:?}")
    });
    r
}

/// Generator sets: every pair of distinct inner idempotents, then `samples`
/// seeded random pairs of inner elements.
pub fn generator_sets(ball: &BallUniverse, samples: usize, seed: u64) -> Vec<(Element, Element)> {
    let ids: Vec<Element> = ball.inner_idempotents().collect();
    let mut sets = Vec::new();
    for (k, &e) in ids.iter().enumerate() {
        for &f in &ids[k + 1..] {
            sets.push((e, f));
        }
    }
    let inner: Vec<Element> = ball.inner_elements().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = *inner.choose(&mut rng).expect("inner ball is never empty");
        let y = *inner.choose(&mut rng).expect("inner ball is never empty");
        sets.push((x, y));
    }
    sets
}

/// Same collapse verdict and same restriction verdicts on shared cutoffs.
pub fn verdicts_agree(small: &CongruenceVerdict, big: &CongruenceVerdict) -> bool {
    small.idempotents_collapsed == big.idempotents_collapsed
        && small.bicyclic_restrictions.iter().all(|r| {
            big.bicyclic_restrictions
                .iter()
                .find(|b| b.cutoff == r.cutoff)
                .is_some_and(|b| b.identity == r.identity)
        })
}

/// Closure verdicts are consistent and survive growing the ball.
pub fn congruence_suite(ball: &BallUniverse, samples: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("congruence");
    let big = match ball.grown(2, 1) {
        Ok(b) => b,
        Err(e) => {
            r.error(e);
            return r;
        }
    };
    for (x, y) in generator_sets(ball, samples, seed) {
        let (small_p, big_p) = match (
            congruence_closure(&[(x, y)], ball),
            congruence_closure(&[(x, y)], &big),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                r.error(e);
                continue;
            }
        };
        let (vs, vb) = (small_p.classify(), big_p.classify());
        r.check(small_p.is_translation_closed(), || {
            format!("closure of {x}~{y} not translation-closed")
        });
        r.check(vs.consistent, || {
            format!("{x}~{y}: inconsistent verdict {vs:?}")
        });
        r.check(verdicts_agree(&vs, &vb), || {
            format!("{x}~{y}: verdict changes when the ball grows")
        });
    }
    let kernel = projection_kernel(ball);
    r.check(kernel.is_translation_closed(), || {
        "projection kernel not translation-closed".into()
    });
    if ball.cutoffs().len() > 1 {
        let v = kernel.classify();
        r.check(!v.group_congruence_on_ball && v.consistent, || {
            format!("projection kernel verdict {v:?}")
        });
    }
    let sigma = sigma_partition(ball);
    let c = congruence_closure(
        &[(
            Element::idempotent(0, ball.cutoffs()[0]),
            Element::idempotent(1, ball.cutoffs()[0]),
        )],
        ball,
    );
    match c {
        Ok(c) => r.check(c.refines_on_inner(&sigma), || {
            "closure of an idempotent pair is not inside σ".into()
        }),
        Err(e) => r.error(e),
    }
    r
}

/// Retraction maps, the retract list and the idempotent truncations.
pub fn retract_suite(fam: &NormalizedFamily, ball: &BallUniverse) -> SuiteReport {
    let mut r = SuiteReport::new("retracts");
    let canon = fam.canonicalize();
    let shift = canon.shift;
    let descriptors =
        match enumerate_retracts(&canon.family, ball.cutoff_bound().saturating_sub(shift)) {
            Ok(d) => d,
            Err(e) => {
                r.error(e);
                return r;
            }
        };
    for d in descriptors {
        let d = d.shifted(shift);
        let m = d.witness_map();
        let hom = verify_homomorphism(&m, ball);
        r.check(hom == Ok(None), || format!("{d}: {hom:?}"));
        let carrier: Vec<Element> = ball
            .elements()
            .iter()
            .copied()
            .filter(|e| d.contains(e))
            .collect();
        if carrier.is_empty() {
            continue;
        }
        let fixed = fixed_points(&m, ball);
        r.check(fixed.as_ref() == Ok(&carrier), || {
            format!("{d}: fixed points differ from the carrier")
        });
    }
    for &k in ball.cutoffs() {
        let m = ElementMap::Retraction { k };
        let idem = ball.elements().iter().all(|&e| {
            let once = m.apply_self(e).expect("total map");
            m.apply_self(once) == Ok(once)
        });
        r.check(idem, || format!("Retraction({k}) is not idempotent"));
    }
    r
}

/// Three genuine violations for every admissible `k`.
pub fn refute_suite(fam: &NormalizedFamily) -> SuiteReport {
    let mut r = SuiteReport::new("refute");
    let top = fam.hi().unwrap_or(fam.lo() + 7);
    for k in fam.lo() + 1..top {
        match refute_lower_retraction(k, fam) {
            Ok(ws) => {
                for w in ws {
                    r.check(
                        w.lhs != w.rhs && w.lhs == fam_map(w.case_id, k, w.x * w.y),
                        || format!("k={k} case {}: {w:?}", w.case_id),
                    );
                }
            }
            Err(e) => r.error(e),
        }
    }
    r
}

fn fam_map(case: u8, k: u64, e: Element) -> Element {
    ElementMap::ForcedCandidate { case, k }
        .apply_self(e)
        .expect("total map")
}

/// Shift to and from a translated copy, and automorphisms on a small ball.
pub fn iso_suite(fam: &NormalizedFamily) -> SuiteReport {
    let mut r = SuiteReport::new("iso");
    let canon = fam.canonicalize().family;
    let moved = canon.translate(3).expect("small shift");
    let radius = 4;
    let top = canon.span().unwrap_or(radius).min(radius);
    let balls = (
        BallUniverse::new(canon, radius, top),
        BallUniverse::new(moved, radius, 3 + top),
    );
    match (
        balls,
        shift_isomorphism(&canon, &moved),
        shift_isomorphism(&moved, &canon),
    ) {
        ((Ok(src), Ok(dst)), Ok(there), Ok(back)) => {
            r.check(verify_homomorphism(&there, &src) == Ok(None), || {
                "shift is not a homomorphism".into()
            });
            r.check(is_bijection_between(&there, &src, &dst) == Ok(true), || {
                "shift is not a bijection".into()
            });
            let round_trip = src
                .elements()
                .iter()
                .all(|&e| there.apply_self(e).and_then(|x| back.apply_self(x)) == Ok(e));
            r.check(round_trip, || {
                "shift back and forth is not the identity".into()
            });
        }
        _ => r.error("could not build the shifted balls"),
    }
    if canon.is_finite() && canon.span() <= Some(2) {
        match automorphisms(&canon, radius) {
            Ok(found) => r.check(found.len() == 1 && found[0].is_identity_table(), || {
                format!("{} automorphism candidates", found.len())
            }),
            Err(e) => r.error(e),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::make_ball;

    #[test]
    fn all_suites_pass_on_small_balls() {
        for fam in [
            NormalizedFamily::single(0),
            NormalizedFamily::finite(0, 2).unwrap(),
            NormalizedFamily::finite(2, 4).unwrap(),
            NormalizedFamily::infinite(0),
        ] {
            let top = fam.lo() + fam.span().unwrap_or(3).min(3);
            let ball = make_ball(&fam, 4, top).unwrap();
            for report in run_suite("all", &fam, &ball).unwrap() {
                assert!(report.passed(), "{fam}: {report}");
                assert!(
                    report.checks > 0 || report.name == "refute",
                    "{fam}: {report}"
                );
            }
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let fam = NormalizedFamily::single(0);
        let ball = make_ball(&fam, 2, 0).unwrap();
        assert!(run_suite("bogus", &fam, &ball).is_err());
    }

    #[test]
    fn generator_sets_are_seeded() {
        let ball = make_ball(&NormalizedFamily::finite(0, 1).unwrap(), 4, 1).unwrap();
        assert_eq!(generator_sets(&ball, 10, 7), generator_sets(&ball, 10, 7));
        assert_ne!(generator_sets(&ball, 10, 7), generator_sets(&ball, 10, 8));
    }
}
