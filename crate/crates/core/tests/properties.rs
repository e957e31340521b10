use bicyclic_ext::congruence::congruence_closure;
use bicyclic_ext::morphisms::{is_idempotent_map, shift_isomorphism};
use bicyclic_ext::oracle::sigma_by_definition;
use bicyclic_ext::{
    embed, make_ball, natural_leq, project, retraction_hk, sigma_class, sigma_equivalent,
    BicyclicElement, Element, ElementMap, NormalizedFamily,
};
use proptest::prelude::*;

fn fin(lo: u64, hi: u64) -> NormalizedFamily {
    NormalizedFamily::finite(lo, hi).unwrap()
}

/// Elements of `lo..=hi` cutoffs with coordinates below `r`.
fn element(r: u64, lo: u64, hi: u64) -> impl Strategy<Value = Element> {
    (0..r, 0..r, lo..=hi).prop_map(|(i, j, a)| Element::new(i, j, a))
}

fn family() -> impl Strategy<Value = NormalizedFamily> {
    (0u64..4, prop::option::of(0u64..5)).prop_map(|(lo, span)| match span {
        Some(s) => fin(lo, lo + s),
        None => NormalizedFamily::infinite(lo),
    })
}

/// An element whose cutoff belongs to `fam`, preferring small cutoffs for infinite families.
fn member(fam: NormalizedFamily, r: u64) -> impl Strategy<Value = Element> {
    element(r, fam.lo(), fam.hi().unwrap_or(fam.lo() + 6))
}

proptest! {
    #[test]
    fn associative_at_large_coordinates(x in element(1 << 40, 0, 50), y in element(1 << 40, 0, 50), z in element(1 << 40, 0, 50)) {
        prop_assert_eq!((x * y) * z, x * (y * z));
    }

    #[test]
    fn product_cutoff_stays_between_factors(x in element(100, 0, 20), y in element(100, 0, 20)) {
        let a = (x * y).a();
        prop_assert!(x.a().min(y.a()) <= a && a <= x.a().max(y.a()));
    }

    #[test]
    fn inverse_laws(x in element(1 << 40, 0, 50)) {
        let inv = x.inverse();
        prop_assert_eq!(x * inv * x, x);
        prop_assert_eq!(inv * x * inv, inv);
        prop_assert!((x * inv).is_idempotent());
    }

    #[test]
    fn idempotents_commute(p in 0u64..50, a in 0u64..10, q in 0u64..50, b in 0u64..10) {
        let (e, f) = (Element::idempotent(p, a), Element::idempotent(q, b));
        prop_assert_eq!(e * f, f * e);
    }

    #[test]
    fn sigma_is_additive_and_compatible(x in element(1000, 0, 9), y in element(1000, 0, 9), s in element(1000, 0, 9)) {
        prop_assert_eq!(sigma_class(x * y).d(), sigma_class(x).d() + sigma_class(y).d());
        if sigma_equivalent(x, y) {
            prop_assert!(sigma_equivalent(s * x, s * y));
            prop_assert!(sigma_equivalent(x * s, y * s));
        }
    }

    #[test]
    fn project_and_embed_are_homomorphisms(x in element(1000, 0, 9), y in element(1000, 0, 9), a in 0u64..10) {
        let fam = fin(0, 9);
        prop_assert_eq!(project(x * y), project(x) * project(y));
        let (bx, by) = (project(x), project(y));
        let lhs = embed(bx * by, a, &fam).unwrap();
        prop_assert_eq!(lhs, embed(bx, a, &fam).unwrap() * embed(by, a, &fam).unwrap());
        prop_assert_eq!(project(embed(bx, a, &fam).unwrap()), bx);
    }

    #[test]
    fn bicyclic_is_associative(v in prop::array::uniform6(0u64..1000)) {
        let [a, b, c, d, e, f] = v;
        let (x, y, z) = (BicyclicElement::new(a, b), BicyclicElement::new(c, d), BicyclicElement::new(e, f));
        prop_assert_eq!((x * y) * z, x * (y * z));
    }

    #[test]
    fn retraction_is_an_idempotent_homomorphism(k in 0u64..8, x in element(1000, 0, 8), y in element(1000, 0, 8)) {
        let fam = fin(0, 8);
        let h = |e| retraction_hk(k, e, &fam).unwrap();
        prop_assert_eq!(h(x * y), h(x) * h(y));
        prop_assert_eq!(h(h(x)), h(x));
    }

    #[test]
    fn lower_truncation_is_an_idempotent_homomorphism(k in 0u64..8, x in element(1000, 0, 16), y in element(1000, 0, 16)) {
        let m = ElementMap::LowerTruncation { k };
        let h = |e| m.apply_self(e).unwrap();
        prop_assert_eq!(h(x * y), h(x) * h(y));
        prop_assert_eq!(h(h(x)), h(x));
        prop_assert_eq!(h(x).a(), x.a().min(k));
    }

    #[test]
    fn shift_round_trip(fam in family(), n in 0u64..5, x in element(1000, 0, 6)) {
        let moved = fam.translate(n as i64).unwrap();
        let x = x.with_cutoff(fam.lo() + x.a() % (fam.span().unwrap_or(6) + 1));
        let there = shift_isomorphism(&fam, &moved).unwrap();
        let back = shift_isomorphism(&moved, &fam).unwrap();
        prop_assert_eq!(back.apply_self(there.apply_self(x).unwrap()).unwrap(), x);
    }

    #[test]
    fn natural_order_is_compatible(fam in family(), s in any::<u8>(), t in any::<u8>(), u in any::<u8>()) {
        let pick = |seed: u8| {
            let top = fam.hi().unwrap_or(fam.lo() + 4);
            Element::new(u64::from(seed % 5), u64::from(seed / 5 % 5), fam.lo() + u64::from(seed / 25) % (top - fam.lo() + 1))
        };
        let (s, t, u) = (pick(s), pick(t), pick(u));
        // s ≼ t implies su ≼ tu and us ≼ ut.
        if natural_leq(s, t, &fam).unwrap() {
            prop_assert!(natural_leq(s * u, t * u, &fam).unwrap());
            prop_assert!(natural_leq(u * s, u * t, &fam).unwrap());
            prop_assert!(natural_leq(s.inverse(), t.inverse(), &fam).unwrap());
        }
    }

    #[test]
    fn more_generators_never_split(x in member(fin(0, 2), 3), y in member(fin(0, 2), 3), z in member(fin(0, 2), 3), w in member(fin(0, 2), 3)) {
        let ball = make_ball(&fin(0, 2), 5, 2).unwrap();
        let small = congruence_closure(&[(x, y)], &ball).unwrap();
        let large = congruence_closure(&[(x, y), (z, w)], &ball).unwrap();
        prop_assert!(small.refines(&large));
        prop_assert!(large.is_translation_closed());
    }
}

#[test]
fn natural_order_is_a_partial_order() {
    for fam in [fin(0, 2), NormalizedFamily::infinite(0)] {
        let ball = make_ball(&fam, 3, 2).unwrap();
        let els = ball.elements();
        let leq = |a, b| natural_leq(a, b, &fam).unwrap();
        for &s in els {
            assert!(leq(s, s));
            for &t in els {
                if s != t && leq(s, t) {
                    assert!(!leq(t, s), "{s} {t}");
                }
                if !leq(s, t) {
                    continue;
                }
                for &u in els {
                    if leq(t, u) {
                        assert!(leq(s, u), "{s} {t} {u}");
                    }
                }
            }
        }
    }
}

#[test]
fn sigma_fast_path_matches_definition_at_radius_ten() {
    for (fam, top) in [
        (NormalizedFamily::single(0), 0),
        (fin(0, 2), 2),
        (NormalizedFamily::infinite(0), 3),
    ] {
        let ball = make_ball(&fam, 10, top).unwrap();
        for &s in ball.elements() {
            for &t in ball.elements() {
                assert_eq!(
                    sigma_equivalent(s, t),
                    sigma_by_definition(s, t, &fam).unwrap(),
                    "{s} {t} in {fam}"
                );
            }
        }
    }
}

#[test]
fn truncation_maps_are_idempotent_on_balls() {
    let ball = make_ball(&fin(0, 4), 5, 4).unwrap();
    for k in 0..=4 {
        assert!(is_idempotent_map(&ElementMap::LowerTruncation { k }, &ball).unwrap());
        assert!(is_idempotent_map(&ElementMap::Retraction { k }, &ball).unwrap());
    }
}
