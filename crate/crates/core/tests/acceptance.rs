//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so the PASS/FAIL lines are always printed.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bicyclic_ext::congruence::{congruence_closure, projection_kernel, sigma_partition};
use bicyclic_ext::morphisms::{
    automorphisms, check_pair, enumerate_retracts, fixed_points, is_bijection_between,
    isomorphic_families, refute_lower_retraction, search_generator_consistent_maps,
    shift_isomorphism, verify_homomorphism, ElementMap, RefutationWitness,
};
use bicyclic_ext::oracle::{natural_leq_by_search, sigma_by_definition};
use bicyclic_ext::verify::{generator_sets, verdicts_agree, DEFAULT_SEED};
use bicyclic_ext::{
    idempotent_leq, make_ball, natural_leq, sigma_equivalent, Element, NormalizedFamily,
};

/// Wall-clock budget for the exhaustive associativity check.
const ASSOCIATIVITY_BUDGET: Duration = Duration::from_secs(10);
/// Seeded random generator pairs per family in the congruence criterion.
const RANDOM_PAIRS: usize = 100;
/// Families the binary ships verified for.
const SHIPPED_FAMILIES: [&str; 6] = ["0..0", "0..1", "0..2", "0..3", "2..5", "0..inf"];

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fin(lo: u64, hi: u64) -> NormalizedFamily {
    NormalizedFamily::finite(lo, hi).unwrap()
}

fn inf(lo: u64) -> NormalizedFamily {
    NormalizedFamily::infinite(lo)
}

fn e(i: u64, j: u64, a: u64) -> Element {
    Element::new(i, j, a)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn associativity_and_inverses() -> Check {
    let start = Instant::now();
    let mut triples = 0u64;
    for fam in [NormalizedFamily::single(0), fin(0, 2), inf(0)] {
        let ball = make_ball(&fam, 6, 3).map_err(|e| e.to_string())?;
        let els = ball.elements();
        for &x in els {
            for &y in els {
                let xy = x * y;
                for &z in els {
                    triples += 1;
                    ensure(xy * z == x * (y * z), || format!("{fam}: ({x}{y}){z}"))?;
                }
            }
            let inv = x.inverse();
            ensure(x * inv * x == x && inv * x * inv == inv, || {
                format!("{fam}: inverse of {x}")
            })?;
            let others = els
                .iter()
                .filter(|&&y| y != inv && x * y * x == x && y * x * y == y)
                .count();
            ensure(others == 0, || {
                format!("{fam}: {x} has a second inverse in the ball")
            })?;
        }
    }
    let took = start.elapsed();
    ensure(took < ASSOCIATIVITY_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{triples} triples, {took:.2?}"))
}

fn order_oracles() -> Check {
    let mut pairs = 0;
    for fam in [NormalizedFamily::single(0), fin(0, 2), fin(0, 4), inf(0)] {
        let ball = make_ball(&fam, 8, 4).map_err(|e| e.to_string())?;
        let ids: Vec<Element> = ball.idempotents().collect();
        for &s in &ids {
            for &t in &ids {
                pairs += 1;
                let a = natural_leq(s, t, &fam).map_err(|e| e.to_string())?;
                let b = natural_leq_by_search(s, t, &fam).map_err(|e| e.to_string())?;
                let c = idempotent_leq(s, t).map_err(|e| e.to_string())?;
                ensure(a == b && b == c, || {
                    format!("{fam}: {s} <= {t}: {a} {b} {c}")
                })?;
            }
        }
    }
    Ok(format!("{pairs} idempotent pairs"))
}

fn retraction_homomorphism() -> Check {
    let mut coverage = [0u64; 4];
    let mut maps = 0;
    for fam in [fin(0, 4), inf(0)] {
        let ball = make_ball(&fam, 8, 6).map_err(|e| e.to_string())?;
        for &k in ball.cutoffs() {
            let m = ElementMap::Retraction { k };
            let verdict = verify_homomorphism(&m, &ball).map_err(|e| e.to_string())?;
            ensure(verdict.is_none(), || format!("{fam} k={k}: {verdict:?}"))?;
            maps += 1;
            for x in ball.elements() {
                for y in ball.elements() {
                    let case = 2 * usize::from(x.a() > k) + usize::from(y.a() > k);
                    coverage[case] += 1;
                }
            }
        }
    }
    ensure(coverage.iter().all(|&c| c > 0), || {
        format!("coverage {coverage:?}")
    })?;
    Ok(format!("{maps} maps, case coverage {coverage:?}"))
}

fn group_congruence_biconditional() -> Check {
    let mut sets = 0;
    let mut collapsed = 0;
    for fam in [fin(0, 1), fin(0, 2), fin(0, 3)] {
        let ball = make_ball(&fam, 6, fam.hi().unwrap()).map_err(|e| e.to_string())?;
        let big = ball.grown(2, 1).map_err(|e| e.to_string())?;
        for (x, y) in generator_sets(&ball, RANDOM_PAIRS, DEFAULT_SEED) {
            sets += 1;
            let small = congruence_closure(&[(x, y)], &ball).map_err(|e| e.to_string())?;
            let grown = congruence_closure(&[(x, y)], &big).map_err(|e| e.to_string())?;
            let (vs, vb) = (small.classify(), grown.classify());
            ensure(vs.consistent, || format!("{fam} {x}~{y}: {vs:?}"))?;
            ensure(verdicts_agree(&vs, &vb), || {
                format!("{fam} {x}~{y}: unstable under growth")
            })?;
            collapsed += usize::from(vs.idempotents_collapsed);
        }
    }
    Ok(format!(
        "{sets} generator sets, {collapsed} collapse idempotents"
    ))
}

fn projection_kernel_is_not_group() -> Check {
    let fams = [fin(0, 1), fin(0, 2), fin(0, 3), fin(2, 5), inf(0)];
    for fam in fams {
        let top = fam.lo() + fam.span().unwrap_or(4).min(4);
        let ball = make_ball(&fam, 6, top).map_err(|e| e.to_string())?;
        let kernel = projection_kernel(&ball);
        ensure(kernel.is_translation_closed(), || {
            format!("{fam}: not a congruence")
        })?;
        let v = kernel.classify();
        ensure(!v.group_congruence_on_ball, || format!("{fam}: {v:?}"))?;
    }
    Ok(format!("{} families", fams.len()))
}

fn sigma_checks() -> Check {
    let mut pairs = 0;
    for fam in [NormalizedFamily::single(0), fin(0, 2), inf(0)] {
        let ball = make_ball(&fam, 8, 3).map_err(|e| e.to_string())?;
        for &s in ball.elements() {
            for &t in ball.elements() {
                pairs += 1;
                let by_def = sigma_by_definition(s, t, &fam).map_err(|e| e.to_string())?;
                ensure(by_def == sigma_equivalent(s, t), || {
                    format!("{fam}: {s} σ {t}")
                })?;
            }
        }
    }
    let mut tested = 0;
    for fam in [fin(0, 1), fin(0, 2)] {
        let ball = make_ball(&fam, 6, fam.hi().unwrap()).map_err(|e| e.to_string())?;
        let sigma = sigma_partition(&ball);
        ensure(sigma.classify().group_congruence_on_ball, || {
            format!("{fam}: σ not group")
        })?;
        for (x, y) in generator_sets(&ball, 20, DEFAULT_SEED) {
            let c = congruence_closure(&[(x, y)], &ball).map_err(|e| e.to_string())?;
            if !c.classify().group_congruence_on_ball {
                continue;
            }
            tested += 1;
            let strictly_below = c.refines_on_inner(&sigma) && !sigma.refines_on_inner(&c);
            ensure(!strictly_below, || {
                format!("{fam}: closure of {x}~{y} lies strictly inside σ")
            })?;
            ensure(sigma.refines_on_inner(&c), || {
                format!("{fam}: σ not inside closure of {x}~{y}")
            })?;
        }
    }
    Ok(format!(
        "{pairs} pairs against the definition, {tested} group congruences above σ"
    ))
}

fn lower_retraction_refuted() -> Check {
    let mut witnesses = 0;
    for fam in [fin(0, 2), fin(0, 4), fin(0, 6), inf(0)] {
        let ball = make_ball(&fam, 6, fam.hi().unwrap_or(6)).map_err(|e| e.to_string())?;
        for k in 1..=5 {
            if !fam.contains(k + 1) {
                continue;
            }
            for w in refute_lower_retraction(k, &fam).map_err(|e| e.to_string())? {
                let m = ElementMap::ForcedCandidate { case: w.case_id, k };
                let v = check_pair(&m, w.x.into(), w.y.into()).map_err(|e| e.to_string())?;
                ensure(v == Some((w.lhs.into(), w.rhs.into())), || {
                    format!("{fam} k={k}: {w:?}")
                })?;
                let on_ball = verify_homomorphism(&m, &ball).map_err(|e| e.to_string())?;
                ensure(on_ball.is_some(), || {
                    format!("{fam} k={k} case {}: no violation", w.case_id)
                })?;
                witnesses += 1;
            }
        }
    }
    let first = refute_lower_retraction(1, &fin(0, 2)).map_err(|e| e.to_string())?[0];
    let expected = RefutationWitness {
        case_id: 1,
        x: e(1, 1, 0),
        y: e(0, 0, 2),
        lhs: e(1, 1, 1),
        rhs: e(1, 1, 0),
    };
    ensure(first == expected, || format!("k=1 case 1: {first:?}"))?;
    Ok(format!("{witnesses} witnesses"))
}

fn retract_enumeration() -> Check {
    let cases: [(NormalizedFamily, &[&str]); 3] = [
        (fin(0, 1), &["SingleCutoff(0)", "SingleCutoff(1)"]),
        (
            fin(0, 3),
            &[
                "UpperFamily(1)",
                "UpperFamily(2)",
                "UpperFamily(3)",
                "SingleCutoff(0)",
                "SingleCutoff(1)",
                "SingleCutoff(2)",
                "SingleCutoff(3)",
            ],
        ),
        (
            inf(0),
            &[
                "UpperFamily(1)",
                "UpperFamily(2)",
                "UpperFamily(3)",
                "UpperFamily(4)",
                "UpperFamily(5)",
                "UpperFamily(6)",
                "UpperFamily(7)",
                "UpperFamily(8)",
                "SingleCutoff(0)",
                "SingleCutoff(1)",
                "SingleCutoff(2)",
                "SingleCutoff(3)",
                "SingleCutoff(4)",
                "SingleCutoff(5)",
                "SingleCutoff(6)",
                "SingleCutoff(7)",
                "SingleCutoff(8)",
            ],
        ),
    ];
    let mut checked = 0;
    for (fam, expected) in cases {
        let all = enumerate_retracts(&fam, 8).map_err(|e| e.to_string())?;
        let names: Vec<String> = all
            .iter()
            .filter(|d| !d.trivial)
            .map(|d| d.to_string())
            .collect();
        ensure(names == expected, || format!("{fam}: {names:?}"))?;
        let ball = make_ball(&fam, 6, fam.hi().unwrap_or(8)).map_err(|e| e.to_string())?;
        for d in all {
            let m = d.witness_map();
            let v = verify_homomorphism(&m, &ball).map_err(|e| e.to_string())?;
            ensure(v.is_none(), || format!("{fam} {d}: {v:?}"))?;
            let fixed = fixed_points(&m, &ball).map_err(|e| e.to_string())?;
            let carrier: Vec<Element> = ball
                .elements()
                .iter()
                .copied()
                .filter(|x| d.contains(x))
                .collect();
            ensure(fixed == carrier, || {
                format!("{fam} {d}: fixed points differ from carrier")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} descriptors with witnessing maps"))
}

fn isomorphism_theory() -> Check {
    let fams = [
        fin(0, 0),
        fin(3, 3),
        fin(0, 1),
        fin(4, 5),
        fin(0, 2),
        fin(2, 4),
        fin(0, 3),
        fin(2, 5),
        inf(0),
        inf(1),
        inf(5),
    ];
    let pairs: [(usize, usize); 20] = [
        (0, 1),
        (0, 2),
        (1, 3),
        (2, 3),
        (2, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        (3, 7),
        (8, 9),
        (9, 10),
        (8, 0),
        (10, 6),
        (1, 4),
        (0, 7),
        (3, 5),
        (4, 4),
        (6, 6),
        (8, 8),
    ];
    for &(a, b) in &pairs {
        let (f1, f2) = (fams[a], fams[b]);
        let report = isomorphic_families(&f1, &f2).map_err(|e| format!("{f1} vs {f2}: {e}"))?;
        ensure(
            report.isomorphic == (f1.cardinality() == f2.cardinality()),
            || format!("{f1} vs {f2}"),
        )?;
        if report.isomorphic {
            let m = shift_isomorphism(&f1, &f2).map_err(|e| e.to_string())?;
            let top = f1.span().unwrap_or(4).min(4);
            let src = make_ball(&f1, 6, f1.lo() + top).map_err(|e| e.to_string())?;
            let dst = make_ball(&f2, 6, f2.lo() + top).map_err(|e| e.to_string())?;
            ensure(is_bijection_between(&m, &src, &dst) == Ok(true), || {
                format!("{f1}->{f2} not bijective")
            })?;
            ensure(verify_homomorphism(&m, &src) == Ok(None), || {
                format!("{f1}->{f2} not a homomorphism")
            })?;
        }
    }
    for f in [fin(0, 0), fin(0, 2)] {
        let found = automorphisms(&f, 5).map_err(|e| e.to_string())?;
        ensure(found.len() == 1 && found[0].is_identity_table(), || {
            format!("{f}: {} survivors", found.len())
        })?;
    }
    let unequal = [
        (fin(0, 2), fin(0, 3)),
        (fin(0, 1), fin(0, 0)),
        (fin(0, 0), fin(0, 1)),
        (fin(0, 3), fin(0, 1)),
    ];
    for (f1, f2) in unequal {
        let found = search_generator_consistent_maps(&f1, &f2, 5).map_err(|e| e.to_string())?;
        ensure(found.is_empty(), || {
            format!("{f1} -> {f2}: {} survivors", found.len())
        })?;
    }
    Ok(format!(
        "{} family pairs, 2 automorphism searches, {} empty searches",
        pairs.len(),
        unequal.len()
    ))
}

fn binary(args: &[&str]) -> std::result::Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bicyclic-ext"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), stdout))
}

fn cli_golden_files() -> Check {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&str, &[&str]); 4] = [
        (
            "mul.txt",
            &["mul", "--family", "0..3", "(1,3,2)", "(5,0,1)"],
        ),
        ("retracts.txt", &["retracts", "--family", "0..1"]),
        (
            "hasse.dot",
            &["hasse", "--dot", "--family", "0..2", "--ball", "3"],
        ),
        (
            "cong.json",
            &[
                "cong",
                "--json",
                "--family",
                "0..1",
                "--pairs",
                "(0,0,0)~(0,0,1)",
                "--ball",
                "3",
            ],
        ),
    ];
    for (file, args) in cases {
        let expected =
            std::fs::read_to_string(golden.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let (code, stdout) = binary(args)?;
        ensure(code == 0 && stdout == expected, || {
            format!("{file}: exit {code}, output differs")
        })?;
    }
    for fam in SHIPPED_FAMILIES {
        let (code, stdout) = binary(&["verify", "--suite", "all", "--ball", "6", "--family", fam])?;
        ensure(code == 0, || {
            format!("verify {fam} exited {code}:\n{stdout}")
        })?;
    }
    Ok(format!(
        "4 golden files, verify on {} families",
        SHIPPED_FAMILIES.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("associativity and inverse laws", associativity_and_inverses),
        ("order oracle agreement", order_oracles),
        ("retraction maps are homomorphisms", retraction_homomorphism),
        (
            "group congruence biconditional",
            group_congruence_biconditional,
        ),
        (
            "projection kernel is not a group congruence",
            projection_kernel_is_not_group,
        ),
        ("least group congruence", sigma_checks),
        ("lower retractions refuted", lower_retraction_refuted),
        ("retract enumeration", retract_enumeration),
        ("isomorphism and automorphisms", isomorphism_theory),
        ("CLI golden files and verify", cli_golden_files),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2}s]", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
