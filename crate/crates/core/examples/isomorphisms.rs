// Isomorphism between shifted families and the automorphism search.

use bicyclic_ext::morphisms::{
    automorphisms, is_bijection_between, isomorphic_families, shift_isomorphism,
};
use bicyclic_ext::{
    isomorphic, make_ball, verify_homomorphism, CutoffSet, Element, NormalizedFamily,
};

fn main() {
    run_example().unwrap();
}

pub fn run_example() -> Result<(), bicyclic_ext::Error> {
    let src = NormalizedFamily::finite(2, 5)?;
    let dst = NormalizedFamily::finite(0, 3)?;
    let m = shift_isomorphism(&src, &dst)?;
    println!("{m}: (4,1,[3)) -> {}", m.apply_self(Element::new(4, 1, 3))?);

    let a = make_ball(&src, 4, 5)?;
    let b = make_ball(&dst, 4, 3)?;
    assert!(is_bijection_between(&m, &a, &b)?);
    assert!(verify_homomorphism(&m, &a)?.is_none());

    let report = isomorphic_families(&NormalizedFamily::finite(0, 2)?, &dst)?;
    println!(
        "0..2 vs 0..3: isomorphic = {}, ball evidence = {:?}",
        report.isomorphic, report.ball_evidence
    );
    assert!(isomorphic(&CutoffSet::From(0), &CutoffSet::From(1))?);

    let found = automorphisms(&NormalizedFamily::finite(0, 2)?, 5)?;
    println!("automorphism candidates on the ball: {}", found.len());
    assert!(found.len() == 1 && found[0].is_identity_table());
    Ok(())
}
