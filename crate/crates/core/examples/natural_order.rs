// The natural partial order and the Hasse diagram of the idempotents.

use bicyclic_ext::{
    hasse_covers, hasse_dot, idempotent_leq, make_ball, natural_leq, Element, NormalizedFamily,
};

fn main() {
    run_example().unwrap();
}

pub fn run_example() -> Result<(), bicyclic_ext::Error> {
    let fam = NormalizedFamily::infinite(0);
    let e = |i, j, a| Element::new(i, j, a);

    // (p,p,[a)) ≼ (q,q,[b)) iff p >= q and p + a >= q + b.
    assert!(natural_leq(e(1, 1, 0), e(0, 0, 1), &fam)?);
    assert!(!natural_leq(e(1, 1, 0), e(0, 0, 2), &fam)?);
    assert!(idempotent_leq(e(2, 2, 2), e(0, 0, 3))?);

    // Non-idempotents are compared through s = t·(s⁻¹s).
    assert!(natural_leq(e(2, 3, 1), e(1, 2, 0), &fam)?);

    let ball = make_ball(&fam, 4, 3)?;
    let covers = hasse_covers(&ball);
    println!(
        "{} covers among {} idempotents",
        covers.len(),
        ball.idempotents().count()
    );
    for (u, l) in covers.iter().filter(|(u, _)| *u == e(1, 1, 2)) {
        println!("  {u} covers {l}");
    }

    let small = make_ball(&NormalizedFamily::finite(0, 1)?, 2, 1)?;
    print!("{}", hasse_dot(&small));
    Ok(())
}
