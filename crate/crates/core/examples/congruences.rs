// Congruence closure on a ball and the group-congruence verdict.

use bicyclic_ext::{
    congruence_closure, make_ball, projection_kernel, sigma_partition, Element, NormalizedFamily,
};

fn main() {
    run_example().unwrap();
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fam = NormalizedFamily::finite(0, 2)?;
    let ball = make_ball(&fam, 6, 2)?;
    let e = |i, j, a| Element::new(i, j, a);

    // Gluing two idempotents collapses every idempotent of the inner ball.
    let glued = congruence_closure(&[(e(0, 0, 0), e(1, 1, 0))], &ball)?;
    let v = glued.classify();
    println!(
        "idempotent pair: {} classes, group = {}",
        glued.class_count(),
        v.group_congruence_on_ball
    );
    assert!(v.idempotents_collapsed && v.consistent);

    // The result is σ on this ball.
    let sigma = sigma_partition(&ball);
    assert_eq!(glued.classes(), sigma.classes());

    // Gluing two cutoffs gives the projection kernel, which is not a group congruence.
    let cut = congruence_closure(&[(e(0, 0, 0), e(0, 0, 1))], &ball)?;
    let kernel = projection_kernel(&ball);
    assert!(cut.refines(&kernel));
    let v = kernel.classify();
    println!("projection kernel: group = {}", v.group_congruence_on_ball);
    for r in &v.bicyclic_restrictions {
        println!("  restriction to [{}): identity = {}", r.cutoff, r.identity);
    }
    assert!(!v.group_congruence_on_ball && v.consistent);

    let json = serde_json::to_string(&kernel.export())?;
    println!("{} bytes of JSON", json.len());
    Ok(())
}
