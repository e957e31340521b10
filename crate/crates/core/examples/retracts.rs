// Homomorphic retracts of a family, each checked through a witnessing map.

use bicyclic_ext::morphisms::{enumerate_retracts, fixed_points, verify_homomorphism};
use bicyclic_ext::{make_ball, retraction_hk, Element, NormalizedFamily};

fn main() {
    run_example().unwrap();
}

pub fn run_example() -> Result<(), bicyclic_ext::Error> {
    let fam = NormalizedFamily::finite(0, 3)?;
    println!(
        "h_2 sends (1,3,[1)) to {}",
        retraction_hk(2, Element::new(1, 3, 1), &fam)?
    );

    let ball = make_ball(&fam, 4, 3)?;
    for d in enumerate_retracts(&fam, 0)? {
        let m = d.witness_map();
        assert!(verify_homomorphism(&m, &ball)?.is_none());
        let fixed = fixed_points(&m, &ball)?;
        assert!(fixed.iter().all(|x| d.contains(x)));
        let tag = if d.trivial { " (trivial)" } else { "" };
        println!("{d}{tag}: {m}, {} fixed points on the ball", fixed.len());
    }
    Ok(())
}
