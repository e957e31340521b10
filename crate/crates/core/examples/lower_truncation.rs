// Pushing every cutoff above k down to k, while moving the indices up by the
// same amount, is a homomorphism. Its fixed points are exactly the elements
// with cutoff at most k, so the lower family is a homomorphic retract.

use bicyclic_ext::morphisms::{fixed_points, is_idempotent_map, verify_homomorphism};
use bicyclic_ext::{make_ball, ElementMap, NormalizedFamily};

fn main() {
    run_example().unwrap();
}

pub fn run_example() -> Result<(), bicyclic_ext::Error> {
    for fam in [
        NormalizedFamily::finite(0, 4)?,
        NormalizedFamily::infinite(0),
    ] {
        let ball = make_ball(&fam, 6, 5)?;
        for k in 1..=3 {
            let m = ElementMap::LowerTruncation { k };
            assert!(verify_homomorphism(&m, &ball)?.is_none());
            assert!(is_idempotent_map(&m, &ball)?);
            let fixed = fixed_points(&m, &ball)?;
            assert!(fixed.iter().all(|x| x.a() <= k));
            assert_eq!(
                fixed.len(),
                ball.elements().iter().filter(|x| x.a() <= k).count()
            );
            println!(
                "{fam}, k={k}: homomorphic retraction with {} fixed points on the ball",
                fixed.len()
            );
        }
    }
    Ok(())
}
