// Witnesses that the candidate retractions onto the cutoffs up to k fail
// to be homomorphisms.

use bicyclic_ext::{refute_lower_retraction, NormalizedFamily};

fn main() {
    run_example().unwrap();
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fam = NormalizedFamily::infinite(0);
    for k in 1..=3 {
        for w in refute_lower_retraction(k, &fam)? {
            assert!(w.recheck(k)?);
            println!(
                "k={k} case {}: h({}·{}) = {} but h(x)·h(y) = {}",
                w.case_id, w.x, w.y, w.lhs, w.rhs
            );
        }
    }
    let json = serde_json::to_string(&refute_lower_retraction(1, &fam)?[0])?;
    println!("{json}");
    Ok(())
}
