// Runs every invariant suite for one family, as `bicyclic-ext verify` does.

use bicyclic_ext::verify::run_suite;
use bicyclic_ext::{make_ball, parse_interval};

fn main() {
    run_example().unwrap();
}

pub fn run_example() -> Result<(), bicyclic_ext::Error> {
    let fam = parse_interval("1..3")?;
    let ball = make_ball(&fam, 4, 3)?;
    let reports = run_suite("all", &fam, &ball)?;
    for r in &reports {
        println!("{r}");
    }
    assert!(reports.iter().all(|r| r.passed()));
    Ok(())
}
