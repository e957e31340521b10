// Products, inverses and idempotents, and the map onto the bicyclic monoid.

use bicyclic_ext::{multiply, parse_element, parse_family, project, sigma_class, Element};

fn main() {
    run_example().unwrap();
}

pub fn run_example() -> Result<(), bicyclic_ext::Error> {
    let fam = parse_family("0..3")?.family;
    let x = parse_element("(1,3,2)")?;
    let y: Element = "(5,0,1)".parse()?;

    let xy = multiply(x, y, &fam)?;
    println!("{x} * {y} = {xy}");
    assert_eq!(xy.to_string(), "(3,0,1)");

    // Inverse swaps the indices; x x⁻¹ is the idempotent (i, i, [a)).
    let inv = x.inverse();
    println!("{x}⁻¹ = {inv}, x x⁻¹ = {}", x * inv);
    assert_eq!(x * inv * x, x);
    assert!((x * inv).is_idempotent());

    // Cutoffs are forgotten by the projection, which is multiplicative.
    assert_eq!(project(xy), project(x) * project(y));
    println!(
        "projection: {} * {} = {}",
        project(x),
        project(y),
        project(xy)
    );

    // σ-classes are indexed by j - i and add up under multiplication.
    let d = sigma_class(xy).d();
    assert_eq!(d, sigma_class(x).d() + sigma_class(y).d());
    println!("sigma class of {xy}: {d}");

    // Shifted families behave the same; "2..5" is recorded with shift 2.
    let shifted = parse_family("2..5")?;
    println!(
        "2..5 canonicalizes to {} with shift {}",
        shifted.family, shifted.shift
    );
    Ok(())
}
