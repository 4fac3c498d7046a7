// Cohen-Macaulay and Gorenstein* classification with the implication
// hierarchy.

use cmtk::cm::{classify, gorenstein_core, is_gorenstein, is_gorenstein_star};
use cmtk::corpus;
use cmtk::Coefficients;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rp2 = corpus::rp2_6();
    let fields = [Coefficients::Rationals, Coefficients::prime(2)?, Coefficients::Integers];
    let report = classify(&rp2, &fields)?;
    for (ring, cm) in &report.cm_over {
        println!("RP2 CM over {ring}: {cm}");
    }
    println!("shellable: {}", report.shellable);
    let chain: String = report.hierarchy.values().map(|t| t.to_string()).collect::<Vec<_>>().join(" ");
    println!("hierarchy a..h: {chain}");

    // a cone is Gorenstein but acyclic, so not Gorenstein*
    let cone = corpus::cycle(4).cone("apex")?;
    let (core, apexes) = gorenstein_core(&cone);
    println!("core of the cone has {} facets, {apexes} cone point(s)", core.facets().len());
    assert!(is_gorenstein(&cone, Coefficients::Rationals));
    assert!(!is_gorenstein_star(&cone, Coefficients::Rationals));

    let octahedron = corpus::cross_polytope_boundary(3);
    let report = classify(&octahedron, &fields)?;
    assert!(report.gorenstein_star_over.values().all(|&g| g));
    let order = report.shelling_order.unwrap_or_default();
    let facets: Vec<String> = order.iter().map(|f| f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("")).collect();
    println!("octahedron shelling: {}", facets.join(" "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
