// Weight filtrations of a lattice of flats: the positive and negative
// parts, their characteristic polynomials, and walks through positive flats.

use cmtk::filtered::{lattice_of_flats_from_points, WeightedFiltration};
use cmtk::io;
use cmtk::rational::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = io::points_from_json(include_str!("paper_fig3.json"))?;
    let lattice = lattice_of_flats_from_points(&config)?;
    let weights = config.weights().expect("every point is weighted");
    let plus = WeightedFiltration::new(lattice, weights, Rational::from_integer(0.into()), config.genericity.unwrap_or_default())?;
    let minus = plus.mirrored()?;

    for (name, w) in [("L+", &plus), ("L-", &minus)] {
        let retained: Vec<String> = w.retained().iter().map(|&f| w.lattice().flat_label(f)).collect();
        println!("{name}: {}", retained.join(" "));
        println!("  chi = {}", w.characteristic_polynomial());
    }
    assert_eq!(plus.characteristic_polynomial().to_string(), "z^3 - 4z^2 + 3z");

    let check = plus.check_cohen_macaulay()?;
    println!("order complex CM over Z: {}, dimension {}", check.cm_over_z, check.dimension);

    println!("walk a -> c: {}", plus.safe_walk("a", "c")?.join(" - "));
    println!("diameter of the positive point graph: {}", plus.diameter(2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
