// Diameters of positive flat graphs over many random generic weightings.
//
// Draws are seeded per index, so the histogram is the same for any thread
// count.

use cmtk::filtered::{diameter_experiment, uniform_matroid, GraphicMatroid, lattice_of_flats};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k5 = lattice_of_flats(&GraphicMatroid::complete(5))?;
    let stats = diameter_experiment(&k5, 200, 7, 2)?;
    println!("K5, rank-2 flats: max diameter {} histogram {:?}", stats.max_diameter, stats.histogram);
    assert_eq!(stats, diameter_experiment(&k5, 200, 7, 2)?);

    let u36 = uniform_matroid(6, 3)?;
    let stats = diameter_experiment(&u36, 200, 7, 2)?;
    println!("U(3,6): max diameter {} histogram {:?}", stats.max_diameter, stats.histogram);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
