// Stanley-Reisner ideals and graded Betti numbers through Hochster's formula.

use cmtk::corpus;
use cmtk::stanley_reisner::{hilbert_numerator, hochster_betti, minimal_nonfaces};
use cmtk::Coefficients;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pentagon = corpus::cycle(5);
    let generators: Vec<String> = minimal_nonfaces(&pentagon)
        .generator_labels()
        .iter()
        .map(|g| g.iter().map(|v| format!("x{v}")).collect())
        .collect();
    println!("I = ({})", generators.join(", "));
    let table = hochster_betti(&pentagon, Coefficients::Rationals)?;
    print!("{}", table.macaulay_grid());
    let dt = table.depth_type();
    println!("depth {} pd {} type {}", dt.depth, dt.projective_dimension, dt.cm_type);
    assert_eq!(table.k_polynomial(), hilbert_numerator(&pentagon));

    // the characteristic shows up in the resolution of RP2
    for field in [Coefficients::Rationals, Coefficients::prime(2)?] {
        let t = hochster_betti(&corpus::rp2_6(), field)?;
        println!("RP2 over {field}: depth {} of dimension {}", t.depth(), t.krull_dimension());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
