// Reduced homology over several coefficient rings.
//
// The six-vertex projective plane has 2-torsion in `H_1`, so its homology
// depends on the characteristic.

use cmtk::corpus;
use cmtk::homology::reduced_homology;
use cmtk::{Coefficients, SimplicialComplex};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sphere = SimplicialComplex::simplex_boundary(3);
    println!("boundary of the tetrahedron over Z:\n{}", reduced_homology(&sphere, Coefficients::Integers));

    let rp2 = corpus::rp2_6();
    for coeff in [Coefficients::Integers, Coefficients::Rationals, Coefficients::prime(2)?] {
        let h = reduced_homology(&rp2, coeff);
        println!("RP2 over {coeff}:\n{h}");
    }
    assert_eq!(reduced_homology(&rp2, Coefficients::Rationals).rank(1), 0);
    assert_eq!(reduced_homology(&rp2, Coefficients::prime(2)?).rank(1), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
