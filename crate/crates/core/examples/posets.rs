// Möbius functions, characteristic polynomials and order complexes.

use cmtk::homology::reduced_homology;
use cmtk::label::Label;
use cmtk::posets::{boolean_lattice, FinitePoset, LatticeStructure};
use cmtk::Coefficients;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let b3 = boolean_lattice(3);
    let (bottom, top) = (b3.bottom().unwrap(), b3.top().unwrap());
    println!("mu(B3) = {}", b3.mobius(bottom, top)?);
    let lattice = LatticeStructure::new(b3.clone())?;
    println!("chi(B3) = {}", lattice.characteristic_polynomial()?);

    // the proper part of B3 orders the faces of a triangle boundary
    let delta = b3.proper_part().order_complex();
    let h = reduced_homology(&delta, Coefficients::Integers);
    assert_eq!(h.euler_characteristic(), b3.mobius(bottom, top)?);

    let pentagon = FinitePoset::from_covers(
        ["0", "a", "b", "c", "1"].map(Label::from).to_vec(),
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")].map(|(x, y)| (Label::from(x), Label::from(y))),
    )?;
    println!("N5 graded: {}", pentagon.is_graded());
    println!("mu(N5) = {}", pentagon.mobius_labels(&Label::from("0"), &Label::from("1"))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
