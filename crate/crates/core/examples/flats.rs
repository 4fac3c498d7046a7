// Lattices of flats of linear, graphic and uniform matroids.

use cmtk::filtered::{lattice_of_flats_graphic, lattice_of_flats_from_points, uniform_matroid};
use cmtk::io;
use cmtk::label::Label;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = io::points_from_json(include_str!("paper_fig3.json"))?;
    let lattice = lattice_of_flats_from_points(&config)?;
    println!("rank {} with {} flats", lattice.rank(), lattice.flats().len());
    let lines: Vec<String> = lattice.flats_of_rank(2).iter().map(|&f| lattice.flat_label(f)).collect();
    println!("lines: {}", lines.join(" "));
    println!("chi = {}", lattice.lattice().characteristic_polynomial()?);

    let triangle_plus = [("1", "2"), ("2", "3"), ("1", "3"), ("3", "4")].map(|(u, v)| (Label::from(u), Label::from(v)));
    let graphic = lattice_of_flats_graphic(&triangle_plus)?;
    println!("graphic: chi = {}", graphic.lattice().characteristic_polynomial()?);

    let u24 = uniform_matroid(4, 2)?;
    assert!(u24.lattice().is_geometric());
    println!("U(2,4): chi = {}", u24.lattice().characteristic_polynomial()?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
