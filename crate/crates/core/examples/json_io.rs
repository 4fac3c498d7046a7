// Reading and writing the JSON exchange formats.

use cmtk::io;
use cmtk::posets::boolean_lattice;
use cmtk::io::PosetDocument;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rp2 = io::complex_from_json(include_str!("rp2_6.json"))?;
    let text = io::complex_to_json(&rp2);
    assert_eq!(io::complex_from_json(&text)?, rp2);
    println!("{} facets, f-vector {:?}", rp2.facets().len(), rp2.f_vector());

    let doc = PosetDocument::from_poset(&boolean_lattice(2));
    println!("{}", io::to_json(&doc));

    match io::complex_from_json("{\"facets\": [[1, 2],\n  [3,]]}") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("trailing comma is not JSON"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
