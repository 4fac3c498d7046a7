// Searching for a shelling order with a node budget.

use cmtk::cm::{find_shelling, is_shellable};
use cmtk::corpus;
use cmtk::Ternary;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let octahedron = corpus::cross_polytope_boundary(3);
    let search = find_shelling(&octahedron, 10_000)?;
    let order = search.order.expect("spheres of this size are shellable");
    for i in order {
        let labels: Vec<String> = octahedron.face_labels(&octahedron.facets()[i]).iter().map(|v| v.to_string()).collect();
        println!("{}", labels.join(" "));
    }
    println!("{} search nodes", search.nodes);

    assert_eq!(is_shellable(&corpus::rp2_6(), 1_000_000)?, Ternary::False);
    // a tiny budget gives an honest "unknown"
    assert_eq!(is_shellable(&corpus::rp2_6(), 3)?, Ternary::Unknown);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
