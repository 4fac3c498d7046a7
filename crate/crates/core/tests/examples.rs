mod homology_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/homology.rs"));
}

mod classify_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify.rs"));
}

mod shelling_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/shelling.rs"));
}

mod betti_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/betti.rs"));
}

mod posets_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/posets.rs"));
}

mod flats_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/flats.rs"));
}

mod filtered_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/filtered.rs"));
}

mod diameter_experiment_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/diameter_experiment.rs"));
}

mod json_io_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/json_io.rs"));
}

#[test]
fn homology_example_runs() {
    homology_example::run_example().expect("homology example should run");
}

#[test]
fn classify_example_runs() {
    classify_example::run_example().expect("classify example should run");
}

#[test]
fn shelling_example_runs() {
    shelling_example::run_example().expect("shelling example should run");
}

#[test]
fn betti_example_runs() {
    betti_example::run_example().expect("betti example should run");
}

#[test]
fn posets_example_runs() {
    posets_example::run_example().expect("posets example should run");
}

#[test]
fn flats_example_runs() {
    flats_example::run_example().expect("flats example should run");
}

#[test]
fn filtered_example_runs() {
    filtered_example::run_example().expect("filtered example should run");
}

#[test]
fn diameter_experiment_example_runs() {
    diameter_experiment_example::run_example().expect("diameter_experiment example should run");
}

#[test]
fn json_io_example_runs() {
    json_io_example::run_example().expect("json_io example should run");
}
