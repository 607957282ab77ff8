//! Every runnable example doubles as a test.

#[allow(dead_code)]
mod exact_scalars {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exact_scalars.rs"
    ));
}

#[test]
fn exact_scalars_example_runs() {
    exact_scalars::run_example().expect("exact_scalars example should run");
}

#[allow(dead_code)]
mod ricci_decomposition {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/ricci_decomposition.rs"
    ));
}

#[test]
fn ricci_decomposition_example_runs() {
    ricci_decomposition::run_example().expect("ricci_decomposition example should run");
}

#[allow(dead_code)]
mod product_flatness {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/product_flatness.rs"
    ));
}

#[test]
fn product_flatness_example_runs() {
    product_flatness::run_example().expect("product_flatness example should run");
}

#[allow(dead_code)]
mod build_triple {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/build_triple.rs"
    ));
}

#[test]
fn build_triple_example_runs() {
    build_triple::run_example().expect("build_triple example should run");
}

#[allow(dead_code)]
mod positive_model {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/positive_model.rs"
    ));
}

#[test]
fn positive_model_example_runs() {
    positive_model::run_example().expect("positive_model example should run");
}

#[allow(dead_code)]
mod negative_model {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/negative_model.rs"
    ));
}

#[test]
fn negative_model_example_runs() {
    negative_model::run_example().expect("negative_model example should run");
}

#[allow(dead_code)]
mod zero_model {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/zero_model.rs"
    ));
}

#[test]
fn zero_model_example_runs() {
    zero_model::run_example().expect("zero_model example should run");
}

#[allow(dead_code)]
mod classify {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify.rs"));
}

#[test]
fn classify_example_runs() {
    classify::run_example().expect("classify example should run");
}

#[allow(dead_code)]
mod dim4_catalog {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/dim4_catalog.rs"
    ));
}

#[test]
fn dim4_catalog_example_runs() {
    dim4_catalog::run_example().expect("dim4_catalog example should run");
}

#[allow(dead_code)]
mod cli_in_process {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cli_in_process.rs"
    ));
}

#[test]
fn cli_in_process_example_runs() {
    cli_in_process::run_example().expect("cli_in_process example should run");
}
