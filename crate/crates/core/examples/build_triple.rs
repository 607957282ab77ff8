// From `A` with `A² = λ·Id` to the symmetric triple `𝔤 = 𝔨 ⊕ 𝔭`, checked
// axiom by axiom, plus the rejection of a non-scalar square.

use rtk::curvature::scalar_square;
use rtk::linalg::{QMatrix, SympSpace};
use rtk::scalar::Rational;
use rtk::triple::{build_triple_from_A, lie_diagnostics, validate_triple};
use rtk::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let space = SympSpace::standard(2)?;
    let d = |xs: [i64; 4]| QMatrix::diagonal(&xs.map(Rational::from_int));

    let a = d([2, 2, -2, -2]);
    println!("A^2 = {:?} Id", scalar_square(&a));
    let t = build_triple_from_A(&space, &a)?;
    let report = validate_triple(&t);
    println!(
        "dim k = {}, dim g = {}, Jacobi on {} triples: {}, valid: {}",
        t.dim_k(),
        t.dim(),
        report.jacobi_triples_checked,
        report.jacobi,
        report.is_valid()
    );
    let diag = lie_diagnostics(&t, None)?;
    println!(
        "derived series {:?}, Killing signature {:?}, semisimple {}",
        diag.derived_series_dims, diag.killing.signature, diag.semisimple
    );

    let b = d([1, 2, -1, -2]);
    match build_triple_from_A(&space, &b) {
        Err(Error::NonScalarSquare) => println!("diag(1, 2, -1, -2) rejected: A^2 is not scalar"),
        other => return Err(format!("expected rejection, got {other:?}").into()),
    }

    let json = rtk::json::to_json_string(&t);
    let back: rtk::triple::SymmetricTriple = serde_json::from_str(&json)?;
    println!("JSON round trip ({} bytes): {}", json.len(), back == t);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("build_triple example");
}
