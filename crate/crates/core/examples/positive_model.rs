// `λ > 0`: the model on `V ⊕ V*` and its embedding into `𝔰𝔩(n+1, ℝ)`.

use rtk::classify::classify_triple;
use rtk::models::{build_positive_model, verify_embedding};
use rtk::scalar::Rational;
use rtk::triple::validate_triple;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in [2, 3] {
        let m = build_positive_model(n, &Rational::one())?;
        let report = validate_triple(&m.triple);
        let emb = verify_embedding(&m.embedding, &m.triple.algebra()?);
        let c = classify_triple(&m.triple)?;
        println!(
            "n = {n}: a = {}, dim g = {}, valid {}, embedding ok {} (image dim {}), {} with lambda = {}",
            m.a,
            m.triple.dim(),
            report.is_valid(),
            emb.is_valid(),
            emb.image_dim,
            c.model_name,
            c.lambda
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("positive_model example");
}
