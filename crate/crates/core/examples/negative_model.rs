// `λ < 0`: the models on `ℂⁿ` with a Hermitian form of signature `(p, q)`,
// embedded into `𝔰𝔲(p+1, q)`.

use rtk::classify::classify_triple;
use rtk::models::{build_negative_model, verify_embedding};
use rtk::scalar::q;
use rtk::triple::validate_triple;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 2;
    for p in 0..=n {
        let m = build_negative_model(n, p, n - p, &q(1, 2))?;
        let report = validate_triple(&m.triple);
        let emb = verify_embedding(&m.embedding, &m.triple.algebra()?);
        let c = classify_triple(&m.triple)?;
        println!(
            "(p, q) = ({p}, {}): b = {}, valid {}, embedding ok {}, {} compact {}",
            n - p,
            m.b,
            report.is_valid(),
            emb.is_valid(),
            c.model_name,
            c.compact
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("negative_model example");
}
