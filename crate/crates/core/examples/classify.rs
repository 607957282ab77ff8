// Classify triples built from parameters and from a conjugated `A`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rtk::classify::classify_triple;
use rtk::linalg::SympSpace;
use rtk::models::{build_model, ModelParams};
use rtk::sampling::random_scalar_square;
use rtk::triple::build_triple_from_A;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for params in [
        ModelParams::sl(3),
        ModelParams::su(3, 1, 2),
        ModelParams::nilpotent(3, 2, 1, 1),
    ] {
        let c = classify_triple(build_model(&params)?.triple())?;
        println!(
            "{:?} n = {}: {} lambda = {} structure {:?} radical {:?}",
            params.family, params.n, c.model_name, c.lambda, c.structure, c.radical_class
        );
    }

    // A normal form hidden by symplectic transvections is still recognized.
    let space = SympSpace::standard(2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..4 {
        let a = random_scalar_square(2, &mut rng);
        let c = classify_triple(&build_triple_from_A(&space, &a)?)?;
        println!(
            "random A: {} (lambda = {}, rank {})",
            c.model_name, c.lambda, c.rank_a
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classify example");
}
