// `λ = 0`: the radical, its nilpotency, and the Levi factor `𝔰𝔬(p, q+1)`.

use rtk::lie::FormSummary;
use rtk::models::{build_zero_model, printed_table_report, verify_embedding};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 3;
    for rank in 1..=n {
        for p in 0..=rank {
            let m = build_zero_model(n, rank, p, rank - p)?;
            let g = m.triple.algebra()?;
            let lower = g.lower_central_series_of(&m.radical_basis);
            let quotient = g.quotient(&m.radical_basis)?.algebra;
            let killing = FormSummary::of(&quotient.killing_form());
            let levi = verify_embedding(&m.levi_map, &g);
            println!(
                "rank {rank}, p = {p}: dim g = {}, radical dim {} series {:?}, derived series of g {:?}, \
                 Levi quotient dim {} Killing {:?}, Levi map ok {}, tables match {}",
                g.dim(),
                m.radical_basis.len(),
                lower,
                g.derived_series(),
                quotient.dim(),
                killing.signature,
                levi.is_valid(),
                printed_table_report(&m).all_match()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("zero_model example");
}
