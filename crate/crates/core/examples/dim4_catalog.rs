// Every case in dimension 4, with the single compact one flagged.

use rtk::classify::dim4_catalog;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let entries = dim4_catalog()?;
    for e in &entries {
        let c = &e.classification;
        println!(
            "{:<45} lambda {:>4}  dim g {:>2}  {:?}{}",
            c.model_name,
            c.lambda.to_string(),
            c.dim_g,
            c.structure,
            if c.compact { "  compact" } else { "" }
        );
    }
    println!(
        "{} entries, all valid: {}",
        entries.len(),
        entries.iter().all(|e| e.validation.is_valid())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("dim4_catalog example");
}
