// The product of two Ricci-type tensors has `W = 0` only when both factors
// are flat; the mixed block is `−ω(X₁, Y₁)A₂Z₂/(n+1)`.

use rtk::classify::product_flatness_check;
use rtk::linalg::{QMatrix, SympSpace};
use rtk::scalar::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = SympSpace::standard(1)?;
    let int = |rows: [[i64; 2]; 2]| {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
    };
    let zero = QMatrix::zeros(2, 2);
    let a = int([[1, 0], [0, -1]])?;
    let b = int([[0, 1], [-1, 0]])?;
    for (name, a1, a2) in [
        ("0 x 0", &zero, &zero),
        ("A x 0", &a, &zero),
        ("0 x B", &zero, &b),
        ("A x B", &a, &b),
    ] {
        let report = product_flatness_check(&s, a1, &s, a2)?;
        println!(
            "{name}: W = 0 {}, statement holds {}, cross block matches {}, {} nonzero cross entries",
            report.w_zero,
            report.theorem_holds,
            report.cross_block_matches,
            report.cross_block.len()
        );
    }
    let report = product_flatness_check(&s, &zero, &s, &b)?;
    for e in &report.cross_block {
        println!("W(e{}, e{}) e{} = {:?}", e.i, e.j, e.k, e.value);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("product_flatness example");
}
