// Build the Ricci-type tensor `E(A)`, recover `A` from its Ricci form, and
// split an arbitrary curvature tensor into `E(A) + W`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rtk::curvature::{first_bianchi_defect, ricci, ricci_type_curvature, weyl_part};
use rtk::linalg::SympSpace;
use rtk::sampling::{curvature_space_basis, random_admissible, random_curvature};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let space = SympSpace::standard(2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    let a = random_admissible(&space, &mut rng, 2);
    let r = ricci_type_curvature(&space, &a)?;
    println!("A =\n{a:?}");
    println!("Bianchi holds: {}", first_bianchi_defect(&r).is_zero());
    println!(
        "ricci(E(A)) == Omega A: {}",
        ricci(&r).matrix() == &space.form_of(&a)
    );
    let dec = weyl_part(&r)?;
    println!(
        "recovered A: {}, W = 0: {}",
        dec.ricci_data.a == a,
        dec.w.is_zero()
    );

    let basis = curvature_space_basis(&space);
    println!(
        "curvature tensors on R^4 form a space of dimension {}",
        basis.len()
    );
    let generic = random_curvature(&basis, &mut rng);
    let dec = weyl_part(&generic)?;
    println!(
        "generic tensor: Ricci type {}, ricci(W) = 0: {}",
        dec.is_ricci_type,
        ricci(&dec.w).matrix().is_zero()
    );
    println!("lambda of its A: {:?}", dec.ricci_data.lambda);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ricci_decomposition example");
}
