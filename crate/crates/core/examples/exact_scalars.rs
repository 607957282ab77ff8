// Exact rationals, the quadratic field ℚ(√d), and symplectic linear algebra.

use rtk::linalg::{signature, Matrix, QMatrix, SympSpace};
use rtk::scalar::{q, QuadExt, Rational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x: Rational = "-3/4".parse()?;
    let y = q(5, 6);
    println!("{x} + {y} = {}", &x + &y);
    println!("({x}) * ({y}) = {}", &x * &y);

    // √6 lives in ℚ(√6); products stay exact.
    let r = QuadExt::sqrt_of(&q(6, 1))?;
    println!("sqrt(6) = {r}, sqrt(6)^2 = {}", &r * &r);
    let half = QuadExt::sqrt_of(&q(1, 6))?;
    println!("sqrt(1/6) = {half}, sqrt(6) * sqrt(1/6) = {}", &r * &half);

    // Signature of diag(1, −√2) over ℚ(√2).
    let m: Matrix<QuadExt> = Matrix::diagonal(&[
        QuadExt::from_rational(q(1, 1)),
        -QuadExt::sqrt_of(&q(2, 1))?,
    ]);
    println!("signature of diag(1, -sqrt 2) = {:?}", signature(&m));

    let space = SympSpace::standard(2)?;
    println!("omega =\n{:?}", space.omega());
    let sp = space.sp_basis();
    println!("dim sp(4) = {}", sp.len());
    let e = |i: usize| rtk::linalg::unit_vector::<Rational>(4, i);
    let lag = space.subspace_ops(&[e(0), e(1)])?;
    println!("span(e0, e1) lagrangian: {}", lag.is_lagrangian);
    let a = space.omega_inv().mul(&QMatrix::identity(4));
    println!(
        "Omega^-1 is infinitesimally symplectic: {}",
        space.is_inf_symplectic(&a)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact_scalars example");
}
