//! Seeded random samples of admissible endomorphisms and curvature tensors.

use rand::Rng;

use crate::curvature::{scalar_square, CurvatureTensor};
use crate::linalg::{Endo, QMatrix, SympSpace};
use crate::scalar::Rational;

fn small<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    Rational::from_int(rng.gen_range(-bound..=bound))
}

fn random_symmetric<R: Rng>(rng: &mut R, d: usize, bound: i64) -> QMatrix {
    let mut s = QMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let x = small(rng, bound);
            s[(j, i)] = x.clone();
            s[(i, j)] = x;
        }
    }
    s
}

/// `A = Ω⁻¹S` for a random symmetric `S` with entries in `[−bound, bound]`.
pub fn random_admissible<R: Rng>(space: &SympSpace, rng: &mut R, bound: i64) -> Endo {
    space
        .omega_inv()
        .mul(&random_symmetric(rng, space.dim(), bound))
}

/// Admissible `A` whose square is not a multiple of the identity.
pub fn random_non_scalar<R: Rng>(space: &SympSpace, rng: &mut R) -> Endo {
    loop {
        let a = random_admissible(space, rng, 3);
        if scalar_square(&a).is_none() {
            return a;
        }
    }
}

/// Symplectic transvection `x ↦ x + c Ω(v, x) v` and its inverse.
pub fn transvection(space: &SympSpace, v: &[Rational], c: &Rational) -> (QMatrix, QMatrix) {
    let row = space.lower(v);
    let t = QMatrix::outer(v, &row);
    let id = QMatrix::identity(space.dim());
    (id.add(&t.scale(c)), id.sub(&t.scale(c)))
}

/// Admissible `A` on the standard space with `A² = λ·Id`: one of the
/// normal forms `a·diag(I, −I)`, a complex structure with random Hermitian
/// signs times `b`, or `[[0, D], [0, 0]]` with `D` symmetric, conjugated by
/// a few random transvections.
pub fn random_scalar_square<R: Rng>(n: usize, rng: &mut R) -> Endo {
    let space = SympSpace::standard(n).expect("n >= 1");
    let d = 2 * n;
    let mut a = match rng.gen_range(0..3) {
        0 => {
            let c = Rational::from_int(rng.gen_range(1..=4));
            let mut diag = vec![c.clone(); n];
            diag.extend(vec![-c; n]);
            QMatrix::diagonal(&diag)
        }
        1 => {
            // Ω(·, J·) = diag(E, E) for J = [[0, −E], [E, 0]]
            let b = Rational::from_int(rng.gen_range(1..=4))
                * Rational::from_int(if rng.gen() { 1 } else { -1 });
            let mut j = QMatrix::zeros(d, d);
            for i in 0..n {
                let e = Rational::from_int(if rng.gen() { 1 } else { -1 });
                j[(i, n + i)] = -e.clone();
                j[(n + i, i)] = e;
            }
            j.scale(&b)
        }
        _ => {
            let mut a = QMatrix::zeros(d, d);
            a.set_block(0, n, &random_symmetric(rng, n, 2));
            a
        }
    };
    for _ in 0..rng.gen_range(1..=3) {
        let v: Vec<Rational> = (0..d).map(|_| small(rng, 1)).collect();
        let c = small(rng, 2);
        let (t, t_inv) = transvection(&space, &v, &c);
        a = t.mul(&a).mul(&t_inv);
    }
    a
}

/// Basis of all tensors with `R(X,Y) = −R(Y,X) ∈ 𝔰𝔭(Ω)` satisfying the
/// first Bianchi identity.
pub fn curvature_space_basis(space: &SympSpace) -> Vec<CurvatureTensor> {
    let d = space.dim();
    let sp = space.sp_basis();
    let m = sp.len();
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .collect();
    let pair_index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("pair");
    let unknowns = pairs.len() * m;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                // R(e_i,e_j)e_k + R(e_j,e_k)e_i − R(e_i,e_k)e_j = 0
                for l in 0..d {
                    let mut row = vec![Rational::zero(); unknowns];
                    for (sign, (a, b), c) in [(1, (i, j), k), (1, (j, k), i), (-1, (i, k), j)] {
                        let base = pair_index(a, b) * m;
                        for (s, basis) in sp.iter().enumerate() {
                            let x = &basis[(l, c)];
                            if !x.is_zero() {
                                row[base + s] += Rational::from_int(sign) * x;
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        QMatrix::zeros(1, unknowns)
    } else {
        QMatrix::from_rows(rows).expect("rectangular")
    };
    system
        .nullspace()
        .into_iter()
        .map(|coeffs| {
            CurvatureTensor::from_pairs(space, |i, j| {
                let base = pair_index(i, j) * m;
                let mut out = QMatrix::zeros(d, d);
                for (s, basis) in sp.iter().enumerate() {
                    if !coeffs[base + s].is_zero() {
                        out.add_scaled(&coeffs[base + s], basis);
                    }
                }
                out
            })
            .expect("combinations of sp elements are symplectic")
        })
        .collect()
}

/// Random integer combination of a curvature basis.
pub fn random_curvature<R: Rng>(basis: &[CurvatureTensor], rng: &mut R) -> CurvatureTensor {
    let space = basis[0].space().clone();
    let d = space.dim();
    let coeffs: Vec<Rational> = basis.iter().map(|_| small(rng, 2)).collect();
    CurvatureTensor::from_pairs(&space, |i, j| {
        let mut out = QMatrix::zeros(d, d);
        for (c, t) in coeffs.iter().zip(basis) {
            if !c.is_zero() {
                out.add_scaled(c, t.value(i, j));
            }
        }
        out
    })
    .expect("combinations of curvature tensors are curvature tensors")
}
