//! `λ > 0`: `𝔭 = V ⊕ V*`, `𝔨 = 𝔤𝔩(V)`, `𝔤 ≅ 𝔰𝔩(n+1, ℝ)`.

use crate::curvature::ricci_type_curvature;
use crate::error::{Error, Result};
use crate::linalg::{Endo, QMatrix, SympSpace};
use crate::scalar::Rational;
use crate::triple::SymmetricTriple;

use super::embedding::{Embedding, TargetAlgebra};

#[derive(Clone, Debug, PartialEq)]
pub struct PositiveModel {
    pub n: usize,
    pub s: Rational,
    /// `a = (n+1)s²`, so `s² = 2κa`.
    pub a: Rational,
    pub ricci_endo: Endo,
    pub triple: SymmetricTriple,
    /// `j : 𝔤 → 𝔰𝔩(V ⊕ ℝ)`
    pub embedding: Embedding<Rational>,
}

/// `diag(C, −Cᵀ)` for `C = E_ij`.
fn gl_element(n: usize, i: usize, j: usize) -> Endo {
    let mut m = QMatrix::zeros(2 * n, 2 * n);
    m[(i, j)] = Rational::one();
    m[(n + j, n + i)] = -Rational::one();
    m
}

pub fn build_positive_model(n: usize, s: &Rational) -> Result<PositiveModel> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("n = {n}, expected n >= 2")));
    }
    if s.is_zero() {
        return Err(Error::InvalidParams("s must be nonzero".into()));
    }
    let space = SympSpace::standard(n)?;
    let kappa = space.kappa();
    let a = Rational::from_int(n as i64 + 1) * s * s;
    let mut diag = vec![a.clone(); n];
    diag.extend(vec![-a.clone(); n]);
    let ricci_endo = QMatrix::diagonal(&diag);

    let mut k_basis = Vec::with_capacity(n * n);
    let mut k_images = Vec::with_capacity(n * n);
    let two_kappa = Rational::from_int(2) * &kappa;
    for i in 0..n {
        for j in 0..n {
            k_basis.push(gl_element(n, i, j));
            // j(C) = [[C − 2κ Tr C·I, 0], [0, −2κ Tr C]]
            let mut m = QMatrix::zeros(n + 1, n + 1);
            m[(i, j)] = Rational::one();
            if i == j {
                for t in 0..=n {
                    m[(t, t)] -= &two_kappa;
                }
            }
            k_images.push(m);
        }
    }
    let r = ricci_type_curvature(&space, &ricci_endo)?;
    let triple = SymmetricTriple::with_k_basis(&r, k_basis)?;

    let mut images = k_images;
    for i in 0..n {
        images.push(QMatrix::from_fn(n + 1, n + 1, |r, c| {
            if r == i && c == n {
                s.clone()
            } else {
                Rational::zero()
            }
        }));
    }
    for i in 0..n {
        images.push(QMatrix::from_fn(n + 1, n + 1, |r, c| {
            if r == n && c == i {
                s.clone()
            } else {
                Rational::zero()
            }
        }));
    }
    let dim = triple.dim();
    let embedding = Embedding {
        target_dim: n + 1,
        domain: (0..dim)
            .map(|i| crate::linalg::unit_vector(dim, i))
            .collect(),
        images,
        target: TargetAlgebra::TraceFree,
    };
    Ok(PositiveModel {
        n,
        s: s.clone(),
        a,
        ricci_endo,
        triple,
        embedding,
    })
}

/// `σ(M) = D M D` with `D = diag(I, −1)`: fixes the `𝔤𝔩(V)` block and
/// negates the `V`, `V*` entries.
pub fn positive_involution(m: &QMatrix) -> QMatrix {
    let n = m.rows() - 1;
    QMatrix::from_fn(n + 1, n + 1, |r, c| {
        if (r == n) != (c == n) {
            -m[(r, c)].clone()
        } else {
            m[(r, c)].clone()
        }
    })
}

/// Printed closed-form curvature for `s = 1`, on `(X, ξ)` pairs:
/// `R((X,ξ),(X',ξ'))(X'',ξ'') = (X''(⟨X',ξ⟩ − ⟨X,ξ'⟩) − X⟨X'',ξ'⟩ + X'⟨X'',ξ⟩,
/// ξ'⟨X,ξ''⟩ − ξ⟨X',ξ''⟩ − ξ''(⟨X',ξ⟩ − ⟨X,ξ'⟩))`.
pub fn positive_closed_form(
    n: usize,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Vec<Rational> {
    let pair = |v: &[Rational], w: &[Rational]| crate::linalg::dot(&v[..n], &w[n..]);
    let (x1, xi1) = (&x[..n], &x[n..]);
    let (x2, xi2) = (&y[..n], &y[n..]);
    let (x3, xi3) = (&z[..n], &z[n..]);
    let c = pair(y, x) - pair(x, y);
    let mut out = Vec::with_capacity(2 * n);
    for t in 0..n {
        out.push(&x3[t] * &c - &x1[t] * pair(z, y) + &x2[t] * pair(z, x));
    }
    for t in 0..n {
        out.push(&xi2[t] * pair(x, z) - &xi1[t] * pair(y, z) - &xi3[t] * &c);
    }
    out
}
