use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{OrderedField, Rational};

use super::matrix::{Matrix, QMatrix};
use super::span::LinearSpan;

/// Endomorphisms of a symplectic space are plain square matrices acting on
/// column vectors.
pub type Endo = QMatrix;

/// Even-dimensional vector space with a nondegenerate antisymmetric form,
/// `Ω(x, y) = xᵀ · omega · y`.
#[derive(Clone, Debug, PartialEq)]
pub struct SympSpace {
    omega: QMatrix,
    omega_inv: QMatrix,
}

impl SympSpace {
    pub fn new(omega: QMatrix) -> Result<Self> {
        if !omega.is_square() {
            return Err(Error::NotSquare(omega.rows(), omega.cols()));
        }
        if omega.rows() == 0 || !omega.rows().is_multiple_of(2) {
            return Err(Error::InvalidForm(format!(
                "dimension {} is not a positive even number",
                omega.rows()
            )));
        }
        if !omega.is_antisymmetric() {
            return Err(Error::InvalidForm("form is not antisymmetric".into()));
        }
        let omega_inv = omega
            .inverse()
            .map_err(|_| Error::InvalidForm("form is degenerate".into()))?;
        Ok(SympSpace { omega, omega_inv })
    }

    /// ℝ²ⁿ with `Ω = [[0, −I], [I, 0]]`, i.e. `V ⊕ V*` with
    /// `Ω(x + ξ, x' + ξ') = −⟨x, ξ'⟩ + ⟨x', ξ⟩`.
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams(
                "standard symplectic space needs n >= 1".into(),
            ));
        }
        SympSpace::new(standard_omega(n))
    }

    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    /// Half the dimension.
    pub fn n(&self) -> usize {
        self.dim() / 2
    }

    pub fn omega(&self) -> &QMatrix {
        &self.omega
    }

    pub fn omega_inv(&self) -> &QMatrix {
        &self.omega_inv
    }

    /// `κ = 1/(2n + 2)`, the normalising constant of Ricci-type curvature.
    pub fn kappa(&self) -> Rational {
        Rational::new(1, 2 * self.n() as i64 + 2)
    }

    pub fn form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.omega.bilinear(x, y)
    }

    /// The covector `Ω(x, ·)` as a row.
    pub fn lower(&self, x: &[Rational]) -> Vec<Rational> {
        // Ω(x, z) = xᵀ Ω z, so the row is Ωᵀ x = −Ω x.
        self.omega.mul_vec(x).into_iter().map(|c| -c).collect()
    }

    fn check_dim(&self, m: &QMatrix) -> Result<()> {
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: if m.rows() != self.dim() {
                    m.rows()
                } else {
                    m.cols()
                },
            });
        }
        Ok(())
    }

    /// `Aᵀ Ω + Ω A = 0`.
    pub fn is_inf_symplectic(&self, a: &Endo) -> Result<bool> {
        self.check_dim(a)?;
        Ok(self.omega.mul(a).is_symmetric())
    }

    /// `Ω(x, By) = Ω(Bx, y)`, i.e. `Ω B` antisymmetric.
    pub fn is_antisymplectic_symmetric(&self, b: &Endo) -> Result<bool> {
        self.check_dim(b)?;
        Ok(self.omega.mul(b).is_antisymmetric())
    }

    /// The bilinear form `(x, y) ↦ Ω(x, A y)`.
    pub fn form_of(&self, a: &Endo) -> QMatrix {
        self.omega.mul(a)
    }

    /// Basis of 𝔰𝔭(Ω) = `{Ω⁻¹ S : S symmetric}`; dimension n(2n+1).
    pub fn sp_basis(&self) -> Vec<Endo> {
        let d = self.dim();
        let mut out = Vec::with_capacity(d * (d + 1) / 2);
        for i in 0..d {
            for j in i..d {
                let mut s = QMatrix::unit(d, d, i, j);
                s[(j, i)] = Rational::one();
                out.push(self.omega_inv.mul(&s));
            }
        }
        out
    }

    /// Basis of the antisymplectic-symmetric endomorphisms
    /// `{Ω⁻¹ S : S antisymmetric}`; dimension n(2n−1).
    pub fn antisymplectic_basis(&self) -> Vec<Endo> {
        let d = self.dim();
        let mut out = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..d {
            for j in i + 1..d {
                let mut s = QMatrix::unit(d, d, i, j);
                s[(j, i)] = -Rational::one();
                out.push(self.omega_inv.mul(&s));
            }
        }
        out
    }

    /// `Y ⊗ X̲ − X ⊗ Y̲`, the generators of the antisymplectic-symmetric maps.
    pub fn wedge_endo(&self, x: &[Rational], y: &[Rational]) -> Endo {
        QMatrix::outer(y, &self.lower(x)).sub(&QMatrix::outer(x, &self.lower(y)))
    }

    /// Direct sum with block-diagonal form.
    pub fn direct_sum(&self, other: &SympSpace) -> SympSpace {
        SympSpace::new(QMatrix::block_diag(&self.omega, &other.omega))
            .expect("direct sum of symplectic forms is symplectic")
    }

    /// Exact description of a subspace relative to Ω.
    pub fn subspace_ops(&self, vectors: &[Vec<Rational>]) -> Result<SubspaceReport> {
        for v in vectors {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        let span = LinearSpan::from_vectors(self.dim(), vectors.iter().cloned());
        let basis = span.into_basis();
        let orthogonal = if basis.is_empty() {
            (0..self.dim())
                .map(|i| crate::linalg::unit_vector(self.dim(), i))
                .collect()
        } else {
            let rows: Vec<Vec<Rational>> = basis.iter().map(|u| self.lower(u)).collect();
            QMatrix::from_rows(rows)?.nullspace()
        };
        let is_isotropic = basis
            .iter()
            .enumerate()
            .all(|(i, u)| basis[i + 1..].iter().all(|w| self.form(u, w).is_zero()));
        let is_lagrangian = is_isotropic && basis.len() == self.n();
        Ok(SubspaceReport {
            dim: basis.len(),
            symplectic_orthogonal: orthogonal,
            is_isotropic,
            is_lagrangian,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceReport {
    pub dim: usize,
    /// Basis of `U^Ω = {x : Ω(u, x) = 0 for all u ∈ U}`.
    pub symplectic_orthogonal: Vec<Vec<Rational>>,
    pub is_isotropic: bool,
    pub is_lagrangian: bool,
}

pub fn standard_omega(n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = -Rational::one();
        m[(n + i, i)] = Rational::one();
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    None,
}

/// Bilinear form with its declared symmetry type.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    matrix: QMatrix,
    symmetry: Symmetry,
}

impl BilinearForm {
    pub fn new(matrix: QMatrix, symmetry: Symmetry) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare(matrix.rows(), matrix.cols()));
        }
        match symmetry {
            Symmetry::Symmetric if !matrix.is_symmetric() => return Err(Error::NotSymmetric),
            Symmetry::Antisymmetric if !matrix.is_antisymmetric() => {
                return Err(Error::InvalidForm("form is not antisymmetric".into()))
            }
            _ => {}
        }
        Ok(BilinearForm { matrix, symmetry })
    }

    pub fn symmetric(matrix: QMatrix) -> Result<Self> {
        Self::new(matrix, Symmetry::Symmetric)
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.matrix.bilinear(x, y)
    }

    pub fn signature(&self) -> Result<(usize, usize)> {
        if self.symmetry != Symmetry::Symmetric {
            return Err(Error::NotSymmetric);
        }
        Ok(signature(&self.matrix))
    }
}

/// `(p, q)`: numbers of positive and negative squares of a symmetric matrix,
/// by congruence diagonalisation.
///
/// Pivots on a nonzero diagonal entry when one exists; otherwise a nonzero
/// off-diagonal entry `m_ij` is moved onto the diagonal by `e_i ← e_i + e_j`
/// (the hyperbolic-plane case, where `m_ii = m_jj = 0`).
pub fn signature<F: OrderedField>(m: &Matrix<F>) -> (usize, usize) {
    assert!(m.is_square(), "signature needs a square matrix");
    let mut work = m.clone();
    let mut active: Vec<usize> = (0..m.rows()).collect();
    let (mut p, mut q) = (0, 0);
    while !active.is_empty() {
        let diag = active.iter().copied().find(|&i| !work[(i, i)].is_zero());
        let pivot = match diag {
            Some(i) => i,
            None => {
                let off = active.iter().enumerate().find_map(|(a, &i)| {
                    active[a + 1..]
                        .iter()
                        .copied()
                        .find(|&j| !work[(i, j)].is_zero())
                        .map(|j| (i, j))
                });
                let Some((i, j)) = off else { break };
                // congruence by e_i ← e_i + e_j: add row j to row i, then column j to column i
                for &k in &active {
                    let t = work[(j, k)].clone();
                    work[(i, k)] += t;
                }
                for &k in &active {
                    let t = work[(k, j)].clone();
                    work[(k, i)] += t;
                }
                i
            }
        };
        let d = work[(pivot, pivot)].clone();
        match d.signum() {
            1 => p += 1,
            -1 => q += 1,
            _ => unreachable!("pivot is nonzero"),
        }
        let inv = d.inv().expect("nonzero pivot");
        active.retain(|&k| k != pivot);
        for &i in &active {
            let f = work[(i, pivot)].mul_ref(&inv);
            if f.is_zero() {
                continue;
            }
            for &j in &active {
                let t = work[(pivot, j)].mul_ref(&f);
                work[(i, j)] -= t;
            }
        }
    }
    (p, q)
}
