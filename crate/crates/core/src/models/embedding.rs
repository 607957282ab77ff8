use serde::{Deserialize, Serialize};

use crate::lie::LieAlgebra;
use crate::linalg::{rank_of, LinearSpan, Matrix};
use crate::scalar::{Field, Rational};

/// Matrix algebra an embedding is supposed to land in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetAlgebra {
    /// Real trace-free matrices.
    TraceFree,
    /// Complex `m×m` matrices `Z = P + iQ`, stored as `[[P, −Q], [Q, P]]`,
    /// with `Z*η + ηZ = 0` and `Tr Z = 0` for `η = diag(eta)`.
    SpecialUnitary { eta: Vec<i8> },
    /// Real matrices with `Mᵀη + ηM = 0` for `η = diag(eta)`.
    Orthogonal { eta: Vec<i8> },
}

impl TargetAlgebra {
    pub fn contains<F: Field>(&self, m: &Matrix<F>) -> bool {
        match self {
            TargetAlgebra::TraceFree => m.trace().is_zero(),
            TargetAlgebra::Orthogonal { eta } => {
                let e = sign_matrix::<F>(eta);
                m.transpose().mul(&e).add(&e.mul(m)).is_zero()
            }
            TargetAlgebra::SpecialUnitary { eta } => {
                let k = eta.len();
                if m.rows() != 2 * k || m.cols() != 2 * k {
                    return false;
                }
                let p = m.submatrix(0, 0, k, k);
                let q = m.submatrix(k, 0, k, k);
                if m.submatrix(0, k, k, k) != q.neg() || m.submatrix(k, k, k, k) != p {
                    return false;
                }
                let e = sign_matrix::<F>(eta);
                // Z*η + ηZ with Z* = Pᵀ − iQᵀ
                let re = p.transpose().mul(&e).add(&e.mul(&p));
                let im = e.mul(&q).sub(&q.transpose().mul(&e));
                re.is_zero() && im.is_zero() && p.trace().is_zero() && q.trace().is_zero()
            }
        }
    }
}

fn sign_matrix<F: Field>(eta: &[i8]) -> Matrix<F> {
    let entries: Vec<F> = eta
        .iter()
        .map(|&s| F::from_rational(&Rational::from_int(s as i64)))
        .collect();
    Matrix::diagonal(&entries)
}

/// Linear map from a subalgebra of `𝔤` into matrices over `F`, given on a
/// basis of the subalgebra (coordinate vectors in `𝔤`).
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding<F: Field> {
    pub target_dim: usize,
    pub domain: Vec<Vec<Rational>>,
    pub images: Vec<Matrix<F>>,
    pub target: TargetAlgebra,
}

impl<F: Field> Embedding<F> {
    /// Image of the element with the given coordinates in `domain`.
    pub fn apply(&self, coords: &[Rational]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.target_dim, self.target_dim);
        for (c, m) in coords.iter().zip(&self.images) {
            if !c.is_zero() {
                out.add_scaled(&F::from_rational(c), m);
            }
        }
        out
    }

    pub fn image_dim(&self) -> usize {
        let flat: Vec<Vec<F>> = self.images.iter().map(|m| m.as_flat().to_vec()).collect();
        rank_of(&flat)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub pairs_checked: usize,
    pub bracket_failures: Vec<(usize, usize)>,
    /// False when some bracket of domain elements leaves the domain.
    pub domain_closed: bool,
    pub image_dim: usize,
    pub injective: bool,
    pub membership_failures: Vec<usize>,
}

impl EmbeddingReport {
    pub fn is_valid(&self) -> bool {
        self.bracket_failures.is_empty()
            && self.domain_closed
            && self.injective
            && self.membership_failures.is_empty()
    }
}

/// Checks `E([x, y]) = [E(x), E(y)]` on every pair of domain basis elements,
/// injectivity by exact rank, and membership in the target algebra.
pub fn verify_embedding<F: Field>(e: &Embedding<F>, g: &LieAlgebra) -> EmbeddingReport {
    let span = LinearSpan::from_vectors(g.dim(), e.domain.iter().cloned());
    let k = e.domain.len();
    let mut bracket_failures = Vec::new();
    let mut domain_closed = true;
    for i in 0..k {
        for j in i + 1..k {
            let br = g.bracket(&e.domain[i], &e.domain[j]);
            let Some(coords) = span.coords(&br) else {
                domain_closed = false;
                bracket_failures.push((i, j));
                continue;
            };
            if e.apply(&coords) != e.images[i].commutator(&e.images[j]) {
                bracket_failures.push((i, j));
            }
        }
    }
    let image_dim = e.image_dim();
    let membership_failures = (0..k)
        .filter(|&i| !e.target.contains(&e.images[i]))
        .collect();
    EmbeddingReport {
        pairs_checked: k * k.saturating_sub(1) / 2,
        bracket_failures,
        domain_closed,
        image_dim,
        injective: image_dim == k && span.dim() == k,
        membership_failures,
    }
}

/// `Z = P + iQ ↦ [[P, −Q], [Q, P]]`.
pub fn realify<F: Field>(p: &Matrix<F>, q: &Matrix<F>) -> Matrix<F> {
    let k = p.rows();
    let mut out = Matrix::zeros(2 * k, 2 * k);
    out.set_block(0, 0, p);
    out.set_block(0, k, &q.neg());
    out.set_block(k, 0, q);
    out.set_block(k, k, p);
    out
}
