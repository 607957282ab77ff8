//! Finite-dimensional Lie algebras over ℚ given by structure constants.
//!
//! Elements are coordinate vectors in a fixed basis. Subspaces are passed as
//! lists of coordinate vectors and compared through [`LinearSpan`].

use crate::error::{Error, Result};
use crate::linalg::{signature, unit_vector, vec_axpy, vec_is_zero, LinearSpan, QMatrix};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    // brackets[i * dim + j] = coordinates of [b_i, b_j]
    brackets: Vec<Vec<Rational>>,
}

impl LieAlgebra {
    /// Builds the algebra from `[b_i, b_j]` for `i < j`. The remaining
    /// entries follow from antisymmetry.
    pub fn from_brackets(
        dim: usize,
        mut bracket: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Self {
        let mut brackets = vec![vec![Rational::zero(); dim]; dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = bracket(i, j);
                assert_eq!(v.len(), dim, "bracket coordinates have the wrong length");
                brackets[j * dim + i] = v.iter().map(|x| -x).collect();
                brackets[i * dim + j] = v;
            }
        }
        LieAlgebra { dim, brackets }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::from_brackets(dim, |_, _| vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.brackets[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                vec_axpy(&mut out, &(xi * yj), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// `[b_i, [b_j, b_k]] + [b_j, [b_k, b_i]] + [b_k, [b_i, b_j]]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let e = |a| unit_vector::<Rational>(self.dim, a);
        let mut out = self.bracket(&e(i), self.bracket_basis(j, k));
        for (a, b) in [(j, self.bracket_basis(k, i)), (k, self.bracket_basis(i, j))] {
            let t = self.bracket(&e(a), b);
            vec_axpy(&mut out, &Rational::one(), &t);
        }
        out
    }

    /// Basis triples `i < j < k` violating Jacobi. Antisymmetry is built in,
    /// so these cover every triple.
    pub fn jacobi_failures(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    if !vec_is_zero(&self.jacobiator(i, j, k)) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn span(&self, vectors: &[Vec<Rational>]) -> LinearSpan<Rational> {
        LinearSpan::from_vectors(self.dim, vectors.iter().cloned())
    }

    /// Span of `[a, b]` over `a ∈ xs`, `b ∈ ys`.
    pub fn bracket_span(&self, xs: &[Vec<Rational>], ys: &[Vec<Rational>]) -> LinearSpan<Rational> {
        let mut span = LinearSpan::new(self.dim);
        for x in xs {
            for y in ys {
                span.insert(self.bracket(x, y));
            }
        }
        span
    }

    pub fn full_basis(&self) -> Vec<Vec<Rational>> {
        (0..self.dim).map(|i| unit_vector(self.dim, i)).collect()
    }

    pub fn is_subalgebra(&self, basis: &[Vec<Rational>]) -> bool {
        let span = self.span(basis);
        span.contains_span(&self.bracket_span(basis, basis))
    }

    pub fn is_ideal(&self, basis: &[Vec<Rational>]) -> bool {
        let span = self.span(basis);
        span.contains_span(&self.bracket_span(&self.full_basis(), basis))
    }

    /// Dimensions of `𝔤 ⊇ [𝔤,𝔤] ⊇ …`, stopping at 0 or at the first repeat.
    pub fn derived_series(&self) -> Vec<usize> {
        self.derived_series_of(&self.full_basis())
    }

    /// Derived series of the subalgebra spanned by `basis`.
    pub fn derived_series_of(&self, basis: &[Vec<Rational>]) -> Vec<usize> {
        let mut current = self.span(basis).into_basis();
        let mut dims = vec![current.len()];
        while !current.is_empty() {
            let next = self.bracket_span(&current, &current).into_basis();
            if next.len() == current.len() {
                break;
            }
            dims.push(next.len());
            current = next;
        }
        dims
    }

    /// Dimensions of `𝔞 ⊇ [𝔞,𝔞] ⊇ [𝔞,[𝔞,𝔞]] ⊇ …` for the subalgebra `𝔞`
    /// spanned by `basis`, stopping at 0 or at the first repeat.
    pub fn lower_central_series_of(&self, basis: &[Vec<Rational>]) -> Vec<usize> {
        let top = self.span(basis).into_basis();
        let mut current = top.clone();
        let mut dims = vec![current.len()];
        while !current.is_empty() {
            let next = self.bracket_span(&top, &current).into_basis();
            if next.len() == current.len() {
                break;
            }
            dims.push(next.len());
            current = next;
        }
        dims
    }

    /// Matrix of `ad x`: column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &[Rational]) -> QMatrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vector(self.dim, j)))
            .collect();
        QMatrix::from_fn(self.dim, self.dim, |r, c| cols[c][r].clone())
    }

    /// `B(b_i, b_j) = Tr(ad b_i ∘ ad b_j)`.
    pub fn killing_form(&self) -> QMatrix {
        let ads: Vec<QMatrix> = (0..self.dim)
            .map(|i| self.ad(&unit_vector(self.dim, i)))
            .collect();
        let mut out = QMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].mul(&ads[j]).trace();
                out[(j, i)] = t.clone();
                out[(i, j)] = t;
            }
        }
        out
    }

    /// Quotient by an ideal, in the basis of standard vectors greedily chosen
    /// to complete the ideal's basis.
    pub fn quotient(&self, ideal: &[Vec<Rational>]) -> Result<Quotient> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal("subspace is not stable under ad".into()));
        }
        let mut span = self.span(ideal);
        let k = span.dim();
        let mut complement = Vec::new();
        for i in 0..self.dim {
            if span.insert(unit_vector(self.dim, i)) {
                complement.push(i);
            }
        }
        let m = complement.len();
        let algebra = LieAlgebra::from_brackets(m, |a, b| {
            let v = self.bracket_basis(complement[a], complement[b]);
            let coords = span.coords(v).expect("full span");
            coords[k..].to_vec()
        });
        Ok(Quotient {
            algebra,
            representatives: complement,
        })
    }
}

/// `𝔤/𝔦` together with the basis indices of `𝔤` whose classes form its basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub representatives: Vec<usize>,
}

/// Rank and signature of a symmetric form, usually a Killing form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FormSummary {
    pub rank: usize,
    pub signature: (usize, usize),
}

impl FormSummary {
    pub fn of(m: &QMatrix) -> Self {
        let signature = signature(m);
        FormSummary {
            rank: signature.0 + signature.1,
            signature,
        }
    }

    pub fn is_nondegenerate(&self, dim: usize) -> bool {
        self.rank == dim
    }
}
