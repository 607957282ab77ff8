use crate::scalar::Field;

use super::matrix::{vec_axpy, vec_is_zero, vec_scale};

/// Incrementally maintained span of vectors with an exact coordinate solver.
///
/// The basis is the greedily selected independent subset of the inserted
/// vectors, in insertion order. Coordinates are expressed in that basis.
#[derive(Clone, Debug)]
pub struct LinearSpan<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    // Fully reduced echelon rows: rows[p][pivots[p]] = 1 and rows[p] vanishes
    // on every other pivot column. transforms[p] expresses rows[p] in `basis`.
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    transforms: Vec<Vec<F>>,
}

impl<F: Field> LinearSpan<F> {
    pub fn new(ambient: usize) -> Self {
        LinearSpan {
            ambient,
            basis: Vec::new(),
            rows: Vec::new(),
            pivots: Vec::new(),
            transforms: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<F>>>(ambient: usize, vectors: I) -> Self {
        let mut span = Self::new(ambient);
        for v in vectors {
            span.insert(v);
        }
        span
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<F>> {
        self.basis
    }

    /// Reduce `v` against the echelon rows; returns the residual and the
    /// combination of basis vectors that was subtracted.
    fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        let mut residual = v.to_vec();
        let mut comb = vec![F::zero(); self.basis.len()];
        for ((row, &p), t) in self.rows.iter().zip(&self.pivots).zip(&self.transforms) {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            vec_axpy(&mut residual, &-c.clone(), row);
            vec_axpy(&mut comb, &c, t);
        }
        (residual, comb)
    }

    /// Adds `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match span");
        let (residual, comb) = self.reduce(&v);
        let Some(piv) = residual.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let k = self.basis.len();
        self.basis.push(v);
        for t in &mut self.transforms {
            t.push(F::zero());
        }
        let inv = residual[piv].inv().expect("nonzero pivot");
        // new row = (v − Σ comb_i b_i) / residual[piv]
        let mut t_new: Vec<F> = comb.into_iter().map(|c| -c).collect();
        t_new.push(F::one());
        let t_new = vec_scale(&t_new, &inv);
        let row_new = vec_scale(&residual, &inv);
        for (row, t) in self.rows.iter_mut().zip(&mut self.transforms) {
            let c = row[piv].clone();
            if c.is_zero() {
                continue;
            }
            vec_axpy(row, &-c.clone(), &row_new);
            vec_axpy(t, &-c, &t_new);
        }
        self.rows.push(row_new);
        self.pivots.push(piv);
        self.transforms.push(t_new);
        debug_assert_eq!(self.transforms[k].len(), k + 1);
        true
    }

    pub fn contains(&self, v: &[F]) -> bool {
        vec_is_zero(&self.reduce(v).0)
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let (residual, comb) = self.reduce(v);
        vec_is_zero(&residual).then_some(comb)
    }

    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            vec_axpy(&mut out, c, b);
        }
        out
    }

    pub fn contains_span(&self, other: &LinearSpan<F>) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn same_span(&self, other: &LinearSpan<F>) -> bool {
        self.dim() == other.dim() && self.contains_span(other)
    }
}
