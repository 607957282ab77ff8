//! Exact matrices, spans, and symplectic-algebra predicates.

mod matrix;
mod span;
mod symplectic;

pub use matrix::{
    dot, rank_of, unit_vector, vec_add, vec_axpy, vec_is_zero, vec_scale, vec_sub, Matrix, QMatrix,
};
pub use span::LinearSpan;
pub use symplectic::{
    signature, standard_omega, BilinearForm, Endo, SubspaceReport, Symmetry, SympSpace,
};

/// Flattens matrices row-major so they can be fed to [`LinearSpan`].
pub fn flatten<F: crate::scalar::Field>(ms: &[Matrix<F>]) -> Vec<Vec<F>> {
    ms.iter().map(|m| m.as_flat().to_vec()).collect()
}
