//! Exact computation with symplectic curvature tensors of Ricci type and the
//! symmetric symplectic triples they generate.

pub mod classify;
pub mod cli;
pub mod curvature;
pub mod error;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod models;
pub mod sampling;
pub mod scalar;
pub mod selftest;
pub mod triple;

pub use error::{Error, Result};
