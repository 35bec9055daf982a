//! Exact linear algebra: linear combinations over ordered keys, dense
//! matrices, rank and kernels.

mod lincomb;
mod matrix;

pub use lincomb::{lin_combine, write_terms, LinComb};
pub use matrix::{echelon_basis, in_span, kernel_basis, rank, same_span, span_rank, Matrix};
