//! Exact linear algebra over ℚ and 𝔽_p, plus integer Smith normal form.

mod matrix;
mod scalar;
mod smith;
mod subspace;

pub use matrix::{
    axpy, is_zero_vector, scale, sub_vectors, unit_vector, zero_vector, Matrix, Vector,
};
pub use scalar::{Field, Scalar};
pub(crate) use smith::smith_left;
pub use smith::{smith_normal_form, IntMatrix, SmithForm};
pub use subspace::{Subspace, SubspaceBuilder};
