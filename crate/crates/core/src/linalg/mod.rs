//! Dense Hermitian linear-algebra kernels: validation, Cholesky, Jacobi
//! eigendecomposition, definite pencils, block partitions, and the Loewner
//! order.
//!
//! Everything here is a pure function on immutable values; nothing holds
//! global state.

mod block;
mod cholesky;
mod eigen;
mod hermitian;
mod matrix;
mod pencil;

pub use block::{elimination_matrix, leading_block, partition, schur_complement, BlockPartition};
pub use cholesky::{cholesky, UpperTriangular};
pub use eigen::{eigh, eigvalsh, Spectrum};
pub use hermitian::{
    classify_definiteness, loewner_leq, validate_hermitian, Definiteness, HermitianMatrix,
};
pub use matrix::Matrix;
pub use pencil::{gen_eigvals, pencil_reduction, simultaneous_diagonalizer, PencilReduction};
