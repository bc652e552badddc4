//! Dense complex linear algebra sized for the 2n x 2n phase-space matrices
//! of this library: eigendecompositions, PD square roots, determinants,
//! solves, and the spectral norm.

pub mod hermitian;
pub mod lu;
pub mod matrix;
pub mod norms;
pub mod schur;

pub use hermitian::{eig_hermitian, hermitian_inv_sqrt_pd, hermitian_sqrt_pd, min_eigenvalue, HermitianEig};
pub use lu::{condition_estimate, det, inverse, solve, Lu};
pub use matrix::{dot_bilinear, dot_hermitian, vec_add, vec_conj, vec_norm, vec_scale, vec_sub, ComplexMatrix, C64};
pub use norms::operator_norm;
pub use schur::{eig_general, EigenPair, GeneralEig};
