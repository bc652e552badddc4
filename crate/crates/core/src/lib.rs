//! Operator norms of embeddings between Gaussian-weighted spaces of entire
//! functions, together with the symplectic and metaplectic calculus that
//! produces them and an independent Gaussian-integration oracle that
//! cross-validates every result.
//!
//! The main entry points are [`embedding::embedding_norm`], which classifies
//! an ordered pair of quadratic weights and evaluates the norm of the
//! inclusion between the two weighted spaces, [`embedding::witness_gaussian`]
//! for the extremal Gaussian in the strictly ordered case, and
//! [`oracle::ratio`] / [`oracle::random_search_norm`] for verification by
//! closed-form Gaussian integrals.

pub mod error;
pub mod linalg;
pub mod tol;

pub mod weights;

pub mod symplectic;

mod gauss;

pub mod metaplectic;

pub mod embedding;

pub mod oracle;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, C64};
