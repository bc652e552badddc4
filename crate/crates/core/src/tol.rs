//! Pinned numerical tolerances.
//!
//! Every tolerance used by a contract check or a cross-check is named here
//! rather than spelled inline, so the acceptance thresholds live in exactly
//! one place.

/// Relative residual allowed for a general eigenpair: `|Mv - lambda v| <= EIG_RESIDUAL * |M|`.
pub const EIG_RESIDUAL: f64 = 1e-10;

/// Diagonalization residual for the Hermitian path, relative to `|H|`.
pub const HERM_DIAG_RESIDUAL: f64 = 1e-12;

/// Relative asymmetry tolerated before a matrix is rejected as non-Hermitian.
pub const HERM_TOL: f64 = 1e-10;

/// Squaring residual for the principal PD square root, relative to `|H|`.
pub const SQRT_RESIDUAL: f64 = 1e-11;

/// Inverse residual: `|M*inv(M) - I| <= INV_RESIDUAL`.
pub const INV_RESIDUAL: f64 = 1e-10;

/// Condition-number ceiling for inverse/solve.
pub const COND_LIMIT: f64 = 1e12;

/// Relative accuracy target for the largest singular value.
pub const OPNORM_REL: f64 = 1e-10;

/// Scale factor for the ordering classification band between strict,
/// boundary and incomparable weight pairs.
pub const PD_TOL_FACTOR: f64 = 1e-9;

/// Canonical-map defect ceiling (symplectic-form preservation).
pub const CANONICAL_DEFECT: f64 = 1e-9;

/// Entrywise agreement required between the two construction routes of the
/// shift-adjoint matrix.
pub const ADJOINT_ROUTES: f64 = 1e-11;

/// Residual for the antilinear involution identity of the shift-adjoint map.
pub const ADJOINT_INVOLUTION: f64 = 1e-10;

/// Imaginary residual allowed on eigenvalues of the ordered-pair spectrum.
pub const SPECTRUM_IMAG: f64 = 1e-8;

/// Reciprocal-pairing tolerance for the ordered-pair spectrum.
pub const PAIRING_TOL: f64 = 1e-7;

/// Symmetry tolerance for the witness matrix recovered from the stable graph.
pub const WITNESS_SYMMETRY: f64 = 1e-8;

/// Column condition number above which a witness is flagged low-confidence.
pub const WITNESS_COND_LIMIT: f64 = 1e8;

/// Agreement required between the spectral norm formula and the Gaussian
/// integral ratio at the witness.
pub const ORACLE_AGREEMENT: f64 = 1e-8;

/// Relative integrability margin that classifies a packet as inside a space.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

/// Symmetry tolerance on packet matrices.
pub const PACKET_SYMMETRY: f64 = 1e-10;

/// Slack allowed when checking that the regularized norm ladder is monotone.
pub const EPS_LADDER_SLACK: f64 = 1e-9;

/// Agreement required between the end of the regularization ladder and the
/// direct norm formula.
pub const EPS_LADDER_AGREEMENT: f64 = 1e-5;

/// Relative error target for the quadrature validation of closed forms.
pub const QUADRATURE_REL: f64 = 1e-6;

/// Default quadrature order per axis.
pub const QUADRATURE_ORDER: usize = 80;

/// Decay margin required before the quadrature check is meaningful.
pub const QUADRATURE_MARGIN: f64 = 1e-3;

/// Dimension cap for the dense eigensolvers (phase-space side is `2n`).
pub const MAX_EIG_DIM: usize = 32;
