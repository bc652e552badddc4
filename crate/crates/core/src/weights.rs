//! Quadratic weights on complex space: the positive-definite "Levi" block,
//! the symmetric pluriharmonic block, evaluation, ordering, reduction to the
//! standard weight, and the weight transformations induced by multiplication
//! by Gaussians, linear changes of variables, and phase-space shifts.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{
    dot_bilinear, eig_hermitian, hermitian_inv_sqrt_pd, min_eigenvalue, operator_norm,
    ComplexMatrix,
};
use crate::tol;

/// A real-valued quadratic weight
/// `Phi(x) = (1/2) L x . conj(x) + (1/2) Re(P x . x)`
/// with `L` Hermitian positive definite and `P` symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticWeight {
    n: usize,
    levi: ComplexMatrix,
    pluri: ComplexMatrix,
}

/// Ordering classification of a weight pair, with its margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ordering {
    /// `Phi2 - Phi1` positive definite.
    Strict,
    /// `Phi2 - Phi1` positive semi-definite with a zero direction (within
    /// tolerance of the boundary).
    NonStrict,
    /// `Phi2 - Phi1` takes negative values.
    Incomparable,
}

impl Ordering {
    pub fn as_str(&self) -> &'static str {
        match self {
            Ordering::Strict => "STRICT",
            Ordering::NonStrict => "NONSTRICT",
            Ordering::Incomparable => "INCOMPARABLE",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Comparison {
    pub ordering: Ordering,
    /// Smallest eigenvalue of the real-form difference.
    pub margin: f64,
}

/// A weight plus an affine part, closed under phase-space shifts:
/// `Phi(x) + 2 Re(lin . x) + constant`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineWeight {
    pub quad: QuadraticWeight,
    /// Coefficient of `x`; the conjugate acts on `conj(x)`, keeping values real.
    pub lin: Vec<C64>,
    pub constant: f64,
}

/// The weight as a real quadratic form: `Phi(x) = (1/2) v . Q v` for
/// `v = (Re x, Im x)`.
#[derive(Debug, Clone)]
pub struct RealForm {
    pub q: ComplexMatrix,
}

/// Record of the unitary reduction sending a pair `(Phi1, Phi2)` to
/// `(Phi0, Phi)`: first multiply away the pluriharmonic block of `Phi1`,
/// then rescale by the inverse square root of its Levi block.
#[derive(Debug, Clone)]
pub struct StandardReduction {
    /// The reduced second weight; the first becomes the standard weight.
    pub weight: QuadraticWeight,
    /// `L1^{-1/2}`, the change-of-variables matrix.
    pub scale: ComplexMatrix,
    /// `P1`, the pluriharmonic block removed from both weights.
    pub skew: ComplexMatrix,
}

impl QuadraticWeight {
    pub fn new(levi: ComplexMatrix, pluri: ComplexMatrix) -> Result<Self> {
        levi.check_finite()?;
        pluri.check_finite()?;
        levi.check_hermitian(tol::HERM_TOL)?;
        pluri.check_symmetric(tol::HERM_TOL)?;
        let n = levi.rows();
        if pluri.rows() != n {
            return Err(Error::DimMismatch { expected: n, got: pluri.rows() });
        }
        let levi = levi.hermitian_part();
        let pluri = pluri.symmetric_part();
        let min = min_eigenvalue(&levi)?;
        if min <= 0.0 {
            return Err(Error::NotPositiveDefinite { min_eig: min });
        }
        Ok(Self { n, levi, pluri })
    }

    /// The standard weight `(1/2) |x|^2`.
    pub fn standard(n: usize) -> Self {
        Self { n, levi: ComplexMatrix::identity(n), pluri: ComplexMatrix::zeros(n, n) }
    }

    /// One-dimensional weight `(1/2) a |x|^2 + (1/2) Re(b x^2)`.
    pub fn one_dim(a: f64, b: C64) -> Result<Self> {
        Self::new(
            ComplexMatrix::scalar(1, C64::new(a, 0.0)),
            ComplexMatrix::scalar(1, b),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn levi(&self) -> &ComplexMatrix {
        &self.levi
    }

    pub fn pluri(&self) -> &ComplexMatrix {
        &self.pluri
    }

    /// Evaluate the weight. The imaginary residue of the complex arithmetic
    /// is checked to be rounding-level and discarded.
    pub fn evaluate(&self, x: &[C64]) -> Result<f64> {
        if x.len() != self.n {
            return Err(Error::DimMismatch { expected: self.n, got: x.len() });
        }
        let lx = self.levi.matvec(x);
        let hermitian_term: C64 =
            lx.iter().zip(x).map(|(a, b)| a * b.conj()).sum::<C64>().scale(0.5);
        let px = self.pluri.matvec(x);
        let pluri_term = 0.5 * dot_bilinear(&px, x).re;
        let magnitude = hermitian_term.norm() + pluri_term.abs() + 1.0;
        debug_assert!(
            hermitian_term.im.abs() <= 1e-13 * magnitude,
            "imaginary residue {} in weight evaluation",
            hermitian_term.im
        );
        Ok(hermitian_term.re + pluri_term)
    }

    /// The weight as a real symmetric form on `(Re x, Im x)`.
    ///
    /// With `L = A + iB` and `P = C + iD`, the blocks are
    /// `[[A + C, -B - D], [B - D, A - C]]`.
    pub fn real_form(&self) -> RealForm {
        let a = self.levi.real_part();
        let b = self.levi.imag_part();
        let c = self.pluri.real_part();
        let d = self.pluri.imag_part();
        let q11 = &a + &c;
        let q12 = &(-&b) - &d;
        let q21 = &b - &d;
        let q22 = &a - &c;
        let q = ComplexMatrix::from_blocks(&q11, &q12, &q21, &q22).symmetric_part();
        RealForm { q }
    }

    /// The phase-space point above `y` on the totally real submanifold of
    /// the weight: `(y, -i(P y + conj(L y)))`. Shifting by such a point
    /// leaves the weight unchanged.
    pub fn lambda_point(&self, y: &[C64]) -> Result<(Vec<C64>, Vec<C64>)> {
        if y.len() != self.n {
            return Err(Error::DimMismatch { expected: self.n, got: y.len() });
        }
        let py = self.pluri.matvec(y);
        let ly = self.levi.matvec(y);
        let minus_i = C64::new(0.0, -1.0);
        let eta: Vec<C64> =
            py.iter().zip(&ly).map(|(p, l)| minus_i * (p + l.conj())).collect();
        Ok((y.to_vec(), eta))
    }

    /// Weight after multiplication by the Gaussian with symmetric matrix `T`:
    /// the pluriharmonic block gains `iT`.
    pub fn transform_skew(&self, t: &ComplexMatrix) -> Result<Self> {
        t.check_symmetric(tol::HERM_TOL)?;
        if t.rows() != self.n {
            return Err(Error::DimMismatch { expected: self.n, got: t.rows() });
        }
        let i = C64::new(0.0, 1.0);
        Self::new(self.levi.clone(), &self.pluri + &t.scale(i))
    }

    /// Weight after the change of variables `x -> G x`.
    pub fn transform_scale(&self, g: &ComplexMatrix) -> Result<Self> {
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::DimMismatch { expected: self.n, got: g.rows() });
        }
        // singularity check with the shared conditioning guard
        crate::linalg::inverse(g)?;
        let levi = &(&g.adjoint() * &self.levi) * g;
        let pluri = &(&g.transpose() * &self.pluri) * g;
        Self::new(levi.hermitian_part(), pluri.symmetric_part())
    }

    /// Weight after a phase-space shift by `(y, eta)`. The quadratic part is
    /// unchanged; the affine part records the shift.
    pub fn transform_shift(&self, y: &[C64], eta: &[C64]) -> Result<AffineWeight> {
        if y.len() != self.n || eta.len() != self.n {
            return Err(Error::DimMismatch { expected: self.n, got: y.len() });
        }
        // coefficient of x: -(1/2) L^T conj(y) - (1/2) P y + (i/2) eta
        let lt_cy = self.levi.transpose().matvec(&crate::linalg::vec_conj(y));
        let py = self.pluri.matvec(y);
        let half_i = C64::new(0.0, 0.5);
        let lin: Vec<C64> = (0..self.n)
            .map(|k| -lt_cy[k].scale(0.5) - py[k].scale(0.5) + half_i * eta[k])
            .collect();
        let y_eta = dot_bilinear(y, eta);
        let constant = self.evaluate(y)? + 0.5 * y_eta.im;
        Ok(AffineWeight { quad: self.clone(), lin, constant })
    }
}

impl AffineWeight {
    /// Purely quadratic weight viewed as affine.
    pub fn from_quad(quad: QuadraticWeight) -> Self {
        let n = quad.dim();
        Self { quad, lin: vec![C64::ZERO; n], constant: 0.0 }
    }

    pub fn dim(&self) -> usize {
        self.quad.dim()
    }

    pub fn evaluate(&self, x: &[C64]) -> Result<f64> {
        let base = self.quad.evaluate(x)?;
        Ok(base + 2.0 * dot_bilinear(&self.lin, x).re + self.constant)
    }

    /// Largest coefficient of the affine part; zero iff the shift fixed the weight.
    pub fn affine_magnitude(&self) -> f64 {
        let lin_max = self.lin.iter().map(|z| z.norm()).fold(0.0, f64::max);
        lin_max.max(self.constant.abs())
    }
}

impl RealForm {
    pub fn evaluate(&self, v: &[f64]) -> f64 {
        let vc: Vec<C64> = v.iter().map(|&t| C64::new(t, 0.0)).collect();
        0.5 * dot_bilinear(&self.q.matvec(&vc), &vc).re
    }
}

/// Classify `Phi2 - Phi1` by the spectrum of the real-form difference.
///
/// When the difference of Levi blocks is invertible, the reduction-based
/// criterion (positive definiteness of `L - 1` together with a contraction
/// bound on the twisted pluriharmonic block) is evaluated as an independent
/// cross-check; a decisive disagreement is reported as a fault.
pub fn compare(phi1: &QuadraticWeight, phi2: &QuadraticWeight) -> Result<Comparison> {
    compare_with_tol(phi1, phi2, tol::PD_TOL_FACTOR)
}

pub fn compare_with_tol(
    phi1: &QuadraticWeight,
    phi2: &QuadraticWeight,
    tol_factor: f64,
) -> Result<Comparison> {
    if phi1.dim() != phi2.dim() {
        return Err(Error::DimMismatch { expected: phi1.dim(), got: phi2.dim() });
    }
    let q1 = phi1.real_form().q;
    let q2 = phi2.real_form().q;
    let diff = &q2 - &q1;
    let margin = min_eigenvalue(&diff)?;
    let pd_tol = tol_factor * (1.0 + operator_norm(&q1)? + operator_norm(&q2)?);
    let ordering = if margin > pd_tol {
        Ordering::Strict
    } else if margin >= -pd_tol {
        Ordering::NonStrict
    } else {
        Ordering::Incomparable
    };

    if let Some(cross) = contraction_criterion(phi1, phi2, pd_tol)? {
        let disagree = match (ordering, cross) {
            (Ordering::Strict, false) | (Ordering::Incomparable, true) => true,
            _ => false,
        };
        if disagree {
            return Err(Error::CrossCheck {
                context: "weight ordering",
                detail: format!(
                    "real-form margin {margin:.6e} classifies {}, contraction criterion says strict={cross}",
                    ordering.as_str()
                ),
            });
        }
    }

    Ok(Comparison { ordering, margin })
}

/// Strictness criterion through the reduction to the standard weight:
/// `Phi2 > Phi1` iff `L - 1` is positive definite and
/// `(conj(L) - 1)^{-1/2} P (L - 1)^{-1/2}` is a strict contraction, where
/// `(L, P)` is the reduced pair. Returns `None` when the criterion is not
/// decisive (near-singular `L - 1`, or a contraction norm too close to one).
fn contraction_criterion(
    phi1: &QuadraticWeight,
    phi2: &QuadraticWeight,
    pd_tol: f64,
) -> Result<Option<bool>> {
    let reduced = reduce_to_standard(phi1, phi2)?;
    let n = reduced.weight.dim();
    let l_minus = &reduced.weight.levi - &ComplexMatrix::identity(n);
    let eigs = eig_hermitian(&l_minus)?.values;
    let scale = eigs.iter().map(|v| v.abs()).fold(1.0, f64::max);
    if eigs.iter().any(|v| v.abs() <= pd_tol.max(1e-12 * scale)) {
        return Ok(None); // singular difference: criterion not applicable
    }
    if eigs[0] < 0.0 {
        // a strictly negative direction in the Levi difference decides it
        return Ok(Some(false));
    }
    let left = hermitian_inv_sqrt_pd(&l_minus.conj())?;
    let right = hermitian_inv_sqrt_pd(&l_minus)?;
    let twisted = &(&left * &reduced.weight.pluri) * &right;
    let norm = operator_norm(&twisted)?;
    let band = 1e-7 * (1.0 + norm);
    if (norm - 1.0).abs() <= band {
        return Ok(None); // boundary: leave the verdict to the real form
    }
    Ok(Some(norm < 1.0))
}

/// Reduce a pair `(Phi1, Phi2)` to `(Phi0, Phi)` by the unitary that first
/// removes the pluriharmonic block of `Phi1` and then rescales its Levi
/// block to the identity. The ordering classification is preserved.
pub fn reduce_to_standard(
    phi1: &QuadraticWeight,
    phi2: &QuadraticWeight,
) -> Result<StandardReduction> {
    if phi1.dim() != phi2.dim() {
        return Err(Error::DimMismatch { expected: phi1.dim(), got: phi2.dim() });
    }
    let inv_sqrt = hermitian_inv_sqrt_pd(&phi1.levi)?;
    let levi = (&(&inv_sqrt * &phi2.levi) * &inv_sqrt).hermitian_part();
    let p_diff = &phi2.pluri - &phi1.pluri;
    let pluri = (&(&inv_sqrt.conj() * &p_diff) * &inv_sqrt).symmetric_part();
    Ok(StandardReduction {
        weight: QuadraticWeight::new(levi, pluri)?,
        scale: inv_sqrt,
        skew: phi1.pluri.clone(),
    })
}
