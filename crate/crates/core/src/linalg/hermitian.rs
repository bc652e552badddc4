//! Hermitian eigendecomposition by cyclic Jacobi rotations, and the
//! principal square root of a positive definite matrix.
//!
//! Jacobi is unconditionally stable at the sizes this library works at and
//! produces an orthonormal eigenvector basis without a separate pass.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;
use crate::tol;

pub struct HermitianEig {
    /// Eigenvalues, ascending.
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the matching eigenvectors.
    pub vectors: ComplexMatrix,
}

const MAX_SWEEPS: usize = 60;

/// Eigendecomposition of a Hermitian matrix. The input must be Hermitian to
/// `tol::HERM_TOL` relative; it is symmetrized before iterating.
pub fn eig_hermitian(h: &ComplexMatrix) -> Result<HermitianEig> {
    h.check_finite()?;
    h.check_hermitian(tol::HERM_TOL)?;
    let n = h.rows();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let target = scale * 1e-14;

    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if (2.0 * off).sqrt() <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        // one last measurement; Jacobi converging slowly is pathological
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if (2.0 * off).sqrt() > target {
            return Err(Error::IterationFailure { sweeps: MAX_SWEEPS });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEig { values, vectors })
}

/// One complex Jacobi rotation zeroing the (p,q) entry.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let beta = a[(p, q)];
    let b = beta.norm();
    if b == 0.0 {
        return;
    }
    let alpha = a[(p, p)].re;
    let gamma = a[(q, q)].re;
    // phase factor making the off-diagonal entry real
    let u = beta / b;
    let tau = (gamma - alpha) / (2.0 * b);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // plane transform W = [[c, s], [-conj(u) s, conj(u) c]]
    let w11 = C64::new(c, 0.0);
    let w12 = C64::new(s, 0.0);
    let w21 = -u.conj() * s;
    let w22 = u.conj() * c;

    let n = a.rows();
    // columns: H <- H W
    for i in 0..n {
        let hip = a[(i, p)];
        let hiq = a[(i, q)];
        a[(i, p)] = hip * w11 + hiq * w21;
        a[(i, q)] = hip * w12 + hiq * w22;
    }
    // rows: H <- W* H
    for j in 0..n {
        let hpj = a[(p, j)];
        let hqj = a[(q, j)];
        a[(p, j)] = w11.conj() * hpj + w21.conj() * hqj;
        a[(q, j)] = w12.conj() * hpj + w22.conj() * hqj;
    }
    // exact zero on the target pair, real diagonal
    a[(p, q)] = C64::ZERO;
    a[(q, p)] = C64::ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * w11 + viq * w21;
        v[(i, q)] = vip * w12 + viq * w22;
    }
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(h: &ComplexMatrix) -> Result<f64> {
    Ok(eig_hermitian(h)?.values[0])
}

/// Principal square root of a Hermitian positive definite matrix.
pub fn hermitian_sqrt_pd(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = eig_hermitian(h)?;
    let scale = eig.values.iter().map(|v| v.abs()).fold(1.0, f64::max);
    let min = eig.values[0];
    if min <= scale * 1e-14 {
        return Err(Error::NotPositiveDefinite { min_eig: min });
    }
    let sqrt_diag = ComplexMatrix::diag(
        &eig.values.iter().map(|&l| C64::new(l.sqrt(), 0.0)).collect::<Vec<_>>(),
    );
    let r = &(&eig.vectors * &sqrt_diag) * &eig.vectors.adjoint();
    Ok(r.hermitian_part())
}

/// Inverse of the principal square root of a Hermitian PD matrix.
pub fn hermitian_inv_sqrt_pd(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = eig_hermitian(h)?;
    let scale = eig.values.iter().map(|v| v.abs()).fold(1.0, f64::max);
    let min = eig.values[0];
    if min <= scale * 1e-14 {
        return Err(Error::NotPositiveDefinite { min_eig: min });
    }
    let inv_sqrt_diag = ComplexMatrix::diag(
        &eig.values.iter().map(|&l| C64::new(1.0 / l.sqrt(), 0.0)).collect::<Vec<_>>(),
    );
    let r = &(&eig.vectors * &inv_sqrt_diag) * &eig.vectors.adjoint();
    Ok(r.hermitian_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        let g = ComplexMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        g.hermitian_part()
    }

    fn random_hermitian_pd(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        let g = ComplexMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        &(&g.adjoint() * &g) + &ComplexMatrix::scalar(n, C64::new(0.3, 0.0))
    }

    #[test]
    fn diagonal_passthrough() {
        let h = ComplexMatrix::from_real_rows(&[vec![4.0, 0.0], vec![0.0, 9.0]]);
        let eig = eig_hermitian(&h).unwrap();
        assert!((eig.values[0] - 4.0).abs() < 1e-14);
        assert!((eig.values[1] - 9.0).abs() < 1e-14);
    }

    #[test]
    fn identity_eigenvalues() {
        let eig = eig_hermitian(&ComplexMatrix::identity(3)).unwrap();
        for v in eig.values {
            assert!((v - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn reconstruction_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let h = random_hermitian(&mut rng, 4);
            let eig = eig_hermitian(&h).unwrap();
            let lam = ComplexMatrix::diag(
                &eig.values.iter().map(|&l| C64::new(l, 0.0)).collect::<Vec<_>>(),
            );
            let rebuilt = &(&eig.vectors * &lam) * &eig.vectors.adjoint();
            let scale = h.frobenius_norm().max(1.0);
            assert!((&rebuilt - &h).max_abs() <= 1e-11 * scale);
            let gram = &eig.vectors.adjoint() * &eig.vectors;
            assert!((&gram - &ComplexMatrix::identity(4)).max_abs() <= 1e-11);
        }
    }

    #[test]
    fn eigenvalues_ascending_and_real() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let h = random_hermitian(&mut rng, 5);
        let eig = eig_hermitian(&h).unwrap();
        for w in eig.values.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = ComplexMatrix::from_rows(&[
            vec![C64::ONE, C64::new(1.0, 1.0)],
            vec![C64::ZERO, C64::ONE],
        ]);
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn sqrt_diagonal() {
        let h = ComplexMatrix::from_real_rows(&[vec![4.0, 0.0], vec![0.0, 9.0]]);
        let r = hermitian_sqrt_pd(&h).unwrap();
        assert!((r[(0, 0)] - C64::new(2.0, 0.0)).norm() < 1e-13);
        assert!((r[(1, 1)] - C64::new(3.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn sqrt_squares_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let h = random_hermitian_pd(&mut rng, 4);
            let r = hermitian_sqrt_pd(&h).unwrap();
            let scale = h.frobenius_norm().max(1.0);
            assert!((&(&r * &r) - &h).max_abs() <= tol::SQRT_RESIDUAL * scale);
            assert!(r.hermitian_defect() <= 1e-12 * scale);
        }
    }

    #[test]
    fn sqrt_commutes_with_unitary_conjugation() {
        // sqrt(U* H U) = U* sqrt(H) U for unitary U
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let h = random_hermitian_pd(&mut rng, 3);
        // build a unitary from the eigenvectors of another random Hermitian
        let u = eig_hermitian(&random_hermitian(&mut rng, 3)).unwrap().vectors;
        let lhs = hermitian_sqrt_pd(&(&(&u.adjoint() * &h) * &u)).unwrap();
        let rhs = &(&u.adjoint() * &hermitian_sqrt_pd(&h).unwrap()) * &u;
        assert!((&lhs - &rhs).max_abs() <= 1e-10 * h.frobenius_norm().max(1.0));
    }

    #[test]
    fn indefinite_rejected() {
        let h = ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]);
        assert!(matches!(
            hermitian_sqrt_pd(&h),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn inv_sqrt_matches_sqrt_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let h = random_hermitian_pd(&mut rng, 3);
        let a = hermitian_inv_sqrt_pd(&h).unwrap();
        let b = crate::linalg::lu::inverse(&hermitian_sqrt_pd(&h).unwrap()).unwrap();
        assert!((&a - &b).max_abs() <= 1e-10 * a.frobenius_norm().max(1.0));
    }
}
