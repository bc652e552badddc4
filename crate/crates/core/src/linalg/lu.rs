//! LU factorization with partial pivoting: determinants, solves, inverses.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;
use crate::tol;

/// Packed LU factors of a square matrix, `P*M = L*U`.
pub struct Lu {
    lu: ComplexMatrix,
    perm: Vec<usize>,
    parity: f64,
}

impl Lu {
    pub fn new(m: &ComplexMatrix) -> Result<Self> {
        m.check_square()?;
        m.check_finite()?;
        let n = m.rows();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut parity = 1.0;
        let scale = m.max_abs().max(f64::MIN_POSITIVE);

        for k in 0..n {
            let (mut pivot_row, mut pivot_abs) = (k, lu[(k, k)].norm());
            for i in (k + 1)..n {
                let a = lu[(i, k)].norm();
                if a > pivot_abs {
                    pivot_row = i;
                    pivot_abs = a;
                }
            }
            if pivot_abs <= scale * 1e-300 {
                return Err(Error::Singular);
            }
            if pivot_row != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(pivot_row, j)];
                    lu[(pivot_row, j)] = tmp;
                }
                perm.swap(k, pivot_row);
                parity = -parity;
            }
            let inv_pivot = lu[(k, k)].inv();
            for i in (k + 1)..n {
                let factor = lu[(i, k)] * inv_pivot;
                lu[(i, k)] = factor;
                for j in (k + 1)..n {
                    let sub = factor * lu[(k, j)];
                    lu[(i, j)] -= sub;
                }
            }
        }
        Ok(Self { lu, perm, parity })
    }

    pub fn det(&self) -> C64 {
        let n = self.lu.rows();
        let mut d = C64::new(self.parity, 0.0);
        for k in 0..n {
            d *= self.lu[(k, k)];
        }
        d
    }

    pub fn solve(&self, b: &[C64]) -> Vec<C64> {
        let n = self.lu.rows();
        assert_eq!(b.len(), n, "rhs length mismatch");
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        // forward: L has unit diagonal
        for i in 1..n {
            for j in 0..i {
                let sub = self.lu[(i, j)] * x[j];
                x[i] -= sub;
            }
        }
        // backward
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let sub = self.lu[(i, j)] * x[j];
                x[i] -= sub;
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }

    pub fn inverse(&self) -> ComplexMatrix {
        let n = self.lu.rows();
        let mut inv = ComplexMatrix::zeros(n, n);
        let mut e = vec![C64::ZERO; n];
        for j in 0..n {
            e[j] = C64::ONE;
            inv.set_column(j, &self.solve(&e));
            e[j] = C64::ZERO;
        }
        inv
    }
}

/// Determinant via LU; zero for singular input.
pub fn det(m: &ComplexMatrix) -> Result<C64> {
    match Lu::new(m) {
        Ok(lu) => Ok(lu.det()),
        Err(Error::Singular) => Ok(C64::ZERO),
        Err(e) => Err(e),
    }
}

fn norm_1(m: &ComplexMatrix) -> f64 {
    (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Inverse with a 1-norm condition estimate; rejects near-singular input.
pub fn inverse(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let lu = Lu::new(m)?;
    let inv = lu.inverse();
    let cond = norm_1(m) * norm_1(&inv);
    if !cond.is_finite() || cond > tol::COND_LIMIT {
        return Err(Error::IllConditioned { cond, limit: tol::COND_LIMIT });
    }
    Ok(inv)
}

/// Solve `M x = b` with the same conditioning guard as [`inverse`].
pub fn solve(m: &ComplexMatrix, b: &[C64]) -> Result<Vec<C64>> {
    if b.len() != m.rows() {
        return Err(Error::DimMismatch { expected: m.rows(), got: b.len() });
    }
    let lu = Lu::new(m)?;
    let x = lu.solve(b);
    let cond = norm_1(m) * norm_1(&lu.inverse());
    if !cond.is_finite() || cond > tol::COND_LIMIT {
        return Err(Error::IllConditioned { cond, limit: tol::COND_LIMIT });
    }
    Ok(x)
}

/// 1-norm condition estimate (exact inverse at these sizes).
pub fn condition_estimate(m: &ComplexMatrix) -> Result<f64> {
    let lu = Lu::new(m)?;
    Ok(norm_1(m) * norm_1(&lu.inverse()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{vec_norm, vec_sub};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    #[test]
    fn identity_det_and_inverse() {
        let id = ComplexMatrix::identity(3);
        assert_eq!(det(&id).unwrap(), C64::ONE);
        let inv = inverse(&id).unwrap();
        assert!((&inv - &id).max_abs() == 0.0);
    }

    #[test]
    fn antidiagonal_involution() {
        // [[0, i],[i, 0]] has det 1 and inverse [[0, -i],[-i, 0]].
        let i = C64::new(0.0, 1.0);
        let m = ComplexMatrix::from_rows(&[vec![C64::ZERO, i], vec![i, C64::ZERO]]);
        let d = det(&m).unwrap();
        assert!((d - C64::ONE).norm() < 1e-15);
        let inv = inverse(&m).unwrap();
        assert!((inv[(0, 1)] + i).norm() < 1e-15);
        assert!((inv[(1, 0)] + i).norm() < 1e-15);
    }

    #[test]
    fn random_solve_residual() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 4);
            let b: Vec<C64> = (0..4)
                .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let x = match solve(&m, &b) {
                Ok(x) => x,
                Err(Error::IllConditioned { .. }) => continue,
                Err(e) => panic!("unexpected error: {e}"),
            };
            let r = vec_norm(&vec_sub(&m.matvec(&x), &b));
            assert!(r <= 1e-10 * vec_norm(&b).max(1.0), "residual {r}");
        }
    }

    #[test]
    fn random_inverse_residual() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let m = random_matrix(&mut rng, 4);
        let inv = inverse(&m).unwrap();
        let resid = (&(&m * &inv) - &ComplexMatrix::identity(4)).max_abs();
        assert!(resid <= tol::INV_RESIDUAL, "residual {resid}");
    }

    #[test]
    fn det_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 3);
            let b = random_matrix(&mut rng, 3);
            let lhs = det(&(&a * &b)).unwrap();
            let rhs = det(&a).unwrap() * det(&b).unwrap();
            assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1e-9));
        }
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(matches!(Lu::new(&m), Err(Error::Singular)));
        assert_eq!(det(&m).unwrap(), C64::ZERO);
    }
}
