//! Spectral norm by power iteration on `M* M`, with a deflation safeguard
//! against a start vector that is deficient in the top singular direction.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::matrix::{dot_hermitian, vec_norm, ComplexMatrix};

const MAX_ITERS: usize = 20_000;
const REL_TOL: f64 = 1e-13;

/// Largest singular value of `m` to relative accuracy around 1e-10.
pub fn operator_norm(m: &ComplexMatrix) -> Result<f64> {
    m.check_finite()?;
    let scale = m.max_abs();
    if scale == 0.0 {
        return Ok(0.0);
    }
    // gram matrix of the scaled input keeps the iteration well ranged
    let s = m.scale(C64::new(1.0 / scale, 0.0));
    let gram = &s.adjoint() * &s;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);

    let (lam1, v1) = power_iterate(&gram, None, &mut rng);
    // deflated second run; if it beats the first, the first run had a bad start
    let (lam2, _) = power_iterate(&gram, Some(&v1), &mut rng);
    let top = if lam2 > lam1 * (1.0 + 1e-9) {
        let (lam3, _) = power_iterate(&gram, None, &mut rng);
        lam1.max(lam2).max(lam3)
    } else {
        lam1
    };
    Ok(top.max(0.0).sqrt() * scale)
}

fn power_iterate(
    gram: &ComplexMatrix,
    deflate: Option<&[C64]>,
    rng: &mut ChaCha8Rng,
) -> (f64, Vec<C64>) {
    let n = gram.rows();
    let mut v: Vec<C64> = (0..n)
        .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    if let Some(d) = deflate {
        remove_component(&mut v, d);
    }
    let nrm = vec_norm(&v).max(f64::MIN_POSITIVE);
    for z in v.iter_mut() {
        *z = z.scale(1.0 / nrm);
    }

    let mut lambda = 0.0f64;
    for _ in 0..MAX_ITERS {
        let mut w = gram.matvec(&v);
        if let Some(d) = deflate {
            remove_component(&mut w, d);
        }
        let wn = vec_norm(&w);
        if wn == 0.0 {
            return (0.0, v);
        }
        for z in w.iter_mut() {
            *z = z.scale(1.0 / wn);
        }
        let rayleigh = dot_hermitian(&gram.matvec(&w), &w).re;
        let delta = (rayleigh - lambda).abs();
        lambda = rayleigh;
        v = w;
        if delta <= REL_TOL * lambda.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    (lambda, v)
}

fn remove_component(v: &mut [C64], d: &[C64]) {
    let proj = dot_hermitian(v, d);
    for (z, dz) in v.iter_mut().zip(d) {
        *z -= proj * dz;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian::eig_hermitian;

    #[test]
    fn zero_matrix() {
        assert_eq!(operator_norm(&ComplexMatrix::zeros(3, 3)).unwrap(), 0.0);
    }

    #[test]
    fn diagonal_singular_values() {
        let m = ComplexMatrix::from_real_rows(&[vec![3.0, 0.0], vec![0.0, -4.0]]);
        let s = operator_norm(&m).unwrap();
        assert!((s - 4.0).abs() < 1e-10);
    }

    #[test]
    fn matches_hermitian_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in [2usize, 3, 5] {
            let m = ComplexMatrix::from_fn(n, n, |_, _| {
                C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            let s = operator_norm(&m).unwrap();
            let gram = &m.adjoint() * &m;
            let top = *eig_hermitian(&gram).unwrap().values.last().unwrap();
            assert!((s - top.sqrt()).abs() <= 1e-9 * top.sqrt().max(1.0));
        }
    }

    #[test]
    fn repeated_top_singular_value() {
        // two equal singular values; the value must still converge
        let m = ComplexMatrix::diag(&[
            C64::new(0.0, 2.0),
            C64::new(2.0, 0.0),
            C64::new(0.5, 0.0),
        ]);
        assert!((operator_norm(&m).unwrap() - 2.0).abs() < 1e-10);
    }
}
