//! General complex eigensolver: balance, Householder reduction to Hessenberg
//! form, implicitly restarted single-shift QR with Wilkinson shifts, then
//! eigenvectors by inverse iteration on the original matrix.
//!
//! Sized for the tiny dense matrices this library produces (dimension <= 32);
//! chosen for robustness, not speed.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::lu::Lu;
use crate::linalg::matrix::{dot_hermitian, vec_norm, ComplexMatrix};
use crate::tol;

#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: C64,
    /// Unit Euclidean length.
    pub vector: Vec<C64>,
    /// `|M v - lambda v|`, absolute.
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct GeneralEig {
    pub pairs: Vec<EigenPair>,
    /// Worst eigenpair residual relative to `|M|`; large values flag a
    /// near-defective input rather than aborting it.
    pub max_rel_residual: f64,
}

impl GeneralEig {
    pub fn values(&self) -> Vec<C64> {
        self.pairs.iter().map(|p| p.value).collect()
    }
}

pub fn eig_general(m: &ComplexMatrix) -> Result<GeneralEig> {
    m.check_square()?;
    m.check_finite()?;
    let n = m.rows();
    if n > tol::MAX_EIG_DIM {
        return Err(Error::DimensionLimit { dim: n, limit: tol::MAX_EIG_DIM });
    }
    if n == 0 {
        return Ok(GeneralEig { pairs: vec![], max_rel_residual: 0.0 });
    }
    let scale = m.max_abs();
    if scale == 0.0 {
        // zero matrix: eigenvalue 0 with the standard basis
        let pairs = (0..n)
            .map(|i| {
                let mut v = vec![C64::ZERO; n];
                v[i] = C64::ONE;
                EigenPair { value: C64::ZERO, vector: v, residual: 0.0 }
            })
            .collect();
        return Ok(GeneralEig { pairs, max_rel_residual: 0.0 });
    }

    let mut h = m.clone();
    balance(&mut h);
    hessenberg(&mut h);
    let mut values = qr_eigenvalues(h)?;
    values.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());

    let pairs = eigenvectors_by_inverse_iteration(m, &values);
    let max_rel_residual =
        pairs.iter().map(|p| p.residual).fold(0.0, f64::max) / scale.max(f64::MIN_POSITIVE);
    Ok(GeneralEig { pairs, max_rel_residual })
}

/// Parlett-Reinsch balancing (radix 2). Similarity transform only; the
/// eigenvalues are unchanged and eigenvectors are recomputed later from the
/// unbalanced matrix.
fn balance(a: &mut ComplexMatrix) {
    let n = a.rows();
    let radix = 2.0f64;
    let sqrdx = radix * radix;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].norm();
                    r += a[(i, j)].norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut c_work = c;
            let mut g = r / radix;
            while c_work < g {
                f *= radix;
                c_work *= sqrdx;
            }
            g = r * radix;
            while c_work > g {
                f /= radix;
                c_work /= sqrdx;
            }
            if (c_work + r) / f < 0.95 * s {
                done = false;
                let g = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] = a[(i, j)].scale(g);
                }
                for j in 0..n {
                    a[(j, i)] = a[(j, i)].scale(f);
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Householder reduction to upper Hessenberg form, in place.
fn hessenberg(a: &mut ComplexMatrix) {
    let n = a.rows();
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1; // reflector length
        let x: Vec<C64> = (0..m).map(|i| a[(k + 1 + i, k)]).collect();
        let xnorm = vec_norm(&x);
        if xnorm == 0.0 {
            continue;
        }
        let x0 = x[0];
        let phase = if x0.norm() == 0.0 { C64::ONE } else { x0 / x0.norm() };
        let alpha = -phase * xnorm;
        let mut v = x;
        v[0] -= alpha;
        let vnorm = vec_norm(&v);
        if vnorm <= xnorm * 1e-300 {
            continue;
        }
        for z in v.iter_mut() {
            *z = z.scale(1.0 / vnorm);
        }
        // now |v| = 1 and P = I - 2 v v* maps x to alpha e1
        // left: rows k+1..n of columns k..n
        for j in k..n {
            let mut w = C64::ZERO;
            for i in 0..m {
                w += v[i].conj() * a[(k + 1 + i, j)];
            }
            let w2 = w.scale(2.0);
            for i in 0..m {
                let sub = v[i] * w2;
                a[(k + 1 + i, j)] -= sub;
            }
        }
        // right: columns k+1..n of all rows
        for i in 0..n {
            let mut w = C64::ZERO;
            for j in 0..m {
                w += a[(i, k + 1 + j)] * v[j];
            }
            let w2 = w.scale(2.0);
            for j in 0..m {
                let sub = w2 * v[j].conj();
                a[(i, k + 1 + j)] -= sub;
            }
        }
        a[(k + 1, k)] = alpha;
        for i in (k + 2)..n {
            a[(i, k)] = C64::ZERO;
        }
    }
}

/// Eigenvalue of the 2x2 `[[p, q], [r, s]]` closest to `s`.
fn wilkinson_shift(p: C64, q: C64, r: C64, s: C64) -> C64 {
    let half_diff = (p - s).scale(0.5);
    let disc = (half_diff * half_diff + q * r).sqrt();
    let mid = (p + s).scale(0.5);
    let e1 = mid + disc;
    let e2 = mid - disc;
    if (e1 - s).norm() <= (e2 - s).norm() {
        e1
    } else {
        e2
    }
}

/// Single-shift explicit QR on the Hessenberg matrix; returns the spectrum.
fn qr_eigenvalues(mut h: ComplexMatrix) -> Result<Vec<C64>> {
    let n = h.rows();
    let eps = f64::EPSILON;
    let overall = h.max_abs().max(f64::MIN_POSITIVE);
    let mut values = Vec::with_capacity(n);
    let mut hi = n - 1;
    let mut stall = 0usize;
    let mut total_iters = 0usize;
    let max_total = 60 * n.max(1);

    loop {
        // kill negligible subdiagonals
        for l in 1..=hi {
            let s = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
            let s = if s == 0.0 { overall } else { s };
            if h[(l, l - 1)].norm() <= eps * s {
                h[(l, l - 1)] = C64::ZERO;
            }
        }
        // deflate converged trailing eigenvalues
        while hi > 0 && h[(hi, hi - 1)] == C64::ZERO {
            values.push(h[(hi, hi)]);
            stall = 0;
            hi -= 1;
        }
        if hi == 0 {
            values.push(h[(0, 0)]);
            break;
        }
        // active window [lo..=hi]
        let mut lo = hi;
        while lo > 0 && h[(lo, lo - 1)] != C64::ZERO {
            lo -= 1;
        }

        total_iters += 1;
        stall += 1;
        if total_iters > max_total {
            return Err(Error::IterationFailure { sweeps: total_iters });
        }

        let mut sigma = wilkinson_shift(
            h[(hi - 1, hi - 1)],
            h[(hi - 1, hi)],
            h[(hi, hi - 1)],
            h[(hi, hi)],
        );
        if stall > 0 && stall % 12 == 0 {
            // exceptional shift to break symmetry-induced cycling
            let kick = h[(hi, hi - 1)].norm()
                + if hi >= 2 { h[(hi - 1, hi - 2)].norm() } else { 0.0 };
            sigma = h[(hi, hi)] + C64::new(0.75 * kick, 0.4375 * kick);
        }

        // explicit shifted QR sweep on the window
        for d in lo..=hi {
            h[(d, d)] -= sigma;
        }
        let mut rotations: Vec<(usize, C64, C64)> = Vec::with_capacity(hi - lo);
        for k in lo..hi {
            let a = h[(k, k)];
            let b = h[(k + 1, k)];
            let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
            if r == 0.0 {
                rotations.push((k, C64::ONE, C64::ZERO));
                continue;
            }
            let cs = a.conj().scale(1.0 / r);
            let sn = b.conj().scale(1.0 / r);
            // rows k, k+1 of columns k..=hi
            for j in k..=hi {
                let hk = h[(k, j)];
                let hk1 = h[(k + 1, j)];
                h[(k, j)] = cs * hk + sn * hk1;
                h[(k + 1, j)] = -sn.conj() * hk + cs.conj() * hk1;
            }
            rotations.push((k, cs, sn));
        }
        for &(k, cs, sn) in &rotations {
            // columns k, k+1 of rows lo..=min(k+2, hi): apply G* on the right
            let top = (k + 2).min(hi);
            for i in lo..=top {
                let hik = h[(i, k)];
                let hik1 = h[(i, k + 1)];
                h[(i, k)] = hik * cs.conj() + hik1 * sn.conj();
                h[(i, k + 1)] = -hik * sn + hik1 * cs;
            }
        }
        for d in lo..=hi {
            h[(d, d)] += sigma;
        }
    }
    Ok(values)
}

fn eigenvectors_by_inverse_iteration(m: &ComplexMatrix, values: &[C64]) -> Vec<EigenPair> {
    let n = m.rows();
    let scale = m.max_abs().max(f64::MIN_POSITIVE);
    let cluster_tol = 1e-7 * scale;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);

    // group near-equal eigenvalues so repeated eigenvalues get a basis of
    // their eigenspace instead of the same vector k times
    let mut clusters: Vec<(C64, Vec<usize>)> = Vec::new();
    for (idx, &v) in values.iter().enumerate() {
        match clusters.iter_mut().find(|(rep, _)| (*rep - v).norm() <= cluster_tol) {
            Some((_, members)) => members.push(idx),
            None => clusters.push((v, vec![idx])),
        }
    }

    let mut pairs: Vec<Option<EigenPair>> = vec![None; n];
    for (rep, members) in clusters {
        let mut basis: Vec<Vec<C64>> = Vec::new();
        for (slot, &idx) in members.iter().enumerate() {
            let vector = inverse_iterate(m, rep, slot, &basis, &mut rng, scale);
            let mv = m.matvec(&vector);
            let lambda = values[idx];
            let residual = vec_norm(
                &mv.iter().zip(&vector).map(|(a, b)| a - b * lambda).collect::<Vec<_>>(),
            );
            basis.push(vector.clone());
            pairs[idx] = Some(EigenPair { value: lambda, vector, residual });
        }
    }
    pairs.into_iter().map(|p| p.expect("all eigenpairs assigned")).collect()
}

fn inverse_iterate(
    m: &ComplexMatrix,
    lambda: C64,
    slot: usize,
    basis: &[Vec<C64>],
    rng: &mut ChaCha8Rng,
    scale: f64,
) -> Vec<C64> {
    let n = m.rows();
    let random_unit = |rng: &mut ChaCha8Rng| -> Vec<C64> {
        let mut v: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let nrm = vec_norm(&v).max(f64::MIN_POSITIVE);
        for z in v.iter_mut() {
            *z = z.scale(1.0 / nrm);
        }
        v
    };

    // slot-dependent perturbation separates repeated eigenvalues
    let mut shift_eps = 1e-11 * scale.max(1e-30) * (1.0 + slot as f64);
    for _attempt in 0..4 {
        let shifted = {
            let mut s = m.clone();
            let bump = C64::new(shift_eps, 0.5 * shift_eps);
            for i in 0..n {
                s[(i, i)] -= lambda + bump;
            }
            s
        };
        let lu = match Lu::new(&shifted) {
            Ok(lu) => lu,
            Err(_) => {
                shift_eps *= 37.0;
                continue;
            }
        };
        let mut v = random_unit(rng);
        for _iter in 0..3 {
            let mut x = lu.solve(&v);
            let nrm = vec_norm(&x);
            if !nrm.is_finite() || nrm == 0.0 {
                v = random_unit(rng);
                continue;
            }
            for z in x.iter_mut() {
                *z = z.scale(1.0 / nrm);
            }
            v = x;
        }
        // one re-orthogonalization pass within the cluster
        for b in basis {
            let proj = dot_hermitian(&v, b);
            for (z, bz) in v.iter_mut().zip(b) {
                *z -= proj * bz;
            }
        }
        let nrm = vec_norm(&v);
        if nrm > 1e-6 {
            for z in v.iter_mut() {
                *z = z.scale(1.0 / nrm);
            }
            // polish: one more solve after deflation against the basis
            let mut x = lu.solve(&v);
            for b in basis {
                let proj = dot_hermitian(&x, b);
                for (z, bz) in x.iter_mut().zip(b) {
                    *z -= proj * bz;
                }
            }
            let xn = vec_norm(&x);
            if xn.is_finite() && xn > 0.0 {
                for z in x.iter_mut() {
                    *z = z.scale(1.0 / xn);
                }
                return x;
            }
            return v;
        }
        shift_eps *= 37.0;
    }
    // defective direction: return the best orthogonal complement vector we have
    let mut v = random_unit(rng);
    for b in basis {
        let proj = dot_hermitian(&v, b);
        for (z, bz) in v.iter_mut().zip(b) {
            *z -= proj * bz;
        }
    }
    let nrm = vec_norm(&v).max(f64::MIN_POSITIVE);
    for z in v.iter_mut() {
        *z = z.scale(1.0 / nrm);
    }
    v
}
