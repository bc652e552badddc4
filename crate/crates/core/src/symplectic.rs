//! Phase-space machinery: the symplectic form, canonical-map and positivity
//! checks, the shift-adjoint matrix of a weight, the generator maps, and the
//! full Bargmann canonical map.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{
    dot_bilinear, eig_hermitian, hermitian_sqrt_pd, inverse, min_eigenvalue, vec_conj, vec_norm,
    vec_sub, ComplexMatrix,
};
use crate::tol;
use crate::weights::QuadraticWeight;

/// A point `(x, xi)` of complex phase space.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePoint {
    pub x: Vec<C64>,
    pub xi: Vec<C64>,
}

impl PhasePoint {
    pub fn new(x: Vec<C64>, xi: Vec<C64>) -> Self {
        assert_eq!(x.len(), xi.len(), "phase point components must agree");
        Self { x, xi }
    }

    pub fn zero(n: usize) -> Self {
        Self { x: vec![C64::ZERO; n], xi: vec![C64::ZERO; n] }
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn from_stacked(v: &[C64]) -> Self {
        let n = v.len() / 2;
        assert_eq!(v.len(), 2 * n);
        Self { x: v[..n].to_vec(), xi: v[n..].to_vec() }
    }

    pub fn stacked(&self) -> Vec<C64> {
        self.x.iter().chain(self.xi.iter()).copied().collect()
    }

    pub fn conj(&self) -> Self {
        Self { x: vec_conj(&self.x), xi: vec_conj(&self.xi) }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            x: crate::linalg::vec_add(&self.x, &other.x),
            xi: crate::linalg::vec_add(&self.xi, &other.xi),
        }
    }

    pub fn neg(&self) -> Self {
        Self { x: self.x.iter().map(|z| -z).collect(), xi: self.xi.iter().map(|z| -z).collect() }
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.stacked())
    }
}

/// The symplectic form `sigma((x, xi), (y, eta)) = xi . y - eta . x`
/// (bilinear dot products, no conjugation).
pub fn symplectic_form(a: &PhasePoint, b: &PhasePoint) -> C64 {
    assert_eq!(a.dim(), b.dim(), "symplectic form needs equal dimensions");
    dot_bilinear(&a.xi, &b.x) - dot_bilinear(&b.xi, &a.x)
}

/// A linear map on phase space, stored as its `2n x 2n` matrix with the
/// block convention `[[A, B], [C, D]]`. Construction does not require the
/// map to be canonical; [`CanonicalMap::is_canonical`] reports the defect.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalMap {
    n: usize,
    m: ComplexMatrix,
}

impl CanonicalMap {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        m.check_square()?;
        m.check_finite()?;
        let dim = m.rows();
        if dim % 2 != 0 || dim == 0 {
            return Err(Error::DimMismatch { expected: dim + dim % 2, got: dim });
        }
        Ok(Self { n: dim / 2, m })
    }

    pub fn identity(n: usize) -> Self {
        Self { n, m: ComplexMatrix::identity(2 * n) }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn block_a(&self) -> ComplexMatrix {
        self.m.block(0, 0, self.n)
    }

    pub fn block_b(&self) -> ComplexMatrix {
        self.m.block(0, self.n, self.n)
    }

    pub fn block_c(&self) -> ComplexMatrix {
        self.m.block(self.n, 0, self.n)
    }

    pub fn block_d(&self) -> ComplexMatrix {
        self.m.block(self.n, self.n, self.n)
    }

    pub fn apply(&self, p: &PhasePoint) -> PhasePoint {
        PhasePoint::from_stacked(&self.m.matvec(&p.stacked()))
    }

    /// Matrix product, composing `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self { n: self.n, m: &self.m * &other.m }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self { n: self.n, m: inverse(&self.m)? })
    }

    pub fn conj(&self) -> Self {
        Self { n: self.n, m: self.m.conj() }
    }

    /// Worst violation of symplectic-form preservation over basis pairs,
    /// and whether it is below the canonical-defect tolerance.
    pub fn is_canonical(&self) -> (bool, f64) {
        let dim = 2 * self.n;
        let mut images = Vec::with_capacity(dim);
        for k in 0..dim {
            let mut e = vec![C64::ZERO; dim];
            e[k] = C64::ONE;
            images.push(self.apply(&PhasePoint::from_stacked(&e)));
        }
        let mut defect = 0.0f64;
        for j in 0..dim {
            for k in (j + 1)..dim {
                // sigma(e_j, e_k) is -1 on dual pairs (j, j + n), 0 otherwise
                let expected = if k == j + self.n { C64::new(-1.0, 0.0) } else { C64::ZERO };
                let got = symplectic_form(&images[j], &images[k]);
                defect = defect.max((got - expected).norm());
            }
        }
        let scale = 1.0 + self.m.max_abs().powi(2);
        (defect <= tol::CANONICAL_DEFECT * scale, defect)
    }

    /// Least eigenvalue of the Hermitian form
    /// `X -> -i (sigma(M X, conj(M X)) - sigma(X, conj(X)))`.
    /// Nonnegative exactly when the map is positive.
    pub fn positivity_defect(&self) -> Result<f64> {
        let dim = 2 * self.n;
        let form = |x: &PhasePoint, y: &PhasePoint| -> C64 {
            let mx = self.apply(x);
            let my = self.apply(y);
            let v = symplectic_form(&mx, &my.conj()) - symplectic_form(x, &y.conj());
            C64::new(0.0, -1.0) * v
        };
        // polarization over basis pairs: H[j][k] = form(e_k, e_j)
        let basis: Vec<PhasePoint> = (0..dim)
            .map(|k| {
                let mut e = vec![C64::ZERO; dim];
                e[k] = C64::ONE;
                PhasePoint::from_stacked(&e)
            })
            .collect();
        let mut h = ComplexMatrix::zeros(dim, dim);
        for j in 0..dim {
            for k in 0..dim {
                h[(j, k)] = form(&basis[k], &basis[j]);
            }
        }
        let scale = h.max_abs().max(1.0);
        let defect = h.hermitian_defect();
        if defect > 1e-11 * scale {
            return Err(Error::CrossCheck {
                context: "positivity form",
                detail: format!("polarized form is not Hermitian (defect {defect:.3e})"),
            });
        }
        min_eigenvalue(&h.hermitian_part())
    }
}

/// Generator `[[1, 0], [T, 1]]` of multiplication by the Gaussian with
/// symmetric matrix `T`.
pub fn skew_map(t: &ComplexMatrix) -> Result<CanonicalMap> {
    t.check_symmetric(tol::HERM_TOL)?;
    let n = t.rows();
    let id = ComplexMatrix::identity(n);
    let zero = ComplexMatrix::zeros(n, n);
    CanonicalMap::new(ComplexMatrix::from_blocks(&id, &zero, t, &id))
}

/// Generator `[[G^{-1}, 0], [0, G^T]]` of the change of variables `x -> Gx`.
pub fn scale_map(g: &ComplexMatrix) -> Result<CanonicalMap> {
    g.check_square()?;
    let n = g.rows();
    let g_inv = inverse(g)?;
    let zero = ComplexMatrix::zeros(n, n);
    CanonicalMap::new(ComplexMatrix::from_blocks(&g_inv, &zero, &zero, &g.transpose()))
}

/// The standard Bargmann canonical map `(1/sqrt 2) [[1, -i], [-i, 1]]`.
pub fn bargmann0_map(n: usize) -> CanonicalMap {
    let s = 1.0 / 2.0f64.sqrt();
    let diag = ComplexMatrix::scalar(n, C64::new(s, 0.0));
    let off = ComplexMatrix::scalar(n, C64::new(0.0, -s));
    CanonicalMap::new(ComplexMatrix::from_blocks(&diag, &off, &off, &diag))
        .expect("shape is even by construction")
}

/// The canonical matrix encoding the adjoint of phase-space shifts on the
/// weighted space of `phi`. Computed by two independent routes which must
/// agree: the factored congruence `conj(F)^{-1} [[0,1],[1,0]] F` with
/// `F = [[iL, 0], [iP, 1]]`, and the multiplied-out block form
/// `[[-conj(L^{-1}) P, i conj(L^{-1})], [i(L - conj(P L^{-1}) P), -conj(P L^{-1})]]`.
pub fn adjoint_map(phi: &QuadraticWeight) -> Result<CanonicalMap> {
    let n = phi.dim();
    let i = C64::new(0.0, 1.0);
    let l = phi.levi();
    let p = phi.pluri();

    // route 1: factored form
    let f = ComplexMatrix::from_blocks(
        &l.scale(i),
        &ComplexMatrix::zeros(n, n),
        &p.scale(i),
        &ComplexMatrix::identity(n),
    );
    let swap = ComplexMatrix::from_blocks(
        &ComplexMatrix::zeros(n, n),
        &ComplexMatrix::identity(n),
        &ComplexMatrix::identity(n),
        &ComplexMatrix::zeros(n, n),
    );
    let route1 = &inverse(&f.conj())? * &(&swap * &f);

    // route 2: multiplied out
    let l_inv = inverse(l)?;
    let l_inv_conj = l_inv.conj();
    let p_linv_conj = (p * &l_inv).conj();
    let a11 = (&l_inv_conj * p).scale(-C64::ONE);
    let a12 = l_inv_conj.scale(i);
    let a21 = (l - &(&p_linv_conj * p)).scale(i);
    let a22 = p_linv_conj.scale(-C64::ONE);
    let route2 = ComplexMatrix::from_blocks(&a11, &a12, &a21, &a22);

    let scale = route2.max_abs().max(1.0);
    let disagreement = (&route1 - &route2).max_abs();
    if disagreement > tol::ADJOINT_ROUTES * scale {
        return Err(Error::CrossCheck {
            context: "shift-adjoint matrix",
            detail: format!("construction routes differ by {disagreement:.3e}"),
        });
    }

    let map = CanonicalMap::new(route2)?;
    let (canonical, defect) = map.is_canonical();
    if !canonical {
        return Err(Error::CrossCheck {
            context: "shift-adjoint matrix",
            detail: format!("result is not canonical (defect {defect:.3e})"),
        });
    }
    // the map composed with its conjugate is the identity
    let invol = (&(&map.m.conj() * &map.m) - &ComplexMatrix::identity(2 * n)).max_abs();
    if invol > tol::ADJOINT_INVOLUTION * scale {
        return Err(Error::CrossCheck {
            context: "shift-adjoint matrix",
            detail: format!("involution residual {invol:.3e}"),
        });
    }
    Ok(map)
}

/// The canonical map of the unitary Bargmann transform onto the weighted
/// space of `phi`: skew by `-iP`, then scale by `L^{1/2}`, applied to the
/// standard Bargmann map.
pub fn bargmann_map(phi: &QuadraticWeight) -> Result<CanonicalMap> {
    let minus_i = C64::new(0.0, -1.0);
    let w = skew_map(&phi.pluri().scale(minus_i))?;
    let v = scale_map(&hermitian_sqrt_pd(phi.levi())?)?;
    Ok(w.compose(&v).compose(&bargmann0_map(phi.dim())))
}

/// Phase-space vector of the adjoint of the shift by `y`: `-conj(A y)` for
/// the shift-adjoint matrix `A` of the weight.
pub fn adjoint_shift_vector(phi: &QuadraticWeight, y: &PhasePoint) -> Result<PhasePoint> {
    if y.dim() != phi.dim() {
        return Err(Error::DimMismatch { expected: phi.dim(), got: y.dim() });
    }
    let a = adjoint_map(phi)?;
    Ok(a.apply(y).conj().neg())
}

/// Distance between `xi` and the totally real submanifold point above `x`;
/// zero exactly when the phase point lies on the manifold of the weight.
pub fn lambda_defect(phi: &QuadraticWeight, p: &PhasePoint) -> Result<f64> {
    let (_, eta) = phi.lambda_point(&p.x)?;
    Ok(vec_norm(&vec_sub(&p.xi, &eta)))
}

/// Eigenvalues of a Hermitian matrix; diagnostic helper.
pub fn hermitian_spectrum(m: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(eig_hermitian(m)?.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_weight(rng: &mut ChaCha8Rng, n: usize) -> QuadraticWeight {
        let g = ComplexMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.random_range(-0.7..0.7), rng.random_range(-0.7..0.7))
        });
        let levi = &(&g.adjoint() * &g) + &ComplexMatrix::scalar(n, C64::new(0.4, 0.0));
        let pluri = ComplexMatrix::from_fn(n, n, |_, _| {
            C64::new(rng.random_range(-0.4..0.4), rng.random_range(-0.4..0.4))
        })
        .symmetric_part();
        QuadraticWeight::new(levi, pluri).unwrap()
    }

    fn e(n: usize, k: usize) -> Vec<C64> {
        let mut v = vec![C64::ZERO; n];
        v[k] = C64::ONE;
        v
    }

    #[test]
    fn symplectic_form_basics() {
        let n = 2;
        let p = PhasePoint::new(e(n, 0), e(n, 1));
        assert_eq!(symplectic_form(&p, &p), C64::ZERO);

        let a = PhasePoint::new(vec![C64::ZERO; 1], e(1, 0));
        let b = PhasePoint::new(e(1, 0), vec![C64::ZERO; 1]);
        assert_eq!(symplectic_form(&a, &b), C64::ONE);
        assert_eq!(symplectic_form(&b, &a), -C64::ONE);
    }

    #[test]
    fn identity_is_canonical_doubling_is_not() {
        let id = CanonicalMap::identity(1);
        let (ok, defect) = id.is_canonical();
        assert!(ok);
        assert_eq!(defect, 0.0);

        let twice = CanonicalMap::new(ComplexMatrix::scalar(2, C64::new(2.0, 0.0))).unwrap();
        let (ok, defect) = twice.is_canonical();
        assert!(!ok);
        assert!((defect - 3.0).abs() < 1e-12, "sigma scales by 4, defect 3, got {defect}");
    }

    #[test]
    fn bargmann0_is_canonical() {
        for n in [1usize, 2, 3] {
            let (ok, _) = bargmann0_map(n).is_canonical();
            assert!(ok);
        }
    }

    #[test]
    fn generators_are_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        assert_eq!(
            skew_map(&ComplexMatrix::zeros(2, 2)).unwrap().matrix(),
            CanonicalMap::identity(2).matrix()
        );
        assert_eq!(
            scale_map(&ComplexMatrix::identity(2)).unwrap().matrix(),
            CanonicalMap::identity(2).matrix()
        );
        for n in [1usize, 2, 3] {
            let t = ComplexMatrix::from_fn(n, n, |_, _| {
                C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            })
            .symmetric_part();
            assert!(skew_map(&t).unwrap().is_canonical().0);
            let g = &ComplexMatrix::from_fn(n, n, |_, _| {
                C64::new(rng.random_range(-0.4..0.4), rng.random_range(-0.4..0.4))
            }) + &ComplexMatrix::scalar(n, C64::new(1.5, 0.0));
            assert!(scale_map(&g).unwrap().is_canonical().0);
        }
    }

    #[test]
    fn bargmann0_moves_standard_manifold_point() {
        // (1, -i) maps to (0, -sqrt(2) i)
        let b0 = bargmann0_map(1);
        let p = PhasePoint::new(vec![C64::ONE], vec![C64::new(0.0, -1.0)]);
        let image = b0.apply(&p);
        let s = 2.0f64.sqrt();
        assert!(image.x[0].norm() < 1e-15);
        assert!((image.xi[0] - C64::new(0.0, -s)).norm() < 1e-15);
    }

    #[test]
    fn adjoint_map_standard_weight() {
        let phi0 = QuadraticWeight::standard(1);
        let a = adjoint_map(&phi0).unwrap();
        let i = C64::new(0.0, 1.0);
        let expected = ComplexMatrix::from_rows(&[vec![C64::ZERO, i], vec![i, C64::ZERO]]);
        assert!((a.matrix() - &expected).max_abs() < 1e-14);
    }

    #[test]
    fn adjoint_map_example_pair_product() {
        // a = 3, b = 1 against the standard weight:
        // inv(A2) * A1 = (1/3) [[1, -i], [-i, 8]]
        let phi1 = QuadraticWeight::standard(1);
        let phi2 = QuadraticWeight::one_dim(3.0, C64::ONE).unwrap();
        let a1 = adjoint_map(&phi1).unwrap();
        let a2 = adjoint_map(&phi2).unwrap();
        let m = a2.inverse().unwrap().compose(&a1);
        let i = C64::new(0.0, 1.0);
        let third = 1.0 / 3.0;
        let expected = ComplexMatrix::from_rows(&[
            vec![C64::new(third, 0.0), -i.scale(third)],
            vec![-i.scale(third), C64::new(8.0 * third, 0.0)],
        ]);
        assert!((m.matrix() - &expected).max_abs() < 1e-12);
    }

    #[test]
    fn adjoint_map_conjugate_is_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for _ in 0..100 {
            let n = rng.random_range(1..=3usize);
            let phi = random_weight(&mut rng, n);
            let a = adjoint_map(&phi).unwrap();
            let prod = &a.matrix().conj() * a.matrix();
            assert!(
                (&prod - &ComplexMatrix::identity(2 * n)).max_abs()
                    <= tol::ADJOINT_INVOLUTION * (1.0 + a.matrix().max_abs())
            );
            let (ok, defect) = a.is_canonical();
            assert!(ok, "defect {defect}");
        }
    }

    #[test]
    fn positivity_identity_and_real_maps() {
        let id = CanonicalMap::identity(2);
        assert!(id.positivity_defect().unwrap().abs() < 1e-12);

        let g = ComplexMatrix::from_real_rows(&[vec![1.5, 0.3], vec![-0.2, 2.0]]);
        let v = scale_map(&g).unwrap();
        assert!(v.positivity_defect().unwrap().abs() < 1e-12);
    }

    #[test]
    fn positivity_matches_ordering_on_example_pair() {
        // strictly ordered pair: inv(B2) B1 is strictly positive
        let phi1 = QuadraticWeight::standard(1);
        let phi2 = QuadraticWeight::one_dim(3.0, C64::ONE).unwrap();
        let b1 = bargmann_map(&phi1).unwrap();
        let b2 = bargmann_map(&phi2).unwrap();
        let k = b2.inverse().unwrap().compose(&b1);
        let defect = k.positivity_defect().unwrap();
        assert!(defect > 1e-3, "expected strict positivity, got {defect}");

        // incomparable pair: strictly negative direction
        let phi3 = QuadraticWeight::one_dim(1.5, C64::ONE).unwrap();
        let b3 = bargmann_map(&phi3).unwrap();
        let k_bad = b3.inverse().unwrap().compose(&b1);
        assert!(k_bad.positivity_defect().unwrap() < -1e-3);
    }

    #[test]
    fn bargmann_map_factorization_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        // standard weight reduces to the plain Bargmann map
        let phi0 = QuadraticWeight::standard(2);
        let b = bargmann_map(&phi0).unwrap();
        assert!((b.matrix() - bargmann0_map(2).matrix()).max_abs() < 1e-14);

        for _ in 0..25 {
            let n = rng.random_range(1..=3usize);
            let phi = random_weight(&mut rng, n);
            let b = bargmann_map(&phi).unwrap();
            let (ok, defect) = b.is_canonical();
            assert!(ok, "defect {defect}");

            // conj(B) B^{-1} equals the shift-adjoint matrix
            let a = adjoint_map(&phi).unwrap();
            let rebuilt = b.conj().compose(&b.inverse().unwrap());
            assert!(
                (rebuilt.matrix() - a.matrix()).max_abs()
                    <= 1e-10 * (1.0 + a.matrix().max_abs()),
                "adjoint matrix mismatch"
            );

            // B maps real basis vectors onto the totally real submanifold
            for k in 0..2 * n {
                let mut v = vec![C64::ZERO; 2 * n];
                v[k] = C64::ONE;
                let image = b.apply(&PhasePoint::from_stacked(&v));
                let d = lambda_defect(&phi, &image).unwrap();
                assert!(d <= 1e-10 * (1.0 + image.norm()), "defect {d}");
            }
        }
    }

    #[test]
    fn adjoint_shift_vector_examples() {
        let phi0 = QuadraticWeight::standard(1);
        // Y = (1, 0) maps to (0, i)
        let y = PhasePoint::new(vec![C64::ONE], vec![C64::ZERO]);
        let z = adjoint_shift_vector(&phi0, &y).unwrap();
        assert!(z.x[0].norm() < 1e-14);
        assert!((z.xi[0] - C64::new(0.0, 1.0)).norm() < 1e-14);

        // on the totally real submanifold the adjoint is the inverse shift
        let y = PhasePoint::new(vec![C64::ONE], vec![C64::new(0.0, -1.0)]);
        let z = adjoint_shift_vector(&phi0, &y).unwrap();
        assert!((z.x[0] + C64::ONE).norm() < 1e-14);
        assert!((z.xi[0] - C64::new(0.0, 1.0)).norm() < 1e-14);

        let zero = PhasePoint::zero(1);
        let z = adjoint_shift_vector(&phi0, &zero).unwrap();
        assert_eq!(z.norm(), 0.0);
    }

    #[test]
    fn adjoint_is_involutive_and_fixes_manifold() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..50 {
            let n = rng.random_range(1..=3usize);
            let phi = random_weight(&mut rng, n);
            let rand_vec = |rng: &mut ChaCha8Rng| -> Vec<C64> {
                (0..n)
                    .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                    .collect()
            };
            let y = PhasePoint::new(rand_vec(&mut rng), rand_vec(&mut rng));
            let z = adjoint_shift_vector(&phi, &y).unwrap();
            let back = adjoint_shift_vector(&phi, &z).unwrap();
            let err = back.add(&y.neg()).norm();
            assert!(err <= 1e-10 * (1.0 + y.norm()), "involution error {err}");

            // manifold points are fixed by conj(A .)
            let (my, meta) = phi.lambda_point(&y.x).unwrap();
            let on_manifold = PhasePoint::new(my, meta);
            let a = adjoint_map(&phi).unwrap();
            let fixed = a.apply(&on_manifold).conj();
            let err = fixed.add(&on_manifold.neg()).norm();
            assert!(err <= 1e-10 * (1.0 + on_manifold.norm()), "fixed-point error {err}");
        }
    }

    #[test]
    fn random_generator_words_are_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..20 {
            let n = rng.random_range(1..=2usize);
            let mut word = CanonicalMap::identity(n);
            for _ in 0..rng.random_range(1..=4usize) {
                let pick: u8 = rng.random_range(0..3);
                let factor = match pick {
                    0 => {
                        let t = ComplexMatrix::from_fn(n, n, |_, _| {
                            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
                        })
                        .symmetric_part();
                        skew_map(&t).unwrap()
                    }
                    1 => {
                        let g = &ComplexMatrix::from_fn(n, n, |_, _| {
                            C64::new(rng.random_range(-0.3..0.3), rng.random_range(-0.3..0.3))
                        }) + &ComplexMatrix::scalar(n, C64::new(1.2, 0.0));
                        scale_map(&g).unwrap()
                    }
                    _ => bargmann0_map(n),
                };
                word = word.compose(&factor);
            }
            let (ok, defect) = word.is_canonical();
            assert!(ok, "defect {defect}");
        }
    }
}
