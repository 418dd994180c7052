//! The quartic of an FKM foliation and exact checks of its defining
//! differential identities.
//!
//! Convention: `F(x) = |x|^4 - 2 sum_i <P_i x, x>^2`. With this sign a unit
//! `+1`-eigenvector of `P_0` gives `F = -1`, and the focal set `F = +1`
//! carries multiplicity `m+` on its normal spheres.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{build_clifford_system, CliffordSystem};
use crate::error::{Error, Result};
use crate::liealg::FkmParams;
use crate::matrix::{dot, Matrix};
use crate::poly::{linear_forms, poly_dot, Poly};
use crate::rational::{int, Rational};

/// Largest order `2l` for which identities are expanded symbolically.
pub const SYMBOLIC_LIMIT: usize = 32;
/// Integer sample coordinates are drawn uniformly from `[-SAMPLE_BOUND, SAMPLE_BOUND]`.
pub const SAMPLE_BOUND: i64 = 1000;

#[derive(Clone, Debug)]
pub struct FkmFoliation {
    pub params: FkmParams,
    pub system: CliffordSystem,
    pub m_plus: i64,
    pub m_minus: i64,
    pub sphere_dim: usize,
}

impl FkmFoliation {
    /// Builds the foliation of a validated FKM datum (`m- >= 1`).
    pub fn new(params: FkmParams) -> Result<Self> {
        params.validate()?;
        Ok(Self::from_system(params, build_clifford_system(params)?))
    }

    /// Wraps an arbitrary system of matrices, for instance a perturbed one.
    pub fn from_system(params: FkmParams, system: CliffordSystem) -> Self {
        let l = system.l as i64;
        let m = system.m as i64;
        FkmFoliation { params, m_plus: m, m_minus: l - m - 1, sphere_dim: 2 * system.l - 1, system }
    }

    pub fn dim(&self) -> usize {
        2 * self.system.l
    }

    fn check_dim(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("point of length {} for order {}", x.len(), self.dim())));
        }
        Ok(())
    }

    /// `(P_i x, <P_i x, x>)` for every matrix of the system.
    fn images(&self, x: &[Rational]) -> Vec<(Vec<Rational>, Rational)> {
        self.system
            .matrices
            .iter()
            .map(|p| {
                let px = p.mul_vec(x).expect("order checked");
                let q = dot(&px, x);
                (px, q)
            })
            .collect()
    }

    /// Expected coefficient `8(m- - m+)` of `|x|^2` in the Laplacian.
    pub fn laplacian_coefficient(&self) -> i64 {
        8 * (self.m_minus - self.m_plus)
    }
}

pub fn cm_eval(f: &FkmFoliation, x: &[Rational]) -> Result<Rational> {
    f.check_dim(x)?;
    let r2 = dot(x, x);
    let sum: Rational = f.images(x).into_iter().map(|(_, q)| &q * &q).sum();
    Ok(&r2 * &r2 - int(2) * sum)
}

/// `4|x|^2 x - 8 sum_i <P_i x, x> P_i x`.
pub fn cm_gradient(f: &FkmFoliation, x: &[Rational]) -> Result<Vec<Rational>> {
    f.check_dim(x)?;
    let r2 = dot(x, x);
    let four_r2 = int(4) * &r2;
    let mut g: Vec<Rational> = x.iter().map(|v| &four_r2 * v).collect();
    for (px, q) in f.images(x) {
        let c = int(-8) * q;
        for (gi, pi) in g.iter_mut().zip(&px) {
            *gi += &c * pi;
        }
    }
    Ok(g)
}

/// `4|x|^2 Id + 8 x x^T - sum_i (16 (P_i x)(P_i x)^T + 8 <P_i x, x> P_i)`.
pub fn cm_hessian(f: &FkmFoliation, x: &[Rational]) -> Result<Matrix> {
    f.check_dim(x)?;
    let n = f.dim();
    let r2 = dot(x, x);
    let images = f.images(x);
    let mut h = Matrix::from_fn(n, n, |r, c| {
        let mut v = int(8) * &x[r] * &x[c];
        if r == c {
            v += int(4) * &r2;
        }
        v
    });
    for ((px, q), p) in images.iter().zip(&f.system.matrices) {
        let q8 = int(8) * q;
        for r in 0..n {
            for c in 0..n {
                let mut v = h.get(r, c) - int(16) * &px[r] * &px[c];
                let prc = p.get(r, c);
                if *prc != int(0) {
                    v -= &q8 * prc;
                }
                h.set(r, c, v);
            }
        }
    }
    Ok(h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityMode {
    Symbolic,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub mode: IdentityMode,
    pub passed: bool,
    /// Number of sample points, or `0` for a symbolic check.
    pub trials: usize,
    /// First sample index that failed, if any.
    pub first_failure: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MunznerReport {
    pub foliation: String,
    pub order: usize,
    pub m_plus: i64,
    pub m_minus: i64,
    pub laplacian_coefficient: i64,
    pub seed: Option<u64>,
    pub checks: Vec<IdentityCheck>,
}

impl MunznerReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Deterministic integer sample points of length `n`.
pub fn sample_points(n: usize, trials: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| (0..n).map(|_| int(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND))).collect()).collect()
}

fn first_failure(results: &[bool]) -> Option<usize> {
    results.iter().position(|ok| !ok)
}

/// Checks `|grad F|^2 = 16|x|^6` and `Laplacian F = 8(m- - m+)|x|^2` at
/// `trials` seeded points, using the closed-form gradient and Hessian.
pub fn verify_munzner(f: &FkmFoliation, trials: usize, seed: u64) -> Result<MunznerReport> {
    if trials == 0 {
        return Err(Error::InvalidParameters("trials must be at least 1".into()));
    }
    let points = sample_points(f.dim(), trials, seed);
    let coeff = int(f.laplacian_coefficient());
    let results: Vec<(bool, bool)> = points
        .par_iter()
        .map(|x| {
            let r2 = dot(x, x);
            let g = cm_gradient(f, x).expect("order checked");
            let grad_ok = dot(&g, &g) == int(16) * &r2 * &r2 * &r2;
            let lap = cm_hessian(f, x).expect("order checked").trace();
            (grad_ok, lap == &coeff * &r2)
        })
        .collect();
    let grad: Vec<bool> = results.iter().map(|r| r.0).collect();
    let lap: Vec<bool> = results.iter().map(|r| r.1).collect();
    let check = |name: &str, v: &[bool]| IdentityCheck {
        identity: name.into(),
        mode: IdentityMode::Sampled,
        passed: v.iter().all(|&b| b),
        trials,
        first_failure: first_failure(v),
    };
    Ok(MunznerReport {
        foliation: f.params.to_string(),
        order: f.dim(),
        m_plus: f.m_plus,
        m_minus: f.m_minus,
        laplacian_coefficient: f.laplacian_coefficient(),
        seed: Some(seed),
        checks: vec![check("gradient-norm", &grad), check("laplacian", &lap)],
    })
}

/// The quartic as a polynomial in `2l` variables.
pub fn cm_poly(f: &FkmFoliation) -> Poly {
    let n = f.dim();
    let mut r2 = Poly::zero();
    for j in 0..n {
        r2.add_assign(&Poly::var(j).mul(&Poly::var(j)));
    }
    let mut out = r2.mul(&r2);
    let xs: Vec<Poly> = (0..n).map(Poly::var).collect();
    for p in &f.system.matrices {
        let rows: Vec<Vec<Rational>> = (0..n).map(|r| p.row(r).to_vec()).collect();
        let q = poly_dot(&linear_forms(&rows), &xs);
        out.add_scaled(&q.mul(&q), &int(-2));
    }
    out
}

fn radius_power(n: usize, k: usize) -> Poly {
    let mut r2 = Poly::zero();
    for j in 0..n {
        r2.add_assign(&Poly::var(j).mul(&Poly::var(j)));
    }
    let mut out = Poly::constant(int(1));
    for _ in 0..k {
        out = out.mul(&r2);
    }
    out
}

/// Proves both identities by differentiating the expanded quartic.
pub fn verify_munzner_symbolic(f: &FkmFoliation) -> Result<MunznerReport> {
    let n = f.dim();
    if n > SYMBOLIC_LIMIT {
        return Err(Error::Unsupported(format!("symbolic expansion is limited to order {SYMBOLIC_LIMIT}, got {n}")));
    }
    let poly = cm_poly(f);
    let grads: Vec<Poly> = (0..n).map(|j| poly.partial(j)).collect();
    let norm = poly_dot(&grads, &grads);
    let grad_ok = norm.sub(&radius_power(n, 3).scale(&int(16))).is_zero();
    let mut lap = Poly::zero();
    for (j, g) in grads.iter().enumerate() {
        lap.add_assign(&g.partial(j));
    }
    let lap_ok = lap.sub(&radius_power(n, 1).scale(&int(f.laplacian_coefficient()))).is_zero();
    let check = |name: &str, ok: bool| IdentityCheck {
        identity: name.into(),
        mode: IdentityMode::Symbolic,
        passed: ok,
        trials: 0,
        first_failure: None,
    };
    Ok(MunznerReport {
        foliation: f.params.to_string(),
        order: n,
        m_plus: f.m_plus,
        m_minus: f.m_minus,
        laplacian_coefficient: f.laplacian_coefficient(),
        seed: None,
        checks: vec![check("gradient-norm", grad_ok), check("laplacian", lap_ok)],
    })
}

/// The polynomial `<grad F(x), J x>`, which vanishes identically exactly when
/// the one-parameter group `exp(tJ)` preserves `F`.
pub fn skew_pairing_poly(f: &FkmFoliation, j: &Matrix) -> Result<Poly> {
    let n = f.dim();
    if j.rows() != n || j.cols() != n {
        return Err(Error::DimensionMismatch(format!("matrix of order {}x{} for order {n}", j.rows(), j.cols())));
    }
    let poly = cm_poly(f);
    let grads: Vec<Poly> = (0..n).map(|k| poly.partial(k)).collect();
    let rows: Vec<Vec<Rational>> = (0..n).map(|r| j.row(r).to_vec()).collect();
    Ok(poly_dot(&grads, &linear_forms(&rows)))
}

/// Indices of sample points where `<grad F(x), J x> != 0`.
pub fn skew_pairing_failures(f: &FkmFoliation, j: &Matrix, points: &[Vec<Rational>]) -> Result<Vec<usize>> {
    let n = f.dim();
    if j.rows() != n || j.cols() != n {
        return Err(Error::DimensionMismatch(format!("matrix of order {}x{} for order {n}", j.rows(), j.cols())));
    }
    let zero = int(0);
    let bad: Vec<bool> = points
        .par_iter()
        .map(|x| {
            let g = cm_gradient(f, x).expect("order checked");
            let jx = j.mul_vec(x).expect("order checked");
            dot(&g, &jx) != zero
        })
        .collect();
    Ok(bad.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SphereContext {
    pub n: Option<usize>,
    pub valid: bool,
}

/// The quaternionic projective space `HP^n` with `2l = 4n + 4`, if any.
pub fn sphere_context(f: &FkmFoliation) -> SphereContext {
    let d = f.dim();
    if d.is_multiple_of(4) && d >= 4 {
        SphereContext { n: Some(d / 4 - 1), valid: true }
    } else {
        SphereContext { n: None, valid: false }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn fol(m: usize, k: usize) -> FkmFoliation {
        FkmFoliation::new(FkmParams::single(m, k)).unwrap()
    }

    #[test]
    fn eigenvector_and_origin() {
        let f = fol(3, 2);
        let mut x = vec![int(0); 16];
        x[0] = int(1);
        assert_eq!(cm_eval(&f, &x).unwrap(), int(-1));
        assert_eq!(cm_eval(&f, &vec![int(0); 16]).unwrap(), int(0));
        assert!(cm_eval(&f, &vec![int(0); 15]).is_err());
    }

    #[test]
    fn multiplicities_and_context() {
        let f = fol(1, 4);
        assert_eq!((f.m_plus, f.m_minus), (1, 2));
        assert_eq!(f.laplacian_coefficient(), 8);
        assert_eq!(f.m_plus + f.m_minus + 1, f.system.l as i64);
        assert_eq!(f.sphere_dim, 7);
        assert_eq!(sphere_context(&fol(3, 2)), SphereContext { n: Some(3), valid: true });
        assert_eq!(sphere_context(&f), SphereContext { n: Some(1), valid: true });
        assert!(!sphere_context(&fol(1, 3)).valid);
    }

    #[test]
    fn sampled_identities() {
        for f in [fol(3, 2), fol(1, 4), fol(2, 3)] {
            let rep = verify_munzner(&f, 20, 7).unwrap();
            assert!(rep.passed(), "{:?}", rep);
        }
    }

    #[test]
    fn symbolic_identities() {
        let f = fol(3, 2);
        let rep = verify_munzner_symbolic(&f).unwrap();
        assert!(rep.passed(), "{:?}", rep);
        assert!(verify_munzner_symbolic(&fol(1, 4)).unwrap().passed());
    }

    #[test]
    fn symbolic_quartic_agrees_with_evaluation() {
        let f = fol(2, 2);
        let poly = cm_poly(&f);
        for x in sample_points(f.dim(), 5, 3) {
            assert_eq!(poly.eval(&x), cm_eval(&f, &x).unwrap());
        }
    }

    #[test]
    fn perturbed_system_fails() {
        let p = FkmParams::single(3, 2);
        let mut sys = build_clifford_system(p).unwrap();
        // Keep symmetry, break the anticommutation relations.
        let v = sys.matrices[1].get(0, 9) + int(1);
        sys.matrices[1].set(0, 9, v.clone());
        sys.matrices[1].set(9, 0, v);
        let f = FkmFoliation::from_system(p, sys);
        assert!(!verify_munzner(&f, 5, 1).unwrap().passed());
        assert!(!verify_munzner_symbolic(&f).unwrap().passed());
    }

    #[test]
    fn commutant_generators_preserve() {
        let f = fol(3, 2);
        for (b, g) in &f.system.commutant {
            let c = f.system.commutant_matrix(*b, g);
            assert!(skew_pairing_poly(&f, &c).unwrap().is_zero(), "{g:?}");
        }
    }

    #[test]
    fn symbolic_limit_enforced() {
        assert!(matches!(verify_munzner_symbolic(&fol(9, 2)), Err(Error::Unsupported(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn homogeneity_euler_and_range(v in proptest::collection::vec((-30i64..31, 1i64..5), 8)) {
            let f = fol(1, 4);
            let x: Vec<Rational> = v.iter().map(|&(n, d)| rat(n, d)).collect();
            let fx = cm_eval(&f, &x).unwrap();
            let x2: Vec<Rational> = x.iter().map(|a| a * int(2)).collect();
            prop_assert_eq!(cm_eval(&f, &x2).unwrap(), &fx * int(16));
            let g = cm_gradient(&f, &x).unwrap();
            prop_assert_eq!(dot(&g, &x), &fx * int(4));
            let r2 = dot(&x, &x);
            let r4 = &r2 * &r2;
            prop_assert!(fx <= r4.clone() && fx >= -r4);
        }

        #[test]
        fn gradient_matches_exact_difference(
            v in proptest::collection::vec(-20i64..21, 8),
            d in proptest::collection::vec(-20i64..21, 8),
            t in 1i64..50,
        ) {
            // F(x + t d) - F(x) - t <grad F(x), d> - t^2/2 d^T H d is O(t^3);
            // the cubic and quartic terms are computed from the polynomial.
            let f = fol(1, 4);
            let x: Vec<Rational> = v.iter().map(|&a| int(a)).collect();
            let dir: Vec<Rational> = d.iter().map(|&a| int(a)).collect();
            let t = rat(1, t);
            let moved: Vec<Rational> = x.iter().zip(&dir).map(|(a, b)| a + &t * b).collect();
            let g = cm_gradient(&f, &x).unwrap();
            let h = cm_hessian(&f, &x).unwrap();
            let hd = h.mul_vec(&dir).unwrap();
            let second = dot(&dir, &hd) * &t * &t / int(2);
            let remainder = cm_eval(&f, &moved).unwrap() - cm_eval(&f, &x).unwrap() - &t * dot(&g, &dir) - second;
            // Remainder = t^3 C + t^4 F(d), with C the cubic Taylor term.
            let quartic = cm_eval(&f, &dir).unwrap() * &t * &t * &t * &t;
            let cubic = &remainder - &quartic;
            let t3 = &t * &t * &t;
            // C must be independent of t: check against t = 1.
            let moved1: Vec<Rational> = x.iter().zip(&dir).map(|(a, b)| a + b).collect();
            let c1 = cm_eval(&f, &moved1).unwrap() - cm_eval(&f, &x).unwrap() - dot(&g, &dir) - dot(&dir, &hd) / int(2) - cm_eval(&f, &dir).unwrap();
            prop_assert_eq!(cubic / t3, c1);
        }
    }
}
