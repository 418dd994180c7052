//! Explicit quaternionic structures `(J1, J2, J3)` realized from su2
//! witnesses, and exact checks that they preserve a foliation.

use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{quat_left, quat_right, CommutantType};
use crate::error::{Error, Result};
use crate::fkm::{cm_eval, sample_points, skew_pairing_failures, skew_pairing_poly, FkmFoliation, SYMBOLIC_LIMIT};
use crate::liealg::su2::{part_basis, realify};
use crate::liealg::{Family, RepDescriptor, Su2Witness, WitnessPart};
use crate::matrix::Matrix;
use crate::rational::{int, one, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatTriple {
    pub j: [Matrix; 3],
}

impl QuatTriple {
    pub fn order(&self) -> usize {
        self.j[0].rows()
    }

    /// The action of the unit quaternion `a0 + a1 i + a2 j + a3 k`.
    pub fn element(&self, a: &[Rational; 4]) -> Matrix {
        let n = self.order();
        let mut out = Matrix::identity(n).scale(&a[0]);
        for (ji, ai) in self.j.iter().zip(&a[1..]) {
            out = &out + &ji.scale(ai);
        }
        out
    }
}

/// Where a witness is realized: a classical matrix model or an FKM module.
/// Joins are handled by [`join_triples`].
#[derive(Clone, Debug)]
pub enum MatrixModel {
    Classical(RepDescriptor),
    Fkm(Box<FkmFoliation>),
}

impl MatrixModel {
    pub fn order(&self) -> usize {
        match self {
            MatrixModel::Classical(r) => r.dim,
            MatrixModel::Fkm(f) => f.dim(),
        }
    }
}

/// Real and imaginary parts of a realified complex matrix.
fn complexify(r: &Matrix) -> (Matrix, Matrix) {
    let (n, m) = (r.rows() / 2, r.cols() / 2);
    (Matrix::from_fn(n, m, |a, b| r.get(2 * a, 2 * b).clone()), Matrix::from_fn(n, m, |a, b| r.get(2 * a + 1, 2 * b).clone()))
}

/// Quaternionic components `(A0, A1, A2, A3)` of a realified `2k x 2k`
/// complex matrix `[[A, -B], [conj B, conj A]]` with `Q = A + B j`.
fn quaternionify(r: &Matrix) -> [Matrix; 4] {
    let (re, im) = complexify(r);
    let k = re.rows() / 2;
    let tl = |m: &Matrix| Matrix::from_fn(k, k, |a, b| m.get(a, b).clone());
    let tr = |m: &Matrix| Matrix::from_fn(k, k, |a, b| -m.get(a, k + b));
    [tl(&re), tl(&im), tr(&re), tr(&im)]
}

/// Real `4x4` matrix of left (`right = false`) or right multiplication by a
/// quaternion with components `q`.
fn quat_mult(q: [&Rational; 4], right: bool) -> Matrix {
    let units = if right { quat_right() } else { quat_left() };
    let mut out = Matrix::identity(4).scale(q[0]);
    for (u, c) in units.iter().zip(&q[1..]) {
        out = &out + &u.scale(c);
    }
    out
}

/// Action of `M -> X M - M Y` on quaternionic `p x q` matrices. Either side
/// may be absent.
fn quaternionic_bimodule(x: Option<&[Matrix; 4]>, y: Option<&[Matrix; 4]>, p: usize, q: usize) -> Matrix {
    let n = 4 * p * q;
    let mut out = Matrix::zeros(n, n);
    let idx = |r: usize, s: usize| 4 * (r * q + s);
    let mut add_block = |row: usize, col: usize, b: &Matrix, sign: i64| {
        for i in 0..4 {
            for j in 0..4 {
                let v = out.get(row + i, col + j) + int(sign) * b.get(i, j);
                out.set(row + i, col + j, v);
            }
        }
    };
    if let Some(x) = x {
        for r in 0..p {
            for c in 0..p {
                let b = quat_mult([x[0].get(r, c), x[1].get(r, c), x[2].get(r, c), x[3].get(r, c)], false);
                if b.is_zero() {
                    continue;
                }
                for s in 0..q {
                    add_block(idx(r, s), idx(c, s), &b, 1);
                }
            }
        }
    }
    if let Some(y) = y {
        for t in 0..q {
            for s in 0..q {
                let b = quat_mult([y[0].get(t, s), y[1].get(t, s), y[2].get(t, s), y[3].get(t, s)], true);
                if b.is_zero() {
                    continue;
                }
                for r in 0..p {
                    add_block(idx(r, s), idx(r, t), &b, -1);
                }
            }
        }
    }
    out
}

fn part_of(w: &Su2Witness, factor: usize) -> Option<&WitnessPart> {
    w.parts.iter().find(|p| p.factor == factor)
}

/// The image of one basis vector `X_i` (`i = 0, 1, 2`) of the witness.
fn classical_image(rep: &RepDescriptor, w: &Su2Witness, i: usize) -> Result<Matrix> {
    let basis = |f: usize| part_of(w, f).map(|p| part_basis(p)[i].clone());
    let fdim = |f: usize| crate::liealg::su2::defining_dim(rep.factors[f].factor);
    let zero_or = |m: Option<Matrix>, d: usize| m.unwrap_or_else(|| Matrix::zeros(d, d));
    match rep.family {
        Family::AIII { p, q } => {
            let (xr, xi) = complexify(&zero_or(basis(0), 2 * p));
            let (yr, yi) = complexify(&zero_or(basis(1), 2 * q));
            let re = &xr.kron(&Matrix::identity(q)) - &Matrix::identity(p).kron(&yr.transpose());
            let im = &xi.kron(&Matrix::identity(q)) - &Matrix::identity(p).kron(&yi.transpose());
            Ok(realify(&re, &im))
        }
        Family::BI { p, q } => {
            let x = zero_or(basis(0), 2 * p);
            let y = if rep.factors.len() > 1 { zero_or(basis(1), fdim(1)) } else { Matrix::zeros(1, 1) };
            Ok(&x.kron(&Matrix::identity(2 * q + 1)) + &Matrix::identity(2 * p).kron(&y))
        }
        Family::DI { p, q } => {
            let x = zero_or(basis(0), 2 * p);
            let y = zero_or(basis(1), 2 * q);
            Ok(&x.kron(&Matrix::identity(2 * q)) + &Matrix::identity(2 * p).kron(&y))
        }
        Family::CII { p, q } => {
            let x = basis(0).map(|m| quaternionify(&m));
            let y = basis(1).map(|m| quaternionify(&m));
            Ok(quaternionic_bimodule(x.as_ref(), y.as_ref(), p, q))
        }
        Family::Sphere { d } => Ok(zero_or(basis(0), d)),
        ref other => Err(Error::Unrealizable(format!("no matrix model for {other}"))),
    }
}

/// Spin action `X -> 1/4 sum_{a != b} X_ab P_a P_b` of `so(m+1)`.
fn spin_image(f: &FkmFoliation, x: &Matrix) -> Matrix {
    let ps = &f.system.matrices;
    let n = f.dim();
    let mut out = Matrix::zeros(n, n);
    let quarter = Rational::new(1.into(), 4.into());
    for a in 0..x.rows() {
        for b in 0..x.cols() {
            let c = x.get(a, b);
            if a == b || *c == int(0) {
                continue;
            }
            let prod = &ps[a] * &ps[b];
            out = &out + &prod.scale(&(c * &quarter));
        }
    }
    out
}

/// Copy block of the commutant corresponding to catalog factor `factor`.
fn fkm_block(f: &FkmFoliation, factor: usize) -> Option<(usize, usize)> {
    let min = if f.system.commutant_type == CommutantType::Orthogonal { 2 } else { 1 };
    f.system.copy_blocks.iter().copied().filter(|(s, e)| e - s >= min).nth(factor.checked_sub(1)?)
}

/// Image of a defining-representation matrix of the second factor in the
/// commutant, acting on `R^l` and doubled to `R^{2l}`.
fn commutant_image(f: &FkmFoliation, factor: usize, x: &Matrix) -> Result<Matrix> {
    let (s, e) = fkm_block(f, factor).ok_or_else(|| Error::Unrealizable(format!("no commutant block for factor {factor}")))?;
    let sys = &f.system;
    let total = sys.l / sys.delta();
    let embed = |a: &Matrix| Matrix::from_fn(total, total, |r, c| {
        if (s..e).contains(&r) && (s..e).contains(&c) {
            a.get(r - s, c - s).clone()
        } else {
            int(0)
        }
    });
    let id = Matrix::identity(sys.delta());
    let half = match sys.commutant_type {
        CommutantType::Orthogonal => embed(x).kron(&id),
        CommutantType::Unitary => {
            let (re, im) = complexify(x);
            &embed(&re).kron(&id) + &embed(&im).kron(&sys.units[0])
        }
        CommutantType::Symplectic => {
            let q = quaternionify(x);
            let mut acc = embed(&q[0]).kron(&id);
            for (qs, u) in q[1..].iter().zip(&sys.units) {
                acc = &acc + &embed(qs).kron(u);
            }
            acc
        }
    };
    Ok(Matrix::block_diag(&[half.clone(), half]))
}

fn fkm_image(f: &FkmFoliation, w: &Su2Witness, i: usize) -> Result<Matrix> {
    let n = f.dim();
    let mut out = Matrix::zeros(n, n);
    for p in &w.parts {
        let x = &part_basis(p)[i];
        let img = if p.factor == 0 { spin_image(f, x) } else { commutant_image(f, p.factor, x)? };
        out = &out + &img;
    }
    Ok(out)
}

/// Images of the normalized su2 basis of the witness. Basis vectors satisfy
/// `[X_i, X_{i+1}] = 2 X_{i+2}`, so a faithful realization on a module whose
/// weights on `X_1` are `±1` squares to `-Id`.
pub fn realize_witness(w: &Su2Witness, model: &MatrixModel) -> Result<QuatTriple> {
    if w.parts.is_empty() {
        return Err(Error::Unrealizable("empty witness".into()));
    }
    let mut j: Vec<Matrix> = Vec::with_capacity(3);
    for i in 0..3 {
        j.push(match model {
            MatrixModel::Classical(rep) => {
                if let Some(p) = w.parts.iter().find(|p| p.factor >= rep.factors.len() || rep.factors[p.factor].factor != p.factor_type) {
                    return Err(Error::Unrealizable(format!("witness part on factor {} does not match {}", p.factor, rep.family)));
                }
                classical_image(rep, w, i)?
            }
            MatrixModel::Fkm(f) => fkm_image(f, w, i)?,
        });
    }
    let [a, b, c]: [Matrix; 3] = j.try_into().expect("three images");
    Ok(QuatTriple { j: [a, b, c] })
}

/// Block-diagonal triple on a direct sum.
pub fn join_triples(parts: &[QuatTriple]) -> Result<QuatTriple> {
    if parts.is_empty() {
        return Err(Error::EmptyJoin("no summands".into()));
    }
    let take = |i: usize| Matrix::block_diag(&parts.iter().map(|t| t.j[i].clone()).collect::<Vec<_>>());
    Ok(QuatTriple { j: [take(0), take(1), take(2)] })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub checks: Vec<NamedCheck>,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: String, passed: bool) {
        self.checks.push(NamedCheck { name, passed });
    }
}

/// Skewness, `J_i^2 = -Id`, `J_i J_{i+1} = J_{i+2}` and anticommutation.
pub fn verify_triple(t: &QuatTriple) -> TripleReport {
    let mut rep = TripleReport::default();
    let n = t.order();
    let square = t.j.iter().all(|m| m.rows() == n && m.cols() == n);
    rep.push("orders".into(), square);
    if !square {
        return rep;
    }
    let minus_id = Matrix::identity(n).scale(&int(-1));
    for (i, m) in t.j.iter().enumerate() {
        rep.push(format!("J{} skew", i + 1), m.is_skew());
        rep.push(format!("J{}^2 = -Id", i + 1), (m * m) == minus_id);
    }
    for i in 0..3 {
        let (a, b, c) = (i, (i + 1) % 3, (i + 2) % 3);
        rep.push(format!("J{}J{} = J{}", a + 1, b + 1, c + 1), (&t.j[a] * &t.j[b]) == t.j[c]);
        rep.push(format!("J{}J{} = -J{}J{}", a + 1, b + 1, b + 1, a + 1), t.j[a].anticommutator(&t.j[b]).map(|x| x.is_zero()).unwrap_or(false));
    }
    rep
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum PreservationMode {
    Symbolic,
    Sampled { trials: usize, seed: u64 },
}

impl PreservationMode {
    /// Symbolic when the order allows it, otherwise sampled.
    pub fn auto(order: usize, trials: usize, seed: u64) -> Self {
        if order <= SYMBOLIC_LIMIT {
            PreservationMode::Symbolic
        } else {
            PreservationMode::Sampled { trials, seed }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreservationReport {
    pub mode: PreservationMode,
    /// Whether `<grad F(x), J_i x>` vanishes, for each generator.
    pub generators: Vec<bool>,
}

impl PreservationReport {
    pub fn passed(&self) -> bool {
        self.generators.iter().all(|&b| b)
    }
}

/// Checks `<grad F(x), J_i x> = 0` for each `J_i` of the triple.
pub fn preserves_fkm(f: &FkmFoliation, t: &QuatTriple, mode: PreservationMode) -> Result<PreservationReport> {
    let generators = match mode {
        PreservationMode::Symbolic => {
            if f.dim() > SYMBOLIC_LIMIT {
                return Err(Error::Unsupported(format!("symbolic expansion is limited to order {SYMBOLIC_LIMIT}")));
            }
            t.j.par_iter().map(|j| skew_pairing_poly(f, j).map(|p| p.is_zero())).collect::<Result<Vec<_>>>()?
        }
        PreservationMode::Sampled { trials, seed } => {
            if trials == 0 {
                return Err(Error::InvalidParameters("trials must be at least 1".into()));
            }
            let pts = sample_points(f.dim(), trials, seed);
            t.j.iter().map(|j| skew_pairing_failures(f, j, &pts).map(|v| v.is_empty())).collect::<Result<Vec<_>>>()?
        }
    };
    Ok(PreservationReport { mode, generators })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub samples: usize,
    /// `F(q p) == F(p)` per grid point, in grid order.
    pub equal: Vec<bool>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.equal.iter().all(|&b| b)
    }
}

/// Compares `F(q p)` with `F(p)` for unit quaternions `q` on a rational grid.
pub fn hopf_orbit_sample(f: &FkmFoliation, t: &QuatTriple, p: &[Rational], grid: &[[Rational; 4]]) -> Result<HopfReport> {
    let base = cm_eval(f, p)?;
    let mut equal = Vec::with_capacity(grid.len());
    for a in grid {
        let norm: Rational = a.iter().map(|x| x * x).sum();
        if norm != one() {
            let text: Vec<String> = a.iter().map(crate::rational::to_text).collect();
            return Err(Error::NotUnitQuaternion(format!("({})", text.join(", "))));
        }
        let qp = t.element(a).mul_vec(p)?;
        equal.push(cm_eval(f, &qp)? == base);
    }
    Ok(HopfReport { samples: grid.len(), equal })
}

/// Unit quaternions built from Pythagorean triples, for orbit sampling.
pub fn pythagorean_grid() -> Vec<[Rational; 4]> {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let z = || int(0);
    vec![
        [int(1), z(), z(), z()],
        [r(3, 5), r(4, 5), z(), z()],
        [r(3, 5), z(), r(4, 5), z()],
        [r(3, 5), z(), z(), r(-4, 5)],
        [r(1, 3), r(2, 3), r(2, 3), z()],
        [r(1, 2), r(1, 2), r(1, 2), r(1, 2)],
        [r(2, 7), r(3, 7), z(), r(6, 7)],
        [z(), r(2, 3), r(-1, 3), r(2, 3)],
    ]
}

/// Conjugates a matrix by the transposition of coordinates `a` and `b`.
pub fn swap_conjugate(m: &Matrix, a: usize, b: usize) -> Matrix {
    let sw = |i: usize| if i == a { b } else if i == b { a } else { i };
    Matrix::from_fn(m.rows(), m.cols(), |r, c| m.get(sw(r), sw(c)).clone())
}

/// Which factor kinds have a classical matrix model.
pub fn has_classical_model(rep: &RepDescriptor) -> bool {
    matches!(rep.family, Family::AIII { .. } | Family::BI { .. } | Family::CII { .. } | Family::DI { .. } | Family::Sphere { .. })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{in_su2, CartanElement, FkmParams, Membership};
    use crate::rational::rat;

    fn witness(rep: &RepDescriptor, h: Vec<Rational>) -> Su2Witness {
        match in_su2(&CartanElement(h), rep) {
            Membership::Member(w) => w,
            other => panic!("not a member: {other:?}"),
        }
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn quaternion_units_multiply() {
        let [li, lj, lk] = quat_left();
        let [ri, rj, rk] = quat_right();
        assert_eq!(&li * &lj, lk);
        assert_eq!(&ri * &rj, -&rk);
        for l in [&li, &lj, &lk] {
            for r in [&ri, &rj, &rk] {
                assert!(l.commutator(r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn fkm_structures_realize_and_preserve() {
        let f = FkmFoliation::new(FkmParams::single(3, 2)).unwrap();
        let rep = RepDescriptor::parse("FKM(3;2)").unwrap();
        let model = MatrixModel::Fkm(Box::new(f.clone()));
        for h in [ints(&[-2, 0, 0, 0]), ints(&[0, 0, -1, -1])] {
            let w = witness(&rep, h);
            let t = realize_witness(&w, &model).unwrap();
            assert_eq!(t.order(), 16);
            let r = verify_triple(&t);
            assert!(r.passed(), "{:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
            assert!(preserves_fkm(&f, &t, PreservationMode::Symbolic).unwrap().passed());
            let mut p = ints(&[1, 2, 0, -1, 3, 0, 1, 1, 0, 2, -2, 1, 0, 0, 1, 5]);
            p[3] = rat(1, 2);
            assert!(hopf_orbit_sample(&f, &t, &p, &pythagorean_grid()).unwrap().passed());
            let bad = swap_conjugate(&t.j[0], 0, f.system.l);
            let mutated = QuatTriple { j: [bad, t.j[1].clone(), t.j[2].clone()] };
            assert!(!preserves_fkm(&f, &mutated, PreservationMode::Symbolic).unwrap().generators[0]);
            assert!(!preserves_fkm(&f, &mutated, PreservationMode::Sampled { trials: 5, seed: 3 }).unwrap().generators[0]);
        }
    }

    #[test]
    fn sign_mutation_fails() {
        let rep = RepDescriptor::parse("Sphere(8)").unwrap();
        let w = witness(&rep, ints(&[1, 1, 1, 1]));
        let t = realize_witness(&w, &MatrixModel::Classical(rep)).unwrap();
        assert!(verify_triple(&t).passed());
        let flipped = QuatTriple { j: [t.j[0].clone(), t.j[1].clone(), -&t.j[2]] };
        assert!(!verify_triple(&flipped).passed());
        let mut ns = t.j[0].clone();
        ns.set(0, 1, int(5));
        assert!(!verify_triple(&QuatTriple { j: [ns, t.j[1].clone(), t.j[2].clone()] }).passed());
    }

    #[test]
    fn classical_models_realize() {
        let cases: Vec<(&str, Vec<Rational>)> = vec![
            ("AIII(2,2)", ints(&[1, -1, 0, 0])),
            ("AIII(2,3)", ints(&[1, -1, 0, 0, 0])),
            ("DI(2,2)", ints(&[1, -1, 0, 0])),
            ("DI(2,3)", ints(&[1, 1, 0, 0, 0])),
            ("BI(2,1)", ints(&[1, 1, 0])),
            ("CII(2,2)", ints(&[1, 1, 0, 0])),
        ];
        for (s, h) in cases {
            let rep = RepDescriptor::parse(s).unwrap();
            let w = witness(&rep, h);
            let t = realize_witness(&w, &MatrixModel::Classical(rep.clone())).unwrap();
            assert_eq!(t.order(), rep.dim, "{s}");
            let r = verify_triple(&t);
            assert!(r.passed(), "{s}: {:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
        }
    }

    #[test]
    fn non_unit_grid_point_is_rejected() {
        let f = FkmFoliation::new(FkmParams::single(3, 2)).unwrap();
        let rep = RepDescriptor::parse("FKM(3;2)").unwrap();
        let w = witness(&rep, ints(&[0, 0, -1, -1]));
        let t = realize_witness(&w, &MatrixModel::Fkm(Box::new(f.clone()))).unwrap();
        let mut p = vec![int(0); 16];
        p[0] = int(1);
        let bad = [[int(1), int(1), int(0), int(0)]];
        assert!(matches!(hopf_orbit_sample(&f, &t, &p, &bad), Err(Error::NotUnitQuaternion(_))));
    }
}
