//! Symmetric Clifford systems with entries in `{-1, 0, 1}`.
//!
//! Irreducible skew families are built explicitly from quaternion
//! multiplication tables and tensor products, then periodically lifted in
//! steps of eight generators. A system of order `2l` is assembled from `k`
//! (or `k+ + k-`) copies.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linsolve::nullspace;
use crate::liealg::{FkmModules, FkmParams};
use crate::matrix::Matrix;
use crate::rational::{int, Rational};
use crate::sparse::SparseInt;

/// Half the real dimension of an irreducible module of the Clifford algebra
/// on `m + 1` generators.
pub fn delta(m: usize) -> usize {
    assert!(m >= 1, "delta is defined for m >= 1");
    const BASE: [usize; 8] = [1, 2, 4, 4, 8, 8, 8, 8];
    BASE[(m - 1) % 8] * 16usize.pow(((m - 1) / 8) as u32)
}

fn eps2() -> Matrix {
    Matrix::from_i64(&[&[0, -1], &[1, 0]])
}

fn sigma_x() -> Matrix {
    Matrix::from_i64(&[&[0, 1], &[1, 0]])
}

fn sigma_z() -> Matrix {
    Matrix::from_i64(&[&[1, 0], &[0, -1]])
}

/// Left multiplication by `i`, `j`, `k` on the quaternions, basis `(1, i, j, k)`.
pub fn quat_left() -> [Matrix; 3] {
    [
        Matrix::from_i64(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]),
        Matrix::from_i64(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]),
        Matrix::from_i64(&[&[0, 0, 0, -1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]),
    ]
}

/// Right multiplication by `i`, `j`, `k`.
pub fn quat_right() -> [Matrix; 3] {
    [
        Matrix::from_i64(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]),
        Matrix::from_i64(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0]]),
        Matrix::from_i64(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]]),
    ]
}

/// The seven anticommuting complex structures on `R^8`.
fn octo_family() -> Vec<Matrix> {
    let l = quat_left();
    let r = quat_right();
    let mut out: Vec<Matrix> = l.iter().map(|x| x.kron(&sigma_z())).collect();
    out.push(Matrix::identity(4).kron(&eps2()));
    out.extend(r.iter().map(|x| x.kron(&sigma_x())));
    out
}

/// `n` anticommuting skew matrices squaring to `-Id` on an irreducible
/// module of dimension `delta(n + 1)`.
pub fn irreducible_family(n: usize) -> Vec<Matrix> {
    if n >= 8 {
        let base = irreducible_family(n - 8);
        let d = delta(n - 7);
        // Eight anticommuting generators on R^16.
        let mut g: Vec<Matrix> = octo_family().iter().map(|e| e.kron(&sigma_z())).collect();
        g.push(Matrix::identity(8).kron(&eps2()));
        let omega = g.iter().skip(1).fold(g[0].clone(), |acc, x| &acc * x);
        let mut out: Vec<Matrix> = base.iter().map(|e| e.kron(&omega)).collect();
        out.extend(g.iter().map(|x| Matrix::identity(d).kron(x)));
        return out;
    }
    match n {
        0 => vec![],
        1 => vec![eps2()],
        2 | 3 => quat_left().into_iter().take(n).collect(),
        _ => octo_family().into_iter().take(n).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CommutantType {
    Orthogonal,
    Unitary,
    Symplectic,
}

/// Real structure maps of an irreducible module commuting with its skew
/// family: none, one complex structure, or three quaternion units.
fn module_units(m: usize) -> Vec<Matrix> {
    let lift = |x: Matrix| -> Matrix {
        let mut x = x;
        for _ in 0..(m - 1) / 8 {
            x = x.kron(&Matrix::identity(16));
        }
        x
    };
    let r = quat_right();
    let quat = |tail: usize| -> Vec<Matrix> {
        let k = -&r[2];
        [r[0].clone(), r[1].clone(), k].into_iter().map(|u| lift(u.kron(&Matrix::identity(tail)))).collect()
    };
    match m % 8 {
        2 => vec![lift(eps2())],
        6 => vec![lift(r[0].kron(&Matrix::identity(2)))],
        3 | 4 => quat(1),
        5 => quat(2),
        _ => vec![],
    }
}

pub fn commutant_type(m: usize) -> CommutantType {
    match m % 8 {
        2 | 6 => CommutantType::Unitary,
        3..=5 => CommutantType::Symplectic,
        _ => CommutantType::Orthogonal,
    }
}

/// `m - 1` skew matrices on `R^l`, `l = count * delta(m)`, as block copies of
/// the irreducible family. With a class split, the last generator changes
/// sign on the final `k-` copies.
pub fn build_skew_family(m: usize, count: usize, class_split: Option<(usize, usize)>) -> Result<Vec<Matrix>> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be at least 1".into()));
    }
    if let Some((a, b)) = class_split {
        if !m.is_multiple_of(4) || a + b != count {
            return Err(Error::InvalidParameters(format!("invalid class split ({a},{b}) for m = {m}, count = {count}")));
        }
    }
    if count == 0 {
        return Err(Error::InvalidParameters("count must be at least 1".into()));
    }
    let base = irreducible_family(m - 1);
    let minus = class_split.map_or(0, |(_, b)| b);
    let n = base.len();
    Ok(base
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let flipped = -e;
            let blocks: Vec<Matrix> = (0..count)
                .map(|c| if i + 1 == n && c >= count - minus { flipped.clone() } else { e.clone() })
                .collect();
            Matrix::block_diag(&blocks)
        })
        .collect())
}

/// One generator of the commutant algebra, stored symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CommutantGenerator {
    /// `(E_ab - E_ba) ⊗ Id` on the module copies `a < b`.
    Rotation { a: usize, b: usize },
    /// `(E_ab + E_ba) ⊗ U_u`.
    Symmetric { a: usize, b: usize, unit: usize },
    /// `E_aa ⊗ U_u`.
    Diagonal { a: usize, unit: usize },
}

#[derive(Clone, Debug)]
pub struct CliffordSystem {
    pub m: usize,
    pub l: usize,
    pub modules: FkmModules,
    pub matrices: Vec<Matrix>,
    /// The skew family `E_1..E_{m-1}` on `R^l` used for the off-diagonal blocks.
    pub skew_family: Vec<Matrix>,
    pub commutant_type: CommutantType,
    /// Units of the irreducible module (order `delta(m)`).
    pub units: Vec<Matrix>,
    /// Copy ranges `[start, end)` of each block of identical modules.
    pub copy_blocks: Vec<(usize, usize)>,
    pub commutant: Vec<(usize, CommutantGenerator)>,
}

pub fn build_clifford_system(params: FkmParams) -> Result<CliffordSystem> {
    let m = params.m;
    if m == 0 {
        return Err(Error::InvalidParameters("m must be at least 1".into()));
    }
    let count = params.total_modules();
    let d = delta(m);
    let l = count * d;
    if count == 0 {
        return Err(Error::InvalidParameters(format!("no modules for m = {m}")));
    }
    let split = match params.modules {
        FkmModules::Split(a, b) if m.is_multiple_of(4) => Some((a, b)),
        FkmModules::Single(_) if !m.is_multiple_of(4) => None,
        _ => return Err(Error::InvalidParameters(format!("module data {:?} does not fit m = {m}", params.modules))),
    };
    let skew = build_skew_family(m, count, split)?;
    let id = Matrix::identity(l);
    let zero = Matrix::zeros(l, l);
    let mut matrices = vec![Matrix::blocks2(&id, &zero, &zero, &-&id), Matrix::blocks2(&zero, &id, &id, &zero)];
    for e in &skew {
        matrices.push(Matrix::blocks2(&zero, e, &-e, &zero));
    }
    let copy_blocks = match split {
        Some((a, b)) => [(0, a), (a, a + b)].into_iter().filter(|(s, e)| e > s).collect(),
        None => vec![(0, count)],
    };
    let ctype = commutant_type(m);
    let units = module_units(m);
    let mut commutant = Vec::new();
    for (bi, &(s, e)) in copy_blocks.iter().enumerate() {
        let k = e - s;
        for a in 0..k {
            for b in a + 1..k {
                commutant.push((bi, CommutantGenerator::Rotation { a, b }));
                for u in 0..units.len() {
                    commutant.push((bi, CommutantGenerator::Symmetric { a, b, unit: u }));
                }
            }
            for u in 0..units.len() {
                commutant.push((bi, CommutantGenerator::Diagonal { a, unit: u }));
            }
        }
    }
    Ok(CliffordSystem { m, l, modules: params.modules, matrices, skew_family: skew, commutant_type: ctype, units, copy_blocks, commutant })
}

impl CliffordSystem {
    pub fn order(&self) -> usize {
        2 * self.l
    }

    pub fn delta(&self) -> usize {
        delta(self.m)
    }

    /// Action on `R^l` of a commutant generator.
    pub fn commutant_half(&self, block: usize, g: &CommutantGenerator) -> Matrix {
        let (s, e) = self.copy_blocks[block];
        let total = self.l / self.delta();
        let d = self.delta();
        let mut sel = Matrix::zeros(total, total);
        let unit = match *g {
            CommutantGenerator::Rotation { a, b } => {
                sel.set(s + b, s + a, int(1));
                sel.set(s + a, s + b, int(-1));
                Matrix::identity(d)
            }
            CommutantGenerator::Symmetric { a, b, unit } => {
                sel.set(s + a, s + b, int(1));
                sel.set(s + b, s + a, int(1));
                self.units[unit].clone()
            }
            CommutantGenerator::Diagonal { a, unit } => {
                sel.set(s + a, s + a, int(1));
                self.units[unit].clone()
            }
        };
        debug_assert!(e <= total);
        sel.kron(&unit)
    }

    /// Commutant generator as a matrix of order `2l`.
    pub fn commutant_matrix(&self, block: usize, g: &CommutantGenerator) -> Matrix {
        let a = self.commutant_half(block, g);
        Matrix::block_diag(&[a.clone(), a])
    }

    pub fn commutant_dim(&self) -> usize {
        self.commutant.len()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CliffordReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CliffordReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn sparse_all(ms: &[Matrix]) -> Option<Vec<SparseInt>> {
    ms.iter().map(SparseInt::from_matrix).collect()
}

/// Exact check of symmetry and every relation `P_i P_j + P_j P_i = 2 δ_ij Id`.
/// Integer systems take a sparse path; anything else uses rational products.
pub fn verify_clifford(system: &CliffordSystem) -> CliffordReport {
    let mut rep = CliffordReport::default();
    let n = system.order();
    for (i, p) in system.matrices.iter().enumerate() {
        rep.checked += 1;
        if p.rows() != n || p.cols() != n {
            rep.failures.push(format!("P{i} has order {}x{}, expected {n}", p.rows(), p.cols()));
            continue;
        }
        if !p.is_symmetric() {
            rep.failures.push(format!("P{i} is not symmetric"));
        }
    }
    if !rep.failures.is_empty() {
        return rep;
    }
    let sparse = sparse_all(&system.matrices);
    let ms = &system.matrices;
    for i in 0..ms.len() {
        for j in i..ms.len() {
            rep.checked += 1;
            let s = if i == j { 2 } else { 0 };
            let fast = sparse.as_ref().and_then(|sp| {
                let (a, b) = (&sp[i], &sp[j]);
                Some(a.mul(b)?.add_scaled(&b.mul(a)?, 1)?.is_scalar(s))
            });
            let ok = fast.unwrap_or_else(|| ms[i].anticommutator(&ms[j]).is_ok_and(|a| a.is_scalar(&int(s))));
            if !ok {
                rep.failures.push(format!("P{i}P{j} + P{j}P{i} != {s}Id"));
            }
        }
    }
    rep
}

/// Checks that each recorded commutant generator is skew and commutes with
/// every `P_i`.
pub fn verify_commutant(system: &CliffordSystem) -> CliffordReport {
    let mut rep = CliffordReport::default();
    let sparse = sparse_all(&system.matrices);
    for (bi, g) in &system.commutant {
        rep.checked += 1;
        let c = system.commutant_matrix(*bi, g);
        let sc = SparseInt::from_matrix(&c);
        let skew = match &sc {
            Some(x) => x.add_scaled(&x.transpose(), 1).is_some_and(|y| y.is_zero()),
            None => c.is_skew(),
        };
        if !skew {
            rep.failures.push(format!("{g:?} is not skew"));
            continue;
        }
        for (i, p) in system.matrices.iter().enumerate() {
            let fast = match (&sc, &sparse) {
                (Some(x), Some(sp)) => x.mul(&sp[i]).zip(sp[i].mul(x)).and_then(|(a, b)| a.add_scaled(&b, -1)).map(|d| d.is_zero()),
                _ => None,
            };
            if !fast.unwrap_or_else(|| c.commutator(p).is_ok_and(|x| x.is_zero())) {
                rep.failures.push(format!("{g:?} does not commute with P{i}"));
            }
        }
    }
    rep
}

/// Dimension of the skew commutant of the system, by an exact linear solve
/// over all `(2l)^2` matrix entries. Intended for small orders.
pub fn commutant_dimension_by_solve(system: &CliffordSystem) -> usize {
    let n = system.order();
    let idx = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let zero = || Rational::from_integer(0.into());
    // C + C^T = 0.
    for r in 0..n {
        for c in r..n {
            let mut row = vec![zero(); n * n];
            row[idx(r, c)] += int(1);
            row[idx(c, r)] += int(1);
            rows.push(row);
        }
    }
    // (C P - P C)_{rc} = sum_t C_rt P_tc - P_rt C_tc.
    for p in &system.matrices {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![zero(); n * n];
                for t in 0..n {
                    row[idx(r, t)] += p.get(t, c);
                    row[idx(t, c)] -= p.get(r, t);
                }
                if row.iter().any(|x| *x != zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let a = Matrix::from_rows(rows).expect("rectangular");
    nullspace(&a).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::FkmParams;

    fn check_family(fam: &[Matrix]) {
        let d = fam.first().map_or(0, Matrix::rows);
        let minus_two = int(-2);
        for (i, a) in fam.iter().enumerate() {
            assert!(a.is_skew());
            for (j, b) in fam.iter().enumerate().skip(i) {
                let ac = a.anticommutator(b).unwrap();
                if i == j {
                    assert!(ac.is_scalar(&minus_two), "E{i}^2 != -Id (order {d})");
                } else {
                    assert!(ac.is_zero(), "E{i}, E{j} do not anticommute");
                }
            }
        }
    }

    #[test]
    fn delta_values() {
        let expect = [1, 2, 4, 4, 8, 8, 8, 8, 16, 32];
        for (m, &d) in (1..=10).zip(expect.iter()) {
            assert_eq!(delta(m), d, "m = {m}");
        }
        assert_eq!(delta(17), 256);
    }

    #[test]
    fn irreducible_families_anticommute() {
        for n in 0..=10 {
            let fam = irreducible_family(n);
            assert_eq!(fam.len(), n);
            if n > 0 {
                assert_eq!(fam[0].rows(), delta(n + 1));
            }
            check_family(&fam);
        }
    }

    #[test]
    fn skew_family_shapes() {
        assert!(build_skew_family(1, 3, None).unwrap().is_empty());
        let f = build_skew_family(3, 1, None).unwrap();
        assert_eq!((f.len(), f[0].rows()), (2, 4));
        check_family(&f);
        let f = build_skew_family(5, 1, None).unwrap();
        assert_eq!((f.len(), f[0].rows()), (4, 8));
        check_family(&f);
        assert!(build_skew_family(3, 2, Some((1, 1))).is_err());
    }

    #[test]
    fn class_split_changes_the_volume_element() {
        let f = build_skew_family(4, 2, Some((1, 1))).unwrap();
        check_family(&f);
        let vol = f.iter().skip(1).fold(f[0].clone(), |acc, x| &acc * x);
        // The product E1 E2 E3 is ±Id on each copy with opposite signs.
        let first = vol.get(0, 0).clone();
        let last = vol.get(7, 7).clone();
        assert_eq!(first, -last);
    }

    #[test]
    fn small_systems_verify() {
        for p in [FkmParams::single(1, 4), FkmParams::single(3, 2), FkmParams::split(4, 1, 1), FkmParams::single(2, 3), FkmParams::single(5, 1), FkmParams::single(6, 2), FkmParams::split(8, 2, 1)] {
            let s = build_clifford_system(p).unwrap();
            assert_eq!(s.order(), 2 * p.total_modules() * delta(p.m));
            assert_eq!(s.matrices.len(), p.m + 1);
            let r = verify_clifford(&s);
            assert!(r.passed(), "{p}: {:?}", r.failures);
            assert_eq!(r.checked, (p.m + 1) + (p.m + 1) * (p.m + 2) / 2);
            assert!(verify_commutant(&s).passed(), "{p}");
        }
        let s = build_clifford_system(FkmParams::split(4, 1, 1)).unwrap();
        assert_eq!(s.commutant_dim(), 6);
        assert_eq!(build_clifford_system(FkmParams::single(6, 2)).unwrap().commutant_dim(), 4);
    }

    #[test]
    fn perturbed_system_fails() {
        let mut s = build_clifford_system(FkmParams::single(3, 1)).unwrap();
        let v = s.matrices[2].get(0, 5).clone() + int(1);
        s.matrices[2].set(0, 5, v);
        assert!(!verify_clifford(&s).passed());
    }

    #[test]
    fn commutant_dimension_matches_solve() {
        // Expected: so(k) = k(k-1)/2, u(k) = k^2, sp(k) = k(2k+1), summed over blocks.
        let cases = [
            (FkmParams::single(1, 2), 1),
            (FkmParams::single(1, 3), 3),
            (FkmParams::single(2, 1), 1),
            (FkmParams::single(2, 2), 4),
            (FkmParams::single(3, 1), 3),
        ];
        for (p, dim) in cases {
            let s = build_clifford_system(p).unwrap();
            assert_eq!(s.commutant_dim(), dim, "{p}");
            assert_eq!(commutant_dimension_by_solve(&s), dim, "{p}");
        }
    }
}
