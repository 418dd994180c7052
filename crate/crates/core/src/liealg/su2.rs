//! Deciding whether a torus element lies in an `su(2)` subalgebra of the
//! isotropy algebra, with an explicit constructive witness when it does.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::cartan::CartanElement;
use super::catalog::RepDescriptor;
use super::factor::{FactorKind, FactorType};
use crate::matrix::Matrix;
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WitnessTag {
    IdealFactor,
    DiagonalUnitary,
    DiagonalSymplectic,
    So4BlockDiagonal,
    CanonicalSo3,
    CrossFactorDiagonal,
}

impl fmt::Display for WitnessTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WitnessTag::IdealFactor => "ideal-factor",
            WitnessTag::DiagonalUnitary => "diagonal-unitary",
            WitnessTag::DiagonalSymplectic => "diagonal-symplectic",
            WitnessTag::So4BlockDiagonal => "so4-block-diagonal",
            WitnessTag::CanonicalSo3 => "canonical-so3",
            WitnessTag::CrossFactorDiagonal => "cross-factor-diagonal",
        };
        f.write_str(s)
    }
}

/// The `su(2)` piece carried by one factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPart {
    pub factor: usize,
    pub factor_type: FactorType,
    pub tag: WitnessTag,
    /// Nonzero coordinates of the factor component as `(index, sign)`.
    /// Unitary and orthogonal pieces pair consecutive entries.
    pub support: Vec<(usize, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Su2Witness {
    pub tag: WitnessTag,
    pub parts: Vec<WitnessPart>,
    #[serde(skip)]
    pub h: CartanElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rejection {
    /// Nonzero component in the center of a unitary factor.
    Central { factor: usize },
    /// Diagonal entries of a unitary factor are not symmetric under negation.
    AsymmetricSpectrum { factor: usize },
    /// Orthogonal factor with eigenvalue pairs `±c` only, of odd multiplicity.
    OddPairMultiplicity { factor: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Central { factor } => write!(f, "N0: central component in factor {factor}"),
            Rejection::AsymmetricSpectrum { factor } => write!(f, "N1: asymmetric spectrum in factor {factor}"),
            Rejection::OddPairMultiplicity { factor } => write!(f, "N2: odd pair multiplicity in factor {factor}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(Su2Witness),
    NotMember(Rejection),
    Unknown,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

fn unit_entries(c: &[Rational]) -> Option<Vec<(usize, i8)>> {
    let mut out = Vec::new();
    for (i, x) in c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if !x.abs().is_one() {
            return None;
        }
        out.push((i, if x.is_positive() { 1 } else { -1 }));
    }
    Some(out)
}

fn negation_symmetric(c: &[Rational]) -> bool {
    let mut a = c.to_vec();
    let mut b: Vec<Rational> = c.iter().map(|x| -x).collect();
    a.sort();
    b.sort();
    a == b
}

fn reject(kind: FactorKind, c: &[Rational], factor: usize) -> Option<Rejection> {
    match kind {
        FactorKind::Unitary if !c.iter().fold(Rational::zero(), |a, x| a + x).is_zero() => {
            Some(Rejection::Central { factor })
        }
        FactorKind::Unitary | FactorKind::SpecialUnitary if !negation_symmetric(c) => {
            Some(Rejection::AsymmetricSpectrum { factor })
        }
        FactorKind::OrthogonalEven => {
            let first = c[0].abs();
            let uniform = !first.is_zero() && c.iter().all(|x| x.abs() == first);
            (uniform && c.len() % 2 == 1).then_some(Rejection::OddPairMultiplicity { factor })
        }
        _ => None,
    }
}

/// Orders unitary support so that `+1` and `-1` entries alternate.
fn pair_unitary(support: Vec<(usize, i8)>) -> Option<Vec<(usize, i8)>> {
    let plus: Vec<_> = support.iter().filter(|s| s.1 > 0).copied().collect();
    let minus: Vec<_> = support.iter().filter(|s| s.1 < 0).copied().collect();
    (plus.len() == minus.len()).then(|| plus.into_iter().zip(minus).flat_map(|(a, b)| [a, b]).collect())
}

fn construct(f: FactorType, c: &[Rational], factor: usize) -> Option<WitnessPart> {
    let part = |tag, support| Some(WitnessPart { factor, factor_type: f, tag, support });
    let units = unit_entries(c);
    match f.kind {
        FactorKind::Unitary | FactorKind::SpecialUnitary => {
            let s = pair_unitary(units?)?;
            if f.kind == FactorKind::SpecialUnitary && f.rank == 2 {
                part(WitnessTag::IdealFactor, s)
            } else {
                part(WitnessTag::DiagonalUnitary, s)
            }
        }
        FactorKind::Symplectic => part(WitnessTag::DiagonalSymplectic, units?),
        FactorKind::OrthogonalEven | FactorKind::OrthogonalOdd => {
            if let Some(s) = units {
                return if s.len() % 2 == 0 { part(WitnessTag::So4BlockDiagonal, s) } else { None };
            }
            let nz: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
            let room = f.kind == FactorKind::OrthogonalOdd || f.rank >= 2;
            if nz.len() == 1 && c[nz[0]].abs() == int(2) && room {
                let sign = if c[nz[0]].is_positive() { 1 } else { -1 };
                return part(WitnessTag::CanonicalSo3, vec![(nz[0], sign)]);
            }
            None
        }
    }
}

/// Membership of `h` in some `su(2)` subalgebra of the isotropy algebra.
pub fn in_su2(h: &CartanElement, rep: &RepDescriptor) -> Membership {
    if h.is_zero() {
        return Membership::Unknown;
    }
    let comps: Vec<&[Rational]> = (0..rep.factors.len()).map(|i| rep.component(h, i)).collect();
    for (i, spec) in rep.factors.iter().enumerate() {
        if comps[i].iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(r) = reject(spec.factor.kind, comps[i], i) {
            return Membership::NotMember(r);
        }
    }
    let mut parts = Vec::new();
    for (i, spec) in rep.factors.iter().enumerate() {
        if comps[i].iter().all(Zero::is_zero) {
            continue;
        }
        match construct(spec.factor, comps[i], i) {
            Some(p) => parts.push(p),
            None => return Membership::Unknown,
        }
    }
    let tag = if parts.len() == 1 { parts[0].tag } else { WitnessTag::CrossFactorDiagonal };
    Membership::Member(Su2Witness { tag, parts, h: h.clone() })
}

// Defining-module matrices, used to certify witnesses.

fn j2() -> Matrix {
    Matrix::from_i64(&[&[0, -1], &[1, 0]])
}

/// Realification of a complex matrix `re + i im`.
pub fn realify(re: &Matrix, im: &Matrix) -> Matrix {
    &re.kron(&Matrix::identity(2)) + &im.kron(&j2())
}

fn unit_matrix(n: usize, r: usize, c: usize, v: i64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(r, c, int(v));
    m
}

/// Rotation generator of the plane `(a, b)`: `u_a -> u_b`.
fn rot(n: usize, a: usize, b: usize) -> Matrix {
    &unit_matrix(n, b, a, 1) - &unit_matrix(n, a, b, 1)
}

/// Real dimension of the defining module of a factor.
pub fn defining_dim(f: FactorType) -> usize {
    match f.kind {
        FactorKind::Unitary | FactorKind::SpecialUnitary => 2 * f.rank,
        FactorKind::Symplectic => 4 * f.rank,
        FactorKind::OrthogonalEven => 2 * f.rank,
        FactorKind::OrthogonalOdd => 2 * f.rank + 1,
    }
}

/// Image of a torus component in the defining module.
pub fn torus_matrix(f: FactorType, c: &[Rational]) -> Matrix {
    let n = defining_dim(f);
    let mut m = Matrix::zeros(n, n);
    let mut put = |plane: usize, v: Rational| {
        m.set(2 * plane + 1, 2 * plane, v.clone());
        m.set(2 * plane, 2 * plane + 1, -v);
    };
    for (j, x) in c.iter().enumerate() {
        match f.kind {
            FactorKind::Symplectic => {
                put(j, x.clone());
                put(f.rank + j, -x.clone());
            }
            _ => put(j, x.clone()),
        }
    }
    m
}

/// Complex `2x2` block `[[a, b], [c, d]]` placed on coordinates `(i, j)` of `C^n`.
fn complex_pair(n: usize, i: usize, j: usize, re: [[i64; 2]; 2], im: [[i64; 2]; 2]) -> Matrix {
    let mut r = Matrix::zeros(n, n);
    let mut m = Matrix::zeros(n, n);
    let idx = [i, j];
    for a in 0..2 {
        for b in 0..2 {
            r.set(idx[a], idx[b], int(re[a][b]));
            m.set(idx[a], idx[b], int(im[a][b]));
        }
    }
    realify(&r, &m)
}

/// The standard basis `(X1, X2, X3)` of the piece on its defining module,
/// with `X1` the torus component and `[X1, X2] = 2 X3` cyclically.
pub fn part_basis(part: &WitnessPart) -> [Matrix; 3] {
    let f = part.factor_type;
    let n = defining_dim(f);
    let mut x1 = Matrix::zeros(n, n);
    let mut x2 = Matrix::zeros(n, n);
    match part.tag {
        WitnessTag::IdealFactor | WitnessTag::DiagonalUnitary => {
            for pair in part.support.chunks(2) {
                let (a, b) = (pair[0].0, pair[1].0);
                x1 = &x1 + &complex_pair(f.rank, a, b, [[0, 0], [0, 0]], [[1, 0], [0, -1]]);
                x2 = &x2 + &complex_pair(f.rank, a, b, [[0, -1], [1, 0]], [[0, 0], [0, 0]]);
            }
        }
        WitnessTag::DiagonalSymplectic => {
            for &(j, s) in &part.support {
                let s = s as i64;
                x1 = &x1 + &complex_pair(2 * f.rank, j, f.rank + j, [[0, 0], [0, 0]], [[s, 0], [0, -s]]);
                x2 = &x2 + &complex_pair(2 * f.rank, j, f.rank + j, [[0, -1], [1, 0]], [[0, 0], [0, 0]]);
            }
        }
        WitnessTag::So4BlockDiagonal => {
            for pair in part.support.chunks(2) {
                let ((a, sa), (b, sb)) = (pair[0], pair[1]);
                let (u1, u2, mut u3, mut u4) = (2 * a, 2 * a + 1, 2 * b, 2 * b + 1);
                // Left multiplication by the quaternion units on span(u1..u4);
                // opposite signs reverse the orientation of the second plane.
                if sa != sb {
                    std::mem::swap(&mut u3, &mut u4);
                }
                let s = int(sa as i64);
                x1 = &x1 + &(&rot(n, u1, u2) + &rot(n, u3, u4)).scale(&s);
                x2 = &x2 + &(&rot(n, u1, u3) - &rot(n, u2, u4));
            }
        }
        WitnessTag::CanonicalSo3 => {
            let (a, s) = part.support[0];
            let (u1, u2) = (2 * a, 2 * a + 1);
            let w = if f.kind == FactorKind::OrthogonalOdd { 2 * f.rank } else if a == 0 { 2 } else { 0 };
            let two = int(2 * s as i64);
            x1 = rot(n, u1, u2).scale(&two);
            x2 = rot(n, u2, w).scale(&int(2));
        }
        WitnessTag::CrossFactorDiagonal => unreachable!("parts carry per-factor tags"),
    }
    let x3 = x1.commutator(&x2).expect("square").scale(&Rational::new(1.into(), 2.into()));
    [x1, x2, x3]
}

/// Checks the bracket relations of every part and that each `X1` is the
/// image of the corresponding component of `h`.
pub fn verify_witness(w: &Su2Witness, rep: &RepDescriptor) -> bool {
    let two = int(2);
    w.parts.iter().all(|p| {
        let [x1, x2, x3] = part_basis(p);
        let bracket = |a: &Matrix, b: &Matrix, c: &Matrix| a.commutator(b).map(|m| m == c.scale(&two)).unwrap_or(false);
        bracket(&x1, &x2, &x3)
            && bracket(&x2, &x3, &x1)
            && bracket(&x3, &x1, &x2)
            && x1 == torus_matrix(p.factor_type, rep.component(&w.h, p.factor))
    })
}
