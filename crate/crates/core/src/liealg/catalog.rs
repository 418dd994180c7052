//! Compiled-in catalog of isotropy representations and FKM data.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use super::cartan::{CartanElement, Weight};
use super::factor::{offsets, FactorKind, FactorSpec};
use crate::clifford::delta;
use crate::error::{Error, Result};
use crate::matrix::dot;
use crate::rational::{int, rat, Rational};

/// Module multiplicities of a Clifford system: `k` copies of the unique
/// irreducible module, or `(k+, k-)` when `m ≡ 0 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FkmModules {
    Single(usize),
    Split(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FkmParams {
    pub m: usize,
    pub modules: FkmModules,
}

impl FkmParams {
    pub fn single(m: usize, k: usize) -> Self {
        FkmParams { m, modules: FkmModules::Single(k) }
    }

    pub fn split(m: usize, kp: usize, km: usize) -> Self {
        FkmParams { m, modules: FkmModules::Split(kp, km) }
    }

    /// Every valid datum with `m <= max_m` and at most `max_k` modules,
    /// splits listed in both orders.
    pub fn enumerate_feasible(max_m: usize, max_k: usize) -> Vec<FkmParams> {
        let mut out = Vec::new();
        for m in 1..=max_m {
            for k in 1..=max_k {
                if m % 4 == 0 {
                    out.extend((0..=k).map(|a| FkmParams::split(m, a, k - a)));
                } else {
                    out.push(FkmParams::single(m, k));
                }
            }
        }
        out.retain(|p| p.validate().is_ok());
        out
    }

    pub fn total_modules(&self) -> usize {
        match self.modules {
            FkmModules::Single(k) => k,
            FkmModules::Split(a, b) => a + b,
        }
    }

    pub fn l(&self) -> usize {
        self.total_modules() * delta(self.m)
    }

    pub fn m_plus(&self) -> i64 {
        self.m as i64
    }

    pub fn m_minus(&self) -> i64 {
        self.l() as i64 - self.m as i64 - 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidParameters("m must be at least 1".into()));
        }
        match self.modules {
            FkmModules::Single(_) if self.m.is_multiple_of(4) => {
                return Err(Error::InvalidParameters(format!("m = {} needs a split (k+, k-)", self.m)))
            }
            FkmModules::Split(..) if !self.m.is_multiple_of(4) => {
                return Err(Error::InvalidParameters(format!("m = {} does not admit a split (k+, k-)", self.m)))
            }
            _ => {}
        }
        if self.total_modules() == 0 {
            return Err(Error::InvalidParameters("at least one irreducible module is required".into()));
        }
        if self.m_minus() < 1 {
            return Err(Error::InvalidParameters(format!(
                "infeasible: l - m - 1 = {} for m = {}, l = {}",
                self.m_minus(),
                self.m,
                self.l()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FkmParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modules {
            FkmModules::Single(k) => write!(f, "FKM({};{})", self.m, k),
            FkmModules::Split(a, b) => write!(f, "FKM({};{},{})", self.m, a, b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    AIII { p: usize, q: usize },
    BI { p: usize, q: usize },
    CI { p: usize },
    CII { p: usize, q: usize },
    DI { p: usize, q: usize },
    DIII { p: usize },
    EII,
    EIII,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    G,
    Fkm(FkmParams),
    Sphere { d: usize },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::AIII { .. } => "AIII",
            Family::BI { .. } => "BI",
            Family::CI { .. } => "CI",
            Family::CII { .. } => "CII",
            Family::DI { .. } => "DI",
            Family::DIII { .. } => "DIII",
            Family::EII => "EII",
            Family::EIII => "EIII",
            Family::EV => "EV",
            Family::EVI => "EVI",
            Family::EVII => "EVII",
            Family::EVIII => "EVIII",
            Family::EIX => "EIX",
            Family::FI => "FI",
            Family::G => "G",
            Family::Fkm(_) => "FKM",
            Family::Sphere { .. } => "Sphere",
        }
    }

    /// Named integer parameters in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            Family::AIII { p, q } | Family::BI { p, q } | Family::CII { p, q } | Family::DI { p, q } => {
                vec![("p", p), ("q", q)]
            }
            Family::CI { p } | Family::DIII { p } => vec![("p", p)],
            Family::Fkm(f) => match f.modules {
                FkmModules::Single(k) => vec![("m", f.m), ("k", k)],
                FkmModules::Split(a, b) => vec![("m", f.m), ("kplus", a), ("kminus", b)],
            },
            Family::Sphere { d } => vec![("d", d)],
            _ => vec![],
        }
    }

    pub fn exceptional() -> [Family; 9] {
        [Family::EII, Family::EIII, Family::EV, Family::EVI, Family::EVII, Family::EVIII, Family::EIX, Family::FI, Family::G]
    }

    /// Builds a family from a tag and positional parameters.
    pub fn from_parts(tag: &str, params: &[usize]) -> Result<Family> {
        let need = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::Parse(format!("{tag} expects {n} parameter(s), got {}", params.len())))
            }
        };
        let fam = match tag.to_ascii_uppercase().as_str() {
            "AIII" => {
                need(2)?;
                Family::AIII { p: params[0], q: params[1] }
            }
            "BI" => {
                need(2)?;
                Family::BI { p: params[0], q: params[1] }
            }
            "CI" => {
                need(1)?;
                Family::CI { p: params[0] }
            }
            "CII" => {
                need(2)?;
                Family::CII { p: params[0], q: params[1] }
            }
            "DI" => {
                need(2)?;
                Family::DI { p: params[0], q: params[1] }
            }
            "DIII" => {
                need(1)?;
                Family::DIII { p: params[0] }
            }
            "EII" | "EIII" | "EV" | "EVI" | "EVII" | "EVIII" | "EIX" | "FI" | "G" => {
                need(0)?;
                Family::exceptional()
                    .into_iter()
                    .find(|f| f.tag().eq_ignore_ascii_case(tag))
                    .expect("tag listed above")
            }
            "FKM" => match params.len() {
                2 => Family::Fkm(FkmParams::single(params[0], params[1])),
                3 => Family::Fkm(FkmParams::split(params[0], params[1], params[2])),
                n => return Err(Error::Parse(format!("FKM expects 2 or 3 parameters, got {n}"))),
            },
            "S" | "SPHERE" => {
                need(1)?;
                Family::Sphere { d: params[0] }
            }
            _ => return Err(Error::UnknownDescriptor(tag.to_string())),
        };
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Fkm(p) => write!(f, "{p}"),
            Family::Sphere { d } => write!(f, "Sphere({d})"),
            other => {
                let ps: Vec<String> = other.params().iter().map(|(_, v)| v.to_string()).collect();
                if ps.is_empty() {
                    write!(f, "{}", other.tag())
                } else {
                    write!(f, "{}({})", other.tag(), ps.join(","))
                }
            }
        }
    }
}

/// Parses `AIII(2,3)`, `EII`, `FKM(3;2)`, `FKM(4;1,1)`, `Sphere(4)` or `S(4)`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        let (tag, rest) = match s.find('(') {
            Some(i) => {
                let inner = s[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("missing ')' in {s}")))?;
                (&s[..i], inner)
            }
            None => (s, ""),
        };
        let params = rest
            .split([',', ';'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad parameter '{t}' in {s}"))))
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(tag.trim(), &params)
    }
}

/// A catalog entry: the torus layout, weight rule and bookkeeping flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepDescriptor {
    pub family: Family,
    pub factors: Vec<FactorSpec>,
    /// Linear relations on the flat torus coordinates, each `row · h = 0`.
    #[serde(skip)]
    pub constraints: Vec<Vec<Rational>>,
    /// Pairs of identical factors that may be exchanged.
    pub swaps: Vec<(usize, usize)>,
    pub tabulated_only: bool,
    pub quaternionic_kahler: bool,
    pub inner: bool,
    pub dim: usize,
    pub rank: usize,
    pub irreducible: bool,
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameters(msg()))
    }
}

fn orthogonal(n: usize) -> Option<FactorSpec> {
    match n {
        0 | 1 => None,
        n if n % 2 == 0 => Some(FactorSpec::new(FactorKind::OrthogonalEven, n / 2)),
        n => Some(FactorSpec::new(FactorKind::OrthogonalOdd, n / 2)),
    }
}

fn trace_row(total: usize, from: usize, len: usize) -> Vec<Rational> {
    (0..total).map(|i| if i >= from && i < from + len { int(1) } else { Rational::zero() }).collect()
}

impl RepDescriptor {
    pub fn new(family: Family) -> Result<RepDescriptor> {
        use FactorKind::*;
        let mut factors: Vec<FactorSpec> = Vec::new();
        let mut swaps = Vec::new();
        let (mut tabulated_only, mut qk, mut inner, mut irreducible) = (false, false, true, true);
        let (dim, rank) = match family {
            Family::AIII { p, q } => {
                check(p >= 2 && q >= 2, || format!("AIII needs p, q >= 2, got ({p},{q})"))?;
                factors = vec![FactorSpec::new(Unitary, p), FactorSpec::new(Unitary, q)];
                if p == q {
                    swaps.push((0, 1));
                }
                qk = p == 2 || q == 2;
                (2 * p * q, p.min(q))
            }
            Family::BI { p, q } => {
                check(p >= 1 && p + q >= 3, || format!("BI needs p >= 1, p + q >= 3, got ({p},{q})"))?;
                factors.push(FactorSpec::new(OrthogonalEven, p));
                factors.extend(orthogonal(2 * q + 1));
                qk = p == 2 && q >= 1;
                (2 * p * (2 * q + 1), (2 * p).min(2 * q + 1))
            }
            Family::CI { p } => {
                check(p >= 2, || format!("CI needs p >= 2, got {p}"))?;
                factors.push(FactorSpec::new(Unitary, p));
                (p * (p + 1), p)
            }
            Family::CII { p, q } => {
                check(p >= 2 && q >= 2, || format!("CII needs p, q >= 2, got ({p},{q})"))?;
                factors = vec![FactorSpec::new(Symplectic, p), FactorSpec::new(Symplectic, q)];
                if p == q {
                    swaps.push((0, 1));
                }
                (4 * p * q, p.min(q))
            }
            Family::DI { p, q } => {
                check(p >= 1 && q >= 2 && p + q >= 4, || format!("DI needs p >= 1, q >= 2, p + q >= 4, got ({p},{q})"))?;
                factors = vec![FactorSpec::new(OrthogonalEven, p), FactorSpec::new(OrthogonalEven, q)];
                if p == q {
                    swaps.push((0, 1));
                }
                qk = p == 2 || q == 2;
                (4 * p * q, (2 * p).min(2 * q))
            }
            Family::DIII { p } => {
                check(p >= 4, || format!("DIII needs p >= 4, got {p}"))?;
                factors.push(FactorSpec::new(Unitary, p));
                (p * (p - 1), p / 2)
            }
            Family::EII => {
                factors = vec![FactorSpec::new(SpecialUnitary, 6), FactorSpec::new(SpecialUnitary, 2)];
                qk = true;
                (40, 4)
            }
            Family::EIII => {
                factors = vec![FactorSpec::half_spin(5), FactorSpec::new(Unitary, 1)];
                (32, 2)
            }
            Family::EV => {
                factors.push(FactorSpec::new(SpecialUnitary, 8));
                (70, 7)
            }
            Family::EVI => {
                factors = vec![FactorSpec::half_spin(6), FactorSpec::new(SpecialUnitary, 2)];
                qk = true;
                (64, 4)
            }
            Family::EVII => {
                tabulated_only = true;
                (54, 3)
            }
            Family::EVIII => {
                factors.push(FactorSpec::half_spin(8));
                (128, 8)
            }
            Family::EIX => {
                tabulated_only = true;
                qk = true;
                (112, 4)
            }
            Family::FI => {
                factors = vec![FactorSpec::new(Symplectic, 3), FactorSpec::new(SpecialUnitary, 2)];
                qk = true;
                (28, 4)
            }
            Family::G => {
                factors = vec![FactorSpec::new(SpecialUnitary, 2), FactorSpec::new(SpecialUnitary, 2)];
                qk = true;
                (8, 2)
            }
            Family::Fkm(f) => {
                f.validate()?;
                factors.extend(orthogonal(f.m + 1));
                match (f.m % 8, f.modules) {
                    (0, FkmModules::Split(a, b)) => {
                        factors.extend(orthogonal(a));
                        factors.extend(orthogonal(b));
                    }
                    (1 | 7, FkmModules::Single(k)) => factors.extend(orthogonal(k)),
                    (2 | 6, FkmModules::Single(k)) => factors.push(FactorSpec::new(Unitary, k)),
                    (3 | 5, FkmModules::Single(k)) => factors.push(FactorSpec::new(Symplectic, k)),
                    (4, FkmModules::Split(a, b)) => {
                        factors.extend((a > 0).then(|| FactorSpec::new(Symplectic, a)));
                        factors.extend((b > 0).then(|| FactorSpec::new(Symplectic, b)));
                    }
                    _ => unreachable!("validated above"),
                }
                (2 * f.l(), 2)
            }
            Family::Sphere { d } => {
                check(d >= 2, || format!("Sphere needs d >= 2, got {d}"))?;
                factors.extend(orthogonal(d));
                inner = d % 2 == 0;
                irreducible = true;
                (d, 1)
            }
        };
        let offs = offsets(&factors);
        let total = *offs.last().unwrap();
        let mut constraints = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            if f.factor.kind == SpecialUnitary {
                constraints.push(trace_row(total, offs[i], f.factor.rank));
            }
        }
        if let Family::AIII { .. } = family {
            constraints.push(trace_row(total, 0, total));
        }
        Ok(RepDescriptor {
            family,
            factors,
            constraints,
            swaps,
            tabulated_only,
            quaternionic_kahler: qk,
            inner,
            dim,
            rank,
            irreducible,
        })
    }

    pub fn parse(s: &str) -> Result<RepDescriptor> {
        RepDescriptor::new(s.parse()?)
    }

    pub fn torus_dim(&self) -> usize {
        self.factors.iter().map(|f| f.factor.coords()).sum()
    }

    /// Dimension of the torus after imposing the constraints.
    pub fn effective_torus_dim(&self) -> usize {
        self.torus_dim() - self.constraints.len()
    }

    pub fn offsets(&self) -> Vec<usize> {
        offsets(&self.factors)
    }

    /// Slice of `h` belonging to factor `i`.
    pub fn component<'a>(&self, h: &'a CartanElement, i: usize) -> &'a [Rational] {
        let offs = self.offsets();
        &h.0[offs[i]..offs[i + 1]]
    }

    /// `n` with `dim = 4n + 4`, if any.
    pub fn quaternionic_n(&self) -> Option<usize> {
        (self.dim.is_multiple_of(4) && self.dim >= 4).then(|| self.dim / 4 - 1)
    }

    pub fn fkm(&self) -> Option<FkmParams> {
        match self.family {
            Family::Fkm(f) => Some(f),
            _ => None,
        }
    }

    /// Builds a Cartan element from per-factor coordinate lists.
    pub fn element(&self, parts: &[Vec<Rational>]) -> Result<CartanElement> {
        if parts.len() != self.factors.len()
            || parts.iter().zip(&self.factors).any(|(p, f)| p.len() != f.factor.coords())
        {
            return Err(Error::DimensionMismatch(format!("element does not match the layout of {}", self.family)));
        }
        Ok(CartanElement(parts.concat()))
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)
    }
}

/// Accumulates weights over the flat coordinates of a descriptor.
struct WeightBuilder {
    offs: Vec<usize>,
    total: usize,
    constraints: Vec<Vec<Rational>>,
    out: Vec<Weight>,
}

impl WeightBuilder {
    fn new(rep: &RepDescriptor) -> Self {
        let offs = rep.offsets();
        let total = *offs.last().unwrap();
        WeightBuilder { offs, total, constraints: rep.constraints.clone(), out: Vec::new() }
    }

    /// Adds the weight `sum c * theta_{factor, index}` over the given terms.
    fn push(&mut self, terms: &[(usize, usize, Rational)]) {
        let mut v = vec![Rational::zero(); self.total];
        for (fac, idx, c) in terms {
            v[self.offs[*fac] + idx] += c;
        }
        // Project away the constraint directions so that functionals agreeing
        // on the constrained torus get identical coordinates. The catalog's
        // constraint rows are pairwise orthogonal.
        for row in &self.constraints {
            let t = dot(row, &v) / dot(row, row);
            if !t.is_zero() {
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &t * r;
                }
            }
        }
        self.out.push(Weight::normalized(v));
    }

    fn finish(mut self) -> Vec<Weight> {
        self.out.sort();
        self.out.dedup();
        self.out
    }
}

/// Sign patterns `(±1, …, ±1)` of length `p`; with `parity = Some(e)` only
/// those with a number of minus signs congruent to `e` mod 2.
fn sign_patterns(p: usize, parity: Option<usize>) -> Vec<Vec<i64>> {
    (0..1usize << p)
        .filter(|mask| parity.is_none_or(|e| (mask.count_ones() as usize) % 2 == e))
        .map(|mask| (0..p).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

fn spin_terms(fac: usize, eps: &[i64]) -> Vec<(usize, usize, Rational)> {
    eps.iter().enumerate().map(|(i, &s)| (fac, i, rat(s, 2))).collect()
}

fn with(mut a: Vec<(usize, usize, Rational)>, extra: &[(usize, usize, Rational)]) -> Vec<(usize, usize, Rational)> {
    a.extend_from_slice(extra);
    a
}

/// Weights of the complexified representation, up to sign and deduplicated.
pub fn weights_of(rep: &RepDescriptor) -> Result<Vec<Weight>> {
    if rep.tabulated_only {
        return Err(Error::Unsupported(rep.family.to_string()));
    }
    let one = || int(1);
    let mut b = WeightBuilder::new(rep);
    let ranks: Vec<usize> = rep.factors.iter().map(|f| f.factor.rank).collect();
    match rep.family {
        Family::AIII { p, q } => {
            for i in 0..p {
                for j in 0..q {
                    b.push(&[(0, i, one()), (1, j, int(-1))]);
                }
            }
        }
        Family::BI { p, .. } => {
            for i in 0..p {
                b.push(&[(0, i, one())]);
                if ranks.len() > 1 {
                    for j in 0..ranks[1] {
                        b.push(&[(0, i, one()), (1, j, one())]);
                        b.push(&[(0, i, one()), (1, j, int(-1))]);
                    }
                }
            }
        }
        Family::CI { p } => {
            for i in 0..p {
                for j in i..p {
                    b.push(&[(0, i, one()), (0, j, one())]);
                }
            }
        }
        Family::DIII { p } => {
            for i in 0..p {
                for j in i + 1..p {
                    b.push(&[(0, i, one()), (0, j, one())]);
                }
            }
        }
        Family::CII { p, q } | Family::DI { p, q } => {
            for i in 0..p {
                for j in 0..q {
                    b.push(&[(0, i, one()), (1, j, one())]);
                    b.push(&[(0, i, one()), (1, j, int(-1))]);
                }
            }
        }
        Family::EII => {
            for i in 0..6 {
                for j in i + 1..6 {
                    for k in j + 1..6 {
                        for l in 0..2 {
                            b.push(&[(0, i, one()), (0, j, one()), (0, k, one()), (1, l, one())]);
                        }
                    }
                }
            }
        }
        Family::EIII => {
            for eps in sign_patterns(5, Some(0)) {
                b.push(&with(spin_terms(0, &eps), &[(1, 0, one())]));
            }
        }
        Family::EV => {
            for i in 0..8 {
                for j in i + 1..8 {
                    for k in j + 1..8 {
                        for l in k + 1..8 {
                            b.push(&[(0, i, one()), (0, j, one()), (0, k, one()), (0, l, one())]);
                        }
                    }
                }
            }
        }
        Family::EVI => {
            for eps in sign_patterns(6, Some(0)) {
                for l in 0..2 {
                    b.push(&with(spin_terms(0, &eps), &[(1, l, one())]));
                }
            }
        }
        Family::EVIII => {
            for eps in sign_patterns(8, Some(0)) {
                b.push(&spin_terms(0, &eps));
            }
        }
        Family::FI => {
            let mut base: Vec<Vec<(usize, usize, Rational)>> = sign_patterns(3, None)
                .into_iter()
                .map(|eps| eps.iter().enumerate().map(|(i, &s)| (0, i, int(s))).collect())
                .collect();
            for i in 0..3 {
                base.push(vec![(0, i, one())]);
                base.push(vec![(0, i, int(-1))]);
            }
            for t in base {
                for l in 0..2 {
                    b.push(&with(t.clone(), &[(1, l, one())]));
                }
            }
        }
        Family::G => {
            // Symmetric cube of the standard representation of the first su2.
            for (a, c) in [(3, 0), (2, 1), (1, 2), (0, 3)] {
                for l in 0..2 {
                    b.push(&[(0, 0, int(a)), (0, 1, int(c)), (1, l, one())]);
                }
            }
        }
        Family::Sphere { d } => {
            for i in 0..d / 2 {
                b.push(&[(0, i, one())]);
            }
            if d % 2 == 1 {
                b.push(&[]);
            }
        }
        Family::Fkm(f) => fkm_weights(&mut b, rep, f),
        Family::EVII | Family::EIX => unreachable!("tabulated-only"),
    }
    Ok(b.finish())
}

fn fkm_weights(b: &mut WeightBuilder, rep: &RepDescriptor, f: FkmParams) {
    let p = f.m.div_ceil(2);
    let spins: Vec<Vec<(usize, usize, Rational)>> =
        sign_patterns(p, None).iter().map(|eps| spin_terms(0, eps)).collect();
    // Factors after the spin factor, with a flag telling whether the
    // corresponding standard module has odd real dimension.
    let mut second: Vec<(usize, usize)> = Vec::new();
    let mut lone_spin = false;
    let ks: Vec<usize> = match (f.m % 8, f.modules) {
        (0 | 1 | 7, FkmModules::Single(k)) => vec![k],
        (0 | 1 | 7, FkmModules::Split(a, c)) => vec![a, c],
        _ => vec![],
    };
    if !ks.is_empty() {
        let mut fac = 1;
        for &k in &ks {
            lone_spin |= k % 2 == 1;
            if k >= 2 {
                second.push((fac, k / 2));
                fac += 1;
            }
        }
    } else {
        for fac in 1..rep.factors.len() {
            second.push((fac, rep.factors[fac].factor.rank));
        }
    }
    for s in &spins {
        if lone_spin {
            b.push(s);
        }
        for &(fac, r) in &second {
            for j in 0..r {
                b.push(&with(s.clone(), &[(fac, j, int(1))]));
                b.push(&with(s.clone(), &[(fac, j, int(-1))]));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rep: &RepDescriptor, v: &[Rational]) -> Weight {
        assert_eq!(v.len(), rep.torus_dim());
        Weight::normalized(v.to_vec())
    }

    #[test]
    fn unitary_pair_weights() {
        let rep = RepDescriptor::parse("AIII(2,2)").unwrap();
        let ws = weights_of(&rep).unwrap();
        assert_eq!(ws.len(), 4);
        let expect = w(&rep, &[int(1), int(0), int(-1), int(0)]);
        assert!(ws.contains(&expect));
    }

    #[test]
    fn fkm_three_two_weights() {
        let rep = RepDescriptor::parse("FKM(3;2)").unwrap();
        let ws = weights_of(&rep).unwrap();
        assert_eq!(ws.len(), 8);
        let half = rat(1, 2);
        assert!(ws.contains(&w(&rep, &[half.clone(), -half.clone(), int(0), int(1)])));
    }

    #[test]
    fn sphere_weights() {
        let rep = RepDescriptor::parse("Sphere(4)").unwrap();
        let ws = weights_of(&rep).unwrap();
        assert_eq!(ws, vec![w(&rep, &[int(0), int(1)]), w(&rep, &[int(1), int(0)])]);
        let odd = weights_of(&RepDescriptor::parse("S(5)").unwrap()).unwrap();
        assert!(odd.iter().any(|x| x.0.iter().all(Zero::is_zero)));
    }

    #[test]
    fn weight_count_matches_dimension() {
        // Multiplicity-free modules: each nonzero weight pair spans a real
        // 2-plane and each zero weight a line.
        for s in [
            "AIII(3,2)", "BI(2,3)", "BI(3,0)", "CI(4)", "CII(2,3)", "DI(2,3)", "DIII(5)", "EII", "EIII", "EV", "EVI", "EVIII",
            "FI", "G", "Sphere(5)", "Sphere(8)",
        ] {
            let rep = RepDescriptor::parse(s).unwrap();
            let ws = weights_of(&rep).unwrap();
            let zeros = ws.iter().filter(|x| x.0.iter().all(Zero::is_zero)).count();
            assert_eq!(2 * (ws.len() - zeros) + zeros, rep.dim, "{s}");
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["AIII(2,3)", "EII", "FKM(3;2)", "FKM(4;1,1)", "Sphere(4)", "DIII(5)"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("XYZ(1)".parse::<Family>().is_err());
        assert!(RepDescriptor::parse("AIII(1,3)").is_err());
        assert!(RepDescriptor::parse("FKM(1;2)").is_err());
        assert!(RepDescriptor::parse("FKM(4;2)").is_err());
    }

    #[test]
    fn tabulated_entries_refuse_weights() {
        for s in ["EVII", "EIX"] {
            let rep = RepDescriptor::parse(s).unwrap();
            assert!(matches!(weights_of(&rep), Err(Error::Unsupported(_))));
        }
    }
}
