use std::fmt;

use serde::Serialize;

/// Compact classical factor of an isotropy algebra, with its canonical
/// maximal torus coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FactorKind {
    Unitary,
    SpecialUnitary,
    /// `so(2r)`.
    OrthogonalEven,
    /// `so(2r+1)`.
    OrthogonalOdd,
    Symplectic,
}

/// Which coordinate sign changes belong to the congruence group of a factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FlipRule {
    None,
    All,
    /// Only an even number of sign changes at a time (half-spin factors).
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FactorType {
    pub kind: FactorKind,
    pub rank: usize,
}

impl FactorType {
    pub fn new(kind: FactorKind, rank: usize) -> Self {
        assert!(rank >= 1, "factor rank must be positive");
        FactorType { kind, rank }
    }

    /// Torus coordinates carried by the factor. For `SpecialUnitary` the
    /// `rank` field is the matrix size `n`: all `n` diagonal entries are kept
    /// and a trace-zero row is attached to the descriptor.
    pub fn coords(&self) -> usize {
        self.rank
    }

    pub fn lie_rank(&self) -> usize {
        match self.kind {
            FactorKind::SpecialUnitary => self.rank - 1,
            _ => self.rank,
        }
    }

    pub fn default_flips(&self) -> FlipRule {
        match self.kind {
            FactorKind::Unitary | FactorKind::SpecialUnitary => FlipRule::None,
            _ => FlipRule::All,
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        matches!(self.kind, FactorKind::OrthogonalEven | FactorKind::OrthogonalOdd)
    }

    pub fn is_unitary(&self) -> bool {
        matches!(self.kind, FactorKind::Unitary | FactorKind::SpecialUnitary)
    }
}

impl fmt::Display for FactorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Unitary => write!(f, "u{}", self.rank),
            // su(n) is stored with n diagonal coordinates and a trace row.
            FactorKind::SpecialUnitary => write!(f, "su{}", self.rank),
            FactorKind::OrthogonalEven => write!(f, "so{}", 2 * self.rank),
            FactorKind::OrthogonalOdd => write!(f, "so{}", 2 * self.rank + 1),
            FactorKind::Symplectic => write!(f, "sp{}", self.rank),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FactorSpec {
    pub factor: FactorType,
    pub flips: FlipRule,
}

impl FactorSpec {
    pub fn new(kind: FactorKind, rank: usize) -> Self {
        let factor = FactorType::new(kind, rank);
        FactorSpec { factor, flips: factor.default_flips() }
    }

    pub fn half_spin(rank: usize) -> Self {
        FactorSpec { factor: FactorType::new(FactorKind::OrthogonalEven, rank), flips: FlipRule::Even }
    }
}

/// Offsets of each factor inside a flat coordinate vector.
pub fn offsets(factors: &[FactorSpec]) -> Vec<usize> {
    let mut out = Vec::with_capacity(factors.len() + 1);
    let mut acc = 0;
    for f in factors {
        out.push(acc);
        acc += f.factor.coords();
    }
    out.push(acc);
    out
}
