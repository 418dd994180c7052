//! Moduli counts by exhaustive search, independent of the closed forms.

use super::closed::closed_form;
use super::record::{ClassificationRecord, Provenance, StructureEntry};
use crate::error::{Error, Result};
use crate::liealg::{in_su2, j_moduli, AutAction, FactorKind, Family, Membership, RepDescriptor, Su2Witness, WitnessTag};

/// Factors whose ideal `su(2)` yields the homogeneous structure of a
/// quaternionic-Kähler space.
fn distinguished_factors(rep: &RepDescriptor) -> Vec<usize> {
    match rep.family {
        Family::AIII { .. } | Family::DI { .. } | Family::BI { .. } => rep
            .factors
            .iter()
            .enumerate()
            .filter(|(_, f)| f.factor.rank == 2 && matches!(f.factor.kind, FactorKind::Unitary | FactorKind::OrthogonalEven))
            .map(|(i, _)| i)
            .collect(),
        Family::EII | Family::EVI | Family::FI | Family::G => vec![1],
        _ => vec![],
    }
}

/// Whether the projected foliation of a structure is homogeneous: rank one,
/// an FKM datum with `m <= 2`, or the ideal `su(2)` of a
/// quaternionic-Kähler space.
pub fn homogeneity(rep: &RepDescriptor, w: &Su2Witness) -> bool {
    if let Family::Fkm(f) = rep.family {
        return f.m <= 2;
    }
    if rep.rank == 1 {
        return true;
    }
    if !rep.quaternionic_kahler || w.parts.len() != 1 {
        return false;
    }
    let part = &w.parts[0];
    let ideal = match part.tag {
        WitnessTag::IdealFactor => true,
        // On a rank-2 factor a diagonal piece covering both entries is the whole ideal.
        WitnessTag::DiagonalUnitary | WitnessTag::So4BlockDiagonal => {
            part.factor_type.rank == 2 && part.support.len() == 2
        }
        _ => false,
    };
    ideal && distinguished_factors(rep).contains(&part.factor)
}

pub fn compute_moduli(rep: &RepDescriptor) -> Result<ClassificationRecord> {
    if rep.tabulated_only {
        return Err(Error::Unsupported(rep.family.to_string()));
    }
    let classes = j_moduli(rep)?;
    let mut rec = ClassificationRecord::skeleton(rep, Provenance::Computed);
    rec.n_j = classes.len();
    for h in &classes {
        match in_su2(h, rep) {
            Membership::Member(w) => {
                let hom = homogeneity(rep, &w);
                rec.structures.push(StructureEntry::computed(h, &w, hom));
            }
            Membership::NotMember(_) => {}
            Membership::Unknown => {
                return Err(Error::UnknownMembership { descriptor: rep.family.to_string(), element: h.to_string() })
            }
        }
    }
    rec.n_s = rec.structures.len();
    rec.group = AutAction::of(rep).describe();
    Ok(rec)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub descriptor: String,
    pub closed: (usize, usize),
    pub computed: (usize, usize),
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.closed == self.computed
    }
}

/// Compares `(N_J, N_S)` from both routes.
pub fn cross_check_detail(rep: &RepDescriptor) -> Result<CrossCheck> {
    let c = closed_form(rep)?;
    let m = compute_moduli(rep)?;
    Ok(CrossCheck { descriptor: rep.family.to_string(), closed: (c.n_j, c.n_s), computed: (m.n_j, m.n_s) })
}

pub fn cross_check(rep: &RepDescriptor) -> Result<bool> {
    cross_check_detail(rep).map(|c| c.agrees())
}
