//! Per-dimension scans over the catalog: which `HP^n` carry an
//! inhomogeneous polar foliation of a given kind.

use serde::Serialize;

use super::closed::closed_form;
use crate::clifford::delta;
use crate::liealg::{Family, FkmParams, RepDescriptor};

/// `n` whose codimension-one answer depends on the unsettled FKM-type
/// family on `S^31` with multiplicities `(7, 8)`.
pub const UNDECIDED_CODIM1_N: usize = 7;

fn push(out: &mut Vec<RepDescriptor>, family: Family) {
    if let Ok(r) = RepDescriptor::new(family) {
        out.push(r);
    }
}

fn divisor_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).filter(move |a| n.is_multiple_of(*a)).map(move |a| (a, n / a))
}

/// FKM data with `2l = dim`; splits are listed once with `k+ >= k-`.
pub fn fkm_by_dimension(dim: usize) -> Vec<FkmParams> {
    let mut out = Vec::new();
    if !dim.is_multiple_of(2) {
        return out;
    }
    let l = dim / 2;
    let mut m = 1;
    while delta(m) <= l {
        if l.is_multiple_of(delta(m)) {
            let k = l / delta(m);
            if m % 4 == 0 {
                out.extend((k.div_ceil(2)..=k).map(|a| FkmParams::split(m, a, k - a)));
            } else {
                out.push(FkmParams::single(m, k));
            }
        }
        m += 1;
    }
    out.retain(|p| p.validate().is_ok());
    out
}

/// Catalog entries whose isotropy module has real dimension `dim` and whose
/// rank is at least `min_rank`, followed by the FKM entries of that size.
/// Classical parameters are listed in both orders.
pub fn catalog_by_dimension(dim: usize, min_rank: usize) -> Vec<RepDescriptor> {
    let mut out = Vec::new();
    if dim.is_multiple_of(2) {
        for (p, q) in divisor_pairs(dim / 2) {
            push(&mut out, Family::AIII { p, q });
            if q % 2 == 1 {
                push(&mut out, Family::BI { p, q: (q - 1) / 2 });
            }
        }
    }
    if dim.is_multiple_of(4) {
        for (p, q) in divisor_pairs(dim / 4) {
            push(&mut out, Family::CII { p, q });
            push(&mut out, Family::DI { p, q });
        }
    }
    for p in 2..=dim {
        if p * (p + 1) == dim {
            push(&mut out, Family::CI { p });
        }
        if p * (p - 1) == dim {
            push(&mut out, Family::DIII { p });
        }
    }
    for f in Family::exceptional() {
        push(&mut out, f);
    }
    push(&mut out, Family::Sphere { d: dim });
    out.retain(|r| r.dim == dim && r.rank >= min_rank);
    for p in fkm_by_dimension(dim) {
        push(&mut out, Family::Fkm(p));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub exists: bool,
    /// Set where completeness rests on an unsettled case.
    pub undecided: bool,
    /// First catalog entry that produced the answer.
    pub witness: Option<String>,
}

/// The FKM branch: an entry with `m >= 3` and a structure. These project to
/// inhomogeneous hypersurfaces.
fn fkm_witness(dim: usize) -> Option<String> {
    fkm_by_dimension(dim)
        .into_iter()
        .filter(|p| p.m >= 3)
        .filter_map(|p| RepDescriptor::new(Family::Fkm(p)).ok())
        .find(|r| closed_form(r).is_ok_and(|c| c.n_s >= 1 && c.has_inhomogeneous()))
        .map(|r| r.family.to_string())
}

fn scan(n_max: usize, keep: impl Fn(&RepDescriptor) -> bool, undecided: impl Fn(usize) -> bool) -> Vec<ScanRow> {
    (1..=n_max)
        .map(|n| {
            let dim = 4 * (n + 1);
            let symmetric = catalog_by_dimension(dim, 2)
                .into_iter()
                .filter(|r| r.fkm().is_none() && keep(r))
                .find(|r| closed_form(r).is_ok_and(|c| c.has_inhomogeneous()))
                .map(|r| r.family.to_string());
            let witness = symmetric.or_else(|| fkm_witness(dim));
            ScanRow { n, exists: witness.is_some(), undecided: undecided(n), witness }
        })
        .collect()
}

/// Inhomogeneous hypersurfaces in `HP^n`, `1 <= n <= n_max`: rank-two
/// symmetric entries and FKM entries of dimension `4(n + 1)`.
pub fn scan_codim1(n_max: usize) -> Vec<ScanRow> {
    scan(n_max, |r| r.rank == 2, |n| n == UNDECIDED_CODIM1_N)
}

/// Inhomogeneous irreducible polar foliations on `HP^n`.
pub fn scan_irreducible(n_max: usize) -> Vec<ScanRow> {
    scan(n_max, |r| r.irreducible, |_| false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::closed_form_str;

    fn names(dim: usize, min_rank: usize) -> Vec<String> {
        catalog_by_dimension(dim, min_rank).iter().map(|r| r.family.to_string()).collect()
    }

    #[test]
    fn catalog_examples() {
        let d16 = names(16, 2);
        for s in ["AIII(4,2)", "CII(2,2)", "DI(2,2)", "DI(1,4)", "FKM(3;2)"] {
            assert!(d16.contains(&s.to_string()), "{s} missing from {d16:?}");
        }
        assert!(names(28, 3).contains(&"FI".to_string()));
        assert!(!closed_form_str("FI").unwrap().has_inhomogeneous());
        for s in names(12, 2) {
            assert!(!closed_form_str(&s).unwrap().has_inhomogeneous(), "{s}");
        }
    }

    #[test]
    fn fkm_sizes() {
        // 2l = 16: FKM(1;8) with m- = 6, FKM(2;4), FKM(3;2), FKM(4;2,0), FKM(4;1,1),
        // FKM(5;1), FKM(6;1) and FKM(7;1) need m- >= 1.
        let got: Vec<String> = fkm_by_dimension(16).iter().map(|p| p.to_string()).collect();
        for s in ["FKM(1;8)", "FKM(2;4)", "FKM(3;2)", "FKM(4;2,0)", "FKM(4;1,1)", "FKM(5;1)", "FKM(6;1)"] {
            assert!(got.contains(&s.to_string()), "{s} missing from {got:?}");
        }
        assert!(!got.contains(&"FKM(7;1)".to_string()));
    }

    #[test]
    fn small_scans() {
        let c = scan_codim1(8);
        let want = [false, false, true, false, true, false, true, false];
        assert_eq!(c.iter().map(|r| r.exists).collect::<Vec<_>>(), want);
        assert!(c[6].undecided && c.iter().filter(|r| r.undecided).count() == 1);
        let i = scan_irreducible(20);
        let trues: Vec<usize> = i.iter().filter(|r| r.exists).map(|r| r.n).collect();
        assert_eq!(trues, vec![3, 5, 7, 8, 9, 11, 13, 14, 15, 17, 19, 20]);
        assert_eq!(i[2].witness.as_deref(), Some("AIII(2,4)"));
    }
}
