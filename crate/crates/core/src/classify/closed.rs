//! Moduli counts from the known case-by-case formulas.

use super::record::{ClassificationRecord, Provenance, StructureEntry};
use crate::error::Result;
use crate::liealg::{AutAction, Family, FkmModules, FkmParams, RepDescriptor};

fn even(n: usize) -> bool {
    n.is_multiple_of(2)
}

/// `(N_J, N_S)` for an FKM datum.
pub fn fkm_counts(f: FkmParams) -> (usize, usize) {
    let m = f.m;
    match (m % 8, f.modules) {
        (0, FkmModules::Split(a, b)) => {
            let nj = if even(a) && even(b) { 2 } else { 1 };
            let ns = if a % 4 == 0 && b % 4 == 0 { 2 } else { 1 };
            (nj, ns)
        }
        (1 | 7, FkmModules::Single(k)) => {
            let nj = if even(k) { 2 } else { 1 };
            let y = usize::from(k % 4 == 0);
            (nj, y + usize::from(m > 1))
        }
        (2 | 6, FkmModules::Single(k)) => (2 + k / 2, if even(k) { 2 } else { 1 }),
        (3 | 5, FkmModules::Single(_)) | (4, FkmModules::Split(..)) => (2, 2),
        _ => unreachable!("validated FKM data"),
    }
}

/// Closed-form `(N_J, N_S)` and structure labels with homogeneity flags.
fn table(rep: &RepDescriptor) -> (usize, Vec<(String, bool)>) {
    let qk = rep.quaternionic_kahler;
    let s = |label: String, hom: bool| (label, hom);
    match rep.family {
        Family::AIII { p, q } => {
            let nj = if p == q { 1 + p / 2 } else { 1 + p / 2 + q / 2 };
            let mut st = Vec::new();
            if even(p) {
                st.push(s(format!("u{p}-side"), qk && p == 2));
            }
            if even(q) && p != q {
                st.push(s(format!("u{q}-side"), qk && q == 2));
            }
            (nj, st)
        }
        Family::BI { p, q } => {
            let st = if even(p) { vec![s(format!("so{}-side", 2 * p), q == 0 || (qk && p == 2))] } else { vec![] };
            (1, st)
        }
        Family::CI { .. } | Family::EV | Family::EVII => (1, vec![]),
        Family::DIII { .. } => (2, vec![]),
        Family::CII { p, q } => {
            let mut st = vec![s(format!("sp{p}-side"), false)];
            if p != q {
                st.push(s(format!("sp{q}-side"), false));
            }
            (st.len(), st)
        }
        Family::DI { p, q } => {
            let nj = if p == q { 1 } else { 2 };
            let mut st = Vec::new();
            if even(p) {
                st.push(s(format!("so{}-side", 2 * p), qk && p == 2));
            }
            if even(q) && p != q {
                st.push(s(format!("so{}-side", 2 * q), qk && q == 2));
            }
            (nj, st)
        }
        Family::EII => (2, vec![s("su2-factor".into(), true)]),
        Family::EIII => (2, vec![s("so3-in-so10".into(), false)]),
        Family::EVI => (2, vec![s("su2-factor".into(), true), s("so3-in-so12".into(), false)]),
        Family::EVIII => (1, vec![s("so3-in-so16".into(), false)]),
        Family::EIX | Family::FI | Family::G => (1, vec![s("su2-factor".into(), true)]),
        Family::Fkm(f) => {
            let (nj, ns) = fkm_counts(f);
            let hom = f.m <= 2;
            let mut st = Vec::new();
            if f.m > 1 {
                st.push(s(format!("so3-in-so{}", f.m + 1), hom));
            }
            while st.len() < ns {
                st.push(s("commutant-diagonal".into(), hom));
            }
            (nj, st)
        }
        Family::Sphere { d } => {
            let nj = usize::from(even(d));
            let st = if d % 4 == 0 { vec![s("standard".into(), true)] } else { vec![] };
            (nj, st)
        }
    }
}

pub fn closed_form(rep: &RepDescriptor) -> Result<ClassificationRecord> {
    let (nj, st) = table(rep);
    let mut rec = ClassificationRecord::skeleton(rep, Provenance::Tabulated);
    rec.n_j = nj;
    rec.n_s = st.len();
    rec.structures = st.into_iter().map(|(l, h)| StructureEntry::tabulated(&l, h)).collect();
    rec.group = if rep.tabulated_only { "tabulated".into() } else { AutAction::of(rep).describe() };
    Ok(rec)
}

/// Parses a descriptor and returns its closed-form record.
pub fn closed_form_str(s: &str) -> Result<ClassificationRecord> {
    closed_form(&RepDescriptor::parse(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(s: &str) -> usize {
        closed_form_str(s).unwrap().n_s
    }

    #[test]
    fn documented_values() {
        assert_eq!(ns("CII(2,3)"), 2);
        assert_eq!(ns("FKM(2;3)"), 1);
        assert_eq!(ns("FKM(1;3)"), 0);
        assert_eq!(ns("FKM(4;1,1)"), 2);
        assert_eq!(ns("AIII(3,3)"), 0);
        assert_eq!(ns("BI(3,2)"), 0);
        assert_eq!(ns("EVI"), 2);
        let r = closed_form_str("AIII(2,2)").unwrap();
        assert_eq!((r.n_j, r.n_s), (2, 1));
        let r = closed_form_str("DI(2,3)").unwrap();
        assert_eq!((r.n_j, r.n_s), (2, 1));
    }

    #[test]
    fn fkm_rule_by_residue() {
        // Both N_S = 2 branches and the fallbacks, one case per residue.
        let cases = [
            (FkmParams::split(8, 4, 4), (2, 2)),
            (FkmParams::split(8, 2, 4), (2, 1)),
            (FkmParams::split(8, 1, 2), (1, 1)),
            (FkmParams::single(9, 4), (2, 2)),
            (FkmParams::single(7, 2), (2, 1)),
            (FkmParams::single(1, 4), (2, 1)),
            (FkmParams::single(1, 3), (1, 0)),
            (FkmParams::single(6, 3), (3, 1)),
            (FkmParams::single(2, 4), (4, 2)),
            (FkmParams::single(5, 1), (2, 2)),
            (FkmParams::split(4, 1, 1), (2, 2)),
        ];
        for (p, want) in cases {
            assert_eq!(fkm_counts(p), want, "{p}");
        }
    }

    #[test]
    fn quaternionic_kahler_rows_have_one_homogeneous_structure() {
        for s in ["AIII(2,4)", "AIII(2,3)", "DI(2,4)", "BI(2,3)", "EII", "EVI", "EIX", "FI", "G"] {
            let r = closed_form_str(s).unwrap();
            assert!(r.n_s >= 1);
            assert_eq!(r.structures.iter().filter(|e| e.homogeneous).count(), 1, "{s}");
        }
        for s in ["CII(2,2)", "EIII", "EVIII", "AIII(4,6)"] {
            assert!(closed_form_str(s).unwrap().structures.iter().all(|e| !e.homogeneous), "{s}");
        }
    }
}
