//! Library values against oracles computed here by independent means.

use std::collections::BTreeSet;

use polarfol::classify::{closed_form, compute_moduli};
use polarfol::clifford::delta;
use polarfol::liealg::{j_moduli, Family, FkmParams, RepDescriptor};
use polarfol::rational::{rat, Rational};

/// Hurwitz-Radon number: for `n = 2^(4d + c) * odd`, `rho(n) = 2^c + 8d`.
fn hurwitz_radon(n: usize) -> usize {
    let e = n.trailing_zeros() as usize;
    (1 << (e % 4)) + 8 * (e / 4)
}

#[test]
fn delta_is_smallest_module_with_enough_complex_structures() {
    // m - 1 anticommuting complex structures on R^l exist iff rho(l) >= m.
    for m in 1..=40 {
        let oracle = (0..).map(|e| 1usize << e).find(|&l| hurwitz_radon(l) >= m).unwrap();
        assert_eq!(delta(m), oracle, "m = {m}");
    }
}

fn dim_su(n: usize) -> usize {
    n * n - 1
}
fn dim_so(n: usize) -> usize {
    n * (n.max(1) - 1) / 2
}
fn dim_sp(n: usize) -> usize {
    n * (2 * n + 1)
}

/// `dim G - dim K` from group dimensions.
fn quotient_dim(f: Family) -> usize {
    match f {
        Family::AIII { p, q } => dim_su(p + q) - dim_su(p) - dim_su(q) - 1,
        Family::BI { p, q } => dim_so(2 * p + 2 * q + 1) - dim_so(2 * p) - dim_so(2 * q + 1),
        Family::CI { p } => dim_sp(p) - p * p,
        Family::CII { p, q } => dim_sp(p + q) - dim_sp(p) - dim_sp(q),
        Family::DI { p, q } => dim_so(2 * p + 2 * q) - dim_so(2 * p) - dim_so(2 * q),
        Family::DIII { p } => dim_so(2 * p) - p * p,
        Family::EII => 78 - dim_su(6) - 3,
        Family::EIII => 78 - dim_so(10) - 1,
        Family::EV => 133 - dim_su(8),
        Family::EVI => 133 - dim_so(12) - 3,
        Family::EVII => 133 - 78 - 1,
        Family::EVIII => 248 - dim_so(16),
        Family::EIX => 248 - 133 - 3,
        Family::FI => 52 - dim_sp(3) - 3,
        Family::G => 14 - 3 - 3,
        Family::Sphere { d } => dim_so(d + 1) - dim_so(d),
        Family::Fkm(p) => 2 * p.total_modules() * delta(p.m),
    }
}

#[test]
fn catalog_dimensions_match_group_dimensions() {
    let mut fams: Vec<Family> = Family::exceptional().to_vec();
    for p in 1..=5 {
        for q in 0..=5 {
            fams.extend([Family::AIII { p, q }, Family::BI { p, q }, Family::CII { p, q }, Family::DI { p, q }]);
        }
        fams.extend([Family::CI { p }, Family::DIII { p: p + 3 }, Family::Sphere { d: p + 1 }]);
    }
    fams.extend([FkmParams::single(3, 2), FkmParams::split(4, 1, 1), FkmParams::single(9, 1)].map(Family::Fkm));
    let mut checked = 0;
    for f in fams {
        if let Ok(rep) = RepDescriptor::new(f) {
            assert_eq!(rep.dim, quotient_dim(f), "{f}");
            checked += 1;
        }
    }
    assert!(checked > 60);
}

/// Classes of complex structures `H` in the torus of `s(u_p + u_q)` by a
/// direct search: entries on a `1/(p+q)` grid, `a_i - b_j = +-1` for all
/// pairs, modulo sorting each side, swapping sides when `p = q`, and sign.
fn aiii_classes(p: usize, q: usize) -> usize {
    let n = (p + q) as i64;
    let grid: Vec<Rational> = (-2 * n..=2 * n).map(|k| rat(k, n)).collect();
    let one = rat(1, 1);
    let fits = |x: &Rational, y: &Rational| (x - y == one) || (y - x == one);
    let mut sorted_tuples: Vec<Vec<Rational>> = vec![vec![]];
    for _ in 0..p {
        sorted_tuples = sorted_tuples
            .into_iter()
            .flat_map(|t| {
                grid.iter()
                    .filter(|g| t.last().is_none_or(|l| *g >= l))
                    .map(|g| {
                        let mut u = t.clone();
                        u.push(g.clone());
                        u
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut classes = BTreeSet::new();
    for a in &sorted_tuples {
        let cands: Vec<Rational> = [&a[0] - &one, &a[0] + &one].into_iter().filter(|v| a.iter().all(|x| fits(x, v))).collect();
        // Sorted b: choose how many take the larger candidate.
        let mut bs = Vec::new();
        match cands.as_slice() {
            [v] => bs.push(vec![v.clone(); q]),
            [lo, hi] => {
                for k in 0..=q {
                    let mut b = vec![lo.clone(); q - k];
                    b.extend(std::iter::repeat_n(hi.clone(), k));
                    bs.push(b);
                }
            }
            _ => {}
        }
        for b in bs {
            let total: Rational = a.iter().chain(&b).sum();
            if total != rat(0, 1) {
                continue;
            }
            let mut forms = Vec::new();
            for sign in [1i64, -1] {
                let s = rat(sign, 1);
                let mut x: Vec<Rational> = a.iter().map(|v| v * &s).collect();
                let mut y: Vec<Rational> = b.iter().map(|v| v * &s).collect();
                x.sort();
                y.sort();
                forms.push([x.clone(), y.clone()].concat());
                if p == q {
                    forms.push([y, x].concat());
                }
            }
            classes.insert(forms.into_iter().min().unwrap());
        }
    }
    classes.len()
}

#[test]
fn aiii_j_moduli_match_direct_search() {
    for p in 2..=4 {
        for q in 2..=4 {
            let rep = RepDescriptor::new(Family::AIII { p, q }).unwrap();
            assert_eq!(j_moduli(&rep).unwrap().len(), aiii_classes(p, q), "AIII({p},{q})");
        }
    }
}

#[test]
fn classification_table_cells_typed_by_hand() {
    // (descriptor, N_S) cells of the classification table.
    let cells = [
        ("AIII(2,4)", 2),
        ("AIII(4,4)", 1),
        ("AIII(2,3)", 1),
        ("DI(2,4)", 2),
        ("DI(2,2)", 1),
        ("BI(2,3)", 1),
        ("CII(2,2)", 1),
        ("CII(2,3)", 2),
        ("EII", 1),
        ("EIII", 1),
        ("EVI", 2),
        ("EVIII", 1),
        ("EIX", 1),
        ("FI", 1),
        ("G", 1),
    ];
    for (s, n) in cells {
        let rep = RepDescriptor::parse(s).unwrap();
        assert_eq!(closed_form(&rep).unwrap().n_s, n, "{s}");
        if !rep.tabulated_only {
            assert_eq!(compute_moduli(&rep).unwrap().n_s, n, "{s}");
        }
    }
}
