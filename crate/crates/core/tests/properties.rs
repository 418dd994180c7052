use polarfol::classify::{
    classify_join, closed_form, compute_moduli, reparametrize, table_params, Table1Row,
};
use polarfol::export::{records_from_json, records_to_json};
use polarfol::liealg::{brute_force_j, AutAction, Family, RepDescriptor};
use proptest::prelude::*;

fn classical() -> impl Strategy<Value = RepDescriptor> {
    (0..5usize, 1..=5usize, 0..=5usize).prop_filter_map("valid descriptor", |(kind, p, q)| {
        let f = match kind {
            0 => Family::AIII { p, q },
            1 => Family::BI { p, q },
            2 => Family::CII { p, q },
            3 => Family::DI { p, q },
            _ => Family::DIII { p: p + 3 },
        };
        RepDescriptor::new(f).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn record_invariants(rep in classical()) {
        let r = compute_moduli(&rep).unwrap();
        prop_assert!(r.n_s <= r.n_j);
        prop_assert_eq!(r.n_s, r.structures.len());
        if r.n_s > 0 {
            prop_assert_eq!(r.dim % 4, 0);
        }
        if !rep.inner {
            prop_assert_eq!(r.n_s, 0);
        }
        let c = closed_form(&rep).unwrap();
        prop_assert_eq!((c.n_j, c.n_s), (r.n_j, r.n_s));
    }

    #[test]
    fn canonical_form_is_an_orbit_invariant(rep in classical(), word in prop::collection::vec(any::<prop::sample::Index>(), 0..16), pick in any::<prop::sample::Index>()) {
        let raw = brute_force_j(&rep).unwrap();
        prop_assume!(!raw.is_empty());
        let aut = AutAction::of(&rep);
        let gens = aut.generators();
        let h = &raw[pick.index(raw.len())];
        let c = aut.canonicalize(h);
        prop_assert_eq!(&aut.canonicalize(&c), &c);
        let mut g = h.clone();
        for i in &word {
            g = aut.apply(&gens[i.index(gens.len())], &g);
        }
        prop_assert_eq!(aut.canonicalize(&g), c);
    }

    #[test]
    fn join_count_ignores_summand_order(a in classical(), b in classical()) {
        let ra = closed_form(&a).unwrap();
        let rb = closed_form(&b).unwrap();
        prop_assume!(ra.n_s > 0 && rb.n_s > 0);
        let ab = classify_join(&format!("{}*{}", a.family, b.family), false).unwrap();
        let ba = classify_join(&format!("{}*{}", b.family, a.family), false).unwrap();
        prop_assert_eq!(ab.n_s, ba.n_s);
        prop_assert_eq!(ab.dim, ra.dim + rb.dim);
        if a.family != b.family {
            prop_assert_eq!(ab.n_s, ra.n_s * rb.n_s);
        }
    }

    #[test]
    fn json_round_trip(rep in classical()) {
        let recs = vec![compute_moduli(&rep).unwrap(), closed_form(&rep).unwrap()];
        let text = records_to_json(&recs).unwrap();
        let back = records_from_json(&text).unwrap();
        prop_assert_eq!(records_to_json(&back).unwrap(), text);
    }

    #[test]
    fn table_reparametrization_inverts(row in 0..3usize, p in 1..8usize, q in 1..12usize) {
        let row = [Table1Row::Su, Table1Row::So, Table1Row::Sp][row];
        prop_assume!(!(row == Table1Row::So && (p, q) == (1, 2)));
        if let Some(f) = reparametrize(row, p, q) {
            prop_assert_eq!(table_params(f), Some((row, p, q)));
        }
    }
}
