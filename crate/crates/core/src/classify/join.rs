//! Joins: direct sums of representations with `Sp(1)` acting diagonally.
//!
//! A structure on a join picks one structure on every summand. Identical
//! summands may be permuted, so their choices form a multiset.

use std::collections::BTreeMap;

use super::closed::closed_form;
use super::compute::compute_moduli;
use super::record::{quaternionic_n, ClassificationRecord, Provenance, StructureEntry};
use crate::error::{Error, Result};
use crate::liealg::RepDescriptor;

pub const JOIN_SEPARATOR: char = '*';

/// Splits `S(4)*AIII(2,2)` into its summands.
pub fn parse_join(spec: &str) -> Result<Vec<RepDescriptor>> {
    let parts: Vec<&str> = spec.split(JOIN_SEPARATOR).map(str::trim).collect();
    if parts.len() < 2 || parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("a join needs at least two summands separated by '{JOIN_SEPARATOR}': {spec}")));
    }
    parts.into_iter().map(RepDescriptor::parse).collect()
}

fn multisets(s: usize, c: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..c {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let lo = v.last().copied().unwrap_or(0);
                (lo..s).map(move |i| {
                    let mut w = v.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of size-`c` multisets from `s` kinds.
fn multiset_count(s: usize, c: usize) -> usize {
    if s == 0 {
        return usize::from(c == 0);
    }
    binomial(s + c - 1, c)
}

/// Combines per-summand records into a join record.
pub fn compose_join(summands: &[ClassificationRecord]) -> Result<ClassificationRecord> {
    if summands.len() < 2 {
        return Err(Error::InvalidParameters("a join needs at least two summands".into()));
    }
    if let Some(r) = summands.iter().find(|r| r.n_s == 0) {
        return Err(Error::EmptyJoin(format!("{} carries no quaternionic structure", r.descriptor)));
    }
    let mut groups: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, r) in summands.iter().enumerate() {
        groups.entry(r.descriptor.as_str()).or_default().push(i);
    }
    let higher_rank = summands.iter().filter(|r| r.rank > 1).count();

    // Each choice assigns a structure index to every summand.
    let mut n_j = 1;
    let mut choices: Vec<Vec<usize>> = vec![vec![0; summands.len()]];
    for members in groups.values() {
        let rec = &summands[members[0]];
        let c = members.len();
        n_j *= multiset_count(rec.n_j, c);
        let opts = multisets(rec.n_s, c);
        choices = choices
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut p = prefix.clone();
                    for (&i, &pick) in members.iter().zip(o) {
                        p[i] = pick;
                    }
                    p
                })
            })
            .collect();
    }

    let structures: Vec<StructureEntry> = choices
        .into_iter()
        .map(|choice| {
            let mut hs = Some(Vec::new());
            let mut labels = Vec::new();
            let mut hom = higher_rank <= 1;
            for (rec, &i) in summands.iter().zip(&choice) {
                let e = &rec.structures[i];
                hom &= e.homogeneous;
                labels.push(format!("{}:{}", rec.descriptor, e.witness));
                match (&mut hs, &e.h) {
                    (Some(acc), Some(h)) => acc.extend(h.iter().cloned()),
                    _ => hs = None,
                }
            }
            StructureEntry { h: hs, witness: format!("join[{}]", labels.join(" * ")), homogeneous: hom }
        })
        .collect();

    let dim = summands.iter().map(|r| r.dim).sum();
    let provenance = if summands.iter().all(|r| r.provenance == Provenance::Computed) {
        Provenance::Computed
    } else {
        Provenance::Tabulated
    };
    let descriptor = summands.iter().map(|r| r.descriptor.as_str()).collect::<Vec<_>>().join("*");
    let mut params = BTreeMap::new();
    params.insert("summands".to_string(), summands.len());
    Ok(ClassificationRecord {
        family: "Join".into(),
        params,
        dim,
        rank: summands.iter().map(|r| r.rank).sum(),
        n: quaternionic_n(dim),
        n_j,
        n_s: structures.len(),
        structures,
        provenance,
        group: format!("join of {descriptor}"),
        descriptor,
    })
}

/// Parses and classifies a join. With `computed` the summands go through
/// the exhaustive search, otherwise through the closed forms.
pub fn classify_join(spec: &str, computed: bool) -> Result<ClassificationRecord> {
    let reps = parse_join(spec)?;
    let recs = reps
        .iter()
        .map(|r| if computed { compute_moduli(r) } else { closed_form(r) })
        .collect::<Result<Vec<_>>>()?;
    compose_join(&recs)
}
