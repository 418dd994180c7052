use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::liealg::{CartanElement, RepDescriptor, Su2Witness};
use crate::rational::to_text;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Computed,
    Tabulated,
}

/// One quaternionic structure class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEntry {
    /// Torus representative as `a/b` strings, absent for tabulated rows.
    #[serde(rename = "H")]
    pub h: Option<Vec<String>>,
    /// Witness summary, or `tabulated`.
    pub witness: String,
    pub homogeneous: bool,
}

impl StructureEntry {
    pub fn tabulated(label: &str, homogeneous: bool) -> Self {
        StructureEntry { h: None, witness: format!("tabulated:{label}"), homogeneous }
    }

    pub fn computed(h: &CartanElement, w: &Su2Witness, homogeneous: bool) -> Self {
        StructureEntry { h: Some(h.0.iter().map(to_text).collect()), witness: witness_summary(w), homogeneous }
    }
}

/// `tag[factor:tag(±i,…);…]`, stable across runs.
pub fn witness_summary(w: &Su2Witness) -> String {
    let parts: Vec<String> = w
        .parts
        .iter()
        .map(|p| {
            let sup: Vec<String> = p.support.iter().map(|(i, s)| format!("{}{i}", if *s > 0 { '+' } else { '-' })).collect();
            format!("{}:{}({})", p.factor, p.tag, sup.join(","))
        })
        .collect();
    format!("{}[{}]", w.tag, parts.join(";"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub family: String,
    pub params: BTreeMap<String, usize>,
    pub dim: usize,
    pub rank: usize,
    /// Quaternionic dimension `n` with `dim = 4(n + 1)`, when it exists.
    pub n: Option<usize>,
    #[serde(rename = "N_J")]
    pub n_j: usize,
    #[serde(rename = "N_S")]
    pub n_s: usize,
    pub structures: Vec<StructureEntry>,
    pub provenance: Provenance,
    /// Full descriptor text, e.g. `AIII(2,3)`.
    #[serde(skip)]
    pub descriptor: String,
    /// Description of the group used for canonicalization.
    #[serde(skip)]
    pub group: String,
}

pub fn quaternionic_n(dim: usize) -> Option<usize> {
    (dim.is_multiple_of(4) && dim >= 4).then(|| dim / 4 - 1)
}

impl ClassificationRecord {
    pub fn skeleton(rep: &RepDescriptor, provenance: Provenance) -> Self {
        ClassificationRecord {
            family: rep.family.tag().to_string(),
            params: rep.family.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            dim: rep.dim,
            rank: rep.rank,
            n: quaternionic_n(rep.dim),
            n_j: 0,
            n_s: 0,
            structures: Vec::new(),
            provenance,
            descriptor: rep.family.to_string(),
            group: String::new(),
        }
    }

    pub fn has_inhomogeneous(&self) -> bool {
        self.structures.iter().any(|s| !s.homogeneous)
    }
}
