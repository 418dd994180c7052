//! The implemented congruence group on the torus and orbit canonicalization.
//!
//! The group is generated by coordinate permutations inside each factor, the
//! sign changes allowed by each factor's [`FlipRule`], exchanges of identical
//! factors listed by the descriptor, and the global negation `h -> -h`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::cartan::{CartanElement, Weight};
use super::catalog::RepDescriptor;
use super::factor::{offsets, FactorSpec, FlipRule};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Transpose { factor: usize, i: usize, j: usize },
    Flip { factor: usize, i: usize },
    FlipPair { factor: usize, i: usize, j: usize },
    SwapFactors(usize, usize),
    Negate,
}

#[derive(Clone, Debug)]
pub struct AutAction {
    factors: Vec<FactorSpec>,
    offs: Vec<usize>,
    /// Every permutation of factor blocks in the group generated by the swaps.
    block_perms: Vec<Vec<usize>>,
    swaps: Vec<(usize, usize)>,
}

fn perm_closure(n: usize, swaps: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(p) = stack.pop() {
        for &(a, b) in swaps {
            let mut q = p.clone();
            q.swap(a, b);
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

impl AutAction {
    pub fn new(factors: Vec<FactorSpec>, swaps: Vec<(usize, usize)>) -> Self {
        for &(a, b) in &swaps {
            assert_eq!(factors[a], factors[b], "only identical factors can be exchanged");
        }
        let offs = offsets(&factors);
        let block_perms = perm_closure(factors.len(), &swaps);
        AutAction { factors, offs, block_perms, swaps }
    }

    pub fn of(rep: &RepDescriptor) -> Self {
        AutAction::new(rep.factors.clone(), rep.swaps.clone())
    }

    pub fn dim(&self) -> usize {
        *self.offs.last().unwrap()
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut out = vec![Generator::Negate];
        for (f, spec) in self.factors.iter().enumerate() {
            let r = spec.factor.coords();
            for i in 0..r.saturating_sub(1) {
                out.push(Generator::Transpose { factor: f, i, j: i + 1 });
            }
            match spec.flips {
                FlipRule::None => {}
                FlipRule::All => out.extend((0..r).map(|i| Generator::Flip { factor: f, i })),
                FlipRule::Even => {
                    out.extend((0..r.saturating_sub(1)).map(|i| Generator::FlipPair { factor: f, i, j: i + 1 }))
                }
            }
        }
        out.extend(self.swaps.iter().map(|&(a, b)| Generator::SwapFactors(a, b)));
        out
    }

    /// Applies a generator to a coordinate vector (torus element or weight).
    pub fn apply_coords(&self, g: &Generator, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        match *g {
            Generator::Transpose { factor, i, j } => out.swap(self.offs[factor] + i, self.offs[factor] + j),
            Generator::Flip { factor, i } => {
                let k = self.offs[factor] + i;
                out[k] = -out[k].clone();
            }
            Generator::FlipPair { factor, i, j } => {
                for k in [self.offs[factor] + i, self.offs[factor] + j] {
                    out[k] = -out[k].clone();
                }
            }
            Generator::SwapFactors(a, b) => {
                let len = self.factors[a].factor.coords();
                for t in 0..len {
                    out.swap(self.offs[a] + t, self.offs[b] + t);
                }
            }
            Generator::Negate => {
                for x in out.iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        out
    }

    pub fn apply(&self, g: &Generator, h: &CartanElement) -> CartanElement {
        CartanElement(self.apply_coords(g, &h.0))
    }

    /// Checks that every generator maps the weight set onto itself.
    pub fn check_preserves(&self, weights: &[Weight]) -> Result<()> {
        let set: BTreeSet<&Weight> = weights.iter().collect();
        for g in self.generators() {
            let image: BTreeSet<Weight> =
                weights.iter().map(|w| Weight::normalized(self.apply_coords(&g, &w.0))).collect();
            if image.len() != set.len() || image.iter().any(|w| !set.contains(w)) {
                return Err(Error::InvalidParameters(format!("generator {g:?} does not preserve the weights")));
            }
        }
        Ok(())
    }

    fn canonical_block(spec: &FactorSpec, block: &[Rational]) -> Vec<Rational> {
        let mut v = block.to_vec();
        match spec.flips {
            FlipRule::None => v.sort(),
            FlipRule::All => {
                for x in v.iter_mut() {
                    *x = -x.abs();
                }
                v.sort();
            }
            FlipRule::Even => {
                let positives = v.iter().filter(|x| x.is_positive()).count();
                let has_zero = v.iter().any(Zero::is_zero);
                for x in v.iter_mut() {
                    *x = -x.abs();
                }
                v.sort();
                if positives % 2 == 1 && !has_zero {
                    // One sign must stay positive; the smallest magnitude goes last.
                    let last = v.len() - 1;
                    v[last] = -v[last].clone();
                }
            }
        }
        v
    }

    fn canonical_fixed(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = Vec::with_capacity(v.len());
        for (f, spec) in self.factors.iter().enumerate() {
            out.extend(Self::canonical_block(spec, &v[self.offs[f]..self.offs[f + 1]]));
        }
        out
    }

    /// Lexicographically smallest element of the orbit of `h`.
    pub fn canonicalize(&self, h: &CartanElement) -> CartanElement {
        let mut best: Option<Vec<Rational>> = None;
        for sign in [false, true] {
            let base: Vec<Rational> = if sign { h.0.iter().map(|x| -x).collect() } else { h.0.clone() };
            for perm in &self.block_perms {
                // Block `f` of the permuted vector is block `perm[f]` of `base`.
                let mut permuted = Vec::with_capacity(base.len());
                for &src in perm {
                    permuted.extend_from_slice(&base[self.offs[src]..self.offs[src + 1]]);
                }
                let cand = self.canonical_fixed(&permuted);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        CartanElement(best.unwrap_or_default())
    }

    /// Short description of the implemented group, for output records.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|s| {
                let flips = match s.flips {
                    FlipRule::None => "perm",
                    FlipRule::All => "perm+signs",
                    FlipRule::Even => "perm+even-signs",
                };
                format!("{}:{}", s.factor, flips)
            })
            .collect();
        if !self.swaps.is_empty() {
            parts.push("swap".into());
        }
        parts.push("negation".into());
        parts.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog::weights_of;
    use crate::rational::int;
    use std::collections::VecDeque;

    fn ints(v: &[i64]) -> CartanElement {
        CartanElement(v.iter().map(|&x| int(x)).collect())
    }

    /// Full orbit by breadth-first search over the generators.
    fn orbit(action: &AutAction, h: &CartanElement) -> BTreeSet<CartanElement> {
        let mut seen = BTreeSet::from([h.clone()]);
        let mut queue = VecDeque::from([h.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in action.generators() {
                let y = action.apply(&g, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    #[test]
    fn negation_and_permutation_identify() {
        let rep = RepDescriptor::parse("AIII(2,3)").unwrap();
        let a = AutAction::of(&rep);
        assert_eq!(a.canonicalize(&ints(&[-1, 1, 0, 0, 0])), a.canonicalize(&ints(&[1, -1, 0, 0, 0])));
    }

    #[test]
    fn equal_sides_are_exchanged() {
        let rep = RepDescriptor::parse("AIII(2,2)").unwrap();
        let a = AutAction::of(&rep);
        assert_eq!(a.canonicalize(&ints(&[0, 0, 1, -1])), a.canonicalize(&ints(&[1, -1, 0, 0])));
        let di = RepDescriptor::parse("DI(2,3)").unwrap();
        let b = AutAction::of(&di);
        assert_ne!(b.canonicalize(&ints(&[1, 1, 0, 0, 0])), b.canonicalize(&ints(&[0, 0, 1, 1, 0])));
    }

    #[test]
    fn canonical_form_is_orbit_minimum() {
        let cases = [
            ("AIII(2,2)", ints(&[2, -1, 0, -1])),
            ("DI(2,2)", ints(&[1, -2, 0, 3])),
            ("EIII", ints(&[1, -2, 3, -1, 2, 1])),
            ("EIII", ints(&[1, -2, 3, 0, 2, 1])),
            ("CII(2,2)", ints(&[1, -1, 2, 0])),
            ("DIII(4)", ints(&[3, -1, -1, 0])),
        ];
        for (s, h) in cases {
            let rep = RepDescriptor::parse(s).unwrap();
            let a = AutAction::of(&rep);
            let orb = orbit(&a, &h);
            let min = orb.iter().next().unwrap().clone();
            assert_eq!(a.canonicalize(&h), min, "{s}");
            for x in &orb {
                assert_eq!(a.canonicalize(x), min, "{s}");
            }
        }
    }

    #[test]
    fn generators_preserve_catalog_weights() {
        for s in ["AIII(3,3)", "BI(2,2)", "CI(3)", "CII(3,3)", "DI(3,3)", "DIII(5)", "EII", "EIII", "EV", "EVI", "EVIII", "FI", "G", "FKM(8;1,2)", "FKM(5;1)", "Sphere(5)"] {
            let rep = RepDescriptor::parse(s).unwrap();
            let ws = weights_of(&rep).unwrap();
            AutAction::of(&rep).check_preserves(&ws).unwrap();
        }
    }

    #[test]
    fn odd_flip_breaks_half_spin() {
        let rep = RepDescriptor::parse("EVIII").unwrap();
        let ws = weights_of(&rep).unwrap();
        let a = AutAction::of(&rep);
        let flip = Generator::Flip { factor: 0, i: 0 };
        let moved = ws.iter().filter(|w| !ws.contains(&Weight::normalized(a.apply_coords(&flip, &w.0)))).count();
        assert!(moved > 0);
    }
}
