//! Exhaustive search for torus elements on which every weight takes the
//! value `±1`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::aut::AutAction;
use super::cartan::{CartanElement, Weight};
use super::catalog::{weights_of, RepDescriptor};
use crate::error::{Error, Result};
use crate::linsolve::{inverse, rank};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Largest torus dimension searched. The largest catalog case in use is an
/// FKM datum with `so(11) + u(8)`, of dimension 13.
pub const RANK_GUARD: usize = 16;

fn is_unit(x: &Rational) -> bool {
    x.abs().is_one()
}

/// Picks weights greedily until together with the constraints they span the
/// dual of the torus. Returns the chosen indices.
fn independent_subset(weights: &[Weight], constraints: &[Vec<Rational>], n: usize) -> Result<Vec<usize>> {
    let mut rows: Vec<Vec<Rational>> = constraints.to_vec();
    let mut current = if rows.is_empty() { 0 } else { rank(&Matrix::from_rows(rows.clone())?) };
    let mut chosen = Vec::new();
    for (i, w) in weights.iter().enumerate() {
        if current == n {
            break;
        }
        if w.0.iter().all(Zero::is_zero) {
            continue;
        }
        rows.push(w.0.clone());
        let r = rank(&Matrix::from_rows(rows.clone())?);
        if r > current {
            current = r;
            chosen.push(i);
        } else {
            rows.pop();
        }
    }
    if current < n {
        return Err(Error::InvalidParameters("weights do not span the torus dual".into()));
    }
    Ok(chosen)
}

/// All `h` in the torus with `λ(h) = ±1` for every weight `λ`, sorted.
pub fn brute_force_j(rep: &RepDescriptor) -> Result<Vec<CartanElement>> {
    let weights = weights_of(rep)?;
    let n = rep.torus_dim();
    if n > RANK_GUARD {
        return Err(Error::RankGuard { dim: n, limit: RANK_GUARD });
    }
    if weights.iter().any(|w| w.0.iter().all(Zero::is_zero)) {
        // A zero weight can never take the value ±1.
        return Ok(Vec::new());
    }
    let subset = independent_subset(&weights, &rep.constraints, n)?;
    let d = subset.len();
    let mut rows: Vec<Vec<Rational>> = subset.iter().map(|&i| weights[i].0.clone()).collect();
    rows.extend(rep.constraints.iter().cloned());
    let inv = inverse(&Matrix::from_rows(rows)?).expect("square system of full rank");
    // h = inv · (s_1, …, s_d, 0, …, 0): a signed sum of the first d columns.
    let cols: Vec<Vec<Rational>> = (0..d).map(|c| (0..n).map(|r| inv.get(r, c).clone()).collect()).collect();
    let two = Rational::from_integer(2.into());

    let others: Vec<&Weight> = weights.iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, w)| w).collect();

    let mut h: Vec<Rational> = vec![Rational::zero(); n];
    for col in &cols {
        for (x, c) in h.iter_mut().zip(col) {
            *x += c;
        }
    }
    let mut signs = vec![1i8; d];
    let mut found = BTreeSet::new();
    // Gray-code walk over all 2^d sign vectors, one column update per step.
    for step in 0u64..(1u64 << d) {
        if step > 0 {
            let bit = step.trailing_zeros() as usize;
            let delta = if signs[bit] == 1 { -&two } else { two.clone() };
            signs[bit] = -signs[bit];
            for (x, c) in h.iter_mut().zip(&cols[bit]) {
                *x += &delta * c;
            }
        }
        let elem = CartanElement(h.clone());
        if others.iter().all(|w| is_unit(&w.eval(&elem))) {
            found.insert(elem);
        }
    }
    Ok(found.into_iter().collect())
}

/// Orbit representatives of the solutions under the implemented group.
pub fn j_moduli(rep: &RepDescriptor) -> Result<Vec<CartanElement>> {
    let action = AutAction::of(rep);
    let classes: BTreeSet<CartanElement> = brute_force_j(rep)?.iter().map(|h| action.canonicalize(h)).collect();
    Ok(classes.into_iter().collect())
}
