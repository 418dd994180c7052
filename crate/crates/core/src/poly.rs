//! Sparse multivariate polynomials with exact coefficients.
//!
//! Only what the quartic identity checks need: low degree (at most 8), up to
//! 254 variables, ring operations and evaluation.

use std::collections::HashMap;

use num_traits::Zero;

use crate::rational::Rational;

pub const MAX_DEGREE: usize = 8;
const EMPTY: u8 = u8::MAX;

/// A monomial as a sorted multiset of variable indices, padded with `EMPTY`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial([u8; MAX_DEGREE]);

impl Monomial {
    pub const ONE: Monomial = Monomial([EMPTY; MAX_DEGREE]);

    pub fn var(i: usize) -> Monomial {
        assert!(i < EMPTY as usize, "variable index {i} out of range");
        let mut m = [EMPTY; MAX_DEGREE];
        m[0] = i as u8;
        Monomial(m)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().take_while(|&&v| v != EMPTY).count()
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().take_while(|&&v| v != EMPTY).map(|&v| v as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (da, db) = (self.degree(), other.degree());
        assert!(da + db <= MAX_DEGREE, "monomial degree exceeds {MAX_DEGREE}");
        let mut out = [EMPTY; MAX_DEGREE];
        let (mut i, mut j) = (0, 0);
        for slot in out.iter_mut().take(da + db) {
            if j == db || (i < da && self.0[i] <= other.0[j]) {
                *slot = self.0[i];
                i += 1;
            } else {
                *slot = other.0[j];
                j += 1;
            }
        }
        Monomial(out)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: HashMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn var(i: usize) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(i), Rational::from_integer(1.into()));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &Poly, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, c * s);
        }
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        let mut out = Poly::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer((-1).into()));
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for v in m.vars() {
                t *= &x[v];
            }
            acc + t
        })
    }

    /// Partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let count = m.vars().filter(|&v| v == var).count();
            if count == 0 {
                continue;
            }
            let mut rest = [EMPTY; MAX_DEGREE];
            let mut removed = false;
            let mut k = 0;
            for v in m.vars() {
                if v == var && !removed {
                    removed = true;
                    continue;
                }
                rest[k] = v as u8;
                k += 1;
            }
            out.add_term(Monomial(rest), c * Rational::from_integer((count as i64).into()));
        }
        out
    }

    /// Terms sorted by monomial, for deterministic display.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by_key(|a| a.0);
        v
    }
}

/// Linear forms `sum_j a[r][j] x_j`, one per row of a matrix given as rows.
pub fn linear_forms(rows: &[Vec<Rational>]) -> Vec<Poly> {
    rows.iter()
        .map(|row| {
            let mut p = Poly::zero();
            for (j, c) in row.iter().enumerate() {
                p.add_term(Monomial::var(j), c.clone());
            }
            p
        })
        .collect()
}

/// `sum_i a_i b_i` for polynomial vectors.
pub fn poly_dot(a: &[Poly], b: &[Poly]) -> Poly {
    let mut out = Poly::zero();
    for (x, y) in a.iter().zip(b) {
        out.add_assign(&x.mul(y));
    }
    out
}
