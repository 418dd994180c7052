use std::fmt;

use num_traits::{Signed, Zero};

use crate::matrix::dot;
use crate::rational::{to_text, Rational};

/// Element of the canonical maximal torus, as one flat coordinate vector over
/// the factor list of its descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanElement(pub Vec<Rational>);

impl CartanElement {
    pub fn zeros(n: usize) -> Self {
        CartanElement(vec![Rational::zero(); n])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        CartanElement(self.0.iter().map(|x| -x).collect())
    }

    pub fn satisfies(&self, constraints: &[Vec<Rational>]) -> bool {
        constraints.iter().all(|row| dot(row, &self.0).is_zero())
    }

    pub fn to_text(&self) -> Vec<String> {
        self.0.iter().map(to_text).collect()
    }
}

impl fmt::Display for CartanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text().join(", "))
    }
}

/// A weight of the complexified representation, stored up to sign with the
/// first nonzero coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn normalized(mut v: Vec<Rational>) -> Self {
        if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
        Weight(v)
    }

    pub fn eval(&self, h: &CartanElement) -> Rational {
        dot(&self.0, &h.0)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(to_text).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn normalization_is_sign_blind() {
        let a = Weight::normalized(vec![int(0), int(-1), int(1)]);
        let b = Weight::normalized(vec![int(0), int(1), int(-1)]);
        assert_eq!(a, b);
        assert_eq!(a.0[1], int(1));
        assert_eq!(Weight::normalized(vec![int(0)]).0, vec![int(0)]);
    }
}
