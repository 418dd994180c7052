//! Sparse integer matrices for fast exact checks on Clifford data.
//!
//! Conversion fails when an entry is not an integer in `i64` range, and
//! arithmetic fails on overflow; callers then fall back to [`Matrix`].

use num_traits::ToPrimitive;

use crate::matrix::Matrix;

/// Rows of `(column, value)` pairs, sorted by column, zeros omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseInt {
    n: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseInt {
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        if !m.is_square() {
            return None;
        }
        let n = m.rows();
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let mut row = Vec::new();
            for (c, v) in m.row(r).iter().enumerate() {
                if !v.is_integer() {
                    return None;
                }
                let x = v.to_integer().to_i64()?;
                if x != 0 {
                    row.push((c, x));
                }
            }
            rows.push(row);
        }
        Some(SparseInt { n, rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.n];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                rows[c].push((r, v));
            }
        }
        SparseInt { n: self.n, rows }
    }

    pub fn mul(&self, other: &SparseInt) -> Option<SparseInt> {
        if self.n != other.n {
            return None;
        }
        let mut acc = vec![0i64; self.n];
        let mut touched = Vec::new();
        let mut rows = Vec::with_capacity(self.n);
        for row in &self.rows {
            for &(k, a) in row {
                for &(j, b) in &other.rows[k] {
                    if acc[j] == 0 {
                        touched.push(j);
                    }
                    acc[j] = acc[j].checked_add(a.checked_mul(b)?)?;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::new();
            for &j in &touched {
                if acc[j] != 0 {
                    out.push((j, acc[j]));
                }
                acc[j] = 0;
            }
            touched.clear();
            rows.push(out);
        }
        Some(SparseInt { n: self.n, rows })
    }

    /// `self + sign * other`.
    pub fn add_scaled(&self, other: &SparseInt, sign: i64) -> Option<SparseInt> {
        if self.n != other.n {
            return None;
        }
        let mut rows = Vec::with_capacity(self.n);
        for (a, b) in self.rows.iter().zip(&other.rows) {
            let mut out: Vec<(usize, i64)> = Vec::with_capacity(a.len() + b.len());
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                let (c, v) = match (a.get(i), b.get(j)) {
                    (Some(&(ca, va)), Some(&(cb, vb))) if ca == cb => {
                        i += 1;
                        j += 1;
                        (ca, va.checked_add(sign.checked_mul(vb)?)?)
                    }
                    (Some(&(ca, va)), Some(&(cb, _))) if ca < cb => {
                        i += 1;
                        (ca, va)
                    }
                    (Some(&(ca, va)), None) => {
                        i += 1;
                        (ca, va)
                    }
                    (_, Some(&(cb, vb))) => {
                        j += 1;
                        (cb, sign.checked_mul(vb)?)
                    }
                    (None, None) => unreachable!(),
                };
                if v != 0 {
                    out.push((c, v));
                }
            }
            rows.push(out);
        }
        Some(SparseInt { n: self.n, rows })
    }

    pub fn is_scalar(&self, s: i64) -> bool {
        self.rows.iter().enumerate().all(|(r, row)| match row.as_slice() {
            [] => s == 0,
            [(c, v)] => *c == r && *v == s,
            _ => false,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.is_scalar(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense(rows: &[Vec<i64>]) -> Matrix {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        Matrix::from_i64(&refs)
    }

    proptest! {
        #[test]
        fn agrees_with_dense(a in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 4),
                             b in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 4)) {
            let (da, db) = (dense(&a), dense(&b));
            let (sa, sb) = (SparseInt::from_matrix(&da).unwrap(), SparseInt::from_matrix(&db).unwrap());
            prop_assert_eq!(sa.mul(&sb).unwrap(), SparseInt::from_matrix(&(&da * &db)).unwrap());
            prop_assert_eq!(sa.add_scaled(&sb, -1).unwrap(), SparseInt::from_matrix(&(&da - &db)).unwrap());
            prop_assert_eq!(sa.transpose(), SparseInt::from_matrix(&da.transpose()).unwrap());
        }
    }

    #[test]
    fn rejects_fractions_and_scalars() {
        let m = Matrix::identity(3).scale(&crate::rational::rat(1, 2));
        assert!(SparseInt::from_matrix(&m).is_none());
        let i = SparseInt::from_matrix(&Matrix::identity(3).scale(&crate::rational::int(2))).unwrap();
        assert!(i.is_scalar(2) && !i.is_scalar(1) && !i.is_zero());
    }
}
