//! Exact Gaussian elimination.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    NoSolution,
    /// A particular solution plus a basis of the kernel of `a`.
    Underdetermined { particular: Vec<Rational>, nullspace: Vec<Vec<Rational>> },
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn to_rows(a: &Matrix) -> Vec<Vec<Rational>> {
    (0..a.rows()).map(|r| a.row(r).to_vec()).collect()
}

pub fn rank(a: &Matrix) -> usize {
    let mut rows = to_rows(a);
    rref(&mut rows, a.cols()).len()
}

/// Basis of `{x : a x = 0}`, one vector per free column.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Rational>> {
    let mut rows = to_rows(a);
    let pivots = rref(&mut rows, a.cols());
    kernel_from_rref(&rows, &pivots, a.cols())
}

fn kernel_from_rref(rows: &[Vec<Rational>], pivots: &[usize], ncols: usize) -> Vec<Vec<Rational>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn solve_rational(a: &Matrix, b: &[Rational]) -> Result<Solution> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!("{} rows but right-hand side of length {}", a.rows(), b.len())));
    }
    let n = a.cols();
    let mut rows: Vec<Vec<Rational>> = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(Solution::NoSolution);
    }
    let mut particular = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = rows[i][n].clone();
    }
    if pivots.len() == n {
        return Ok(Solution::Unique(particular));
    }
    let nullspace = kernel_from_rref(&rows, &pivots, n);
    Ok(Solution::Underdetermined { particular, nullspace })
}

/// Exact inverse of a square matrix, `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if pivots.len() < n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |r, c| rows[r][n + c].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn identity_system() {
        let b = vec![rat(1, 2), int(-3), int(7)];
        assert_eq!(solve_rational(&Matrix::identity(3), &b).unwrap(), Solution::Unique(b));
    }

    #[test]
    fn two_by_two() {
        let a = Matrix::from_i64(&[&[1, -1], &[1, 1]]);
        assert_eq!(solve_rational(&a, &ints(&[1, 1])).unwrap(), Solution::Unique(ints(&[1, 0])));
    }

    #[test]
    fn inconsistent_and_free() {
        let a = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve_rational(&a, &ints(&[1, 3])).unwrap(), Solution::NoSolution);
        match solve_rational(&a, &ints(&[1, 2])).unwrap() {
            Solution::Underdetermined { particular, nullspace } => {
                assert_eq!(particular, ints(&[1, 0]));
                assert_eq!(nullspace, vec![ints(&[-1, 1])]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unitary_pair_sign_system() {
        // Coordinates (h1, h2, h1', h2'); rows are the weights t_i - t'_j
        // and the trace constraint h1 + h2 + h1' + h2' = 0.
        let a = Matrix::from_i64(&[
            &[1, 0, -1, 0],
            &[0, 1, -1, 0],
            &[1, 0, 0, -1],
            &[0, 1, 0, -1],
            &[1, 1, 1, 1],
        ]);
        let b = ints(&[1, -1, 1, -1, 0]);
        // Independent check: h = e1 - e2 satisfies every row.
        let h = ints(&[1, -1, 0, 0]);
        assert_eq!(a.mul_vec(&h).unwrap(), b);
        assert_eq!(solve_rational(&a, &b).unwrap(), Solution::Unique(h));
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(inverse(&Matrix::from_i64(&[&[1, 2], &[2, 4]])).is_none());
    }

    fn small(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..4, rows * cols).prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| int(v[r * cols + c])))
    }

    proptest! {
        #[test]
        fn solutions_satisfy_the_system(a in small(3, 4), b in proptest::collection::vec(-5i64..6, 3)) {
            let b: Vec<Rational> = b.into_iter().map(int).collect();
            match solve_rational(&a, &b).unwrap() {
                Solution::Unique(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
                Solution::Underdetermined { particular, nullspace } => {
                    prop_assert_eq!(a.mul_vec(&particular).unwrap(), b.clone());
                    for v in nullspace {
                        prop_assert!(a.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
                    }
                }
                Solution::NoSolution => {
                    let mut aug = Matrix::zeros(3, 5);
                    for r in 0..3 {
                        for c in 0..4 { aug.set(r, c, a.get(r, c).clone()); }
                        aug.set(r, 4, b[r].clone());
                    }
                    prop_assert!(rank(&aug) > rank(&a));
                }
            }
        }
    }
}
