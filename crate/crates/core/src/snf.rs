//! Smith normal form with unimodular transforms.
//!
//! Elimination repeatedly moves the smallest nonzero entry (by absolute
//! value, ties broken by lowest row then lowest column) of the trailing
//! submatrix to the pivot position, clears its row and column by Euclidean
//! division, and restarts whenever a remainder survives. Once the pivot
//! divides everything left in the submatrix it is final.


use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<T> {
    /// Diagonal form, same shape as the input.
    pub diagonal: Matrix<T>,
    /// Row transform, `rows x rows`.
    pub left: Matrix<T>,
    /// Column transform, `cols x cols`.
    pub right: Matrix<T>,
    /// Diagonal entries `d_1 | d_2 | ...`, nonnegative, zeros trailing.
    /// Length `min(rows, cols)`.
    pub divisors: Vec<T>,
}

impl<T: Scalar> SnfResult<T> {
    pub fn rank(&self) -> usize {
        self.divisors.iter().filter(|d| !d.is_zero()).count()
    }

    /// Checks `left * m * right == diagonal`, unimodularity of both
    /// transforms, diagonal shape and the divisibility chain.
    pub fn certify(&self, m: &Matrix<T>) -> bool {
        let product = &(&self.left * m) * &self.right;
        product == self.diagonal
            && self.left.is_unimodular()
            && self.right.is_unimodular()
            && self
                .diagonal
                .entries()
                .all(|(i, j, v)| i == j || v.is_zero())
            && divisor_chain_holds(&self.divisors)
            && self
                .divisors
                .iter()
                .enumerate()
                .all(|(i, d)| self.diagonal[(i, i)] == *d)
    }
}

/// `d_i >= 0`, `d_i | d_{i+1}`, and zeros only at the end.
pub fn divisor_chain_holds<T: Scalar>(divisors: &[T]) -> bool {
    divisors.iter().all(|d| !d.is_negative())
        && divisors.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        })
}

struct Elimination<T> {
    a: Matrix<T>,
    left: Matrix<T>,
    right: Matrix<T>,
}

impl<T: Scalar> Elimination<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.left.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.right.swap_cols(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_row_multiple(dst, src, f);
        self.left.add_row_multiple(dst, src, f);
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_col_multiple(dst, src, f);
        self.right.add_col_multiple(dst, src, f);
    }

    fn smallest_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                let abs = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                    best = Some((i, j, abs));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row and column `t` below/right of the pivot. Returns false if
    /// a nonzero remainder was left behind.
    fn clear_pivot_cross(&mut self, t: usize) -> bool {
        let pivot = self.a[(t, t)].clone();
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            let v = self.a[(i, t)].clone();
            if v.is_zero() {
                continue;
            }
            let q = v.div_floor(&pivot);
            self.add_row(i, t, &-q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            let v = self.a[(t, j)].clone();
            if v.is_zero() {
                continue;
            }
            let q = v.div_floor(&pivot);
            self.add_col(j, t, &-q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    fn first_non_multiple(&self, t: usize) -> Option<usize> {
        let pivot = &self.a[(t, t)];
        (t + 1..self.a.rows())
            .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(pivot)))
    }

    fn run(mut self) -> SnfResult<T> {
        let steps = self.a.rows().min(self.a.cols());
        for t in 0..steps {
            while let Some((i, j)) = self.smallest_from(t) {
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                if !self.clear_pivot_cross(t) {
                    continue;
                }
                match self.first_non_multiple(t) {
                    Some(i) => self.add_row(t, i, &T::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.a.negate_row(t);
                self.left.negate_row(t);
            }
        }
        let divisors = (0..steps).map(|i| self.a[(i, i)].clone()).collect();
        SnfResult {
            diagonal: self.a,
            left: self.left,
            right: self.right,
            divisors,
        }
    }
}

pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> SnfResult<T> {
    Elimination {
        a: m.clone(),
        left: Matrix::identity(m.rows()),
        right: Matrix::identity(m.cols()),
    }
    .run()
}

/// Nonzero elementary divisors only; cheaper callers that do not need the
/// transforms still go through the same elimination.
pub fn elementary_divisors<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    smith_normal_form(m)
        .divisors
        .into_iter()
        .filter(|d| !d.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type M = Matrix<i64>;

    fn divisors(rows: &[&[i64]]) -> Vec<i64> {
        let m = M::from_i64_rows(rows);
        let r = smith_normal_form(&m);
        assert!(r.certify(&m), "certificate failed for\n{m}");
        r.divisors
    }

    #[test]
    fn examples() {
        assert_eq!(divisors(&[&[2, 4], &[6, 8]]), vec![2, 4]);
        assert_eq!(divisors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(divisors(&[&[0]]), vec![0]);
        assert_eq!(divisors(&[&[1, -1], &[-1, 1]]), vec![1, 0]);
        assert_eq!(divisors(&[&[-4, -2]]), vec![2]);
        assert_eq!(divisors(&[&[-2], &[4]]), vec![2]);
        assert_eq!(divisors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
    }

    #[test]
    fn identity_transforms_for_identity() {
        let r = smith_normal_form(&M::identity(3));
        assert_eq!(r.left, M::identity(3));
        assert_eq!(r.right, M::identity(3));
    }

    #[test]
    fn empty_matrices() {
        for (rows, cols) in [(0, 0), (0, 3), (2, 0)] {
            let m = M::zeros(rows, cols);
            let r = smith_normal_form(&m);
            assert!(r.divisors.is_empty());
            assert_eq!(r.left, M::identity(rows));
            assert_eq!(r.right, M::identity(cols));
            assert!(r.certify(&m));
        }
    }

    #[test]
    fn deterministic() {
        let m = M::from_i64_rows(&[[3, 6, -9], [2, 2, 2], [0, 4, 8]]);
        assert_eq!(smith_normal_form(&m), smith_normal_form(&m));
    }

    #[test]
    fn chain_checker() {
        assert!(divisor_chain_holds(&[1i64, 2, 4, 0]));
        assert!(!divisor_chain_holds(&[2i64, 3]));
        assert!(!divisor_chain_holds(&[0i64, 2]));
        assert!(!divisor_chain_holds(&[-2i64]));
    }

    proptest! {
        #[test]
        fn certified_on_random_input(
            rows in 0usize..6,
            cols in 0usize..6,
            seed in proptest::collection::vec(-12i64..=12, 36),
        ) {
            let m = Matrix::<BigInt>::from_vec(
                rows,
                cols,
                seed[..rows * cols].iter().map(|&v| BigInt::from(v)).collect(),
            );
            let r = smith_normal_form(&m);
            prop_assert!(r.certify(&m));
        }
    }
}
