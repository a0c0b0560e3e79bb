//! Exact rank and determinant by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::int_ring::IntRing;
use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Clears denominators with one positive global factor so that relative
/// scaling (and hence signature) is preserved. Returns the integer matrix.
pub(crate) fn clear_denominators<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S::Int>> {
    let mut lcm: BigInt = One::one();
    for e in m.entries() {
        lcm = lcm.lcm(&e.denom_lcm());
    }
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).scale_to_int(&lcm)).collect())
        .collect()
}

/// Finds the nonzero entry of smallest bit size in the trailing submatrix.
fn find_pivot<R: IntRing>(m: &[Vec<R>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, u64)> = None;
    for (i, row) in m.iter().enumerate().skip(k) {
        for (j, e) in row.iter().enumerate().skip(k) {
            if e.is_zero() {
                continue;
            }
            let b = e.bit_size();
            if best.as_ref().map_or(true, |&(_, _, bb)| b < bb) {
                best = Some((i, j, b));
                if b <= 1 {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn swap_cols<R>(m: &mut [Vec<R>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Bareiss elimination; returns the rank and, when it ran to completion on a
/// square matrix, the signed last pivot (the determinant of the permuted,
/// scaled matrix).
pub(crate) fn bareiss<R: IntRing>(mut m: Vec<Vec<R>>) -> (usize, R, bool) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = R::one();
    let mut rank = 0;
    let mut swaps = 0usize;
    for k in 0..rows.min(cols) {
        let Some((pi, pj)) = find_pivot(&m, k) else {
            break;
        };
        if pi != k {
            m.swap(pi, k);
            swaps += 1;
        }
        if pj != k {
            swap_cols(&mut m, pj, k);
            swaps += 1;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..rows {
            for j in k + 1..cols {
                let t = pivot.mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev);
            }
        }
        prev = pivot;
        rank += 1;
    }
    let negate = swaps % 2 == 1;
    (rank, prev, negate)
}

/// Rank over the fraction field, by Bareiss elimination over the integers
/// (Gaussian integers for complex entries) after clearing denominators.
pub fn exact_rank<S: Scalar>(m: &Matrix<S>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    bareiss(clear_denominators(m)).0
}

/// Exact determinant of a square matrix.
pub fn determinant<S: Scalar>(m: &Matrix<S>) -> Result<S> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch("determinant of non-square matrix".into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(S::one());
    }
    let mut lcm: BigInt = One::one();
    for e in m.entries() {
        lcm = lcm.lcm(&e.denom_lcm());
    }
    let int_rows: Vec<Vec<S::Int>> = (0..n)
        .map(|r| (0..n).map(|c| m.at(r, c).scale_to_int(&lcm)).collect())
        .collect();
    let (rank, last_pivot, negate) = bareiss(int_rows);
    if rank < n {
        return Ok(S::zero());
    }
    // det(lcm * M) = lcm^n * det(M)
    let mut det = S::from_ring(&last_pivot);
    if negate {
        det = det.neg();
    }
    let scale = S::from_rational(&super::rational::Rational::from_bigint(lcm));
    for _ in 0..n {
        det = det.div(&scale);
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{GaussianRational, Rational};

    #[test]
    fn rank_examples() {
        let id: Matrix<Rational> = Matrix::identity(5);
        assert_eq!(exact_rank(&id), 5);
        let zero: Matrix<Rational> = Matrix::zeros(3, 4);
        assert_eq!(exact_rank(&zero), 0);
        let m: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(exact_rank(&m), 1);
    }

    #[test]
    fn rank_with_denominators() {
        let m = Matrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()).unwrap(), Rational::from_int(1)],
            vec![Rational::new(1.into(), 4.into()).unwrap(), Rational::new(1.into(), 2.into()).unwrap()],
        ])
        .unwrap();
        assert_eq!(exact_rank(&m), 1);
    }

    #[test]
    fn gaussian_rank() {
        // [[1, i], [i, -1]] has proportional rows (row2 = i * row1).
        let i = GaussianRational::i();
        let m = Matrix::from_rows(vec![
            vec![GaussianRational::one(), i.clone()],
            vec![i.clone(), GaussianRational::from_int(-1)],
        ])
        .unwrap();
        assert_eq!(exact_rank(&m), 1);
    }

    #[test]
    fn determinant_examples() {
        let m: Matrix<Rational> = Matrix::from_int_rows(&[&[2, 1], &[1, 2]]);
        assert_eq!(determinant(&m).unwrap(), Rational::from_int(3));
        let m: Matrix<Rational> = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&m).unwrap(), Rational::from_int(-1));
        let m: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(&m).unwrap(), Rational::zero());
        let m: Matrix<Rational> = Matrix::zeros(2, 3);
        assert!(determinant(&m).is_err());
    }
}
