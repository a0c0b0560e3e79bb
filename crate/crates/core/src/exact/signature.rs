//! Exact signature of self-adjoint matrices.
//!
//! Two independent routes are provided. [`signature`] computes the
//! division-free (Berkowitz) characteristic polynomial and counts sign
//! variations, which is valid because self-adjoint matrices have only real
//! roots. [`signature_by_congruence`] runs a fraction-free symmetric
//! elimination and reads the signature off the sequence of pivoting
//! principal minors; it is the faster route for larger matrices and is
//! cross-checked against the first in the test suite.

use super::int_ring::IntRing;
use super::matrix::Matrix;
use super::rank::clear_denominators;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Coefficients of det(xI - M), highest degree first, computed by the
/// Berkowitz algorithm (division-free, so it works over any exact scalar).
pub fn char_poly<S: Scalar>(m: &Matrix<S>) -> Result<Vec<S>> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(
            "characteristic polynomial of non-square matrix".into(),
        ));
    }
    let n = m.rows();
    let mut poly = vec![S::one()];
    for r in 1..=n {
        // Toeplitz column for the r-th leading principal submatrix:
        // c0 = 1, c1 = -corner, c_k = -(row . A^(k-2) . col) for k >= 2.
        let corner = m.at(r - 1, r - 1);
        let mut c = Vec::with_capacity(r + 1);
        c.push(S::one());
        c.push(corner.neg());
        if r >= 2 {
            let mut v: Vec<S> = (0..r - 1).map(|i| m.at(i, r - 1).clone()).collect();
            for k in 2..=r {
                if k > 2 {
                    let mut nv = vec![S::zero(); r - 1];
                    for (i, slot) in nv.iter_mut().enumerate() {
                        for (x, vx) in v.iter().enumerate() {
                            if !vx.is_zero() && !m.at(i, x).is_zero() {
                                *slot = slot.add(&m.at(i, x).mul(vx));
                            }
                        }
                    }
                    v = nv;
                }
                let mut dot = S::zero();
                for (x, vx) in v.iter().enumerate() {
                    if !vx.is_zero() && !m.at(r - 1, x).is_zero() {
                        dot = dot.add(&m.at(r - 1, x).mul(vx));
                    }
                }
                c.push(dot.neg());
            }
        }
        let mut next = vec![S::zero(); r + 1];
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, pj) in poly.iter().enumerate() {
                if i + j <= r && !pj.is_zero() {
                    next[i + j] = next[i + j].add(&ci.mul(pj));
                }
            }
        }
        poly = next;
    }
    Ok(poly)
}

fn variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Signature (positive count, negative count) of a self-adjoint matrix via
/// the characteristic polynomial and Descartes sign counting.
pub fn signature<S: Scalar>(m: &Matrix<S>) -> Result<(usize, usize)> {
    if !m.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    let n = m.rows();
    if n == 0 {
        return Ok((0, 0));
    }
    let cp = char_poly(m)?;
    // Self-adjoint input makes every coefficient real.
    assert!(
        cp.iter().all(S::is_real),
        "characteristic polynomial of a self-adjoint matrix must be real"
    );
    let signs: Vec<i8> = cp.iter().map(|c| c.re().signum()).collect();
    let mut zero_mult = 0;
    while zero_mult < signs.len() && signs[signs.len() - 1 - zero_mult] == 0 {
        zero_mult += 1;
    }
    let nz = &signs[..signs.len() - zero_mult];
    let deg = nz.len() - 1;
    let pos = variations(nz);
    // q(-x): flip the sign of every odd-power coefficient.
    let flipped: Vec<i8> = nz
        .iter()
        .enumerate()
        .map(|(i, &s)| if (deg - i) % 2 == 1 { -s } else { s })
        .collect();
    let neg = variations(&flipped);
    debug_assert_eq!(pos + neg, deg, "real-rooted polynomial sign count");
    Ok((pos, neg))
}

/// Signature via fraction-free symmetric elimination (congruence
/// transformations), after clearing denominators with one positive factor.
///
/// Diagonal pivots contribute the sign pattern of the principal-minor chain;
/// when the remaining diagonal is entirely zero, a 2x2 block pivot
/// `[[0, b], [conj(b), 0]]` contributes one positive and one negative
/// eigenvalue. Rank equals p + q.
pub fn signature_by_congruence<S: Scalar>(m: &Matrix<S>) -> Result<(usize, usize)> {
    if !m.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    Ok(symmetric_elimination(clear_denominators(m)))
}

/// Signature of a self-adjoint integer (or Gaussian-integer) matrix.
pub(crate) fn symmetric_elimination<R: IntRing>(mut w: Vec<Vec<R>>) -> (usize, usize) {
    let n = w.len();
    let mut p = 0usize;
    let mut q = 0usize;
    let mut prev = R::one();
    let mut prev_sign = 1i8;
    let mut k = 0usize;
    while k < n {
        // Prefer a small diagonal pivot.
        let mut diag: Option<(usize, u64)> = None;
        for i in k..n {
            if w[i][i].is_zero() {
                continue;
            }
            let b = w[i][i].bit_size();
            if diag.map_or(true, |(_, bb)| b < bb) {
                diag = Some((i, b));
            }
        }
        if let Some((i, _)) = diag {
            sym_swap(&mut w, k, i);
            let d = w[k][k].clone();
            let ds = d.real_sign().expect("self-adjoint diagonal must be real");
            if ds == prev_sign {
                p += 1;
            } else {
                q += 1;
            }
            prev_sign = ds;
            for r in k + 1..n {
                for c in k + 1..n {
                    let t = d.mul(&w[r][c]).sub(&w[r][k].mul(&w[k][c]));
                    w[r][c] = t.exact_div(&prev);
                }
            }
            prev = d;
            k += 1;
            continue;
        }
        // Diagonal of the trailing block is zero: look for an off-diagonal
        // entry and use a [[0, b], [conj(b), 0]] block pivot.
        let mut off: Option<(usize, usize, u64)> = None;
        for i in k..n {
            for j in i + 1..n {
                if w[i][j].is_zero() {
                    continue;
                }
                let b = w[i][j].bit_size();
                if off.map_or(true, |(_, _, bb)| b < bb) {
                    off = Some((i, j, b));
                }
            }
        }
        let Some((i, j, _)) = off else {
            break; // trailing block is zero
        };
        sym_swap(&mut w, k, i);
        sym_swap(&mut w, k + 1, j);
        let b = w[k][k + 1].clone();
        let bbar = w[k + 1][k].clone();
        let bb = b.mul(&bbar); // |b|^2 > 0
        p += 1;
        q += 1;
        let prev2 = prev.mul(&prev);
        for r in k + 2..n {
            for c in k + 2..n {
                // Three-term bordered-minor identity for the block step.
                let t1 = b.mul(&w[k + 1][c]).mul(&w[r][k]);
                let t2 = bbar.mul(&w[k][c]).mul(&w[r][k + 1]);
                let t = t1.add(&t2).sub(&bb.mul(&w[r][c]));
                w[r][c] = t.exact_div(&prev2);
            }
        }
        prev = bb.neg().exact_div(&prev);
        prev_sign = prev.real_sign().expect("block pivot minor must be real");
        k += 2;
    }
    (p, q)
}

fn sym_swap<R>(w: &mut [Vec<R>], a: usize, b: usize) {
    if a == b {
        return;
    }
    w.swap(a, b);
    for row in w.iter_mut() {
        row.swap(a, b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{GaussianRational, Rational};

    #[test]
    fn signature_examples() {
        let m: Matrix<Rational> = Matrix::diagonal(&[1, -1]);
        assert_eq!(signature(&m).unwrap(), (1, 1));
        assert_eq!(signature_by_congruence(&m).unwrap(), (1, 1));
        let m: Matrix<Rational> = Matrix::diagonal(&[2, 3, 0]);
        assert_eq!(signature(&m).unwrap(), (2, 0));
        assert_eq!(signature_by_congruence(&m).unwrap(), (2, 0));
    }

    #[test]
    fn signature_rejects_non_self_adjoint() {
        let m: Matrix<Rational> = Matrix::from_int_rows(&[&[0, 1], &[2, 0]]);
        assert!(matches!(signature(&m), Err(crate::Error::NotSelfAdjoint)));
        assert!(signature_by_congruence(&m).is_err());
    }

    #[test]
    fn char_poly_small_cases() {
        let m: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let cp = char_poly(&m).unwrap();
        // x^2 - 5x - 2
        let want: Vec<Rational> = [1, -5, -2].iter().map(|&v| Rational::from_int(v)).collect();
        assert_eq!(cp, want);
        let empty: Matrix<Rational> = Matrix::zeros(0, 0);
        assert_eq!(char_poly(&empty).unwrap(), vec![Rational::one()]);
    }

    #[test]
    fn hermitian_signature_with_block_pivots() {
        // [[0, i], [-i, 0]] has eigenvalues 1 and -1.
        let i = GaussianRational::i();
        let m = Matrix::from_rows(vec![
            vec![GaussianRational::zero(), i.clone()],
            vec![i.neg(), GaussianRational::zero()],
        ])
        .unwrap();
        assert_eq!(signature(&m).unwrap(), (1, 1));
        assert_eq!(signature_by_congruence(&m).unwrap(), (1, 1));
    }
}
