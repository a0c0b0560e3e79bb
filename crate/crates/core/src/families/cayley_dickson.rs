//! Cayley-Dickson algebras over the rationals.
//!
//! Level 1 gives the complex numbers, level 2 the quaternions and level 3
//! the octonions. Elements are coefficient vectors of length 2^level; the
//! product doubles as (a, b)(c, d) = (ac - conj(d)b, da + b conj(c)).

use crate::exact::{Matrix, Rational};

/// Conjugation negates every coordinate except the real one.
pub fn conjugate(a: &[Rational]) -> Vec<Rational> {
    a.iter()
        .enumerate()
        .map(|(i, x)| if i == 0 { x.clone() } else { x.neg() })
        .collect()
}

/// Product in the level-log2(len) Cayley-Dickson algebra.
pub fn multiply(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(a.len(), b.len());
    debug_assert!(a.len().is_power_of_two());
    if a.len() == 1 {
        return vec![a[0].mul(&b[0])];
    }
    let h = a.len() / 2;
    let (a1, a2) = a.split_at(h);
    let (b1, b2) = b.split_at(h);
    // (a1, a2)(b1, b2) = (a1 b1 - conj(b2) a2, b2 a1 + a2 conj(b1))
    let left = sub(
        &multiply(a1, b1),
        &multiply(&conjugate(b2), a2),
    );
    let right = add(
        &multiply(b2, a1),
        &multiply(a2, &conjugate(b1)),
    );
    left.into_iter().chain(right).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

fn basis_element(dim: usize, t: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); dim];
    e[t] = Rational::one();
    e
}

/// Matrix of left multiplication by the imaginary basis unit e_t, in the
/// coordinate basis of the level-`level` algebra. Columns are e_t * e_s.
pub fn left_mult_matrix(level: u32, t: usize) -> Matrix<Rational> {
    let dim = 1usize << level;
    assert!(t >= 1 && t < dim, "imaginary unit index out of range");
    let et = basis_element(dim, t);
    let mut m = Matrix::zeros(dim, dim);
    for s in 0..dim {
        let col = multiply(&et, &basis_element(dim, s));
        for (r, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(r, s, v);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_vec(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| Rational::from_int(v)).collect()
    }

    #[test]
    fn quaternion_basis_products() {
        // e1 e2 = e3, e2 e3 = e1, e3 e1 = e2, squares are -1.
        let e = |t: usize| basis_element(4, t);
        assert_eq!(multiply(&e(1), &e(2)), to_vec(&[0, 0, 0, 1]));
        assert_eq!(multiply(&e(2), &e(3)), to_vec(&[0, 1, 0, 0]));
        assert_eq!(multiply(&e(3), &e(1)), to_vec(&[0, 0, 1, 0]));
        for t in 1..4 {
            assert_eq!(multiply(&e(t), &e(t)), to_vec(&[-1, 0, 0, 0]));
        }
        assert_eq!(multiply(&e(2), &e(1)), to_vec(&[0, 0, 0, -1]));
    }

    #[test]
    fn octonion_norm_is_multiplicative() {
        // |xy|^2 = |x|^2 |y|^2 on a few integer octonions.
        let norm = |x: &[Rational]| {
            x.iter()
                .fold(Rational::zero(), |acc, v| acc.add(&v.mul(v)))
        };
        let x = to_vec(&[1, -2, 3, 0, 1, 1, -1, 2]);
        let y = to_vec(&[2, 1, 0, -1, 3, -2, 1, 1]);
        let xy = multiply(&x, &y);
        assert_eq!(norm(&xy), norm(&x).mul(&norm(&y)));
    }

    #[test]
    fn complex_left_mult_is_rotation() {
        let m = left_mult_matrix(1, 1);
        assert_eq!(m, Matrix::from_int_rows(&[&[0, -1], &[1, 0]]));
    }
}
