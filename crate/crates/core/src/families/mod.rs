//! Anticommuting families of exact complex structures.
//!
//! A family on size m is a list of m x m skew-symmetric (real) or
//! skew-hermitian (complex) matrices J_1..J_t with J_i^2 = -I and
//! J_i J_j = -J_j J_i for i != j, where t = rho(m) - 1 (rho_c(m) - 1 in the
//! complex case). Together with the identity they span a space in which
//! every element A satisfies conj_transpose(A) * A = (sum of squared
//! coefficients) * I, so every nonzero real linear combination is
//! invertible.

pub mod cayley_dickson;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, Rational, Scalar};
use crate::rh::{rho_field, HalfInteger};
use crate::Field;

/// An ordered anticommuting family of complex structures on size m.
///
/// Construction is deterministic: equal arguments produce entry-wise
/// identical generator lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticommutingFamily<S: Scalar> {
    m: usize,
    generators: Vec<Matrix<S>>,
}

impl<S: Scalar> AnticommutingFamily<S> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[Matrix<S>] {
        &self.generators
    }

    /// Number of generators, rho_field(m) - 1.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The basis {I, J_1, .., J_t} whose span realizes the family.
    pub fn span_basis(&self) -> Vec<Matrix<S>> {
        let mut basis = Vec::with_capacity(self.len() + 1);
        basis.push(Matrix::identity(self.m));
        basis.extend(self.generators.iter().cloned());
        basis
    }
}

/// Scalar types that know how to build their maximal anticommuting family.
pub trait FieldScalar: Scalar {
    fn anticommuting_family(m: usize) -> Result<AnticommutingFamily<Self>>;
}

impl FieldScalar for Rational {
    fn anticommuting_family(m: usize) -> Result<AnticommutingFamily<Self>> {
        real_family(m)
    }
}

impl FieldScalar for GaussianRational {
    fn anticommuting_family(m: usize) -> Result<AnticommutingFamily<Self>> {
        complex_family(m)
    }
}

/// Builds the family dispatching on a runtime field tag; the generator count
/// is rho(m) - 1 or rho_c(m) - 1 accordingly.
pub fn family_size(field: Field, m: u64) -> Result<u64> {
    Ok(rho_field(field, &HalfInteger::from(m))? - 1)
}

/// Maximal real family on size m: rho(m) - 1 skew-symmetric complex
/// structures with entries in {0, 1, -1}.
///
/// Recipe: for m = 2^(c+4d) * u the base on size 2^c is the list of left
/// multiplications by the imaginary units of the complex numbers,
/// quaternions or octonions (c = 1, 2, 3; empty for c = 0). Each of the d
/// sixteenfold steps tensors a fixed octonion-derived system of eight
/// anticommuting structures on size 16 with the current family, and the odd
/// part u enters as a final Kronecker factor I_u.
pub fn real_family(m: usize) -> Result<AnticommutingFamily<Rational>> {
    if m == 0 {
        return Err(Error::InvalidArgument("family size m must be positive".into()));
    }
    let v = m.trailing_zeros();
    let c = v % 4;
    let d = v / 4;
    let u = m >> v;

    let mut size = 1usize << c;
    let mut gens: Vec<Matrix<Rational>> = (1..(1usize << c))
        .map(|t| cayley_dickson::left_mult_matrix(c, t))
        .collect();
    for _ in 0..d {
        gens = sixteenfold_step(&gens, size);
        size *= 16;
    }
    if u > 1 {
        let iu = Matrix::identity(u);
        gens = gens.iter().map(|g| g.kronecker(&iu)).collect();
    }
    Ok(AnticommutingFamily { m, generators: gens })
}

/// One step of the sixteenfold recursion: from a family {J} on size q to a
/// family of 8 + len(J) structures on size 16q.
///
/// The eight structures E_i on size 16 are O_i (x) Q for the seven octonion
/// left multiplications O_i plus I_8 (x) R, with Q = diag(1, -1) and
/// R = [[0, -1], [1, 0]]. Their product w = E_1 E_2 .. E_8 is symmetric,
/// squares to the identity and anticommutes with every E_i; these facts are
/// asserted at build time. The new family is {E_i (x) I_q} followed by
/// {w (x) J}.
fn sixteenfold_step(gens: &[Matrix<Rational>], q: usize) -> Vec<Matrix<Rational>> {
    let qmat: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);
    let rmat: Matrix<Rational> = Matrix::from_int_rows(&[&[0, -1], &[1, 0]]);
    let i8m: Matrix<Rational> = Matrix::identity(8);

    let mut e: Vec<Matrix<Rational>> = (1..8)
        .map(|t| cayley_dickson::left_mult_matrix(3, t).kronecker(&qmat))
        .collect();
    e.push(i8m.kronecker(&rmat));

    let mut omega: Matrix<Rational> = Matrix::identity(16);
    for ei in &e {
        omega = omega.mul(ei).expect("16x16 product");
    }
    let id16: Matrix<Rational> = Matrix::identity(16);
    assert_eq!(omega.mul(&omega).unwrap(), id16, "omega must square to I");
    assert_eq!(omega.transpose(), omega, "omega must be symmetric");
    for ei in &e {
        assert_eq!(
            omega.mul(ei).unwrap(),
            ei.mul(&omega).unwrap().neg(),
            "omega must anticommute with every E_i"
        );
    }

    let iq = Matrix::identity(q);
    let mut out: Vec<Matrix<Rational>> = e.iter().map(|ei| ei.kronecker(&iq)).collect();
    out.extend(gens.iter().map(|j| omega.kronecker(j)));
    out
}

/// Maximal complex family on size m = 2^b * u: the 2b + 1 = rho_c(m) - 1
/// skew-hermitian structures i * gamma_k, where the gamma_k are the
/// Jordan-Wigner strings
/// Z^(j-1) (x) X (x) I^(b-j), Z^(j-1) (x) Y (x) I^(b-j) (j = 1..b) and Z^b,
/// tensored with I_u. Entries lie in {0, 1, -1, i, -i}.
pub fn complex_family(m: usize) -> Result<AnticommutingFamily<GaussianRational>> {
    if m == 0 {
        return Err(Error::InvalidArgument("family size m must be positive".into()));
    }
    let b = m.trailing_zeros() as usize;
    let u = m >> b;

    let i_unit = GaussianRational::i();
    let pauli_x: Matrix<GaussianRational> = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
    let pauli_y: Matrix<GaussianRational> = Matrix::from_fn(2, 2, |r, c| match (r, c) {
        (0, 1) => i_unit.neg(),
        (1, 0) => i_unit.clone(),
        _ => GaussianRational::zero(),
    });
    let pauli_z: Matrix<GaussianRational> = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);

    // Z^(a) (x) P (x) I^(b-1-a)
    let string = |a: usize, p: &Matrix<GaussianRational>| {
        let mut g: Matrix<GaussianRational> = Matrix::identity(1);
        for _ in 0..a {
            g = g.kronecker(&pauli_z);
        }
        g = g.kronecker(p);
        for _ in 0..(b - 1 - a) {
            g = g.kronecker(&Matrix::identity(2));
        }
        g
    };

    let mut gammas: Vec<Matrix<GaussianRational>> = Vec::with_capacity(2 * b + 1);
    for j in 1..=b {
        gammas.push(string(j - 1, &pauli_x));
        gammas.push(string(j - 1, &pauli_y));
    }
    let mut zfull: Matrix<GaussianRational> = Matrix::identity(1);
    for _ in 0..b {
        zfull = zfull.kronecker(&pauli_z);
    }
    gammas.push(zfull);

    let iu = Matrix::identity(u);
    let generators = gammas
        .into_iter()
        .map(|g| {
            let j = g.scale(&i_unit);
            if u > 1 {
                j.kronecker(&iu)
            } else {
                j
            }
        })
        .collect();
    Ok(AnticommutingFamily { m, generators })
}

/// Evaluates the span element A(y) = y_0 I + y_1 J_1 + .. + y_t J_t for an
/// exact real coefficient vector y of length t + 1.
pub fn evaluate<S: Scalar>(
    family: &AnticommutingFamily<S>,
    coeffs: &[Rational],
) -> Result<Matrix<S>> {
    if coeffs.len() != family.len() + 1 {
        return Err(Error::ShapeMismatch(format!(
            "expected {} coefficients, got {}",
            family.len() + 1,
            coeffs.len()
        )));
    }
    let mut acc = Matrix::identity(family.m).scale(&S::from_rational(&coeffs[0]));
    for (y, j) in coeffs[1..].iter().zip(&family.generators) {
        if y.is_zero() {
            continue;
        }
        acc = acc.add(&j.scale(&S::from_rational(y)))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact check of all family identities by matrix multiplication.
    pub(crate) fn assert_family_identities<S: Scalar>(fam: &AnticommutingFamily<S>) {
        let n = fam.m();
        let id = Matrix::<S>::identity(n);
        let neg_id = id.neg();
        for (i, j) in fam.generators().iter().enumerate() {
            assert_eq!(j.conjugate_transpose(), j.neg(), "J_{i} must be skew");
            assert_eq!(j.mul(j).unwrap(), neg_id, "J_{i}^2 must be -I");
            for (k, l) in fam.generators().iter().enumerate().skip(i + 1) {
                assert_eq!(
                    j.mul(l).unwrap(),
                    l.mul(j).unwrap().neg(),
                    "J_{i} and J_{k} must anticommute"
                );
            }
        }
    }

    #[test]
    fn real_family_m1_is_empty() {
        assert!(real_family(1).unwrap().is_empty());
    }

    #[test]
    fn real_family_m2_is_the_rotation() {
        let fam = real_family(2).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(
            fam.generators()[0],
            Matrix::from_int_rows(&[&[0, -1], &[1, 0]])
        );
    }

    #[test]
    fn real_family_m4_is_quaternionic() {
        let fam = real_family(4).unwrap();
        assert_eq!(fam.len(), 3);
        assert_family_identities(&fam);
        for g in fam.generators() {
            for e in g.entries() {
                let v = e.numerator();
                assert!(e.is_integer() && v.magnitude() <= &1u32.into());
            }
        }
    }

    #[test]
    fn complex_family_m2_is_i_times_pauli() {
        let fam = complex_family(2).unwrap();
        assert_eq!(fam.len(), 3);
        let i = GaussianRational::i();
        let x: Matrix<GaussianRational> = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let z: Matrix<GaussianRational> = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        let y = Matrix::from_fn(2, 2, |r, c| match (r, c) {
            (0, 1) => i.neg(),
            (1, 0) => i.clone(),
            _ => GaussianRational::zero(),
        });
        assert_eq!(fam.generators()[0], x.scale(&i));
        assert_eq!(fam.generators()[1], y.scale(&i));
        assert_eq!(fam.generators()[2], z.scale(&i));
    }

    #[test]
    fn evaluate_examples() {
        let fam = real_family(2).unwrap();
        let id2: Matrix<Rational> = Matrix::identity(2);
        assert_eq!(
            evaluate(&fam, &[Rational::one(), Rational::zero()]).unwrap(),
            id2
        );
        let a = evaluate(&fam, &[Rational::zero(), Rational::one()]).unwrap();
        assert_eq!(a, Matrix::from_int_rows(&[&[0, -1], &[1, 0]]));
        assert_eq!(a.transpose().mul(&a).unwrap(), id2);

        let fam4 = real_family(4).unwrap();
        let y: Vec<Rational> = [1, 1, 0, 0].iter().map(|&v| Rational::from_int(v)).collect();
        let a = evaluate(&fam4, &y).unwrap();
        let two_i = Matrix::<Rational>::identity(4).scale(&Rational::from_int(2));
        assert_eq!(a.transpose().mul(&a).unwrap(), two_i);
    }

    #[test]
    fn evaluate_rejects_length_mismatch() {
        let fam = real_family(2).unwrap();
        assert!(evaluate(&fam, &[Rational::one()]).is_err());
    }

    #[test]
    fn rejects_zero_size() {
        assert!(real_family(0).is_err());
        assert!(complex_family(0).is_err());
    }
}
