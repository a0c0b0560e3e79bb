//! Gaussian rationals, the entries of hermitian matrices.

use std::fmt;

use super::rational::Rational;

/// An exact complex number `re + im*i` with rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussianRational::new(r, Rational::zero())
    }

    pub fn from_int(v: i64) -> Self {
        GaussianRational::from_rational(Rational::from_int(v))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GaussianRational::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        GaussianRational::new(self.re.sub(&rhs.re), self.im.sub(&rhs.im))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
        GaussianRational::new(
            self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        )
    }

    /// Exact division by a nonzero Gaussian rational.
    pub fn div(&self, rhs: &Self) -> Self {
        let n = rhs.norm_sqr();
        assert!(!n.is_zero(), "division by zero gaussian rational");
        let z = self.mul(&rhs.conj());
        GaussianRational::new(z.re.div(&n), z.im.div(&n))
    }

    pub fn neg(&self) -> Self {
        GaussianRational::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), self.im.neg())
    }

    /// |z|^2 = re^2 + im^2, a rational.
    pub fn norm_sqr(&self) -> Rational {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Matrix, Scalar};

    #[test]
    fn conjugate_transpose_of_i() {
        let m = Matrix::from_rows(vec![vec![GaussianRational::i()]]).unwrap();
        let want = Matrix::from_rows(vec![vec![GaussianRational::i().neg()]]).unwrap();
        assert_eq!(m.conjugate_transpose(), want);
    }

    #[test]
    fn arithmetic_and_display() {
        let z = GaussianRational::new(Rational::from_int(1), Rational::from_int(2));
        let w = GaussianRational::new(Rational::from_int(3), Rational::from_int(-1));
        let prod = z.mul(&w);
        assert_eq!(prod, GaussianRational::new(Rational::from_int(5), Rational::from_int(5)));
        assert_eq!(prod.div(&w), z);
        assert_eq!(z.to_string(), "1+2i");
        assert_eq!(z.conj().to_string(), "1-2i");
        assert_eq!(z.norm_sqr(), Rational::from_int(5));
    }
}
