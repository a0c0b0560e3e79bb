//! The scalar abstraction shared by real and hermitian computations.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;

use super::gaussian::GaussianRational;
use super::int_ring::{GaussInt, IntRing};
use super::rational::Rational;
use crate::Field;

/// An exact field element usable as a matrix entry.
///
/// Implemented by [`Rational`] (real symmetric spaces) and
/// [`GaussianRational`] (complex hermitian spaces). Conjugation is the
/// identity on rationals, so generic code written with `conj` treats the
/// transpose and the conjugate transpose uniformly.
pub trait Scalar: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    /// The matrix field this scalar models.
    const FIELD: Field;

    /// Integer ring used by fraction-free elimination after denominators
    /// are cleared: Z for rationals, Z[i] for Gaussian rationals.
    type Int: IntRing;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Field division; panics on zero divisor.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Complex conjugate (identity on rationals).
    fn conj(&self) -> Self;
    /// Real part.
    fn re(&self) -> &Rational;
    /// True when the imaginary part vanishes (always on rationals).
    fn is_real(&self) -> bool;
    /// Least common multiple of the component denominators.
    fn denom_lcm(&self) -> BigInt;
    /// `self * scale` as a ring element; `scale` must clear the denominators.
    fn scale_to_int(&self, scale: &BigInt) -> Self::Int;
    /// Embeds a ring element back into the field.
    fn from_ring(v: &Self::Int) -> Self;
}

impl Scalar for Rational {
    const FIELD: Field = Field::Real;
    type Int = BigInt;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_int(v: i64) -> Self {
        Rational::from_int(v)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational::mul(self, rhs)
    }
    fn div(&self, rhs: &Self) -> Self {
        Rational::div(self, rhs)
    }
    fn neg(&self) -> Self {
        Rational::neg(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn re(&self) -> &Rational {
        self
    }
    fn is_real(&self) -> bool {
        true
    }
    fn denom_lcm(&self) -> BigInt {
        self.denominator().clone()
    }
    fn scale_to_int(&self, scale: &BigInt) -> BigInt {
        self.numerator() * (scale / self.denominator())
    }
    fn from_ring(v: &BigInt) -> Self {
        Rational::from_bigint(v.clone())
    }
}

impl Scalar for GaussianRational {
    const FIELD: Field = Field::Complex;
    type Int = GaussInt;

    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn from_int(v: i64) -> Self {
        GaussianRational::from_int(v)
    }
    fn from_rational(r: &Rational) -> Self {
        GaussianRational::from_rational(r.clone())
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussianRational::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussianRational::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussianRational::mul(self, rhs)
    }
    fn div(&self, rhs: &Self) -> Self {
        GaussianRational::div(self, rhs)
    }
    fn neg(&self) -> Self {
        GaussianRational::neg(self)
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn re(&self) -> &Rational {
        &self.re
    }
    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
    fn denom_lcm(&self) -> BigInt {
        self.re.denominator().lcm(self.im.denominator())
    }
    fn scale_to_int(&self, scale: &BigInt) -> GaussInt {
        GaussInt::new(self.re.scale_to_int(scale), self.im.scale_to_int(scale))
    }
    fn from_ring(v: &GaussInt) -> Self {
        GaussianRational::new(
            Rational::from_bigint(v.re.clone()),
            Rational::from_bigint(v.im.clone()),
        )
    }
}
