//! Integer rings backing fraction-free elimination: Z and Z[i].
//!
//! Rank and congruence-signature computations clear denominators first and
//! then run Bareiss-style recurrences here, where every division is exact.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Ring element for fraction-free elimination.
pub trait IntRing: Clone + PartialEq + Eq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact in the ring; the Bareiss recurrences
    /// guarantee divisibility.
    fn exact_div(&self, rhs: &Self) -> Self;
    fn conj(&self) -> Self;
    /// Magnitude proxy used to pick small pivots.
    fn bit_size(&self) -> u64;
    /// Sign of a purely real element, `None` if the element is not real.
    fn real_sign(&self) -> Option<i8>;
}

impl IntRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!(!Zero::is_zero(rhs));
        debug_assert!(Zero::is_zero(&(self % rhs)), "inexact integer division");
        self / rhs
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn bit_size(&self) -> u64 {
        self.bits()
    }
    fn real_sign(&self) -> Option<i8> {
        Some(if Zero::is_zero(self) {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        })
    }
}

/// A Gaussian integer `re + im*i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl IntRing for GaussInt {
    fn zero() -> Self {
        GaussInt::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        GaussInt::new(One::one(), Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
    fn neg(&self) -> Self {
        GaussInt::new(-&self.re, -&self.im)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        let n = rhs.norm();
        debug_assert!(!Zero::is_zero(&n));
        let z = self.mul(&rhs.conj());
        debug_assert!(
            Zero::is_zero(&(&z.re % &n)) && Zero::is_zero(&(&z.im % &n)),
            "inexact gaussian division"
        );
        GaussInt::new(z.re / &n, z.im / &n)
    }
    fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -&self.im)
    }
    fn bit_size(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }
    fn real_sign(&self) -> Option<i8> {
        if Zero::is_zero(&self.im) {
            IntRing::real_sign(&self.re)
        } else {
            None
        }
    }
}
