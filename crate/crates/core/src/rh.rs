//! Radon-Hurwitz numbers and their window maxima.
//!
//! For r = 2^(c+4d) * (2a+1) with 0 <= c <= 3, the real Radon-Hurwitz number
//! is rho(r) = 2^c + 8d and its complex analogue is rho_c(r) = 2(c+4d) + 2.
//! Both are 0 at half-integers and at nonpositive arguments. The window
//! maximum sigma(n, h) = max { rho(h/2 + j) : 0 <= j <= n - h } (with rho_c
//! in the complex case) is the pivot of all the dimension bounds.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Field;

/// The unique decomposition r = 2^(c+4d) * odd_part with 0 <= c <= 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicFactorization {
    pub r: BigUint,
    pub c: u32,
    pub d: u64,
    pub odd_part: BigUint,
}

impl DyadicFactorization {
    /// Reassembles 2^(c+4d) * odd_part; equals `r` by construction.
    pub fn reassemble(&self) -> BigUint {
        (&self.odd_part) << (self.c as u64 + 4 * self.d)
    }
}

/// Splits a positive integer as 2^(c+4d) * odd with 0 <= c <= 3.
pub fn factor_dyadic(r: &BigUint) -> Result<DyadicFactorization> {
    if r.is_zero() {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let v = r.trailing_zeros().unwrap_or(0);
    Ok(DyadicFactorization {
        r: r.clone(),
        c: (v % 4) as u32,
        d: v / 4,
        odd_part: r >> v,
    })
}

/// An integer or half-integer, the argument domain of rho.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfInteger {
    numerator: BigInt,
    denominator: u8,
}

impl HalfInteger {
    /// Builds numerator/denominator with denominator 1 or 2; an even
    /// numerator over 2 is normalized down to an integer.
    pub fn new(numerator: BigInt, denominator: u8) -> Result<Self> {
        match denominator {
            1 => Ok(HalfInteger { numerator, denominator: 1 }),
            2 => {
                if numerator.is_even() {
                    Ok(HalfInteger {
                        numerator: numerator / 2,
                        denominator: 1,
                    })
                } else {
                    Ok(HalfInteger { numerator, denominator: 2 })
                }
            }
            _ => Err(Error::InvalidArgument(format!(
                "half-integer denominator must be 1 or 2, got {denominator}"
            ))),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        HalfInteger {
            numerator: n.into(),
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator(&self) -> u8 {
        self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    pub fn is_positive(&self) -> bool {
        self.numerator.is_positive()
    }
}

impl From<u64> for HalfInteger {
    fn from(n: u64) -> Self {
        HalfInteger::from_integer(BigInt::from(n))
    }
}

impl FromStr for HalfInteger {
    type Err = Error;

    /// Accepts `"p"` or the half-integer literal `"p/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected an integer or \"p/2\", got {s:?}"));
        match s.split_once('/') {
            None => Ok(HalfInteger::from_integer(
                BigInt::from_str(s).map_err(|_| bad())?,
            )),
            Some((p, "2")) => {
                HalfInteger::new(BigInt::from_str(p.trim()).map_err(|_| bad())?, 2)
            }
            Some(_) => Err(bad()),
        }
    }
}

impl std::fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2", self.numerator)
        }
    }
}

fn rho_of_factorization(f: &DyadicFactorization) -> u64 {
    (1u64 << f.c) + 8 * f.d
}

fn rho_c_of_factorization(f: &DyadicFactorization) -> u64 {
    2 * (f.c as u64 + 4 * f.d) + 2
}

/// Real Radon-Hurwitz number rho(r) = 2^c + 8d; 0 at half-integers.
pub fn rho(r: &HalfInteger) -> Result<u64> {
    if !r.is_positive() {
        return Err(Error::InvalidArgument(format!("rho needs r > 0, got {r}")));
    }
    if !r.is_integer() {
        return Ok(0);
    }
    let f = factor_dyadic(&r.numerator().to_biguint().unwrap())?;
    Ok(rho_of_factorization(&f))
}

/// Complex Radon-Hurwitz number rho_c(r) = 2(c+4d) + 2; 0 at half-integers.
pub fn rho_c(r: &HalfInteger) -> Result<u64> {
    if !r.is_positive() {
        return Err(Error::InvalidArgument(format!("rho_c needs r > 0, got {r}")));
    }
    if !r.is_integer() {
        return Ok(0);
    }
    let f = factor_dyadic(&r.numerator().to_biguint().unwrap())?;
    Ok(rho_c_of_factorization(&f))
}

/// rho or rho_c according to the field.
pub fn rho_field(field: Field, r: &HalfInteger) -> Result<u64> {
    match field {
        Field::Real => rho(r),
        Field::Complex => rho_c(r),
    }
}

/// Total extension used by the window maximum: 0 at nonpositive arguments
/// and at half-integers.
fn rho_total(field: Field, numerator: &BigInt) -> u64 {
    if !numerator.is_positive() || numerator.is_odd() {
        return 0;
    }
    let half: BigInt = numerator >> 1u32;
    let half = half.to_biguint().unwrap();
    let f = factor_dyadic(&half).expect("positive by construction");
    match field {
        Field::Real => rho_of_factorization(&f),
        Field::Complex => rho_c_of_factorization(&f),
    }
}

/// Window maximum sigma(n, h) = max over 0 <= j <= n-h of rho(h/2 + j),
/// with rho_c in the complex case. Half-integer arguments contribute 0.
pub fn sigma(n: &BigUint, h: &BigUint, field: Field) -> Result<u64> {
    if h > n {
        return Err(Error::InvalidArgument(format!(
            "sigma needs h <= n, got n = {n}, h = {h}"
        )));
    }
    if n.is_zero() {
        return Err(Error::InvalidArgument("sigma needs n >= 1".into()));
    }
    let window = (n - h).to_u64().ok_or_else(|| {
        Error::InvalidArgument("window n - h exceeds the supported iteration size".into())
    })?;
    // Argument h/2 + j written over denominator 2: numerator h + 2j.
    let mut numerator = BigInt::from_biguint(num_bigint::Sign::Plus, h.clone());
    let mut best = 0u64;
    let two = BigInt::from(2);
    for _ in 0..=window {
        best = best.max(rho_total(field, &numerator));
        numerator += &two;
    }
    Ok(best)
}

/// Convenience wrapper over machine integers.
pub fn sigma_int(n: u64, h: u64, field: Field) -> Result<u64> {
    sigma(&BigUint::from(n), &BigUint::from(h), field)
}

/// rho of an integer argument given as a machine integer.
pub fn rho_int(r: u64, field: Field) -> Result<u64> {
    rho_field(field, &HalfInteger::from(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd(r: u64) -> DyadicFactorization {
        factor_dyadic(&BigUint::from(r)).unwrap()
    }

    #[test]
    fn factorization_examples() {
        let f = fd(12);
        assert_eq!((f.c, f.d, f.odd_part.clone()), (2, 0, BigUint::from(3u32)));
        let f = fd(1);
        assert_eq!((f.c, f.d, f.odd_part.clone()), (0, 0, BigUint::from(1u32)));
        let f = fd(16);
        assert_eq!((f.c, f.d, f.odd_part.clone()), (0, 1, BigUint::from(1u32)));
    }

    #[test]
    fn factorization_rejects_zero() {
        assert!(factor_dyadic(&BigUint::zero()).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&2u64.into()).unwrap(), 2);
        assert_eq!(rho(&"3/2".parse().unwrap()).unwrap(), 0);
        assert_eq!(rho(&16u64.into()).unwrap(), 9);
        assert_eq!(rho(&8u64.into()).unwrap(), 8);
    }

    #[test]
    fn rho_c_examples() {
        assert_eq!(rho_c(&1u64.into()).unwrap(), 2);
        assert_eq!(rho_c(&2u64.into()).unwrap(), 4);
        assert_eq!(rho_c(&"5/2".parse().unwrap()).unwrap(), 0);
    }

    #[test]
    fn rho_rejects_nonpositive() {
        assert!(rho(&HalfInteger::from_integer(0)).is_err());
        assert!(rho(&HalfInteger::from_integer(-3)).is_err());
        assert!(rho_c(&HalfInteger::new(BigInt::from(-1), 2).unwrap()).is_err());
    }

    #[test]
    fn half_integer_literals() {
        let h: HalfInteger = "7/2".parse().unwrap();
        assert!(!h.is_integer());
        assert_eq!(h.to_string(), "7/2");
        let h: HalfInteger = "4/2".parse().unwrap();
        assert!(h.is_integer());
        assert_eq!(h.to_string(), "2");
        assert!("3/4".parse::<HalfInteger>().is_err());
        assert!("x".parse::<HalfInteger>().is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_int(3, 2, Field::Real).unwrap(), 2);
        assert_eq!(sigma_int(7, 6, Field::Real).unwrap(), 4);
        assert_eq!(sigma_int(3, 2, Field::Complex).unwrap(), 4);
        // With h = n the window is the single point rho(n/2).
        for n in [2u64, 4, 6, 8, 10, 12, 16, 32] {
            assert_eq!(
                sigma_int(n, n, Field::Real).unwrap(),
                rho_int(n / 2, Field::Real).unwrap()
            );
        }
    }

    #[test]
    fn sigma_rejects_h_above_n() {
        assert!(sigma_int(3, 4, Field::Real).is_err());
    }

    #[test]
    fn sigma_odd_h_is_zero() {
        for n in 1..=20u64 {
            for h in (1..=n).step_by(2) {
                assert_eq!(sigma_int(n, h, Field::Real).unwrap(), 0);
                assert_eq!(sigma_int(n, h, Field::Complex).unwrap(), 0);
            }
        }
    }
}
