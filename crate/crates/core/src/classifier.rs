//! Decision procedure for the maximal dimension d_X(k) of a constant-rank-k
//! linear space inside the n x n real symmetric (corank s <= 2) or complex
//! hermitian (corank s <= 1) matrices.
//!
//! The procedure returns an interval [lower, upper] with upper <= lower + 1
//! and an exactness status. `lower` is always the dimension of the best
//! explicit construction produced by [`crate::spaces::build_space`], so
//! `lower == upper` is exactly the statement that the construction is
//! optimal. Equivalently, d_X(k) - 1 is the largest dimension of a sphere
//! admitting an odd continuous map into the rank-k part of the matrix set.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rh::{factor_dyadic, rho_field, sigma, HalfInteger};
use crate::Field;

/// A bound query: field, matrix size n and corank s (rank is k = n - s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuery {
    field: Field,
    n: BigUint,
    s: u32,
}

impl BoundQuery {
    /// Validates the field/corank combination and n >= s >= 0, n >= 1.
    pub fn new(field: Field, n: BigUint, s: u32) -> Result<Self> {
        if s > field.max_corank() {
            return Err(Error::InvalidArgument(format!(
                "corank s = {s} is out of range for the {field} case (max {})",
                field.max_corank()
            )));
        }
        if n.is_zero() {
            return Err(Error::InvalidArgument("matrix size n must be positive".into()));
        }
        if n < BigUint::from(s) {
            return Err(Error::InvalidArgument(format!(
                "corank s = {s} exceeds the matrix size n = {n}"
            )));
        }
        Ok(BoundQuery { field, n, s })
    }

    pub fn from_ints(field: Field, n: u64, s: u32) -> Result<Self> {
        BoundQuery::new(field, BigUint::from(n), s)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// The rank k = n - s.
    pub fn rank(&self) -> BigUint {
        &self.n - BigUint::from(self.s)
    }
}

/// Whether the interval [lower, upper] collapses to a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Exact,
    Unknown,
}

/// Which decision rule produced the report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// k = 0: only the zero space.
    ZeroRank,
    /// Odd rank forces dimension 1 (a sphere of constant odd rank would
    /// force signature (k/2, k/2)); the scalar line always exists. This is
    /// an inference, hence the tag.
    OddRankInferred,
    /// sigma(n, k) = rho((n-s)/2): the upper bound sigma + 1 is attained.
    UpperAttained,
    /// Real s = 1 with (n+1)/2 equal to 2, or with c in {2, 3} in its dyadic
    /// factorization: the lower bound sigma is optimal.
    LowerOptimal,
    /// Real s = 1 with c in {0, 1}: optimality is undecided.
    UndecidedC01,
    /// Real s = 2 beyond the upper-attained case: optimality is undecided.
    UndecidedS2,
    /// Hermitian remaining case: the lower bound sigma_C is optimal.
    HermitianLowerOptimal,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::ZeroRank => "zero_rank",
            Rule::OddRankInferred => "odd_rank_inferred",
            Rule::UpperAttained => "upper_attained",
            Rule::LowerOptimal => "lower_optimal",
            Rule::UndecidedC01 => "undecided_c01",
            Rule::UndecidedS2 => "undecided_s2",
            Rule::HermitianLowerOptimal => "hermitian_lower_optimal",
        }
    }
}

/// Bounds and exactness status for d_X(n - s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub sigma_value: u64,
    /// Best construction dimension (sigma or sigma + 1, 1 for odd rank,
    /// 0 for rank 0).
    pub lower: u64,
    pub upper: u64,
    pub status: Status,
    pub rule: Rule,
}

/// Applies the decision rules in order.
pub fn classify(q: &BoundQuery) -> Result<BoundReport> {
    let k = q.rank();
    if k.is_zero() {
        return Ok(report(0, 0, 0, Rule::ZeroRank));
    }
    if k.bit(0) {
        // Odd rank. sigma vanishes on odd-rank windows, so the interval
        // invariants still hold with lower = upper = 1.
        let sv = sigma(&q.n, &k, q.field)?;
        debug_assert_eq!(sv, 0);
        return Ok(report(sv, 1, 1, Rule::OddRankInferred));
    }
    let sv = sigma(&q.n, &k, q.field)?;
    let half_rank = HalfInteger::from_integer(num_bigint::BigInt::from(&k / 2u32));
    if sv == rho_field(q.field, &half_rank)? {
        return Ok(report(sv, sv + 1, sv + 1, Rule::UpperAttained));
    }
    match (q.field, q.s) {
        (Field::Real, 1) => {
            // Past the previous rule, sigma = rho((n+1)/2) necessarily.
            let m = (&q.n + BigUint::one()) / 2u32;
            let f = factor_dyadic(&m)?;
            if m == BigUint::from(2u32) || f.c == 2 || f.c == 3 {
                Ok(report(sv, sv, sv, Rule::LowerOptimal))
            } else {
                Ok(report(sv, sv, sv + 1, Rule::UndecidedC01))
            }
        }
        (Field::Real, 2) => Ok(report(sv, sv, sv + 1, Rule::UndecidedS2)),
        (Field::Complex, _) => Ok(report(sv, sv, sv, Rule::HermitianLowerOptimal)),
        // Real s = 0 always satisfies sigma(n, n) = rho(n/2).
        (Field::Real, _) => unreachable!("real s = 0 is settled by the upper-attained rule"),
    }
}

fn report(sigma_value: u64, lower: u64, upper: u64, rule: Rule) -> BoundReport {
    let status = if lower == upper {
        Status::Exact
    } else {
        Status::Unknown
    };
    debug_assert!(lower <= upper && upper <= lower + 1);
    debug_assert!(sigma_value <= lower && lower <= sigma_value + 1);
    BoundReport {
        sigma_value,
        lower,
        upper,
        status,
        rule,
    }
}

/// JSON view of a query/report pair, the shape printed by the CLI.
/// n is emitted as a JSON number whenever it fits in 64 bits and as a
/// decimal string otherwise.
pub fn report_json(q: &BoundQuery, r: &BoundReport) -> Value {
    let n_value = match q.n().to_u64() {
        Some(v) => json!(v),
        None => json!(q.n().to_string()),
    };
    json!({
        "field": q.field().name(),
        "n": n_value,
        "s": q.s(),
        "sigma": r.sigma_value,
        "lower": r.lower,
        "upper": r.upper,
        "status": r.status,
        "rule": r.rule,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rh::rho_int;

    fn go(field: Field, n: u64, s: u32) -> BoundReport {
        classify(&BoundQuery::from_ints(field, n, s).unwrap()).unwrap()
    }

    #[test]
    fn real_full_rank_even_is_exact() {
        for n in (2u64..=64).step_by(2) {
            let r = go(Field::Real, n, 0);
            assert_eq!(r.status, Status::Exact);
            assert_eq!(r.lower, rho_int(n / 2, Field::Real).unwrap() + 1);
            assert_eq!(r.rule, Rule::UpperAttained);
        }
    }

    #[test]
    fn spec_rows() {
        let r = go(Field::Real, 3, 1);
        assert_eq!((r.lower, r.upper, r.status), (2, 2, Status::Exact));

        let r = go(Field::Real, 7, 1);
        assert_eq!((r.lower, r.upper, r.status), (4, 4, Status::Exact));
        assert_eq!(r.rule, Rule::LowerOptimal);

        let r = go(Field::Real, 11, 1);
        assert_eq!((r.lower, r.upper, r.status), (2, 3, Status::Unknown));
        assert_eq!(r.rule, Rule::UndecidedC01);

        let r = go(Field::Real, 4, 1);
        assert_eq!((r.lower, r.upper, r.status), (1, 1, Status::Exact));
        assert_eq!(r.rule, Rule::OddRankInferred);

        let r = go(Field::Complex, 3, 1);
        assert_eq!((r.lower, r.upper, r.status), (4, 4, Status::Exact));

        let r = go(Field::Complex, 5, 1);
        assert_eq!((r.lower, r.upper, r.status), (5, 5, Status::Exact));
        assert_eq!(r.rule, Rule::UpperAttained);
    }

    #[test]
    fn zero_rank_query() {
        let r = go(Field::Real, 2, 2);
        assert_eq!((r.sigma_value, r.lower, r.upper), (0, 0, 0));
        assert_eq!(r.rule, Rule::ZeroRank);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(BoundQuery::from_ints(Field::Real, 4, 3).is_err());
        assert!(BoundQuery::from_ints(Field::Complex, 4, 2).is_err());
        assert!(BoundQuery::from_ints(Field::Real, 1, 2).is_err());
        assert!(BoundQuery::from_ints(Field::Real, 0, 0).is_err());
    }

    #[test]
    fn report_json_shape() {
        let q = BoundQuery::from_ints(Field::Complex, 3, 1).unwrap();
        let r = classify(&q).unwrap();
        let v = report_json(&q, &r);
        assert_eq!(v["field"], "complex");
        assert_eq!(v["n"], 3);
        assert_eq!(v["status"], "exact");
        assert_eq!(v["lower"], 4);
    }
}
