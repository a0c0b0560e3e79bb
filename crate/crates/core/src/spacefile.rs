//! The version-1 JSON space file.
//!
//! A space file carries `schema_version`, `field` ("real" or "complex"),
//! the matrix size `n`, the claimed `rank`, the dimension `dim`, the basis
//! as a list of matrices (rows of entry strings for real spaces, rows of
//! `{"im": ..., "re": ...}` objects for complex ones) and an optional
//! `certificate`. Certificates are tagged objects:
//! `{"kind": "square"}`, `{"kind": "factor", "p": ...}` or
//! `{"kind": "padding", "removed": ..., "inner": <nested space>}`.
//!
//! Serialization is canonical: object keys are sorted, rationals are in
//! lowest terms with positive denominators, and equal spaces serialize to
//! identical bytes.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, Rational, Scalar};
use crate::spaces::{AnySpace, Certificate, MatrixSpace};
use crate::Field;

pub const SCHEMA_VERSION: u64 = 1;

/// Scalars with a space-file entry encoding.
pub trait JsonEntry: Scalar {
    fn entry_to_json(&self) -> Value;
    fn entry_from_json(v: &Value) -> Result<Self>;
}

impl JsonEntry for Rational {
    fn entry_to_json(&self) -> Value {
        Value::String(self.to_entry_string())
    }

    fn entry_from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Rational::parse(s),
            Value::Object(_) => {
                let g = GaussianRational::entry_from_json(v)?;
                if !g.im.is_zero() {
                    return Err(Error::Schema(
                        "complex entry in a real space".into(),
                    ));
                }
                Ok(g.re)
            }
            _ => Err(Error::Schema(format!("bad rational entry: {v}"))),
        }
    }
}

impl JsonEntry for GaussianRational {
    fn entry_to_json(&self) -> Value {
        json!({
            "im": self.im.to_entry_string(),
            "re": self.re.to_entry_string(),
        })
    }

    fn entry_from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Ok(GaussianRational::from_rational(Rational::parse(s)?)),
            Value::Object(o) => {
                let part = |key: &str| -> Result<Rational> {
                    match o.get(key) {
                        Some(Value::String(s)) => Rational::parse(s),
                        _ => Err(Error::Schema(format!(
                            "gaussian entry needs a string {key:?} part"
                        ))),
                    }
                };
                Ok(GaussianRational::new(part("re")?, part("im")?))
            }
            _ => Err(Error::Schema(format!("bad gaussian entry: {v}"))),
        }
    }
}

fn matrix_to_json<S: JsonEntry>(m: &Matrix<S>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array((0..m.cols()).map(|c| m.at(r, c).entry_to_json()).collect())
            })
            .collect(),
    )
}

fn certificate_to_json<S: JsonEntry>(c: &Certificate<S>) -> Value {
    match c {
        Certificate::SquareIdentity => json!({ "kind": "square" }),
        Certificate::FactorIdentity { p } => json!({ "kind": "factor", "p": p }),
        Certificate::Padding { removed, inner } => json!({
            "inner": space_to_json(inner),
            "kind": "padding",
            "removed": removed,
        }),
    }
}

/// Canonical JSON value of a space.
pub fn space_to_json<S: JsonEntry>(space: &MatrixSpace<S>) -> Value {
    let mut obj = Map::new();
    obj.insert(
        "basis".into(),
        Value::Array(space.basis.iter().map(matrix_to_json).collect()),
    );
    if let Some(cert) = &space.certificate {
        obj.insert("certificate".into(), certificate_to_json(cert));
    }
    obj.insert("dim".into(), json!(space.dim()));
    obj.insert("field".into(), json!(S::FIELD.name()));
    obj.insert("n".into(), json!(space.n));
    obj.insert("rank".into(), json!(space.rank));
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    Value::Object(obj)
}

/// Canonical JSON value of a runtime-tagged space.
pub fn any_space_to_json(space: &AnySpace) -> Value {
    match space {
        AnySpace::Real(s) => space_to_json(s),
        AnySpace::Complex(s) => space_to_json(s),
    }
}

/// Hex SHA-256 of the compact canonical serialization; the space identity
/// used in verification reports.
pub fn space_digest<S: JsonEntry>(space: &MatrixSpace<S>) -> String {
    let bytes = space_to_json(space).to_string();
    let hash = Sha256::digest(bytes.as_bytes());
    let mut out = String::with_capacity(64);
    for b in hash {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

fn get_u64(obj: &Map<String, Value>, key: &str) -> Result<u64> {
    obj.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Schema(format!("missing or non-integer {key:?}")))
}

fn parse_matrix<S: JsonEntry>(v: &Value, n: usize) -> Result<Matrix<S>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Schema("matrix must be an array of rows".into()))?;
    if rows.len() != n {
        return Err(Error::Schema(format!(
            "matrix has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut out: Matrix<S> = Matrix::zeros(n, n);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Schema("matrix row must be an array".into()))?;
        if row.len() != n {
            return Err(Error::Schema(format!(
                "matrix row has {} entries, expected {n}",
                row.len()
            )));
        }
        for (c, e) in row.iter().enumerate() {
            out.set(r, c, S::entry_from_json(e)?);
        }
    }
    Ok(out)
}

fn parse_certificate<S: JsonEntry>(v: &Value, n: usize) -> Result<Certificate<S>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Schema("certificate must be an object".into()))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Schema("certificate needs a string \"kind\"".into()))?;
    match kind {
        "square" => Ok(Certificate::SquareIdentity),
        "factor" => {
            let p = get_u64(obj, "p")? as usize;
            if p == 0 || p > n {
                return Err(Error::Schema(format!("factor p = {p} out of range")));
            }
            Ok(Certificate::FactorIdentity { p })
        }
        "padding" => {
            let removed = get_u64(obj, "removed")? as usize;
            if removed == 0 || removed >= n {
                return Err(Error::Schema(format!(
                    "padding removed = {removed} out of range"
                )));
            }
            let inner_v = obj
                .get("inner")
                .ok_or_else(|| Error::Schema("padding certificate needs \"inner\"".into()))?;
            let inner = parse_space_value::<S>(inner_v)?;
            Ok(Certificate::Padding {
                removed,
                inner: Box::new(inner),
            })
        }
        other => Err(Error::Schema(format!("unknown certificate kind {other:?}"))),
    }
}

fn parse_space_value<S: JsonEntry>(v: &Value) -> Result<MatrixSpace<S>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Schema("space must be a JSON object".into()))?;
    let n = get_u64(obj, "n")? as usize;
    if n == 0 {
        return Err(Error::Schema("n must be positive".into()));
    }
    let rank = get_u64(obj, "rank")? as usize;
    if rank > n {
        return Err(Error::Schema(format!("rank {rank} exceeds n = {n}")));
    }
    let dim = get_u64(obj, "dim")? as usize;
    let basis_v = obj
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("missing basis array".into()))?;
    if basis_v.len() != dim {
        return Err(Error::Schema(format!(
            "dim = {dim} but the basis has {} matrices",
            basis_v.len()
        )));
    }
    let basis = basis_v
        .iter()
        .map(|m| parse_matrix::<S>(m, n))
        .collect::<Result<Vec<_>>>()?;
    let certificate = match obj.get("certificate") {
        None | Some(Value::Null) => None,
        Some(c) => Some(parse_certificate::<S>(c, n)?),
    };
    Ok(MatrixSpace {
        n,
        rank,
        basis,
        certificate,
    })
}

/// Parses and schema-validates a version-1 space file.
pub fn parse_space(text: &str) -> Result<AnySpace> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Schema("space file must be a JSON object".into()))?;
    let version = get_u64(obj, "schema_version")?;
    if version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema_version {version}"
        )));
    }
    let field = match obj.get("field").and_then(Value::as_str) {
        Some("real") => Field::Real,
        Some("complex") => Field::Complex,
        other => {
            return Err(Error::Schema(format!(
                "field must be \"real\" or \"complex\", got {other:?}"
            )))
        }
    };
    match field {
        Field::Real => Ok(AnySpace::Real(parse_space_value::<Rational>(&v)?)),
        Field::Complex => Ok(AnySpace::Complex(parse_space_value::<GaussianRational>(&v)?)),
    }
}

/// Pretty serialization with a trailing newline, the CLI output format.
pub fn to_pretty_string(space: &AnySpace) -> String {
    let mut s = serde_json::to_string_pretty(&any_space_to_json(space))
        .expect("serializing JSON value cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::build_space;

    #[test]
    fn round_trip_real_and_complex() {
        for (field, n, s) in [
            (Field::Real, 4, 0),
            (Field::Real, 7, 1),
            (Field::Real, 6, 2),
            (Field::Real, 5, 2),
            (Field::Complex, 3, 1),
            (Field::Complex, 8, 0),
        ] {
            let sp = build_space(field, n, s).unwrap();
            let text = to_pretty_string(&sp);
            let back = parse_space(&text).unwrap();
            assert_eq!(sp, back, "{field} n={n} s={s}");
        }
    }

    #[test]
    fn serialization_is_byte_stable() {
        let a = to_pretty_string(&build_space(Field::Complex, 5, 1).unwrap());
        let b = to_pretty_string(&build_space(Field::Complex, 5, 1).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn digest_is_deterministic_and_shape_sensitive() {
        let AnySpace::Real(a) = build_space(Field::Real, 4, 0).unwrap() else {
            unreachable!()
        };
        let AnySpace::Real(b) = build_space(Field::Real, 4, 0).unwrap() else {
            unreachable!()
        };
        assert_eq!(space_digest(&a), space_digest(&b));
        let AnySpace::Real(c) = build_space(Field::Real, 6, 0).unwrap() else {
            unreachable!()
        };
        assert_ne!(space_digest(&a), space_digest(&c));
    }

    #[test]
    fn schema_violations_are_rejected() {
        assert!(parse_space("not json").is_err());
        assert!(parse_space("[1, 2]").is_err());
        assert!(parse_space(r#"{"schema_version": 2}"#).is_err());
        // dim disagrees with the basis length
        let bad = r#"{
            "basis": [],
            "dim": 1,
            "field": "real",
            "n": 2,
            "rank": 2,
            "schema_version": 1
        }"#;
        assert!(matches!(parse_space(bad), Err(Error::Schema(_))));
        // complex entry inside a real space
        let bad = r#"{
            "basis": [[[{"im": "1", "re": "0"}, "0"], ["0", "0"]]],
            "dim": 1,
            "field": "real",
            "n": 2,
            "rank": 2,
            "schema_version": 1
        }"#;
        assert!(matches!(parse_space(bad), Err(Error::Schema(_))));
    }
}
