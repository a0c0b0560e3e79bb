//! Radon-Hurwitz numbers, dimension bounds for constant-rank spaces of
//! symmetric and hermitian matrices, and explicit constructions of extremal
//! spaces packaged with machine-checkable constant-rank certificates.
//!
//! All computation is carried out over exact rational (or Gaussian rational)
//! arithmetic; there is no floating point anywhere in this crate.

pub mod classifier;
pub mod error;
pub mod exact;
pub mod families;
pub mod rh;
pub mod spacefile;
pub mod spaces;
pub mod verifier;

pub use error::{Error, Result};

use serde::{Deserialize, Serialize};

/// Which matrix set a space lives in: real symmetric or complex hermitian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }

    /// Largest corank covered by the decision rules for this field.
    pub fn max_corank(self) -> u32 {
        match self {
            Field::Real => 2,
            Field::Complex => 1,
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
