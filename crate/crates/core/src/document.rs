//! The JSON graph document shared by every command:
//!
//! ```json
//! { "name": "optional", "k": 2, "vertices": ["v"], "adjacency": [[[3]], [[5]]] }
//! ```
//!
//! `adjacency` holds `k` row-major square matrices of size `|vertices|`.
//! Entries are JSON integers, or decimal strings for values beyond `i64`.

use std::fmt;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::error::Error;
use crate::kgraph::KGraphSpec;
use crate::matrix::Matrix;
use crate::serde_int;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_int::to_value(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        serde_int::from_value(&v)
            .map(Int)
            .ok_or_else(|| D::Error::custom(format!("expected an integer, found {v}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub k: usize,
    pub vertices: Vec<String>,
    pub adjacency: Vec<Vec<Vec<Int>>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Structure(#[from] Error),
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Parses a JSON array of documents, as written by the generators.
    pub fn parse_list(text: &str) -> Result<Vec<Self>, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialises")
    }

    /// Shape checks only; the standing hypotheses are left to
    /// [`KGraphSpec::validate`].
    pub fn to_spec(&self) -> Result<KGraphSpec<BigInt>, DocumentError> {
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|v| v.0.clone()).collect())
                    .collect();
                Matrix::try_from_rows(rows)
                    .ok_or_else(|| Error::Structure(format!("M{} has rows of unequal length", i + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let spec = KGraphSpec::new(self.k, self.vertices.clone(), adjacency)?;
        Ok(match &self.name {
            Some(name) => spec.with_name(name.clone()),
            None => spec,
        })
    }

    pub fn from_spec(spec: &KGraphSpec<BigInt>) -> Self {
        Self {
            name: spec.name().map(str::to_string),
            k: spec.rank(),
            vertices: spec.vertices().to_vec(),
            adjacency: spec
                .adjacency()
                .iter()
                .map(|m| {
                    m.to_rows()
                        .into_iter()
                        .map(|r| r.into_iter().map(Int).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl fmt::Display for GraphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}
