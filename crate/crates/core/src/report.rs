//! The JSON report emitted by every command. All sections are always
//! present; sections a command does not compute are `null`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::ChainComplex;
use crate::homology::HomologyGroup;
use crate::index::enumerate_tuples;
use crate::kgraph::{KGraphSpec, ValidationReport};
use crate::serde_int;
use crate::spectral::{E2Page, KTheoryVerdict};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: Option<String>,
    pub k: Option<usize>,
    pub vertices: Option<usize>,
    pub validation: Option<ValidationSummary>,
    pub complex: Option<ComplexSection>,
    pub homology: Option<Vec<HomologyGroup>>,
    pub e2: Option<E2Page>,
    pub verdict: Option<KTheoryVerdict>,
    pub timing_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationSummary {
    pub valid: bool,
    #[serde(flatten)]
    pub report: ValidationReport,
}

impl From<ValidationReport> for ValidationSummary {
    fn from(report: ValidationReport) -> Self {
        Self {
            valid: report.is_valid(),
            report,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexSection {
    pub ranks: Vec<usize>,
    pub differentials: Vec<DifferentialSection>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DifferentialSection {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// Row-major integer entries.
    pub matrix: Vec<Vec<Value>>,
}

fn basis_labels(spec: &KGraphSpec<BigInt>, p: usize) -> Vec<String> {
    let n = spec.vertex_count();
    enumerate_tuples(p, spec.rank())
        .tuples()
        .iter()
        .flat_map(|a| spec.vertices().iter().map(move |v| if n == 1 { a.to_string() } else { format!("{a}:{v}") }))
        .collect()
}

impl ComplexSection {
    /// `degrees` selects which differentials to include.
    pub fn new(
        spec: &KGraphSpec<BigInt>,
        complex: &ChainComplex<BigInt>,
        degrees: impl IntoIterator<Item = usize>,
    ) -> Self {
        let differentials = degrees
            .into_iter()
            .filter_map(|p| {
                complex.boundary(p).map(|d| DifferentialSection {
                    degree: p,
                    rows: d.rows(),
                    cols: d.cols(),
                    row_labels: basis_labels(spec, p - 1),
                    col_labels: basis_labels(spec, p),
                    matrix: d
                        .to_rows()
                        .iter()
                        .map(|r| r.iter().map(serde_int::to_value).collect())
                        .collect(),
                })
            })
            .collect();
        Self {
            ranks: complex.ranks().to_vec(),
            differentials,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;

    #[test]
    fn unused_sections_are_null() {
        let json = serde_json::to_value(Report::default()).unwrap();
        for key in [
            "name",
            "validation",
            "complex",
            "homology",
            "e2",
            "verdict",
            "timing_ms",
        ] {
            assert_eq!(json[key], Value::Null, "{key}");
        }
    }

    #[test]
    fn differential_section() {
        let spec = KGraphSpec::monoid(&[BigInt::from(3), BigInt::from(5)]).unwrap();
        let c = build_complex(&spec).unwrap();
        let s = ComplexSection::new(&spec, &c, 1..=2);
        assert_eq!(s.ranks, vec![1, 2, 1]);
        let json = serde_json::to_value(&s.differentials[0]).unwrap();
        assert_eq!(json["matrix"], serde_json::json!([[-4, -2]]));
        assert_eq!(json["col_labels"], serde_json::json!(["(2)", "(1)"]));
        assert_eq!(json["row_labels"], serde_json::json!(["*"]));
    }
}
