//! Higher-rank graphs presented by their coordinate adjacency matrices.
//!
//! Convention: `M_i[v][w]` counts the degree-`e_i` edges with range `v` and
//! source `w`. Source-freeness then means every row of every `M_i` is
//! nonzero, and the co-adjacency matrix `B_i = I - M_i^T` acts on column
//! vectors indexed by vertices.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGraphSpec<T> {
    name: Option<String>,
    vertices: Vec<String>,
    adjacency: Vec<Matrix<T>>,
}

/// `B_i = I - M_i^T` for the 1-based coordinate `index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoAdjacency<T> {
    pub index: usize,
    pub matrix: Matrix<T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NegativeEntry {
        coordinate: usize,
        row: usize,
        col: usize,
        value: String,
    },
    /// Vertex `vertex` receives no edge of degree `e_coordinate`.
    ZeroRow {
        coordinate: usize,
        vertex: usize,
        label: String,
    },
    /// `M_i M_j != M_j M_i`; `(row, col)` is the first differing entry.
    NonCommuting {
        i: usize,
        j: usize,
        row: usize,
        col: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeEntry {
                coordinate,
                row,
                col,
                value,
            } => write!(
                f,
                "negative entry {value} in M{coordinate} at ({row}, {col})"
            ),
            Violation::ZeroRow {
                coordinate, label, ..
            } => write!(
                f,
                "not source-free at vertex {label}: row of M{coordinate} is zero"
            ),
            Violation::NonCommuting { i, j, row, col } => write!(
                f,
                "M{i} and M{j} do not commute: (M{i}M{j})[{row}][{col}] != (M{j}M{i})[{row}][{col}]"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn non_commuting_pairs(&self) -> Vec<(usize, usize)> {
        self.violations
            .iter()
            .filter_map(|v| match v {
                Violation::NonCommuting { i, j, .. } => Some((*i, *j)),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> KGraphSpec<T> {
    /// Checks shapes only: `k >= 1` matrices, each square of size
    /// `|vertices| >= 1`. The standing hypotheses are checked by
    /// [`validate`](Self::validate).
    pub fn new(k: usize, vertices: Vec<String>, adjacency: Vec<Matrix<T>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Structure("rank k must be at least 1".into()));
        }
        if adjacency.len() != k {
            return Err(Error::Structure(format!(
                "k = {k} but {} adjacency matrices were given",
                adjacency.len()
            )));
        }
        let n = vertices.len();
        if n == 0 {
            return Err(Error::Structure("at least one vertex is required".into()));
        }
        for (i, m) in adjacency.iter().enumerate() {
            if m.shape() != (n, n) {
                return Err(Error::Structure(format!(
                    "M{} is {}x{}, expected {n}x{n} to match the vertex list",
                    i + 1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self {
            name: None,
            vertices,
            adjacency,
        })
    }

    /// Single-vertex graph with `m_i` loops of degree `e_i`.
    pub fn monoid(loops: &[T]) -> Result<Self> {
        let adjacency = loops.iter().cloned().map(Matrix::scalar).collect();
        Self::new(loops.len(), vec!["v".into()], adjacency)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &[Matrix<T>] {
        &self.adjacency
    }

    pub fn is_monoid(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (c, m) in self.adjacency.iter().enumerate() {
            for (row, col, v) in m.entries() {
                if v.is_negative() {
                    violations.push(Violation::NegativeEntry {
                        coordinate: c + 1,
                        row,
                        col,
                        value: v.to_string(),
                    });
                }
            }
            for (vertex, label) in self.vertices.iter().enumerate() {
                if m.row(vertex).iter().all(Zero::is_zero) {
                    violations.push(Violation::ZeroRow {
                        coordinate: c + 1,
                        vertex,
                        label: label.clone(),
                    });
                }
            }
        }
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                let (a, b) = (&self.adjacency[i], &self.adjacency[j]);
                let ab = a * b;
                let ba = b * a;
                if let Some((row, col, _)) = ab.sub(&ba).first_nonzero() {
                    violations.push(Violation::NonCommuting {
                        i: i + 1,
                        j: j + 1,
                        row,
                        col,
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid(report))
        }
    }

    pub fn coadjacency(&self, i: usize) -> Result<CoAdjacency<T>> {
        let m = self
            .adjacency
            .get(i.wrapping_sub(1))
            .ok_or(Error::CoordinateOutOfRange {
                index: i,
                k: self.rank(),
            })?;
        Ok(CoAdjacency {
            index: i,
            matrix: Matrix::identity(m.rows()).sub(&m.transpose()),
        })
    }

    /// All co-adjacency matrices `B_1..B_k`.
    pub fn coadjacencies(&self) -> Vec<Matrix<T>> {
        (1..=self.rank())
            .map(|i| self.coadjacency(i).expect("index in range").matrix)
            .collect()
    }

    /// Pullback along the inclusion of the first `j` coordinates.
    pub fn coordinate_restriction(&self, j: usize) -> Result<Self> {
        if j == 0 || j > self.rank() {
            return Err(Error::CoordinateOutOfRange {
                index: j,
                k: self.rank(),
            });
        }
        Ok(Self {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            adjacency: self.adjacency[..j].to_vec(),
        })
    }

    /// Reorders coordinates: the new `M_i` is the old `M_{sigma[i-1]}`.
    /// `sigma` lists a permutation of `1..=k`.
    pub fn permute_coordinates(&self, sigma: &[usize]) -> Result<Self> {
        let k = self.rank();
        let mut seen = vec![false; k];
        let bijective = sigma.len() == k
            && sigma.iter().all(|&s| {
                (1..=k).contains(&s) && !std::mem::replace(&mut seen[s - 1], true)
            });
        if !bijective {
            return Err(Error::InvalidPermutation(sigma.to_vec()));
        }
        Ok(Self {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            adjacency: sigma.iter().map(|&s| self.adjacency[s - 1].clone()).collect(),
        })
    }
}
