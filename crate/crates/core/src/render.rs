//! Text rendering of Evans differentials as labelled block tables.
//!
//! Columns are headed by the tuples of `N(p, k)` and rows by `N(p-1, k)`.
//! A `:` separates the plus and minus column blocks and a dashed rule the
//! plus and minus row blocks. In top degree every column lies in the plus
//! block, the matrix is a single block column and no rule is drawn.
//! Single-vertex graphs can be shown with symbolic `B_i` entries.

use std::fmt;

use crate::complex::differential_direct;
use crate::error::Result;
use crate::index::{delete_coordinate, enumerate_tuples, CanonicalOrder};
use crate::kgraph::KGraphSpec;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `+B_index` or `-B_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolicEntry {
    pub negative: bool,
    pub index: usize,
}

impl fmt::Display for SymbolicEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "B{}", self.index)
    }
}

/// Block pattern of `d_p` in rank `k`, independent of the graph.
pub fn symbolic_differential(k: usize, p: usize) -> Vec<Vec<Option<SymbolicEntry>>> {
    let rows = enumerate_tuples(p.saturating_sub(1), k);
    let cols = enumerate_tuples(p, k);
    let mut grid = vec![vec![None; cols.len()]; rows.len()];
    if p == 0 {
        return grid;
    }
    for (c, a) in cols.tuples().iter().enumerate() {
        for i in 1..=p {
            let b = delete_coordinate(a, i).expect("position in range");
            let r = rows.position(&b).expect("deleted tuple in N(p-1,k)");
            grid[r][c] = Some(SymbolicEntry {
                negative: i % 2 == 0,
                index: a.at(i),
            });
        }
    }
    grid
}

struct Table {
    col_labels: Vec<String>,
    col_split: usize,
    row_labels: Vec<String>,
    row_split: usize,
    cells: Vec<Vec<String>>,
}

impl Table {
    fn render(&self) -> String {
        let label_w = self.row_labels.iter().map(String::len).max().unwrap_or(0);
        let cell_w = self
            .col_labels
            .iter()
            .chain(self.cells.iter().flatten())
            .map(String::len)
            .max()
            .unwrap_or(1);
        let line = |first: &str, cells: &[String]| {
            let mut s = format!("{first:<label_w$} |");
            for (j, c) in cells.iter().enumerate() {
                if j == self.col_split && j > 0 {
                    s.push_str(" :");
                }
                s.push_str(&format!(" {c:>cell_w$}"));
            }
            s.trim_end().to_string()
        };
        let mut out = vec![line("", &self.col_labels)];
        let width = out[0].len();
        out.push(format!("{}+{}", "-".repeat(label_w + 1), "-".repeat(width.saturating_sub(label_w + 2))));
        let two_blocks = self.col_split > 0 && self.col_split < self.col_labels.len();
        for (i, row) in self.cells.iter().enumerate() {
            if two_blocks && i == self.row_split && i > 0 {
                let dashed: String = (0..width).map(|x| if x % 2 == 0 { '-' } else { ' ' }).collect();
                out.push(dashed.trim_end().to_string());
            }
            out.push(line(&self.row_labels[i], row));
        }
        out.join("\n")
    }
}

fn labels(order: &CanonicalOrder, n: usize, names: &[String]) -> Vec<String> {
    order
        .tuples()
        .iter()
        .flat_map(|a| {
            (0..n).map(move |v| {
                if n == 1 {
                    a.to_string()
                } else {
                    format!("{a}:{}", names[v])
                }
            })
        })
        .collect()
}

/// Figure-style table of `d_p` with symbolic `B_i` entries.
pub fn render_symbolic(k: usize, p: usize) -> String {
    let rows = enumerate_tuples(p.saturating_sub(1), k);
    let cols = enumerate_tuples(p, k);
    let grid = symbolic_differential(k, p);
    Table {
        col_labels: labels(&cols, 1, &[]),
        col_split: cols.plus_len(),
        row_labels: labels(&rows, 1, &[]),
        row_split: rows.plus_len(),
        cells: grid
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or_else(|| "0".to_string(), |s| s.to_string()))
                    .collect()
            })
            .collect(),
    }
    .render()
}

/// Table of the numeric matrix `d_p`. Each tuple owns `n` consecutive rows
/// or columns, labelled `tuple:vertex` when `n > 1`.
pub fn render_numeric<T: Scalar>(spec: &KGraphSpec<T>, d: &Matrix<T>, p: usize) -> String {
    let k = spec.rank();
    let n = spec.vertex_count();
    let rows = enumerate_tuples(p - 1, k);
    let cols = enumerate_tuples(p, k);
    Table {
        col_labels: labels(&cols, n, spec.vertices()),
        col_split: cols.plus_len() * n,
        row_labels: labels(&rows, n, spec.vertices()),
        row_split: rows.plus_len() * n,
        cells: d
            .to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
    }
    .render()
}

/// Symbolic rendering for single-vertex graphs, numeric otherwise.
pub fn render_differential<T: Scalar>(spec: &KGraphSpec<T>, p: usize) -> Result<String> {
    let d = differential_direct(&spec.coadjacencies(), p)?;
    if spec.is_monoid() {
        let values: Vec<String> = spec
            .coadjacencies()
            .iter()
            .enumerate()
            .map(|(i, b)| format!("B{} = {}", i + 1, b[(0, 0)]))
            .collect();
        Ok(format!("{}\nwhere {}", render_symbolic(spec.rank(), p), values.join(", ")))
    } else {
        Ok(render_numeric(spec, &d, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_matches_numeric() {
        let bs: Vec<Matrix<i64>> = [11, 13, 17, 19, 23].iter().map(|&b| Matrix::scalar(b)).collect();
        for k in 1..=5 {
            for p in 1..=k {
                let d = differential_direct(&bs[..k], p).unwrap();
                let grid = symbolic_differential(k, p);
                for (r, row) in grid.iter().enumerate() {
                    for (c, e) in row.iter().enumerate() {
                        let expected = e.map_or(0, |s| {
                            let b = bs[s.index - 1][(0, 0)];
                            if s.negative { -b } else { b }
                        });
                        assert_eq!(d[(r, c)], expected);
                    }
                }
            }
        }
    }

    #[test]
    fn top_degree_rank_four() {
        let text = render_symbolic(4, 4);
        let expected = [
            "        | (1,2,3,4)",
            "--------+----------",
            "(2,3,4) |        B1",
            "(1,3,4) |       -B2",
            "(1,2,4) |        B3",
            "(1,2,3) |       -B4",
        ]
        .join("\n");
        assert_eq!(text, expected);
    }

    #[test]
    fn numeric_labels_carry_vertices() {
        let spec = KGraphSpec::new(
            1,
            vec!["a".into(), "b".into()],
            vec![Matrix::<i64>::from_i64_rows(&[[0, 1], [1, 0]])],
        )
        .unwrap();
        let text = render_differential(&spec, 1).unwrap();
        assert!(text.contains("(1):a"));
        assert!(text.contains("*:b"));
    }
}
