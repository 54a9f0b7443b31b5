//! The Evans chain complex of a k-graph, and iterated tensor products of
//! two-term complexes for the single-vertex case.
//!
//! Degree `p` of the Evans complex is one copy of `Z^n` per tuple in
//! `N(p, k)`, laid out in the canonical order of [`crate::index`]. The block
//! of the differential at row tuple `b` and column tuple `a` is
//! `(-1)^(i+1) B_{a_i}` when `b` is `a` with its `i`-th entry deleted, and
//! zero otherwise.

use crate::error::{Error, Result};
use crate::index::{binomial, delete_coordinate, enumerate_tuples, IndexTuple};
use crate::kgraph::KGraphSpec;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A basis element of the Evans complex: vertex `vertex` in the copy of
/// `Z^n` indexed by `tuple`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLabel {
    pub tuple: IndexTuple,
    pub vertex: usize,
}

/// A bounded chain complex of finitely generated free abelian groups in
/// degrees `0..=len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex<T> {
    ranks: Vec<usize>,
    boundaries: Vec<Matrix<T>>,
    basis_labels: Option<Vec<Vec<BasisLabel>>>,
}

impl<T: Scalar> ChainComplex<T> {
    /// `boundaries[p - 1]` is `d_p : C_p -> C_{p-1}` and must have shape
    /// `ranks[p-1] x ranks[p]`. Fails if any composite `d_p d_{p+1}` is
    /// nonzero.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<Matrix<T>>) -> Result<Self> {
        if ranks.len() != boundaries.len() + 1 {
            return Err(Error::Structure(format!(
                "{} ranks given for {} boundary maps",
                ranks.len(),
                boundaries.len()
            )));
        }
        for (idx, d) in boundaries.iter().enumerate() {
            if d.shape() != (ranks[idx], ranks[idx + 1]) {
                return Err(Error::Structure(format!(
                    "d{} is {}x{}, expected {}x{}",
                    idx + 1,
                    d.rows(),
                    d.cols(),
                    ranks[idx],
                    ranks[idx + 1]
                )));
            }
        }
        let complex = Self {
            ranks,
            boundaries,
            basis_labels: None,
        };
        complex.check_square_zero()?;
        Ok(complex)
    }

    fn with_labels(mut self, labels: Vec<Vec<BasisLabel>>) -> Self {
        self.basis_labels = Some(labels);
        self
    }

    /// Top degree.
    pub fn len(&self) -> usize {
        self.boundaries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, p: usize) -> usize {
        self.ranks.get(p).copied().unwrap_or(0)
    }

    pub fn boundaries(&self) -> &[Matrix<T>] {
        &self.boundaries
    }

    /// `d_p` for `1 <= p <= len`.
    pub fn boundary(&self, p: usize) -> Option<&Matrix<T>> {
        p.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn basis_labels(&self) -> Option<&[Vec<BasisLabel>]> {
        self.basis_labels.as_deref()
    }

    pub fn check_square_zero(&self) -> Result<()> {
        for p in 1..self.boundaries.len() {
            let prod = &self.boundaries[p - 1] * &self.boundaries[p];
            if let Some((row, col, v)) = prod.first_nonzero() {
                return Err(Error::NotAComplex {
                    degree: p,
                    row,
                    col,
                    value: v.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Alternating sum of the ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(p, &r)| if p % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// `0 -> Z --b--> Z -> 0`, concentrated in degrees 1 and 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermComplex<T> {
    pub b: T,
}

impl<T: Scalar> TwoTermComplex<T> {
    pub fn new(b: T) -> Self {
        Self { b }
    }

    pub fn to_complex(&self) -> ChainComplex<T> {
        ChainComplex {
            ranks: vec![1, 1],
            boundaries: vec![Matrix::scalar(self.b.clone())],
            basis_labels: None,
        }
    }
}

fn sign<T: Scalar>(exponent: usize) -> T {
    if exponent.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

fn block_size<T: Scalar>(coadjacency: &[Matrix<T>]) -> usize {
    coadjacency.first().map_or(0, Matrix::rows)
}

fn check_degree(p: usize, k: usize) -> Result<()> {
    if p == 0 || p > k {
        Err(Error::DegreeOutOfRange { degree: p, k })
    } else {
        Ok(())
    }
}

/// The Evans differential `d_p` assembled entry by entry from the
/// signed-deletion formula. `coadjacency` lists `B_1..B_k`, all `n x n`.
/// No commuting check is made here.
pub fn differential_direct<T: Scalar>(coadjacency: &[Matrix<T>], p: usize) -> Result<Matrix<T>> {
    let k = coadjacency.len();
    check_degree(p, k)?;
    let n = block_size(coadjacency);
    let rows = enumerate_tuples(p - 1, k);
    let cols = enumerate_tuples(p, k);
    let mut d = Matrix::zeros(rows.len() * n, cols.len() * n);
    for (c, a) in cols.tuples().iter().enumerate() {
        for i in 1..=p {
            let b = delete_coordinate(a, i)?;
            let r = rows.position(&b).expect("deleted tuple lies in N(p-1,k)");
            let block = coadjacency[a.at(i) - 1].scaled(&sign(i + 1));
            d.set_block(r * n, c * n, &block);
        }
    }
    Ok(d)
}

/// The Evans differential `d_p` for rank `j = coadjacency.len()`, built
/// from the rank `j - 1` differentials:
///
/// ```text
/// d^j_p = [ d^{j-1}_{p-1}        0          ]
///         [ (-1)^{p+1} B_j   d^{j-1}_p      ]
/// ```
///
/// where the lower-left block repeats `B_j` once per tuple ending in `j`.
/// Blocks indexed by empty tuple sets have zero size and vanish.
pub fn differential_recursive<T: Scalar>(
    coadjacency: &[Matrix<T>],
    p: usize,
) -> Result<Matrix<T>> {
    check_degree(p, coadjacency.len())?;
    Ok(recursive_block(coadjacency, p))
}

fn recursive_block<T: Scalar>(coadjacency: &[Matrix<T>], p: usize) -> Matrix<T> {
    let j = coadjacency.len();
    let n = block_size(coadjacency);
    let module = |rank: usize, degree: Option<usize>| degree.map_or(0, |d| binomial(rank, d) * n);

    if p == 0 || p > j {
        return Matrix::zeros(module(j, p.checked_sub(1)), module(j, Some(p)));
    }
    if j == 1 {
        return coadjacency[0].clone();
    }

    let lower = &coadjacency[..j - 1];
    let top_left = if p >= 2 {
        recursive_block(lower, p - 1)
    } else {
        Matrix::zeros(0, module(j - 1, Some(0)))
    };
    let plus_count = binomial(j - 1, p - 1);
    let bottom_left = Matrix::block_diagonal(&coadjacency[j - 1].scaled(&sign(p + 1)), plus_count);
    let bottom_right = recursive_block(lower, p);

    let top_rows = top_left.rows();
    let left_cols = bottom_left.cols();
    let mut d = Matrix::zeros(
        top_rows + bottom_left.rows(),
        left_cols + bottom_right.cols(),
    );
    d.set_block(0, 0, &top_left);
    d.set_block(top_rows, 0, &bottom_left);
    d.set_block(top_rows, left_cols, &bottom_right);
    d
}

/// Direct-formula differential of a validated graph.
pub fn build_differential_direct<T: Scalar>(spec: &KGraphSpec<T>, p: usize) -> Result<Matrix<T>> {
    spec.ensure_valid()?;
    differential_direct(&spec.coadjacencies(), p)
}

/// Block-recursive differential of a validated graph.
pub fn build_differential_recursive<T: Scalar>(
    spec: &KGraphSpec<T>,
    p: usize,
) -> Result<Matrix<T>> {
    spec.ensure_valid()?;
    differential_recursive(&spec.coadjacencies(), p)
}

/// The Evans complex for a list of co-adjacency matrices. Refuses to
/// return a non-complex: a nonzero `d_p d_{p+1}` yields
/// [`Error::NotAComplex`] with the offending entry.
pub fn evans_complex<T: Scalar>(coadjacency: &[Matrix<T>]) -> Result<ChainComplex<T>> {
    let k = coadjacency.len();
    let n = block_size(coadjacency);
    if coadjacency.iter().any(|b| b.shape() != (n, n)) {
        return Err(Error::Structure(
            "co-adjacency matrices must be square of one common size".into(),
        ));
    }
    let ranks = (0..=k).map(|p| binomial(k, p) * n).collect();
    let boundaries = (1..=k)
        .map(|p| differential_recursive(coadjacency, p))
        .collect::<Result<Vec<_>>>()?;
    let labels = (0..=k)
        .map(|p| {
            enumerate_tuples(p, k)
                .tuples()
                .iter()
                .flat_map(|a| {
                    (0..n).map(move |vertex| BasisLabel {
                        tuple: a.clone(),
                        vertex,
                    })
                })
                .collect()
        })
        .collect();
    Ok(ChainComplex::new(ranks, boundaries)?.with_labels(labels))
}

/// Evans complex of a validated graph.
pub fn build_complex<T: Scalar>(spec: &KGraphSpec<T>) -> Result<ChainComplex<T>> {
    spec.ensure_valid()?;
    evans_complex(&spec.coadjacencies())
}

/// `A (x) C` for a two-term `C`. Degree `n` is `A_n (x) C_0` followed by
/// `A_{n-1} (x) C_1`, and
///
/// ```text
/// d_n = [ dA_n   (-1)^(n-1) b ]
///       [ 0      dA_{n-1}     ]
/// ```
pub fn tensor_two<T: Scalar>(a: &ChainComplex<T>, c: &TwoTermComplex<T>) -> ChainComplex<T> {
    let top = a.len() + 1;
    let ranks: Vec<usize> = (0..=top)
        .map(|n| a.rank(n) + n.checked_sub(1).map_or(0, |m| a.rank(m)))
        .collect();
    let mut boundaries = Vec::with_capacity(top);
    for n in 1..=top {
        let (left_cols, right_cols) = (a.rank(n), a.rank(n - 1));
        let top_rows = a.rank(n - 1);
        let mut d = Matrix::zeros(ranks[n - 1], ranks[n]);
        if let Some(da) = a.boundary(n) {
            d.set_block(0, 0, da);
        }
        let koszul = Matrix::identity(right_cols).scaled(&(c.b.clone() * sign(n - 1)));
        d.set_block(0, left_cols, &koszul);
        if n >= 2 {
            if let Some(da) = a.boundary(n - 1) {
                d.set_block(top_rows, left_cols, da);
            }
        }
        boundaries.push(d);
    }
    ChainComplex {
        ranks,
        boundaries,
        basis_labels: None,
    }
}

/// `C^1 (x) ... (x) C^k`, associated from the left.
pub fn tensor_monoid_complex<T: Scalar>(b: &[T]) -> Result<ChainComplex<T>> {
    let (first, rest) = b.split_first().ok_or(Error::Empty)?;
    let complex = rest.iter().fold(
        TwoTermComplex::new(first.clone()).to_complex(),
        |acc, bj| tensor_two(&acc, &TwoTermComplex::new(bj.clone())),
    );
    complex.check_square_zero()?;
    Ok(complex)
}
