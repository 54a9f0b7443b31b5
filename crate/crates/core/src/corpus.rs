//! Generators for test corpora: single-vertex graphs and polynomial families
//! `M_i = q_i(A)`, which commute because they are polynomials in one matrix.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::GraphDocument;
use crate::error::{Error, Result};
use crate::kgraph::KGraphSpec;
use crate::matrix::Matrix;

/// Every tuple `(m_1..m_k)` with `lo <= m_i <= hi`, in lexicographic order.
pub fn monoid_exhaustive(k: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |m| {
                    let mut next = prefix.clone();
                    next.push(m);
                    next
                })
            })
            .collect();
    }
    out
}

pub fn monoid_random(k: usize, lo: u64, hi: u64, count: usize, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..k).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect()
}

pub fn monoid_spec(loops: &[u64]) -> Result<KGraphSpec<BigInt>> {
    let m: Vec<BigInt> = loops.iter().map(|&v| BigInt::from(v)).collect();
    let name = loops
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(KGraphSpec::monoid(&m)?.with_name(format!("monoid({name})")))
}

pub fn monoid_document(loops: &[u64]) -> Result<GraphDocument> {
    let spec = monoid_spec(loops)?;
    spec.ensure_valid()?;
    Ok(GraphDocument::from_spec(&spec))
}

/// `sum_d coeffs[d] * a^d`.
pub fn evaluate_polynomial(a: &Matrix<BigInt>, coeffs: &[u64]) -> Matrix<BigInt> {
    let n = a.rows();
    let mut power = Matrix::identity(n);
    let mut acc = Matrix::zeros(n, n);
    for (d, &c) in coeffs.iter().enumerate() {
        if d > 0 {
            power = &power * a;
        }
        if c != 0 {
            acc = acc.add(&power.scaled(&BigInt::from(c)));
        }
    }
    acc
}

/// The graph with `M_i = polys[i](base)`. Coefficients are listed from the
/// constant term up. Fails with the validation witness if any `M_i` has a
/// zero row (or `base` a negative entry).
pub fn polynomial_family(base: &Matrix<BigInt>, polys: &[Vec<u64>]) -> Result<KGraphSpec<BigInt>> {
    if !base.is_square() {
        return Err(Error::Structure("base matrix must be square".into()));
    }
    if base.entries().any(|(_, _, v)| v < &BigInt::from(0)) {
        return Err(Error::Structure("base matrix must be nonnegative".into()));
    }
    let adjacency = polys.iter().map(|q| evaluate_polynomial(base, q)).collect();
    let vertices = (0..base.rows()).map(|v| format!("v{v}")).collect();
    let spec = KGraphSpec::new(polys.len(), vertices, adjacency)?;
    spec.ensure_valid()?;
    Ok(spec)
}

/// Seeded random polynomial families with `1 <= n <= max_n` vertices and
/// `1 <= k <= max_k` coordinates. The base matrix has entries in `0..=2`
/// and no zero row; each polynomial has degree at most 2 with coefficients
/// in `0..=2` and a nonzero non-constant part, so every `M_i` is source-free.
pub fn random_polynomial_family(
    count: usize,
    max_n: usize,
    max_k: usize,
    seed: u64,
) -> Vec<KGraphSpec<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let k = rng.gen_range(1..=max_k);
        let mut base = Matrix::<BigInt>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                base[(i, j)] = BigInt::from(rng.gen_range(0u64..=2));
            }
            let j = rng.gen_range(0..n);
            if base.row(i).iter().all(|v| v == &BigInt::from(0)) {
                base[(i, j)] = BigInt::from(1);
            }
        }
        let polys: Vec<Vec<u64>> = (0..k)
            .map(|_| {
                let mut q: Vec<u64> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
                if q[1] == 0 && q[2] == 0 {
                    q[1] = 1;
                }
                q
            })
            .collect();
        if let Ok(spec) = polynomial_family(&base, &polys) {
            let id = out.len();
            out.push(spec.with_name(format!("polynomial-family#{id}")));
        }
    }
    out
}
