//! Integer homology of finite free chain complexes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::ChainComplex;
use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::snf::smith_normal_form;

/// A finitely generated abelian group `Z^free_rank + Z_{t_1} + ... + Z_{t_m}`
/// in invariant-factor form: every `t_i >= 2` and `t_i | t_{i+1}`. Two
/// values are equal exactly when the groups are isomorphic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub free_rank: usize,
    #[serde(with = "crate::serde_int::list")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z_order^copies`; trivial when `|order| == 1`, free when `order == 0`.
    pub fn cyclic_power(order: &BigInt, copies: usize) -> Self {
        Self::from_cyclic_orders(0, std::iter::repeat_n(order.clone(), copies))
    }

    /// Normalises a direct sum of `free_rank` copies of `Z` and cyclic groups
    /// of the given orders (any integers; `0` means `Z`, units vanish).
    pub fn from_cyclic_orders(free_rank: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let orders: Vec<BigInt> = orders.into_iter().map(|o| o.abs()).collect();
        let mut diag = Matrix::<BigInt>::zeros(orders.len(), orders.len());
        for (i, o) in orders.into_iter().enumerate() {
            diag[(i, i)] = o;
        }
        let divisors = smith_normal_form(&diag).divisors;
        let extra_free = divisors.iter().filter(|d| d.is_zero()).count();
        Self {
            free_rank: free_rank + extra_free,
            torsion: divisors
                .into_iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_cyclic_orders(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == t).count();
            parts.push(if run == 1 {
                format!("Z{t}")
            } else {
                format!("Z{t}^{run}")
            });
            i += run;
        }
        f.write_str(&parts.join(" + "))
    }
}

/// `H_p` for `p = 0..=len`, with `d_0` and `d_{len+1}` taken as zero maps.
/// Free rank is `r_p - rank d_p - rank d_{p+1}`; torsion is the non-unit
/// elementary divisors of `d_{p+1}`.
pub fn homology<T: Scalar>(complex: &ChainComplex<T>) -> Result<Vec<HomologyGroup>> {
    complex.check_square_zero()?;
    let snfs: Vec<_> = complex.boundaries().iter().map(smith_normal_form).collect();
    let ranks: Vec<usize> = snfs.iter().map(|s| s.rank()).collect();
    let top = complex.len();
    let groups = (0..=top)
        .map(|p| {
            let incoming = if p == 0 { 0 } else { ranks[p - 1] };
            let outgoing = ranks.get(p).copied().unwrap_or(0);
            let torsion = snfs
                .get(p)
                .map(|s| {
                    s.divisors
                        .iter()
                        .filter(|d| !d.is_zero() && !d.abs().is_one())
                        .map(Scalar::to_big)
                        .collect()
                })
                .unwrap_or_default();
            HomologyGroup {
                free_rank: complex.rank(p) - incoming - outgoing,
                torsion,
            }
        })
        .collect();
    Ok(groups)
}

/// Renders a homology list as `(H_0, H_1, ...)`.
pub fn format_homology(groups: &[HomologyGroup]) -> String {
    let inner: Vec<String> = groups.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(", "))
}
