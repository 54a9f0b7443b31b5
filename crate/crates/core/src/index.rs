//! Index sets of strictly increasing tuples.
//!
//! `N(p, k)` is the set of strictly increasing `p`-tuples drawn from `1..=k`,
//! with the empty tuple `*` as the single element of `N(0, k)`. The ordering
//! used throughout the crate is recursive:
//!
//! ```text
//! order(N(p,k)) = [a ++ (k) for a in order(N(p-1,k-1))] ++ order(N(p,k-1))
//! ```
//!
//! so the tuples ending in `k` (the plus block) come first and the remaining
//! tuples (the minus block) follow, themselves in rank `k-1` order. With this
//! layout the Evans differentials are literal block matrices.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    /// Validates strict increase and the range `1..=k`.
    pub fn new(entries: Vec<usize>, k: usize) -> Result<Self> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let in_range = entries.iter().all(|&e| (1..=k).contains(&e));
        if increasing && in_range {
            Ok(Self(entries))
        } else {
            Err(Error::InvalidTuple { entries, k })
        }
    }

    /// The basepoint `*`.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    fn appended(&self, e: usize) -> Self {
        let mut v = self.0.clone();
        v.push(e);
        Self(v)
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("*");
        }
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// `N(p, k)` listed in the canonical order, with constant-time position lookup.
#[derive(Clone, Debug)]
pub struct CanonicalOrder {
    p: usize,
    k: usize,
    tuples: Vec<IndexTuple>,
    position: HashMap<IndexTuple, usize>,
}

impl CanonicalOrder {
    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn tuples(&self) -> &[IndexTuple] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn position(&self, a: &IndexTuple) -> Option<usize> {
        self.position.get(a).copied()
    }

    /// Number of tuples ending in `k`; they occupy the first slots.
    pub fn plus_len(&self) -> usize {
        self.tuples
            .iter()
            .take_while(|a| self.k > 0 && a.last() == Some(self.k))
            .count()
    }
}

fn ordered(p: usize, k: usize) -> Vec<IndexTuple> {
    if p > k {
        return Vec::new();
    }
    if p == 0 {
        return vec![IndexTuple::empty()];
    }
    if p == k {
        return vec![IndexTuple((1..=p).collect())];
    }
    let mut out: Vec<IndexTuple> = ordered(p - 1, k - 1)
        .iter()
        .map(|a| a.appended(k))
        .collect();
    out.extend(ordered(p, k - 1));
    out
}

/// `N(p, k)` in canonical order; empty when `p > k`.
pub fn enumerate_tuples(p: usize, k: usize) -> CanonicalOrder {
    let tuples = ordered(p, k);
    let position = tuples
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), i))
        .collect();
    CanonicalOrder {
        p,
        k,
        tuples,
        position,
    }
}

/// Removes the entry at 1-based position `i`.
pub fn delete_coordinate(a: &IndexTuple, i: usize) -> Result<IndexTuple> {
    if i == 0 || i > a.len() {
        return Err(Error::PositionOutOfRange {
            index: i,
            len: a.len(),
        });
    }
    let mut v = a.0.clone();
    v.remove(i - 1);
    Ok(IndexTuple(v))
}

/// Splits `N(p, k)` into the tuples ending in `k` and the rest, each in
/// canonical order.
pub fn partition_plus_minus(p: usize, k: usize) -> (Vec<IndexTuple>, Vec<IndexTuple>) {
    let order = enumerate_tuples(p, k);
    let split = order.plus_len();
    let mut tuples = order.tuples;
    let minus = tuples.split_off(split);
    (tuples, minus)
}

/// Drops the trailing `k`: the bijection from the plus block of degree `p`
/// onto the minus block of degree `p - 1`.
pub fn psi(a: &IndexTuple, k: usize) -> Result<IndexTuple> {
    if a.last() != Some(k) || k == 0 {
        return Err(Error::NotInPlusBlock(a.to_string(), k));
    }
    delete_coordinate(a, a.len())
}

/// Reinterprets a tuple of rank `k - 1` as a minus-block tuple of rank `k`.
pub fn phi(a: &IndexTuple, k: usize) -> Result<IndexTuple> {
    match a.0.iter().find(|&&e| e >= k) {
        Some(&e) => Err(Error::EntryOutsideRank(a.to_string(), e, k.saturating_sub(1))),
        None => Ok(a.clone()),
    }
}

/// `binomial(n, r)`, zero when `r > n`.
pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(v: &[usize]) -> IndexTuple {
        IndexTuple(v.to_vec())
    }

    fn shown(v: &[IndexTuple]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            shown(enumerate_tuples(2, 4).tuples()),
            ["(3,4)", "(2,4)", "(1,4)", "(2,3)", "(1,3)", "(1,2)"]
        );
        assert_eq!(shown(enumerate_tuples(0, 3).tuples()), ["*"]);
        assert_eq!(
            shown(enumerate_tuples(1, 4).tuples()),
            ["(4)", "(3)", "(2)", "(1)"]
        );
        assert!(enumerate_tuples(3, 2).is_empty());
        assert_eq!(shown(enumerate_tuples(0, 0).tuples()), ["*"]);
        assert_eq!(
            shown(enumerate_tuples(3, 4).tuples()),
            ["(2,3,4)", "(1,3,4)", "(1,2,4)", "(1,2,3)"]
        );
    }

    #[test]
    fn position_lookup() {
        let order = enumerate_tuples(2, 4);
        assert_eq!(order.position(&t(&[1, 3])), Some(4));
        assert_eq!(order.position(&t(&[1, 2, 3])), None);
    }

    #[test]
    fn tuple_construction_checks_invariants() {
        assert!(IndexTuple::new(vec![1, 3, 4], 4).is_ok());
        assert!(IndexTuple::new(vec![3, 1], 4).is_err());
        assert!(IndexTuple::new(vec![2, 2], 4).is_err());
        assert!(IndexTuple::new(vec![5], 4).is_err());
        assert!(IndexTuple::new(vec![0], 4).is_err());
        assert!(IndexTuple::new(vec![], 0).is_ok());
    }

    #[test]
    fn delete_examples() {
        assert_eq!(delete_coordinate(&t(&[1, 3, 4]), 2).unwrap(), t(&[1, 4]));
        assert_eq!(delete_coordinate(&t(&[2, 3, 4]), 3).unwrap(), t(&[2, 3]));
        assert_eq!(delete_coordinate(&t(&[1]), 1).unwrap(), IndexTuple::empty());
        assert!(matches!(
            delete_coordinate(&t(&[1, 2]), 3),
            Err(Error::PositionOutOfRange { index: 3, len: 2 })
        ));
        assert!(delete_coordinate(&t(&[1, 2]), 0).is_err());
    }

    #[test]
    fn partition_examples() {
        let (plus, minus) = partition_plus_minus(3, 4);
        assert_eq!(shown(&plus), ["(2,3,4)", "(1,3,4)", "(1,2,4)"]);
        assert_eq!(shown(&minus), ["(1,2,3)"]);

        let (plus, minus) = partition_plus_minus(1, 1);
        assert_eq!(shown(&plus), ["(1)"]);
        assert!(minus.is_empty());

        let (plus, minus) = partition_plus_minus(2, 4);
        assert_eq!(shown(&plus), ["(3,4)", "(2,4)", "(1,4)"]);
        assert_eq!(shown(&minus), ["(2,3)", "(1,3)", "(1,2)"]);

        let (plus, minus) = partition_plus_minus(0, 2);
        assert!(plus.is_empty());
        assert_eq!(shown(&minus), ["*"]);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&t(&[2, 3, 4]), 4).unwrap(), t(&[2, 3]));
        assert_eq!(psi(&t(&[4]), 4).unwrap(), IndexTuple::empty());
        assert_eq!(psi(&t(&[1, 4]), 4).unwrap(), t(&[1]));
        let (_, minus) = partition_plus_minus(1, 4);
        assert!(minus.contains(&t(&[1])));
        assert!(psi(&t(&[1, 3]), 4).is_err());
        assert!(psi(&IndexTuple::empty(), 4).is_err());
    }

    #[test]
    fn phi_examples() {
        let (_, minus) = partition_plus_minus(3, 4);
        assert_eq!(phi(&t(&[1, 2, 3]), 4).unwrap(), t(&[1, 2, 3]));
        assert!(minus.contains(&t(&[1, 2, 3])));
        assert_eq!(phi(&IndexTuple::empty(), 2).unwrap(), IndexTuple::empty());
        let image = phi(&t(&[2, 3]), 4).unwrap();
        assert!(partition_plus_minus(2, 4).1.contains(&image));
        assert!(phi(&t(&[2, 4]), 4).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(12, 6), 924);
    }

    proptest! {
        #[test]
        fn sizes_are_binomial(k in 0usize..=12, p in 0usize..=12) {
            prop_assume!(p <= k);
            let order = enumerate_tuples(p, k);
            prop_assert_eq!(order.len(), binomial(k, p));
            let mut sorted = order.tuples().to_vec();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), order.len());
            for a in order.tuples() {
                prop_assert!(IndexTuple::new(a.entries().to_vec(), k).is_ok());
            }
        }

        #[test]
        fn partition_is_disjoint_and_ordered(k in 1usize..=10, p in 0usize..=10) {
            prop_assume!(p <= k);
            let (plus, minus) = partition_plus_minus(p, k);
            prop_assert!(plus.iter().all(|a| a.last() == Some(k)));
            prop_assert!(minus.iter().all(|a| a.last() != Some(k)));
            let joined: Vec<_> = plus.iter().chain(&minus).cloned().collect();
            prop_assert_eq!(joined, enumerate_tuples(p, k).tuples().to_vec());
        }

        #[test]
        fn psi_and_phi_are_order_preserving_bijections(k in 1usize..=10, p in 1usize..=10) {
            prop_assume!(p <= k);
            let (plus, _) = partition_plus_minus(p, k);
            let (_, minus_below) = partition_plus_minus(p - 1, k);
            let images: Vec<_> = plus.iter().map(|a| psi(a, k).unwrap()).collect();
            prop_assert_eq!(&images, &minus_below);
            for b in &minus_below {
                prop_assert_eq!(psi(&b.appended(k), k).unwrap(), b.clone());
            }

            let (_, minus) = partition_plus_minus(p, k);
            let lifted: Vec<_> = enumerate_tuples(p, k - 1)
                .tuples()
                .iter()
                .map(|a| phi(a, k).unwrap())
                .collect();
            prop_assert_eq!(lifted, minus);
        }

        #[test]
        fn deleting_from_minus_stays_in_minus(k in 1usize..=9, p in 1usize..=9) {
            prop_assume!(p <= k);
            let (_, minus) = partition_plus_minus(p, k);
            let (_, minus_below) = partition_plus_minus(p - 1, k);
            for a in &minus {
                for i in 1..=p {
                    let d = delete_coordinate(a, i).unwrap();
                    prop_assert!(minus_below.contains(&d));
                }
            }
        }
    }
}
