//! Evans chain complexes of higher-rank graphs and the K-theory they
//! determine.
//!
//! A row-finite, source-free k-graph is given by `k` commuting nonnegative
//! adjacency matrices. From them this crate builds the Evans chain complex,
//! computes its integer homology by Smith normal form, lays it out as the E2
//! page of the Kasparov-Schochet spectral sequence and reports what can be
//! concluded about `K_0` and `K_1` of the graph algebra.
//!
//! All arithmetic is exact. The linear algebra is generic over
//! [`Scalar`]; the aliases below fix it to arbitrary-precision integers.
//!
//! ```
//! use kgraph_ktheory::{corpus, k_theory_verdict, VerdictKind};
//!
//! let spec = corpus::monoid_spec(&[3, 5, 7]).unwrap();
//! let verdict = k_theory_verdict(&spec).unwrap();
//! assert_eq!(verdict.kind, VerdictKind::ShortExactSequence);
//! assert_eq!(verdict.k1.unwrap().to_string(), "Z2^2");
//! ```

pub mod complex;
pub mod corpus;
pub mod document;
pub mod error;
pub mod homology;
pub mod index;
pub mod kgraph;
pub mod matrix;
pub mod render;
pub mod report;
pub mod scalar;
mod serde_int;
pub mod snf;
pub mod spectral;

pub use complex::{
    build_complex, build_differential_direct, build_differential_recursive, evans_complex,
    tensor_monoid_complex, tensor_two, ChainComplex, TwoTermComplex,
};
pub use document::{DocumentError, GraphDocument};
pub use error::{Error, Result};
pub use homology::{homology, HomologyGroup};
pub use index::{
    delete_coordinate, enumerate_tuples, partition_plus_minus, phi, psi, CanonicalOrder,
    IndexTuple,
};
pub use kgraph::{CoAdjacency, KGraphSpec, ValidationReport, Violation};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use snf::{smith_normal_form, SnfResult};
pub use spectral::{
    e2_page, k_theory_verdict, kunneth_check, monoid_closed_form, CheckReport, E2Page,
    KTheoryVerdict, Rule, ShortExact, VerdictKind,
};

pub use num_bigint::BigInt;

pub type IntMatrix = Matrix<BigInt>;
pub type KGraph = KGraphSpec<BigInt>;
pub type EvansComplex = ChainComplex<BigInt>;
pub type Snf = SnfResult<BigInt>;
