//! Random simple graphs from expected degree sequences.
//!
//! Each pair of nodes is joined independently with a probability computed
//! from the two expected degrees. Two kernels are provided: the Chung-Lu
//! approximation `min(1, w_i w_j / sum w)` and a combinatorial probability
//! obtained by counting edge configurations, which stays accurate for dense
//! networks and high-degree nodes. Graphs are drawn in `O(n + m)` by the
//! weight-sorted skipping sampler.
//!
//! The numeric core is generic over the scalar type ([`Scalar`]); the
//! aliases below fix the common choices.

pub mod datasets;
pub mod edge_prob;
pub mod error;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod rng;
pub mod sampler;
pub mod scalar;

pub use edge_prob::{
    chung_lu_p, combinatorial_p, combinatorial_terms, is_graphical, oracle_p, BinomialCounts, CombinatorialTerms,
    EdgeProbabilityModel, ModelKind, RangeMode,
};
pub use error::{Error, Result};
pub use graph::{degree_sequence, read_edge_list, write_edge_list, Graph, WeightSeq};
pub use num_rational::BigRational;
pub use sampler::{
    sample, sample_naive, sample_skipping, sample_skipping_with, Algorithm, SampleDiagnostics, SamplerConfig,
};
pub use scalar::{FloatScalar, Scalar};

/// Expected degrees in double precision.
pub type Weights = WeightSeq<f64>;
/// Expected degrees in single precision.
pub type Weights32 = WeightSeq<f32>;
pub type Model = EdgeProbabilityModel<f64>;
/// Combinatorial terms in double precision.
pub type Terms = CombinatorialTerms<f64>;
/// Combinatorial terms evaluated exactly.
pub type ExactTerms = CombinatorialTerms<BigRational>;
pub type ExactModel = EdgeProbabilityModel<BigRational>;
