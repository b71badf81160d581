//! Pairwise edge probability kernels.
//!
//! The closed forms in [`kernel`] are the hot path; [`oracle`] recomputes the
//! combinatorial probability exactly from binomial configuration counts and
//! [`graphical`] guards integer inputs.

pub mod graphical;
pub mod kernel;
pub mod oracle;

pub use graphical::is_graphical;
pub use kernel::{
    chung_lu_p, combinatorial_p, combinatorial_terms, CombinatorialTerms, EdgeProbabilityModel, ModelKind,
    RangeMode,
};
pub use oracle::{binomial, oracle_p, BinomialCounts};
