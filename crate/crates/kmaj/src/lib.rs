//! The k-major index on words and standard Young tableaux.
//!
//! For a word `w` and a positive integer `k`, the k-descent set collects the
//! pairs `(i, i+k)` with `w_i > w_{i+k}`, the k-inversion set collects the
//! inverted pairs at distance less than `k`, and the k-major index is
//! `|Inv_k| + sum of the first coordinates of Des_k`. At `k = 1` this is the
//! classical major index; once `k` reaches the word length it is the
//! inversion number, so the statistic interpolates between the two.
//!
//! The crate provides:
//!
//! - the word model (with spacer slots incomparable to every letter) and its
//!   statistics in [`word`];
//! - involutive adjacent-letter swaps and the bijections built from them
//!   that carry `maj_{k-1}` to `maj_k`, plus the classical second
//!   fundamental transformation as an independent reference, in
//!   [`bijections`];
//! - standard Young tableaux, the attack relation, tableau `maj_k` for
//!   `k <= 3`, the analogous tableau bijections, enumeration and
//!   Robinson-Schensted insertion in [`tableau`];
//! - elementary involutions on permutations and the equivalence classes
//!   they generate in [`equivalence`];
//! - exact q-polynomial distributions with closed-form oracles in
//!   [`distribution`];
//! - exhaustive desk-scale verification suites in [`verify`].

pub mod bijections;
pub mod distribution;
pub mod equivalence;
mod pool;
pub mod tableau;
pub mod verify;
pub mod word;

pub use distribution::{QPolynomial, Statistic};
pub use equivalence::EquivClass;
pub use tableau::{Cell, Partition, StandardTableau};
pub use word::{splits, IndexPairSet, Letter, Multiset, Word};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("infeasible word set: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
