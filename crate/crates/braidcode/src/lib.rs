//! Information coding with pure braid groups.
//!
//! Symbol strings over an N-character alphabet are carried by words in the
//! braid group on N+1 strands: each symbol maps to a pure generator linking
//! its own strand to a shared distinguished strand, decoding is verified by
//! annihilation against the inverse word, and the word problem is decided by
//! Dehornoy handle reduction with an independent Burau-matrix cross-check.
//! Around that core sit a suffix-based distance on symbol strings and a
//! cost-per-bit scan over alphabet sizes.
//!
//! Modules:
//! - [`braid`] — words in the Artin generators and their syntactic algebra;
//! - [`word_problem`] — triviality and equivalence decisions, plus the
//!   Burau/Laurent oracle;
//! - [`codec`] — alphabet schemes, encoding, annihilation checks, and a
//!   brute-force decoder;
//! - [`metric`] — the common-suffix distance, axiom verification, and
//!   distance distributions;
//! - [`efficiency`] — alphabet-size economy under power-law cost models;
//! - [`cli`] — line formats and the command-line dispatch.

pub mod braid;
pub mod cli;
pub mod codec;
pub mod efficiency;
mod error;
pub mod metric;
pub mod word_problem;

pub use braid::{BraidWord, Letter, Permutation, PureGeneratorId, Sign};
pub use codec::{CodeScheme, InjectivityReport, SymbolString};
pub use efficiency::{CostModel, EfficiencyCurve};
pub use error::{Error, Result};
pub use metric::{AxiomReport, DistanceReport};
pub use word_problem::{
    burau, burau_verdict, equivalent, handle_reduce, handle_reduce_with_limit, is_trivial,
    BurauVerdict, LaurentMatrix, LaurentPoly,
};
