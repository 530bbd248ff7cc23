//! Multi-criteria decision analysis for customer prioritization.
//!
//! The crate ranks a set of alternatives scored on several criteria by
//! combining four building blocks:
//!
//! - objective criterion weights from Shannon entropy ([`entropy`]),
//! - simple additive weighting scores ([`saw`]),
//! - closeness to the ideal solution ([`topsis`]),
//! - pairwise-majority consensus over several rankings ([`copeland`]).
//!
//! Around the ranking core sit the customer-value models ([`value`]:
//! lifetime value, perceived value, questionnaire scoring), the
//! four-quadrant profile assignment ([`segment`]), and an embedded
//! 47-customer case study ([`casestudy`]) that the reproduction suite and
//! the `reproduce-paper` CLI command replay end to end.
//!
//! All types are immutable after construction and every operation is a
//! pure function of its inputs, so the whole API is safe to use from
//! multiple threads without synchronization.

pub mod casestudy;
pub mod copeland;
pub mod entropy;
pub mod error;
pub mod matrix;
pub mod normalize;
pub mod rank;
pub mod saw;
pub mod segment;
pub mod topsis;
pub mod value;

pub use error::{Error, Result};
pub use matrix::{apply_weights, CriterionSpec, DecisionMatrix, Direction, WeightVector, WeightedMatrix};
pub use normalize::{minmax_normalize, vector_normalize, NormScheme, NormalizedMatrix};
pub use rank::{rank_from_scores, RankEntry, Ranking, DEFAULT_TIE_TOLERANCE};
