//! Exact power-series tools: rational generating functions, verification
//! against count data, recurrence guessing, and the invert transform.

mod invert;
mod poly;
mod rational;
mod recurrence;
pub mod spec_file;

pub use invert::{invert_transform, invert_transform_terms, PartitionTerm};
pub use poly::Polynomial;
pub use rational::{
    series_expand, verify_gf, verify_sum_rule, RationalGF, SeriesPrefix, VerificationReport,
    VerificationStatus,
};
pub use recurrence::{guess_recurrence, RecurrenceGuess};
