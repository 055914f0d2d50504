//! Spectra, H-numbers and Tristram–Levine signature profiles of links given by
//! Seifert matrices, together with splice diagrams, the spectrum at infinity of a
//! polynomial and checks of spectral semicontinuity inequalities.
//!
//! All arithmetic is exact. The entry points are [`seifert::analyze`],
//! [`splice::certify`], [`infinity::spectrum_at_infinity`] and the checkers in
//! [`semicont`].

pub mod cli;
pub mod infinity;
pub mod report;
pub mod seifert;
pub mod semicont;
pub mod splice;

pub use linkspec_algebra as algebra;
use linkspec_algebra::AlgebraError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("unresolved: {0}")]
    Unresolved(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
