//! Exact arithmetic for link invariants: rationals, polynomials over ℚ with
//! cyclotomic and irreducible factorisation, real algebraic numbers, simple
//! number fields with a unit-circle embedding, and dense exact matrices with
//! rank profiles and hermitian inertia.

pub mod algebraic;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use algebraic::RealAlgebraic;
pub use field::{FieldElem, NumberField};
pub use matrix::{jordan_block_counts, Inertia, Matrix, QMatrix, Scalar};
pub use poly::{cyclotomic, cyclotomic_factor, factor, Poly};
pub use rational::{format_rational, int, parse_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("matrix is singular")]
    Singular,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("field error: {0}")]
    Field(String),
}
