//! Exact linear algebra over the integers and over fields.

pub mod field_rank;
pub mod int;
pub mod matrix;
pub mod presented;
pub mod ring;
pub mod snf;

pub use field_rank::{rank_mod_p, rank_over_rationals};
pub use int::Int;
pub use matrix::{grid, IntMatrix, Matrix, MatrixOps};
pub use presented::{
    direct_sum, homology_of_pair, GroupMorphism, GroupSummary, PresentedGroup, Subquotient,
};
pub use ring::{Coefficients, Integers, PrimeField, Rationals, Ring};
pub use snf::{invariant_factors, smith_normal_form, SmithDecomposition};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("vector is not in the subgroup being lifted into")]
    NotInSubgroup,
    #[error("dimension mismatch: {0}")]
    Shape(String),
}
