//! Exact computation for r-wise t-intersecting uniform set families.
//!
//! Provides the extremal constructions, (r+1,t)-triangle counting, t-cover
//! machinery, the auxiliary cover hypergraph, closed-form bound evaluation
//! in exact arithmetic, and exhaustive/stochastic searches over maximal
//! families.

pub mod constructions;
pub mod covers;
pub mod family;
pub mod fileio;
pub mod formulas;
pub mod hypergraph;
pub mod kset;
pub mod search;
pub mod verify;

pub use family::{Family, Params};
pub use kset::KSet;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    /// Invalid parameters or malformed input.
    #[error("invalid parameter: {0}")]
    Param(String),
    /// A precondition on the family failed (e.g. not r-wise t-intersecting).
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A structural claim that must hold by theory failed on concrete data.
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    /// Input exceeds a feasibility gate (exact canonicalization, enumeration).
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
