//! Exact symbolic calculus for torus-equivariant multiplicities of nilpotent
//! orbital varieties and the Weyl group actions attached to them.
//!
//! Everything is computed over the rationals with arbitrary precision; there
//! is no floating point anywhere in the crate.

pub mod groebner;
pub mod lattice;
pub mod localization;
pub mod orbital;
pub mod poly;
pub mod qmat;
pub mod report;
pub mod schurweyl;
pub mod symgrp;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("context mismatch: {0}")]
    Context(String),
    #[error("singular Euler class: zero weight at a degenerate fixed point")]
    SingularEulerClass,
    #[error("coefficient is not h-regular: denominator vanishes at h = 0")]
    NotHRegular,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("composition error: {0}")]
    Composition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("span not stable: {0}")]
    NotInSpan(String),
    #[error("certification failure: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
