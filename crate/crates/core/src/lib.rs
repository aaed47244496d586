//! Explicit presentations of the centre of restricted rational Cherednik
//! algebras for `S_n` and `S_n ≀ ℤ/ℓℤ`, computed from partition combinatorics
//! with exact rational arithmetic.

pub mod abacus;
pub mod centre;
pub mod cli;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod presentation;
pub mod wronski;

pub use error::{Error, Result};
