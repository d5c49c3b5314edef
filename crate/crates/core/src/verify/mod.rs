//! Checkers for the identities among finite multiple zeta values and the
//! word-algebra identities behind them.
//!
//! Symbolic checks compare exact polynomials. Numeric checks compare
//! residues prime by prime over a [`PrimeWindow`](crate::modp::PrimeWindow)
//! and only count failures at primes at or above the report's floor.

mod checks;
mod report;
pub mod suite;

pub use checks::*;
pub use report::{CheckReport, Mode, PrimeResult, Results, Summary, SymbolicResult};
