//! Finite multiple zeta values: the word algebra behind their harmonic and
//! shuffle relations, fast evaluation of their components modulo primes,
//! and checkers that test identities among them.
//!
//! The crate is organised in four layers:
//!
//! * [`indices`]: compositions, Hoffman duals and exponent-vector enumerators.
//! * [`word_algebra`]: words over `{x, y}`, integer polynomials, the shuffle
//!   and harmonic products, truncated `u`-series and the automorphism
//!   `Delta_u`.
//! * [`modp`]: primes, residues, nested harmonic sums modulo `p`,
//!   Bernoulli numbers modulo `p`, and prime-window slices.
//! * [`verify`]: one checker per identity, each producing a [`CheckReport`].

pub mod error;
pub mod indices;
pub mod modp;
pub mod verify;
pub mod word_algebra;

pub use error::{Error, Result};
pub use indices::{Composition0, Index};
pub use modp::{AdeleSlice, Prime, PrimeWindow, Residue};
pub use verify::CheckReport;
pub use word_algebra::{NCPolynomial, USeries, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/indices.md")]
    mod indices {}
    #[doc = include_str!("../../../book/src/word-algebra.md")]
    mod word_algebra {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/modp.md")]
    mod modp {}
    #[doc = include_str!("../../../book/src/bernoulli.md")]
    mod bernoulli {}
    #[doc = include_str!("../../../book/src/verify.md")]
    mod verify {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
