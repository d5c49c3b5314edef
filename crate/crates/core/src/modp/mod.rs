//! Arithmetic modulo primes: prime windows, residues, nested harmonic sums,
//! Bernoulli numbers, and slices of the ring of residue sequences.

mod adele;
mod bernoulli;
mod prime;
mod residue;
mod zeta;

pub use adele::{adele_zeta, AdeleSlice};
pub use bernoulli::{
    bernoulli_mod_p, bernoulli_quotient, bernoulli_table, bernoulli_table_uncached,
};
pub use prime::{is_prime, primes_in, Prime, PrimeWindow, MAX_PRIME, MAX_WINDOW};
pub use residue::{inv_mod, inverse_table, pow_mod, Residue};
pub use zeta::{
    reduce_bigint, zeta_mod_p, zeta_mod_p_nested, zeta_mod_p_reference, zeta_poly_mod_p,
    zeta_poly_mod_p_with, NESTED_BUDGET,
};
