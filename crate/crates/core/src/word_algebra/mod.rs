//! Exact noncommutative polynomials over the alphabet `{x, y}`.
//!
//! Coefficients are arbitrary-precision integers. The harmonic product acts
//! on the span of words that are empty or end in `y`; the shuffle product
//! and concatenation act on all words.

mod generators;
mod poly;
mod products;
mod series;
mod word;

pub use generators::{
    delta_u_coefficient, insertion_sum, shifted_insertion_sum, stuffle_expansion_sides,
};
pub use poly::{total_multiplicity, NCPolynomial};
pub use products::{harmonic, harmonic_words, shuffle, shuffle_words, y_power};
pub use series::{
    delta_u, delta_u_letter, delta_u_poly, geometric_yu, harmonic_shuffle_sides, USeries,
};
pub use word::{Letter, Word};

/// All words of length exactly `n`, in word order.
pub fn words_of_length(n: usize) -> impl Iterator<Item = Word> {
    (0u64..1 << n).map(move |bits| {
        Word::from_letters(
            (0..n)
                .map(|i| {
                    if bits >> (n - 1 - i) & 1 == 1 {
                        Letter::Y
                    } else {
                        Letter::X
                    }
                })
                .collect(),
        )
    })
}

/// Words that are empty or end in `y`, with length at most `max_len`.
pub fn harmonic_words_up_to(max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len)
        .flat_map(words_of_length)
        .filter(Word::is_harmonic)
}
