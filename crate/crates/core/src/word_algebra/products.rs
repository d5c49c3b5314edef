//! Shuffle and harmonic (stuffle) products.
//!
//! Both products are defined by a recursion on the first letter (resp. the
//! first `z`-block) of each factor. For a pair of words the recursion only
//! ever visits pairs of suffixes, so it is evaluated bottom-up over the
//! `(suffix of a, suffix of b)` grid, which memoizes every subcall once.

use num_bigint::BigInt;

use super::poly::NCPolynomial;
use super::word::Word;
use crate::error::Result;

/// Shuffle product of two words.
pub fn shuffle_words(a: &Word, b: &Word) -> NCPolynomial {
    let (la, lb) = (a.letters(), b.letters());
    let (m, n) = (la.len(), lb.len());
    // row i holds S(i, j) = a[i..] sh b[j..] for j = 0..=n
    let mut below: Vec<NCPolynomial> = (0..=n).map(|j| b.suffix(j).into()).collect();
    for i in (0..m).rev() {
        let mut row = vec![NCPolynomial::zero(); n + 1];
        row[n] = a.suffix(i).into();
        for j in (0..n).rev() {
            let mut p = below[j].prepend(&la[i..=i]);
            p += &row[j + 1].prepend(&lb[j..=j]);
            row[j] = p;
        }
        below = row;
    }
    below.swap_remove(0)
}

/// Harmonic product of two words, both empty or ending in `y`.
pub fn harmonic_words(a: &Word, b: &Word) -> Result<NCPolynomial> {
    for w in [a, b] {
        if !w.is_harmonic() {
            return Err(crate::Error::NotAdmissible(w.to_string()));
        }
    }
    let (ka, kb) = (a.z_blocks(), b.z_blocks());
    let (m, n) = (ka.len(), kb.len());
    let z = |k: u32| Word::z(k).letters().to_vec();
    let mut below: Vec<NCPolynomial> = (0..=n)
        .map(|j| Word::from_z_blocks(&kb[j..]).into())
        .collect();
    for i in (0..m).rev() {
        let mut row = vec![NCPolynomial::zero(); n + 1];
        row[n] = Word::from_z_blocks(&ka[i..]).into();
        let za = z(ka[i]);
        for j in (0..n).rev() {
            // z_a (w1 * z_b w2) + z_b (z_a w1 * w2) + z_{a+b} (w1 * w2)
            let mut p = below[j].prepend(&za);
            p += &row[j + 1].prepend(&z(kb[j]));
            p += &below[j + 1].prepend(&z(ka[i] + kb[j]));
            row[j] = p;
        }
        below = row;
    }
    Ok(below.swap_remove(0))
}

fn bilinear(
    a: &NCPolynomial,
    b: &NCPolynomial,
    mut words: impl FnMut(&Word, &Word) -> Result<NCPolynomial>,
) -> Result<NCPolynomial> {
    let mut out = NCPolynomial::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let c: BigInt = ca * cb;
            out += &words(wa, wb)?.scale(&c);
        }
    }
    Ok(out)
}

/// Shuffle product, extended bilinearly.
pub fn shuffle(a: &NCPolynomial, b: &NCPolynomial) -> NCPolynomial {
    bilinear(a, b, |x, y| Ok(shuffle_words(x, y))).expect("shuffle is total")
}

/// Harmonic product, extended bilinearly. Both operands must be supported
/// on words that are empty or end in `y`.
pub fn harmonic(a: &NCPolynomial, b: &NCPolynomial) -> Result<NCPolynomial> {
    a.ensure_harmonic()?;
    b.ensure_harmonic()?;
    bilinear(a, b, harmonic_words)
}

/// `y^n` as a polynomial, i.e. `z_1^n`.
pub fn y_power(n: usize) -> NCPolynomial {
    Word::y_power(n).into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::poly::total_multiplicity;
    use crate::word_algebra::word::Letter;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(terms: &[(&str, i64)]) -> NCPolynomial {
        NCPolynomial::from_terms(terms.iter().map(|&(s, c)| (w(s), c)))
    }

    // Literal transcription of the recursive definitions, used as an
    // independent oracle for the grid evaluation.
    fn shuffle_rec(a: &[Letter], b: &[Letter]) -> Vec<Vec<Letter>> {
        if a.is_empty() {
            return vec![b.to_vec()];
        }
        if b.is_empty() {
            return vec![a.to_vec()];
        }
        let mut out = Vec::new();
        for mut t in shuffle_rec(&a[1..], b) {
            t.insert(0, a[0]);
            out.push(t);
        }
        for mut t in shuffle_rec(a, &b[1..]) {
            t.insert(0, b[0]);
            out.push(t);
        }
        out
    }

    fn stuffle_rec(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
        if a.is_empty() {
            return vec![b.to_vec()];
        }
        if b.is_empty() {
            return vec![a.to_vec()];
        }
        let mut out = Vec::new();
        for mut t in stuffle_rec(&a[1..], b) {
            t.insert(0, a[0]);
            out.push(t);
        }
        for mut t in stuffle_rec(a, &b[1..]) {
            t.insert(0, b[0]);
            out.push(t);
        }
        for mut t in stuffle_rec(&a[1..], &b[1..]) {
            t.insert(0, a[0] + b[0]);
            out.push(t);
        }
        out
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(
            harmonic_words(&w("y"), &w("xy")).unwrap(),
            p(&[("yxy", 1), ("xyy", 1), ("xxy", 1)])
        );
        assert_eq!(
            harmonic_words(&w("y"), &w("y")).unwrap(),
            p(&[("yy", 2), ("xy", 1)])
        );
        for s in ["xyy", "y", "xxyxy"] {
            assert_eq!(harmonic_words(&w(s), &Word::empty()).unwrap(), p(&[(s, 1)]));
            assert_eq!(harmonic_words(&Word::empty(), &w(s)).unwrap(), p(&[(s, 1)]));
        }
        assert!(harmonic_words(&w("yx"), &w("y")).is_err());
        assert!(harmonic(&p(&[("y", 1)]), &p(&[("x", 1)])).is_err());
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle_words(&w("x"), &w("y")), p(&[("xy", 1), ("yx", 1)]));
        assert_eq!(
            shuffle_words(&w("xy"), &w("y")),
            p(&[("xyy", 2), ("yxy", 1)])
        );
        assert_eq!(shuffle_words(&Word::empty(), &w("xyx")), p(&[("xyx", 1)]));
        assert_eq!(
            shuffle_words(&Word::empty(), &Word::empty()),
            NCPolynomial::one()
        );
    }

    fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop_oneof![Just(Letter::X), Just(Letter::Y)], 0..=max_len)
            .prop_map(Word::from_letters)
    }

    fn harmonic_word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
        word_strategy(max_len.saturating_sub(1)).prop_flat_map(|w| {
            prop_oneof![
                Just(Word::empty()),
                Just(w.concat(&Word::letter(Letter::Y))),
            ]
        })
    }

    proptest! {
        #[test]
        fn shuffle_matches_recursive_definition(a in word_strategy(5), b in word_strategy(5)) {
            let expect = NCPolynomial::from_terms(
                shuffle_rec(a.letters(), b.letters()).into_iter().map(|t| (Word::from_letters(t), 1)),
            );
            prop_assert_eq!(shuffle_words(&a, &b), expect);
        }

        #[test]
        fn harmonic_matches_recursive_definition(a in harmonic_word_strategy(6), b in harmonic_word_strategy(6)) {
            let expect = NCPolynomial::from_terms(
                stuffle_rec(&a.z_blocks(), &b.z_blocks()).into_iter().map(|t| (Word::from_z_blocks(&t), 1)),
            );
            prop_assert_eq!(harmonic_words(&a, &b).unwrap(), expect);
        }

        #[test]
        fn shuffle_is_homogeneous_with_binomial_count(a in word_strategy(6), b in word_strategy(6)) {
            let s = shuffle_words(&a, &b);
            prop_assert!(s.iter().all(|(t, _)| t.len() == a.len() + b.len()));
            let n = (a.len() + b.len()) as u64;
            let k = a.len() as u64;
            let binom = (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
            prop_assert_eq!(total_multiplicity(&s), BigInt::from(binom));
        }

        #[test]
        fn harmonic_weight_and_depth(a in harmonic_word_strategy(6), b in harmonic_word_strategy(6)) {
            let h = harmonic_words(&a, &b).unwrap();
            prop_assert!(h.is_harmonic());
            prop_assert!(h.iter().all(|(t, _)| t.len() == a.len() + b.len()
                && t.depth() <= a.depth() + b.depth()));
        }
    }
}
