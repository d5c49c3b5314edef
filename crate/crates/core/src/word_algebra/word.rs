use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::indices::Index;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    /// The letter swap `x <-> y`.
    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word over `{x, y}`. The empty word is the unit `1`.
///
/// Words are ordered by length first and then lexicographically with
/// `x < y`; polynomial display and iteration use this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    /// `z_k = x^{k-1} y`.
    pub fn z(k: u32) -> Self {
        assert!(k >= 1, "z_k needs k >= 1");
        let mut v = vec![Letter::X; k as usize - 1];
        v.push(Letter::Y);
        Self(v)
    }

    /// `y^n`.
    pub fn y_power(n: usize) -> Self {
        Self(vec![Letter::Y; n])
    }

    pub fn from_index(k: &Index) -> Self {
        Self::from_z_blocks(k.parts())
    }

    /// Concatenation `z_{k_1} ... z_{k_r}`; `k_i >= 1` is required.
    pub fn from_z_blocks(blocks: &[u32]) -> Self {
        let mut v = Vec::with_capacity(blocks.iter().sum::<u32>() as usize);
        for &k in blocks {
            assert!(k >= 1, "z_k needs k >= 1");
            v.extend(std::iter::repeat_n(Letter::X, k as usize - 1));
            v.push(Letter::Y);
        }
        Self(v)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Weight `|w|`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `y` letters.
    pub fn depth(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Y).count()
    }

    /// Nonempty and ending in `y`.
    pub fn ends_in_y(&self) -> bool {
        self.0.last() == Some(&Letter::Y)
    }

    /// Empty or ending in `y`: the words spanning the harmonic subalgebra.
    pub fn is_harmonic(&self) -> bool {
        self.is_empty() || self.ends_in_y()
    }

    /// Exponents `k_i` of the factorisation `z_{k_1} ... z_{k_r}`.
    /// Only meaningful for harmonic words; a trailing `x` run is dropped.
    pub fn z_blocks(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.depth());
        let mut run = 1;
        for &l in &self.0 {
            match l {
                Letter::X => run += 1,
                Letter::Y => {
                    out.push(run);
                    run = 1;
                }
            }
        }
        out
    }

    pub fn to_index(&self) -> Result<Index> {
        if !self.ends_in_y() {
            return Err(Error::NotAdmissible(self.to_string()));
        }
        Index::new(self.z_blocks())
    }

    /// Letterwise swap `x <-> y`.
    pub fn tau(&self) -> Word {
        Word(self.0.iter().map(|l| l.swapped()).collect())
    }

    /// For `w = w' y`, returns `tau(w') y`.
    pub fn hoffman_dual(&self) -> Result<Word> {
        if !self.ends_in_y() {
            return Err(Error::NotAdmissible(self.to_string()));
        }
        let mut v: Vec<Letter> = self.0[..self.0.len() - 1]
            .iter()
            .map(|l| l.swapped())
            .collect();
        v.push(Letter::Y);
        Ok(Word(v))
    }

    /// Reverses the order of the `z`-blocks: `z_{k_1} ... z_{k_r} -> z_{k_r} ... z_{k_1}`.
    pub fn reverse_blocks(&self) -> Result<Word> {
        if !self.ends_in_y() {
            return Err(Error::NotAdmissible(self.to_string()));
        }
        let mut blocks = self.z_blocks();
        blocks.reverse();
        Ok(Word::from_z_blocks(&blocks))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub(crate) fn prepend(&self, prefix: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(prefix.len() + self.len());
        v.extend_from_slice(prefix);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub(crate) fn suffix(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// Parses a string over `x` and `y`; `1` and the empty string both denote
/// the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(Word::empty());
        }
        t.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::ParseWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}
