//! Indices (compositions of positive integers) and the enumerators that
//! drive every sum over exponent vectors.
//!
//! An [`Index`] `(k_1, ..., k_r)` names the nested harmonic sum
//! `sum_{m_1 > ... > m_r > 0} m_1^{-k_1} ... m_r^{-k_r}`. Its weight is the
//! sum of the parts and its depth the number of parts.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word_algebra::Word;

/// A nonempty tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyIndex);
        }
        if let Some(&bad) = parts.iter().find(|&&k| k == 0) {
            return Err(Error::NonPositivePart(bad));
        }
        Ok(Self(parts))
    }

    /// `(a, a, ..., a)` with `r` parts.
    pub fn repeated(a: u32, r: usize) -> Result<Self> {
        Self::new(vec![a; r])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Hoffman's dual, computed through the word transform `T`.
    pub fn hoffman_dual(&self) -> Index {
        Word::from_index(self)
            .hoffman_dual()
            .and_then(|w| w.to_index())
            .expect("word of an index ends in y")
    }

    /// Componentwise sum with an exponent vector of the same length.
    pub fn add(&self, e: &Composition0) -> Result<Index> {
        if e.len() != self.depth() {
            return Err(Error::LengthMismatch {
                expected: self.depth(),
                found: e.len(),
            });
        }
        Ok(Index(
            self.0.iter().zip(e.parts()).map(|(k, e)| k + e).collect(),
        ))
    }

    /// Componentwise sum with a 0/1 vector of the same length.
    pub fn add_binary(&self, lambda: &BinaryVector) -> Result<Index> {
        self.add(&lambda.to_composition())
    }

    /// `(k_1 - 1, ..., k_r - 1)`, a composition that may contain zeros.
    pub fn decremented(&self) -> Composition0 {
        Composition0(self.0.iter().map(|k| k - 1).collect())
    }

    /// Reversed order of parts.
    pub fn reversed(&self) -> Index {
        Index(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseIndex(s.to_string()))?;
        Index::new(parts).map_err(|_| Error::ParseIndex(s.to_string()))
    }
}

impl TryFrom<&[u32]> for Index {
    type Error = Error;

    fn try_from(parts: &[u32]) -> Result<Self> {
        Index::new(parts.to_vec())
    }
}

/// A tuple of nonnegative integers. Used for exponent vectors and for the
/// shifted argument lists of the word generators; empty and all-zero
/// tuples are legal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition0(Vec<u32>);

impl Composition0 {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero entries.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e != 0).count()
    }
}

impl fmt::Display for Composition0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_parts(f, &self.0)?;
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Composition0 {
    fn from(parts: Vec<u32>) -> Self {
        Self(parts)
    }
}

/// A 0/1 vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector(Vec<bool>);

impl BinaryVector {
    pub fn new(entries: Vec<bool>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn to_composition(&self) -> Composition0 {
        Composition0(self.0.iter().map(|&b| u32::from(b)).collect())
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, k) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{k}")?;
    }
    Ok(())
}

/// Iterator over all `e` in `Z_{>=0}^r` with `e_1 + ... + e_r = n`.
///
/// Order is lexicographically decreasing: `(n, 0, ..., 0)` first and
/// `(0, ..., 0, n)` last.
#[derive(Debug, Clone)]
pub struct WeakCompositions {
    current: Option<Vec<u32>>,
}

impl Iterator for WeakCompositions {
    type Item = Composition0;

    fn next(&mut self) -> Option<Composition0> {
        let out = self.current.take()?;
        let mut e = out.clone();
        let r = e.len();
        if r > 0 {
            let tail = e[r - 1];
            e[r - 1] = 0;
            if let Some(i) = (0..r - 1).rev().find(|&i| e[i] > 0) {
                e[i] -= 1;
                e[i + 1] = tail + 1;
                self.current = Some(e);
            }
        }
        Some(Composition0(out))
    }
}

/// All weak compositions of `n` into `r` parts. For `r = 0` the stream is
/// the single empty composition when `n = 0` and empty otherwise.
pub fn weak_compositions(n: u32, r: usize) -> WeakCompositions {
    let current = if r == 0 {
        (n == 0).then(Vec::new)
    } else {
        let mut e = vec![0; r];
        e[0] = n;
        Some(e)
    };
    WeakCompositions { current }
}

/// Iterator over all 0/1 vectors of length `r` with exactly `i` ones, in
/// lexicographically decreasing order.
#[derive(Debug, Clone)]
pub struct BinaryVectors {
    len: usize,
    positions: Option<Vec<usize>>,
}

impl Iterator for BinaryVectors {
    type Item = BinaryVector;

    fn next(&mut self) -> Option<BinaryVector> {
        let pos = self.positions.take()?;
        let mut entries = vec![false; self.len];
        for &p in &pos {
            entries[p] = true;
        }
        // advance to the next combination of positions
        let i = pos.len();
        let mut next = pos;
        if let Some(j) = (0..i).rev().find(|&j| next[j] < self.len - i + j) {
            next[j] += 1;
            for t in j + 1..i {
                next[t] = next[t - 1] + 1;
            }
            self.positions = Some(next);
        }
        Some(BinaryVector(entries))
    }
}

pub fn binary_vectors(r: usize, i: usize) -> Result<BinaryVectors> {
    if i > r {
        return Err(Error::TooManyOnes { len: r, ones: i });
    }
    Ok(BinaryVectors {
        len: r,
        positions: Some((0..i).collect()),
    })
}

/// Weak compositions of `n` into `r` parts that are at least 1 at every
/// position in `support` (0-based). Infeasible supports yield nothing.
pub fn constrained_compositions(
    n: u32,
    r: usize,
    support: &[usize],
) -> Result<impl Iterator<Item = Composition0>> {
    let mut floor = vec![0u32; r];
    for &mu in support {
        if mu >= r {
            return Err(Error::SupportOutOfRange {
                position: mu,
                len: r,
            });
        }
        floor[mu] = 1;
    }
    let forced: u32 = floor.iter().sum();
    let free = n.checked_sub(forced);
    let stream = free
        .map(|m| weak_compositions(m, r))
        .into_iter()
        .flatten()
        .map(move |e| Composition0(e.parts().iter().zip(&floor).map(|(a, b)| a + b).collect()));
    Ok(stream)
}

/// All indices of weight exactly `w`, i.e. the compositions of `w`.
pub fn indices_of_weight(w: u32) -> impl Iterator<Item = Index> {
    let slots = w.saturating_sub(1) as usize;
    (0u64..(1u64 << slots))
        .filter(move |_| w > 0)
        .map(move |mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for b in 0..slots {
                if mask >> b & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Index(parts)
        })
}

/// All indices with `1 <= weight <= max_weight`, by increasing weight.
pub fn indices_up_to_weight(max_weight: u32) -> impl Iterator<Item = Index> {
    (1..=max_weight).flat_map(indices_of_weight)
}
