use rayon::prelude::*;

use super::prime::{Prime, PrimeWindow};
use super::residue::Residue;
use super::zeta::zeta_mod_p;
use crate::error::{Error, Result};
use crate::indices::Index;

/// One residue per prime of a window, standing in for an element of the
/// ring `prod_p Z/pZ` modulo finitely supported sequences.
///
/// Two slices are equal when they agree at every prime `>= floor`; the
/// residues below the floor are kept for reporting only.
#[derive(Debug, Clone)]
pub struct AdeleSlice {
    primes: Vec<Prime>,
    residues: Vec<Residue>,
    floor: u64,
}

impl AdeleSlice {
    pub fn new(residues: Vec<Residue>, floor: u64) -> Result<Self> {
        let mut residues = residues;
        residues.sort_by_key(|r| r.modulus());
        if residues
            .windows(2)
            .any(|w| w[0].modulus() == w[1].modulus())
        {
            return Err(Error::InvalidParameters("duplicate prime in slice".into()));
        }
        Ok(Self {
            primes: residues.iter().map(|r| r.modulus()).collect(),
            residues,
            floor,
        })
    }

    /// Evaluates `f` at every prime of the window in parallel.
    pub fn from_fn(
        window: &PrimeWindow,
        floor: u64,
        f: impl Fn(Prime) -> Residue + Sync,
    ) -> Result<Self> {
        let primes = window.primes();
        if primes.is_empty() {
            return Err(Error::InvalidWindow(format!("{window} contains no primes")));
        }
        let residues: Vec<Residue> = primes.par_iter().map(|&p| f(p)).collect();
        Ok(Self {
            primes,
            residues,
            floor,
        })
    }

    pub fn zero(window: &PrimeWindow, floor: u64) -> Result<Self> {
        Self::from_fn(window, floor, Residue::zero)
    }

    pub fn primes(&self) -> &[Prime] {
        &self.primes
    }

    pub fn residues(&self) -> &[Residue] {
        &self.residues
    }

    pub fn floor(&self) -> u64 {
        self.floor
    }

    pub fn with_floor(mut self, floor: u64) -> Self {
        self.floor = floor;
        self
    }

    pub fn get(&self, p: Prime) -> Option<Residue> {
        self.primes.binary_search(&p).ok().map(|i| self.residues[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Prime, Residue)> + '_ {
        self.primes
            .iter()
            .copied()
            .zip(self.residues.iter().copied())
    }

    /// Primes at or above the floor where the two slices differ. Both
    /// slices must cover the same primes; the larger floor applies.
    pub fn disagreements(&self, other: &Self) -> Result<Vec<Prime>> {
        if self.primes != other.primes {
            return Err(Error::InvalidParameters(
                "slices over different primes".into(),
            ));
        }
        let floor = self.floor.max(other.floor);
        Ok(self
            .iter()
            .zip(other.residues.iter())
            .filter(|((p, a), b)| p.get() >= floor && a != *b)
            .map(|((p, _), _)| p)
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.iter()
            .all(|(p, r)| p.get() < self.floor || r.is_zero())
    }
}

/// Equality above the larger of the two floors; slices over different
/// prime sets are never equal.
impl PartialEq for AdeleSlice {
    fn eq(&self, other: &Self) -> bool {
        self.disagreements(other).is_ok_and(|d| d.is_empty())
    }
}

/// The finite multiple zeta value of `k`, restricted to a window.
pub fn adele_zeta(k: &Index, window: &PrimeWindow, floor: u64) -> Result<AdeleSlice> {
    AdeleSlice::from_fn(window, floor, |p| zeta_mod_p(k, p))
}
