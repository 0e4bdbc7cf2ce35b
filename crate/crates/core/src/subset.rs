//! Subsets of the bar labels `{1, …, n}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A subset `J ⊆ {1, …, n}` stored as a bitmask. Labels are 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexSubset {
    n: usize,
    words: Vec<u64>,
}

impl IndexSubset {
    /// The empty subset of `{1, …, n}`.
    pub fn empty(n: usize) -> Self {
        IndexSubset {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// The whole index set `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 1..=n {
            s.insert_unchecked(i);
        }
        s
    }

    /// Builds a subset from 1-based labels; duplicates are ignored.
    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for i in members {
            s.insert(i)?;
        }
        Ok(s)
    }

    /// Ambient size `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `|J|`.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when `J = ∅`.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Membership test for the 1-based label `i`; out-of-range labels are never members.
    pub fn contains(&self, i: usize) -> bool {
        if i == 0 || i > self.n {
            return false;
        }
        let b = i - 1;
        self.words[b / 64] >> (b % 64) & 1 == 1
    }

    /// Adds the 1-based label `i`.
    pub fn insert(&mut self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        self.insert_unchecked(i);
        Ok(())
    }

    fn insert_unchecked(&mut self, i: usize) {
        let b = i - 1;
        self.words[b / 64] |= 1 << (b % 64);
    }

    /// `J̄ = {1, …, n} \ J`.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        let tail = self.n % 64;
        if tail != 0 {
            if let Some(last) = out.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        out
    }

    /// Members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&i| self.contains(i))
    }

    /// `|J ∩ {1, …, i}|` for `i = 0, …, n` (entry 0 is 0).
    pub fn prefix_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n + 1);
        let mut k = 0;
        out.push(0);
        for i in 1..=self.n {
            if self.contains(i) {
                k += 1;
            }
            out.push(k);
        }
        out
    }
}

impl fmt::Debug for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.members().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.n)
    }
}
