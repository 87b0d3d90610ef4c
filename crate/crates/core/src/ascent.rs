//! Ascent sequences: the integer sequences that code unlabeled interval orders.
//!
//! A sequence `(x_1, ..., x_n)` of nonnegative integers is an ascent sequence
//! when `x_1 = 0` and every later entry satisfies
//! `x_i <= 1 + asc(x_1, ..., x_{i-1})`, where `asc` counts strict rises
//! between adjacent entries.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AscentError {
    #[error("sequence must be nonempty")]
    Empty,
    #[error("entry at index 0 must be 0")]
    FirstEntryNonzero,
    #[error("entry at index {index} exceeds the ascent bound")]
    AscentBoundExceeded { index: usize },
}

/// Number of strict rises between adjacent entries.
///
/// Errors on an empty slice; a single entry has no adjacent pair and counts 0.
pub fn ascent_count(prefix: &[u32]) -> Result<usize, AscentError> {
    if prefix.is_empty() {
        return Err(AscentError::Empty);
    }
    Ok(prefix.windows(2).filter(|w| w[0] < w[1]).count())
}

/// A validated ascent sequence.
///
/// Immutable after construction; every prefix of a valid sequence is again a
/// valid sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AscentSequence {
    entries: Vec<u32>,
}

impl AscentSequence {
    /// Validates `entries` and wraps them. The error reports the first
    /// violating index.
    pub fn new(entries: Vec<u32>) -> Result<Self, AscentError> {
        if entries.is_empty() {
            return Err(AscentError::Empty);
        }
        if entries[0] != 0 {
            return Err(AscentError::FirstEntryNonzero);
        }
        let mut asc = 0u32;
        for i in 1..entries.len() {
            if entries[i] > 1 + asc {
                return Err(AscentError::AscentBoundExceeded { index: i });
            }
            if entries[i] > entries[i - 1] {
                asc += 1;
            }
        }
        Ok(AscentSequence { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    /// The prefix of the first `len` entries (valid by prefix closure).
    pub fn prefix(&self, len: usize) -> AscentSequence {
        assert!(len >= 1 && len <= self.entries.len());
        AscentSequence {
            entries: self.entries[..len].to_vec(),
        }
    }

    /// True when entries also obey the lower bound `m - 1 <= x_i`, with `m`
    /// the largest entry before position `i`.
    pub fn is_restricted(&self) -> bool {
        let mut max_before = self.entries[0];
        for i in 1..self.entries.len() {
            if self.entries[i] + 1 < max_before {
                return false;
            }
            max_before = max_before.max(self.entries[i]);
        }
        true
    }

    /// True when no two adjacent entries are equal; such sequences code the
    /// posets with no duplicated holdings.
    pub fn has_no_duplicated_holdings(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] != w[1])
    }

    /// Lazy lexicographic stream of every ascent sequence of length `n`.
    pub fn enumerate(n: usize) -> Result<AscentSequences, AscentError> {
        if n == 0 {
            return Err(AscentError::Empty);
        }
        Ok(AscentSequences::fresh(n))
    }
}

impl fmt::Display for AscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSequenceError {
    #[error("expected a parenthesized comma-separated sequence like \"(0,1,0)\"")]
    Syntax,
    #[error("invalid sequence: {0}")]
    Invalid(#[from] AscentError),
}

impl FromStr for AscentSequence {
    type Err = ParseSequenceError;

    /// Accepts the textual form `(0,1,0,1,2,0,2)`; whitespace around entries
    /// and delimiters is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or(ParseSequenceError::Syntax)?;
        let mut entries = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(ParseSequenceError::Syntax);
            }
            entries.push(
                part.parse::<u32>()
                    .map_err(|_| ParseSequenceError::Syntax)?,
            );
        }
        Ok(AscentSequence::new(entries)?)
    }
}

/// Depth-first lexicographic enumerator. Never materializes the full set;
/// the bound `1 + asc` is maintained incrementally.
pub struct AscentSequences {
    n: usize,
    entries: Vec<u32>,
    // ascents[i] = number of ascents in entries[0..=i]
    ascents: Vec<u32>,
    // entries below this index never change; 1 for the plain stream (index 0
    // is pinned at 0), prefix.len() for a partitioned stream
    freeze_below: usize,
    started: bool,
    done: bool,
}

impl AscentSequences {
    fn fresh(n: usize) -> Self {
        AscentSequences {
            n,
            entries: vec![0; n],
            ascents: vec![0; n],
            freeze_below: 1,
            started: false,
            done: false,
        }
    }

    /// Enumerates only the sequences extending `prefix`, in lexicographic
    /// order. Lets callers partition the length-`n` stream by prefix.
    pub fn with_prefix(n: usize, prefix: &AscentSequence) -> Self {
        assert!(prefix.len() <= n);
        let mut it = Self::fresh(n);
        it.entries[..prefix.len()].copy_from_slice(prefix.entries());
        for i in 1..n {
            it.ascents[i] = it.ascents[i - 1] + u32::from(it.entries[i] > it.entries[i - 1]);
        }
        // stops as soon as the prefix itself would have to change
        it.freeze_below = prefix.len();
        it
    }

    fn advance(&mut self) -> bool {
        let mut i = self.n;
        while i > self.freeze_below.max(1) {
            i -= 1;
            let bound = 1 + self.ascents[i - 1];
            if self.entries[i] < bound {
                self.entries[i] += 1;
                for j in i..self.n {
                    if j > i {
                        self.entries[j] = 0;
                    }
                    self.ascents[j] =
                        self.ascents[j - 1] + u32::from(self.entries[j] > self.entries[j - 1]);
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for AscentSequences {
    type Item = AscentSequence;

    fn next(&mut self) -> Option<AscentSequence> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(AscentSequence {
            entries: self.entries.clone(),
        })
    }
}
