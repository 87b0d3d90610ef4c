//! Exhaustive classification of ascent sequences by the poset classes they
//! code, tallied per length.
//!
//! A depth-first walk over the sequence tree carries the interval
//! representation and the block decomposer along each branch, so a full
//! length-`n` census costs one move application per tree node.

use rayon::prelude::*;
use thiserror::Error;

use crate::ascent::AscentSequence;
use crate::blocks::Decomposer;
use crate::interval::IntervalRepresentation;

/// Default cap on the exhaustive census; length 12 already walks ~10.9M
/// sequences.
pub const BRUTE_FORCE_CAP: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("length {n} exceeds the brute-force cap {cap}")]
    SizeCapExceeded { n: u32, cap: u32 },
    #[error("length must be at least 1")]
    Empty,
}

/// One census row: every count refers to sequences of length exactly `n`,
/// equivalently to the coded posets on `n` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CountRow {
    pub n: u32,
    /// Ascent sequences of length `n` (interval orders on `n` points).
    pub sequences: u64,
    pub semiorders: u64,
    pub hereditary: u64,
    pub dim2: u64,
    pub dim3: u64,
    /// The same classes restricted to sequences with no equal adjacent
    /// entries (posets with no duplicated holdings).
    pub nodh_semiorders: u64,
    pub nodh_hereditary: u64,
    pub nodh_dim2: u64,
    pub nodh_dim3: u64,
    /// Restricted ascent sequences among the semiorder-coding ones.
    pub restricted_semiorders: u64,
}

impl CountRow {
    fn absorb(&mut self, other: &CountRow) {
        self.sequences += other.sequences;
        self.semiorders += other.semiorders;
        self.hereditary += other.hereditary;
        self.dim2 += other.dim2;
        self.dim3 += other.dim3;
        self.nodh_semiorders += other.nodh_semiorders;
        self.nodh_hereditary += other.nodh_hereditary;
        self.nodh_dim2 += other.nodh_dim2;
        self.nodh_dim3 += other.nodh_dim3;
        self.restricted_semiorders += other.restricted_semiorders;
    }
}

#[derive(Clone)]
struct Branch {
    rep: IntervalRepresentation,
    decomposer: Decomposer,
    ascents: u32,
    last: u32,
    max: u32,
    restricted: bool,
    nodh: bool,
}

impl Branch {
    fn root() -> Branch {
        Branch {
            rep: IntervalRepresentation::singleton(),
            decomposer: Decomposer::start(),
            ascents: 0,
            last: 0,
            max: 0,
            restricted: true,
            nodh: true,
        }
    }

    fn child(&self, value: u32) -> Branch {
        let mut decomposer = self.decomposer.clone();
        decomposer.push(value);
        Branch {
            rep: self.rep.extended(value),
            decomposer,
            ascents: self.ascents + u32::from(value > self.last),
            last: value,
            max: self.max.max(value),
            restricted: self.restricted && value + 1 >= self.max,
            nodh: self.nodh && value != self.last,
        }
    }

    fn tally(&self, row: &mut CountRow) {
        row.sequences += 1;
        let hereditary = self.decomposer.is_alive();
        let semiorder = hereditary || self.rep.is_semiorder();
        if !semiorder {
            return;
        }
        row.semiorders += 1;
        let dim2 = hereditary
            && self
                .decomposer
                .decomposition()
                .expect("alive decomposer yields a decomposition")
                .dimension_at_most_2();
        row.hereditary += u64::from(hereditary);
        row.dim2 += u64::from(dim2);
        row.dim3 += u64::from(!dim2);
        row.restricted_semiorders += u64::from(self.restricted);
        if self.nodh {
            row.nodh_semiorders += 1;
            row.nodh_hereditary += u64::from(hereditary);
            row.nodh_dim2 += u64::from(dim2);
            row.nodh_dim3 += u64::from(!dim2);
        }
    }
}

fn walk(branch: &Branch, depth: u32, n: u32, row: &mut CountRow) {
    if depth == n {
        branch.tally(row);
        return;
    }
    for value in 0..=1 + branch.ascents {
        walk(&branch.child(value), depth + 1, n, row);
    }
}

/// Classifies every length-`n` ascent sequence and tallies the census row.
pub fn brute_force_row(n: u32) -> Result<CountRow, CountError> {
    brute_force_row_with(n, BRUTE_FORCE_CAP, None)
}

/// As `brute_force_row`, with an explicit cap and worker count. `jobs: None`
/// uses the machine parallelism; `Some(1)` stays on the caller's thread. The
/// stream is sharded by sequence prefix and the shard tallies summed.
pub fn brute_force_row_with(n: u32, cap: u32, jobs: Option<usize>) -> Result<CountRow, CountError> {
    if n == 0 {
        return Err(CountError::Empty);
    }
    if n > cap {
        return Err(CountError::SizeCapExceeded { n, cap });
    }
    let mut row = match jobs {
        Some(1) => {
            let mut row = CountRow::default();
            walk(&Branch::root(), 1, n, &mut row);
            row
        }
        _ => {
            let run = || shard_and_sum(n);
            match jobs {
                None => run(),
                Some(workers) => rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build()
                    .expect("worker pool")
                    .install(run),
            }
        }
    };
    row.n = n;
    Ok(row)
}

/// Splits the walk at a fixed prefix depth; each shard replays its prefix and
/// walks the completions independently.
fn shard_and_sum(n: u32) -> CountRow {
    let shard_depth = n.saturating_sub(1).min(5);
    let mut shards = vec![(Branch::root(), 1u32)];
    for _ in 1..shard_depth {
        shards = shards
            .into_iter()
            .flat_map(|(branch, depth)| {
                (0..=1 + branch.ascents)
                    .map(move |value| (branch.child(value), depth + 1))
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    shards
        .into_par_iter()
        .map(|(branch, depth)| {
            let mut row = CountRow::default();
            walk(&branch, depth, n, &mut row);
            row
        })
        .reduce(CountRow::default, |mut a, b| {
            a.absorb(&b);
            a
        })
}

/// Census rows for every length `1..=n_max`.
pub fn brute_force_table(n_max: u32, jobs: Option<usize>) -> Result<Vec<CountRow>, CountError> {
    (1..=n_max)
        .map(|n| brute_force_row_with(n, BRUTE_FORCE_CAP, jobs))
        .collect()
}

/// Convenience oracle used in tests: classify one sequence the slow way.
pub fn classify_sequence(seq: &AscentSequence) -> CountRow {
    let mut branch = Branch::root();
    for &value in &seq.entries()[1..] {
        branch = branch.child(value);
    }
    let mut row = CountRow {
        n: seq.len() as u32,
        ..CountRow::default()
    };
    branch.tally(&mut row);
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_match_known_values() {
        let row = brute_force_row(1).unwrap();
        assert_eq!(
            (row.semiorders, row.hereditary, row.dim2, row.dim3),
            (1, 1, 1, 0)
        );
        let row = brute_force_row(7).unwrap();
        assert_eq!(row.sequences, 1014);
        assert_eq!(
            (row.semiorders, row.hereditary, row.dim2, row.dim3),
            (429, 428, 426, 3)
        );
    }

    #[test]
    fn column_invariants() {
        for row in brute_force_table(8, Some(1)).unwrap() {
            assert_eq!(row.semiorders, row.dim2 + row.dim3);
            assert!(row.hereditary <= row.semiorders);
            assert!(row.dim2 <= row.hereditary);
            assert!(row.nodh_semiorders <= row.semiorders);
            assert_eq!(row.nodh_semiorders, row.nodh_dim2 + row.nodh_dim3);
        }
    }

    #[test]
    fn sharded_and_serial_agree() {
        let serial = brute_force_row_with(8, BRUTE_FORCE_CAP, Some(1)).unwrap();
        let sharded = brute_force_row_with(8, BRUTE_FORCE_CAP, Some(3)).unwrap();
        assert_eq!(serial, sharded);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            brute_force_row_with(13, 12, Some(1)),
            Err(CountError::SizeCapExceeded { n: 13, cap: 12 })
        );
        assert_eq!(brute_force_row(0), Err(CountError::Empty));
    }

    #[test]
    fn classify_sequence_matches_flags() {
        let s: AscentSequence = "(0,1,0,1,2,0,2)".parse().unwrap();
        let row = classify_sequence(&s);
        assert_eq!(row.semiorders, 1);
        assert_eq!(row.hereditary, 0);
        assert_eq!(row.dim3, 1);
        assert_eq!(row.restricted_semiorders, 0);
        assert_eq!(row.nodh_semiorders, 1);
    }
}
