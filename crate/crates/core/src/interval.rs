//! Minimal endpoint interval representations and the bijection with ascent
//! sequences.
//!
//! A representation is a multiset of integer-endpoint intervals in which every
//! integer from 0 to the largest endpoint occurs as both a left endpoint and a
//! right endpoint. One is built from an ascent sequence entry by entry: each
//! entry either adds a new maximal interval (move 1), starts a fresh trivial
//! interval one past the current maximum (move 2), or inserts a new endpoint,
//! shifting and truncating existing intervals (move 3).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ascent::AscentSequence;
use crate::poset::Poset;

/// Default cap on the search that recovers an ascent sequence from a poset.
pub const SEQUENCE_SEARCH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("poset is not an interval order: down sets are not totally ordered by inclusion")]
    NotAnIntervalOrder,
    #[error("poset has {n} points; sequence recovery is capped at {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("malformed representation JSON: {0}")]
    Json(String),
    #[error("representation is not minimal or not sorted")]
    NotCanonical,
}

/// A closed integer interval `[left, right]` with `left <= right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    left: u32,
    right: u32,
}

impl Interval {
    pub fn new(left: u32, right: u32) -> Interval {
        assert!(left <= right, "interval endpoints out of order");
        Interval { left, right }
    }

    pub fn left(&self) -> u32 {
        self.left
    }

    pub fn right(&self) -> u32 {
        self.right
    }

    pub fn is_trivial(&self) -> bool {
        self.left == self.right
    }

    /// Strict interior containment: `other` lies strictly inside `self`.
    pub fn strictly_contains(&self, other: &Interval) -> bool {
        self.left < other.left && other.right < self.right
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.left, self.right)
    }
}

/// A multiset of intervals stored as a sorted association list
/// `(interval, multiplicity)`; the sorted form is the canonical equality
/// witness used by searches and golden tests.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalRepresentation {
    items: Vec<(Interval, u32)>,
}

impl IntervalRepresentation {
    /// The representation of the one-point poset: `{[0,0]}`.
    pub fn singleton() -> IntervalRepresentation {
        IntervalRepresentation {
            items: vec![(Interval::new(0, 0), 1)],
        }
    }

    /// Builds a representation from plain intervals, each with multiplicity 1
    /// (repeats accumulate).
    pub(crate) fn from_intervals(intervals: impl IntoIterator<Item = Interval>) -> Self {
        let mut rep = IntervalRepresentation { items: Vec::new() };
        for iv in intervals {
            rep.insert(iv, 1);
        }
        rep
    }

    fn insert(&mut self, iv: Interval, mult: u32) {
        match self.items.binary_search_by_key(&iv, |&(i, _)| i) {
            Ok(pos) => self.items[pos].1 += mult,
            Err(pos) => self.items.insert(pos, (iv, mult)),
        }
    }

    /// Number of poset points: total multiplicity.
    pub fn point_count(&self) -> usize {
        self.items.iter().map(|&(_, m)| m as usize).sum()
    }

    /// Number of distinct intervals.
    pub fn distinct_count(&self) -> usize {
        self.items.len()
    }

    /// `(interval, multiplicity)` pairs in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = (Interval, u32)> + '_ {
        self.items.iter().copied()
    }

    /// Distinct intervals in sorted order, multiplicities dropped.
    pub fn interval_set(&self) -> Vec<Interval> {
        self.items.iter().map(|&(iv, _)| iv).collect()
    }

    /// All intervals with multiplicity expanded, sorted.
    pub fn expanded(&self) -> Vec<Interval> {
        let mut out = Vec::with_capacity(self.point_count());
        for &(iv, m) in &self.items {
            for _ in 0..m {
                out.push(iv);
            }
        }
        out
    }

    /// Equality as plain interval sets, ignoring multiplicities.
    pub fn same_interval_set(&self, other: &IntervalRepresentation) -> bool {
        self.interval_set() == other.interval_set()
    }

    pub fn has_duplicated_holdings(&self) -> bool {
        self.items.iter().any(|&(_, m)| m >= 2)
    }

    /// Largest right endpoint.
    pub fn max_right(&self) -> u32 {
        self.items
            .iter()
            .map(|&(iv, _)| iv.right)
            .max()
            .expect("representation is nonempty")
    }

    /// Smallest left endpoint among intervals whose right endpoint is the
    /// largest right endpoint.
    pub fn min_left_of_max_right(&self) -> u32 {
        let max_right = self.max_right();
        self.items
            .iter()
            .filter(|&&(iv, _)| iv.right == max_right)
            .map(|&(iv, _)| iv.left)
            .min()
            .expect("some interval attains the maximum")
    }

    /// Number of distinct endpoint values, `1 + max_right`.
    pub fn magnitude(&self) -> u32 {
        self.max_right() + 1
    }

    /// Every integer in `[0, max_right]` occurs as a left endpoint of some
    /// interval and as a right endpoint of some interval.
    pub fn is_minimal(&self) -> bool {
        let t = self.magnitude() as usize;
        let mut lefts = vec![false; t];
        let mut rights = vec![false; t];
        for &(iv, _) in &self.items {
            lefts[iv.left as usize] = true;
            rights[iv.right as usize] = true;
        }
        lefts.into_iter().zip(rights).all(|(l, r)| l && r)
    }

    /// Containment test for semiorders: no interval lies strictly inside
    /// another's interior.
    pub fn is_semiorder(&self) -> bool {
        for (i, &(a, _)) in self.items.iter().enumerate() {
            for &(b, _) in &self.items[i + 1..] {
                if a.strictly_contains(&b) || b.strictly_contains(&a) {
                    return false;
                }
            }
        }
        true
    }

    /// Builds the representation coded by an ascent sequence.
    pub fn from_sequence(seq: &AscentSequence) -> IntervalRepresentation {
        let mut rep = IntervalRepresentation::singleton();
        for &value in &seq.entries()[1..] {
            rep = rep.extended(value);
        }
        rep
    }

    /// Applies one construction step for the next sequence entry `value`.
    /// Exactly one of the three moves fires; validity of the source sequence
    /// guarantees `value <= max_right + 1`.
    pub(crate) fn extended(&self, value: u32) -> IntervalRepresentation {
        let l = self.max_right();
        let l_star = self.min_left_of_max_right();
        let mut next;
        if value <= l_star {
            // move 1: a new maximal interval reaching the current maximum
            next = self.clone();
            next.insert(Interval::new(value, l), 1);
        } else if value == l + 1 {
            // move 2: a fresh trivial interval past the maximum
            next = self.clone();
            next.insert(Interval::new(l + 1, l + 1), 1);
        } else {
            // move 3: insert an endpoint at `value`; one pass builds a fresh
            // multiset since each old interval matches exactly one rule
            debug_assert!(l_star < value && value <= l);
            next = IntervalRepresentation { items: Vec::new() };
            for &(iv, m) in &self.items {
                let moved = if value <= iv.left {
                    Interval::new(iv.left + 1, iv.right + 1)
                } else if iv.right == l {
                    Interval::new(iv.left, value)
                } else if value <= iv.right {
                    Interval::new(iv.left, iv.right + 1)
                } else {
                    iv
                };
                next.insert(moved, m);
            }
            next.insert(Interval::new(value, l + 1), 1);
        }
        debug_assert!(next.is_minimal());
        next
    }

    /// The strict order on the expanded points: `x < y` iff `x`'s interval
    /// lies entirely left of `y`'s.
    pub fn to_poset(&self) -> Poset {
        let points = self.expanded();
        let mut pairs = Vec::new();
        for (i, a) in points.iter().enumerate() {
            for (j, b) in points.iter().enumerate() {
                if a.right < b.left {
                    pairs.push((i, j));
                }
            }
        }
        Poset::from_strict_pairs(points.len(), &pairs).expect("interval order is acyclic")
    }

    /// The minimal endpoint representation of an interval order, from the
    /// chains of down sets and up sets: `I(x) = [i, j]` where the down set of
    /// `x` is the `i`-th smallest distinct down set and the up set of `x` is
    /// the `j`-th largest distinct up set.
    pub fn from_poset(poset: &Poset) -> Result<IntervalRepresentation, IntervalError> {
        if !poset.down_sets_totally_ordered() {
            return Err(IntervalError::NotAnIntervalOrder);
        }
        let n = poset.len();
        let mut downs: Vec<u64> = (0..n).map(|x| poset.down_mask(x)).collect();
        downs.sort_unstable_by_key(|m| m.count_ones());
        downs.dedup();
        let mut ups: Vec<u64> = (0..n).map(|x| poset.up_mask(x)).collect();
        ups.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
        ups.dedup();
        debug_assert_eq!(downs.len(), ups.len());
        let index_of = |list: &[u64], mask: u64| {
            list.iter().position(|&m| m == mask).expect("mask listed") as u32
        };
        let mut intervals = IntervalRepresentation { items: Vec::new() };
        for x in 0..n {
            let left = index_of(&downs, poset.down_mask(x));
            let right = index_of(&ups, poset.up_mask(x));
            intervals.insert(Interval::new(left, right), 1);
        }
        debug_assert!(intervals.is_minimal());
        Ok(intervals)
    }

    pub fn to_json(&self) -> String {
        let doc = RepresentationJson {
            n: self.point_count(),
            intervals: self
                .items
                .iter()
                .map(|&(iv, m)| IntervalJson {
                    l: iv.left,
                    r: iv.right,
                    mult: m,
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("representation serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<IntervalRepresentation, IntervalError> {
        let doc: RepresentationJson =
            serde_json::from_str(s).map_err(|e| IntervalError::Json(e.to_string()))?;
        let mut items = Vec::with_capacity(doc.intervals.len());
        for iv in &doc.intervals {
            if iv.l > iv.r || iv.mult == 0 {
                return Err(IntervalError::NotCanonical);
            }
            items.push((Interval::new(iv.l, iv.r), iv.mult));
        }
        if items.is_empty() || items.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(IntervalError::NotCanonical);
        }
        let rep = IntervalRepresentation { items };
        if rep.point_count() != doc.n || !rep.is_minimal() {
            return Err(IntervalError::NotCanonical);
        }
        Ok(rep)
    }

    /// ASCII picture of the representation: one interval per line plus a tick
    /// row, mirroring the usual endpoint drawings. Duplicated holdings get a
    /// multiplicity suffix.
    pub fn ascii_diagram(&self) -> String {
        let width = (self.max_right().max(1) as f64).log10() as usize + 2;
        let mut out = String::new();
        for &(iv, m) in &self.items {
            let mut line = vec![b' '; (self.max_right() as usize) * width + 2];
            let start = iv.left as usize * width;
            let end = iv.right as usize * width + 1;
            line[start] = b'[';
            line[end] = b']';
            for c in &mut line[start + 1..end] {
                *c = b'-';
            }
            out.push_str(std::str::from_utf8(&line).expect("ascii"));
            if m > 1 {
                out.push_str(&format!(" x{m}"));
            }
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        }
        for tick in 0..=self.max_right() {
            let label = tick.to_string();
            out.push_str(&label);
            for _ in 0..width.saturating_sub(label.len()) {
                out.push(' ');
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
        out
    }
}

impl fmt::Display for IntervalRepresentation {
    /// Brace-list of the expanded multiset, e.g. `{[0,0],[0,1],[1,1]}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, iv) in self.expanded().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{iv}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct RepresentationJson {
    n: usize,
    intervals: Vec<IntervalJson>,
}

#[derive(Serialize, Deserialize)]
struct IntervalJson {
    l: u32,
    r: u32,
    mult: u32,
}

/// Recovers the unique ascent sequence whose representation equals the
/// minimal endpoint representation of `poset`, multiplicities included.
pub fn sequence_from_poset(poset: &Poset) -> Result<AscentSequence, IntervalError> {
    sequence_from_poset_with_cap(poset, SEQUENCE_SEARCH_CAP)
}

/// Depth-first search over sequence extensions. Prunes on the magnitude of
/// the partial representation; once the target magnitude is reached only
/// move-1 insertions remain, which makes the completion forced.
pub fn sequence_from_poset_with_cap(
    poset: &Poset,
    cap: usize,
) -> Result<AscentSequence, IntervalError> {
    let n = poset.len();
    if n > cap {
        return Err(IntervalError::SizeCapExceeded { n, cap });
    }
    let target = IntervalRepresentation::from_poset(poset)?;
    let mut entries = vec![0u32];
    let found = search(
        &target,
        &IntervalRepresentation::singleton(),
        &mut entries,
        0,
        n,
    );
    assert!(
        found,
        "every interval order is coded by some ascent sequence"
    );
    Ok(AscentSequence::new(entries).expect("search yields valid sequences"))
}

fn search(
    target: &IntervalRepresentation,
    current: &IntervalRepresentation,
    entries: &mut Vec<u32>,
    ascents: u32,
    n: usize,
) -> bool {
    let target_top = target.max_right();
    let top = current.max_right();
    if top == target_top {
        return finish_with_move_ones(target, current, entries);
    }
    let remaining = n - entries.len();
    let deficit = (target_top - top) as usize;
    if deficit > remaining {
        return false;
    }
    debug_assert!(remaining > 0);
    let bound = 1 + ascents;
    let last = *entries.last().expect("entries start nonempty");
    // entries up to the pending smallest left leave the magnitude unchanged;
    // skip them when every remaining entry must raise it
    let start = if deficit == remaining {
        current.min_left_of_max_right() + 1
    } else {
        0
    };
    for value in start..=bound {
        let next = current.extended(value);
        entries.push(value);
        let next_ascents = ascents + u32::from(value > last);
        if search(target, &next, entries, next_ascents, n) {
            return true;
        }
        entries.pop();
    }
    false
}

/// Endgame once the magnitudes agree: intervals short of the top can no
/// longer change, and each remaining entry must insert one missing
/// `[a, top]`, in descending order of `a`.
fn finish_with_move_ones(
    target: &IntervalRepresentation,
    current: &IntervalRepresentation,
    entries: &mut Vec<u32>,
) -> bool {
    let top = target.max_right();
    let mut missing: Vec<u32> = Vec::new();
    {
        let mut cur = current.iter().peekable();
        for (iv, want) in target.iter() {
            let have = match cur.peek() {
                Some(&(civ, m)) if civ == iv => {
                    cur.next();
                    m
                }
                _ => 0,
            };
            if have > want || (have < want && iv.right() != top) {
                return false;
            }
            for _ in have..want {
                missing.push(iv.left());
            }
        }
        if cur.next().is_some() {
            return false; // current holds an interval the target lacks
        }
    }
    let mut l_star = current.min_left_of_max_right();
    missing.sort_unstable_by(|a, b| b.cmp(a));
    for &a in &missing {
        if a > l_star {
            return false;
        }
        l_star = a;
    }
    entries.extend(missing);
    true
}
