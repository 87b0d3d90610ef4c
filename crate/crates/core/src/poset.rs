//! Finite strict partial orders on `{0..n-1}` with induced-subposet pattern
//! detection, linear extensions, and a realizer-based dimension-2 oracle.
//!
//! Ground sets are capped at 64 elements so down and up sets fit in one
//! machine word; everything here targets desk-scale exhaustive search.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap for the operations that enumerate linear extensions.
pub const DIMENSION_SEARCH_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("ground set of size {n} exceeds the cap {cap} for this search")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("poset is not a semiorder")]
    NotASemiorder,
    #[error("ground sets larger than 64 elements are not supported")]
    TooLarge,
    #[error("element {index} out of range for ground set of size {n}")]
    ElementOutOfRange { index: usize, n: usize },
    #[error("strict relation contains a cycle")]
    Cyclic,
    #[error("malformed poset JSON: {0}")]
    Json(String),
}

/// A strict partial order, stored as one down-set and one up-set bitmask per
/// element. The relation is transitively closed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    below: Vec<u64>,
    above: Vec<u64>,
}

impl Poset {
    /// Builds a poset from strict pairs `(a, b)` meaning `a < b`. The
    /// transitive closure is computed; a cycle is rejected.
    pub fn from_strict_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Poset, PosetError> {
        if n > 64 {
            return Err(PosetError::TooLarge);
        }
        let mut below = vec![0u64; n];
        for &(a, b) in pairs {
            for index in [a, b] {
                if index >= n {
                    return Err(PosetError::ElementOutOfRange { index, n });
                }
            }
            below[b] |= 1 << a;
        }
        // Warshall closure over the "strictly below" masks.
        for k in 0..n {
            for i in 0..n {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        for (i, &mask) in below.iter().enumerate() {
            if mask >> i & 1 == 1 {
                return Err(PosetError::Cyclic);
            }
        }
        let mut above = vec![0u64; n];
        for (i, up) in above.iter_mut().enumerate() {
            for (j, &mask) in below.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    *up |= 1 << j;
                }
            }
        }
        Ok(Poset { n, below, above })
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_strict_pairs(n, &pairs).expect("chain is acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_strict_pairs(n, &[]).expect("empty relation is acyclic")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `a < b` in the strict order.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.below[b] >> a & 1 == 1
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && !self.lt(a, b) && !self.lt(b, a)
    }

    /// Bitmask of the open down set of `x`.
    pub fn down_mask(&self, x: usize) -> u64 {
        self.below[x]
    }

    /// Bitmask of the open up set of `x`.
    pub fn up_mask(&self, x: usize) -> u64 {
        self.above[x]
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|x| (self.below[x] | self.above[x]).count_ones() as usize == self.n - 1)
    }

    /// All strict pairs `(a, b)` with `a < b`, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn masks_totally_ordered(masks: &[u64]) -> bool {
        let mut sorted: Vec<u64> = masks.to_vec();
        sorted.sort_unstable_by_key(|m| m.count_ones());
        sorted
            .windows(2)
            .all(|w| w[0] & !w[1] == 0 || w[1] & !w[0] == 0)
    }

    pub fn down_sets_totally_ordered(&self) -> bool {
        Self::masks_totally_ordered(&self.below)
    }

    pub fn up_sets_totally_ordered(&self) -> bool {
        Self::masks_totally_ordered(&self.above)
    }

    /// Interval-order test: the down sets form a chain under inclusion.
    pub fn is_interval_order(&self) -> bool {
        self.down_sets_totally_ordered()
    }

    /// Semiorder test on the poset side: no induced `2+2` and no induced `1+3`.
    pub fn is_semiorder(&self) -> bool {
        !self.contains_induced(&patterns::two_plus_two())
            && !self.contains_induced(&patterns::one_plus_three())
    }

    /// True when some injection embeds `pattern` as an induced subposet:
    /// order is both preserved and reflected.
    pub fn contains_induced(&self, pattern: &Poset) -> bool {
        if pattern.n > self.n {
            return false;
        }
        let mut assignment = vec![usize::MAX; pattern.n];
        let mut used = 0u64;
        self.embed(pattern, 0, &mut assignment, &mut used)
    }

    fn embed(
        &self,
        pattern: &Poset,
        next: usize,
        assignment: &mut [usize],
        used: &mut u64,
    ) -> bool {
        if next == pattern.n {
            return true;
        }
        'candidates: for h in 0..self.n {
            if *used >> h & 1 == 1 {
                continue;
            }
            // the host image must have room for the pattern element's sets
            if (self.below[h].count_ones() < pattern.below[next].count_ones())
                || (self.above[h].count_ones() < pattern.above[next].count_ones())
            {
                continue;
            }
            for (p, &img) in assignment.iter().enumerate().take(next) {
                let need_lt = pattern.lt(p, next);
                let need_gt = pattern.lt(next, p);
                if self.lt(img, h) != need_lt || self.lt(h, img) != need_gt {
                    continue 'candidates;
                }
            }
            assignment[next] = h;
            *used |= 1 << h;
            if self.embed(pattern, next + 1, assignment, used) {
                return true;
            }
            assignment[next] = usize::MAX;
            *used &= !(1 << h);
        }
        false
    }

    /// Lazy stream of every linear extension, each as the element order.
    pub fn linear_extensions(&self) -> Result<LinearExtensions<'_>, PosetError> {
        self.linear_extensions_with_cap(DIMENSION_SEARCH_CAP)
    }

    pub fn linear_extensions_with_cap(
        &self,
        cap: usize,
    ) -> Result<LinearExtensions<'_>, PosetError> {
        if self.n > cap {
            return Err(PosetError::SizeCapExceeded { n: self.n, cap });
        }
        Ok(LinearExtensions::new(self))
    }

    /// Realizer search: true when two linear extensions intersect in exactly
    /// this order. For each extension `L1` the unique candidate partner keeps
    /// the order's pairs and reverses every `L1`-incomparable pair, so only
    /// `L1` is enumerated.
    pub fn has_dimension_at_most_2(&self) -> Result<bool, PosetError> {
        self.has_dimension_at_most_2_with_cap(DIMENSION_SEARCH_CAP)
    }

    pub fn has_dimension_at_most_2_with_cap(&self, cap: usize) -> Result<bool, PosetError> {
        if self.n <= 2 {
            return Ok(true);
        }
        for order in self.linear_extensions_with_cap(cap)? {
            if self.conjugate_is_total(&order) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Checks whether keeping comparabilities and reversing the incomparable
    /// pairs of `order` yields a total order (a transitive tournament).
    fn conjugate_is_total(&self, order: &[usize]) -> bool {
        let mut pos = vec![0usize; self.n];
        for (k, &x) in order.iter().enumerate() {
            pos[x] = k;
        }
        let mut indegree = vec![0usize; self.n];
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.lt(x, y) {
                    indegree[y] += 1;
                } else if self.lt(y, x) || pos[x] < pos[y] {
                    // comparabilities keep their direction; incomparable
                    // pairs are reversed relative to the extension
                    indegree[x] += 1;
                } else {
                    indegree[y] += 1;
                }
            }
        }
        // a tournament is a total order iff its score sequence is 0..n-1
        let mut seen = 0u64;
        for &d in &indegree {
            seen |= 1 << d;
        }
        seen == (1u64 << self.n) - 1
    }

    /// Dimension of a semiorder: 1 for a chain, otherwise 2 unless one of the
    /// three forcing subposets embeds, in which case 3.
    pub fn semiorder_dimension(&self) -> Result<u8, PosetError> {
        if !self.is_semiorder() {
            return Err(PosetError::NotASemiorder);
        }
        if self.n <= 1 || self.is_chain() {
            return Ok(1);
        }
        let forced = self.contains_induced(&patterns::fx2())
            || self.contains_induced(&patterns::h0())
            || self.contains_induced(&patterns::g0());
        Ok(if forced { 3 } else { 2 })
    }

    pub fn to_json(&self) -> String {
        let doc = PosetJson {
            n: self.n,
            lt: self
                .strict_pairs()
                .into_iter()
                .map(|(a, b)| [a, b])
                .collect(),
        };
        serde_json::to_string(&doc).expect("poset serialization cannot fail")
    }

    /// Parses `{"n": ..., "lt": [[a, b], ...]}`; the closure is recomputed and
    /// the relation validated.
    pub fn from_json(s: &str) -> Result<Poset, PosetError> {
        let doc: PosetJson =
            serde_json::from_str(s).map_err(|e| PosetError::Json(e.to_string()))?;
        let pairs: Vec<(usize, usize)> = doc.lt.iter().map(|p| (p[0], p[1])).collect();
        Poset::from_strict_pairs(doc.n, &pairs)
    }
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    lt: Vec<[usize; 2]>,
}

/// Backtracking enumerator over linear extensions.
pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    // per level: candidates not yet tried at this level
    pending: Vec<u64>,
    order: Vec<usize>,
    remaining: u64,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(poset: &'a Poset) -> Self {
        let full = if poset.n == 64 {
            u64::MAX
        } else {
            (1u64 << poset.n) - 1
        };
        LinearExtensions {
            poset,
            pending: Vec::new(),
            order: Vec::new(),
            remaining: full,
            done: poset.n == 0,
        }
    }

    fn minimal_of(&self, remaining: u64) -> u64 {
        let mut mask = 0u64;
        let mut m = remaining;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.poset.below[x] & remaining == 0 {
                mask |= 1 << x;
            }
        }
        mask
    }

    fn extend_to_leaf(&mut self) {
        while self.order.len() < self.poset.n {
            let cands = self.minimal_of(self.remaining);
            let x = cands.trailing_zeros() as usize;
            self.pending.push(cands & (cands - 1));
            self.order.push(x);
            self.remaining &= !(1 << x);
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.order.is_empty() && self.pending.is_empty() {
            self.extend_to_leaf();
            return Some(self.order.clone());
        }
        // backtrack to the deepest level with an untried candidate
        loop {
            match self.pending.pop() {
                None => {
                    self.done = true;
                    return None;
                }
                Some(untried) => {
                    let x = self.order.pop().expect("order tracks pending");
                    self.remaining |= 1 << x;
                    if untried != 0 {
                        let y = untried.trailing_zeros() as usize;
                        self.pending.push(untried & (untried - 1));
                        self.order.push(y);
                        self.remaining &= !(1 << y);
                        self.extend_to_leaf();
                        return Some(self.order.clone());
                    }
                }
            }
        }
    }
}

/// The fixed posets used as forbidden-subposet oracles.
pub mod patterns {
    use super::Poset;

    /// Two disjoint 2-chains.
    pub fn two_plus_two() -> Poset {
        Poset::from_strict_pairs(4, &[(0, 1), (2, 3)]).unwrap()
    }

    /// An isolated point beside a 3-chain.
    pub fn one_plus_three() -> Poset {
        Poset::from_strict_pairs(4, &[(1, 2), (2, 3)]).unwrap()
    }

    // The three 7-point semiorders of dimension 3. A semiorder has dimension
    // at most 2 exactly when none of them embeds as an induced subposet.
    // Cover relations are checked by the pattern-sanity tests: each pattern
    // must itself be a semiorder and must fail the realizer dimension-2 test.

    /// Elements a1 a2 a3 b1 b2 b3 c = 0..=6.
    pub fn fx2() -> Poset {
        Poset::from_strict_pairs(
            7,
            &[
                (0, 3), // a1 < b1
                (0, 5), // a1 < b3
                (0, 6), // a1 < c
                (1, 3), // a2 < b1
                (1, 4), // a2 < b2
                (1, 5), // a2 < b3
                (2, 5), // a3 < b3
                (2, 6), // a3 < c
                (4, 6), // b2 < c
            ],
        )
        .unwrap()
    }

    /// Elements a1 a2 b1 b2 b3 c d = 0..=6.
    pub fn h0() -> Poset {
        Poset::from_strict_pairs(
            7,
            &[
                (2, 5), // b1 < c
                (2, 3), // b1 < b2
                (2, 1), // b1 < a2
                (3, 4), // b2 < b3
                (6, 4), // d < b3
                (0, 1), // a1 < a2
                (0, 4), // a1 < b3
            ],
        )
        .unwrap()
    }

    /// Elements a1 a2 a3 b1 b2 b3 c = 0..=6.
    pub fn g0() -> Poset {
        Poset::from_strict_pairs(
            7,
            &[
                (0, 1), // a1 < a2
                (1, 2), // a2 < a3
                (3, 2), // b1 < a3
                (3, 4), // b1 < b2
                (4, 5), // b2 < b3
                (6, 5), // c < b3
                (0, 6), // a1 < c
                (0, 4), // a1 < b2
                (1, 5), // a2 < b3
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_plus_two() -> Poset {
        Poset::from_strict_pairs(3, &[(1, 2)]).unwrap()
    }

    #[test]
    fn closure_and_cycles() {
        let p = Poset::from_strict_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert!(p.is_chain());
        assert_eq!(
            Poset::from_strict_pairs(2, &[(0, 1), (1, 0)]),
            Err(PosetError::Cyclic)
        );
        assert_eq!(
            Poset::from_strict_pairs(2, &[(0, 2)]),
            Err(PosetError::ElementOutOfRange { index: 2, n: 2 })
        );
    }

    #[test]
    fn contains_induced_examples() {
        let two_two = patterns::two_plus_two();
        assert!(two_two.contains_induced(&two_two));
        assert!(!Poset::chain(4).contains_induced(&two_two));
        assert!(!Poset::chain(8).contains_induced(&two_two));
        assert!(patterns::one_plus_three().contains_induced(&one_plus_two()));
        assert!(!one_plus_two().contains_induced(&patterns::one_plus_three()));
    }

    #[test]
    fn linear_extension_counts() {
        assert_eq!(Poset::antichain(2).linear_extensions().unwrap().count(), 2);
        assert_eq!(Poset::chain(3).linear_extensions().unwrap().count(), 1);
        assert_eq!(one_plus_two().linear_extensions().unwrap().count(), 3);
        assert_eq!(
            Poset::antichain(5).linear_extensions().unwrap().count(),
            120
        );
        // every yielded order is an extension, and none repeats
        let p = patterns::two_plus_two();
        let all: Vec<_> = p.linear_extensions().unwrap().collect();
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
        for ext in &all {
            let mut pos = [0; 4];
            for (k, &x) in ext.iter().enumerate() {
                pos[x] = k;
            }
            for (a, b) in p.strict_pairs() {
                assert!(pos[a] < pos[b]);
            }
        }
    }

    #[test]
    fn dimension_two_oracle() {
        assert!(Poset::chain(5).has_dimension_at_most_2().unwrap());
        assert!(patterns::two_plus_two().has_dimension_at_most_2().unwrap());
        assert!(Poset::antichain(4).has_dimension_at_most_2().unwrap());
        assert!(!patterns::fx2().has_dimension_at_most_2().unwrap());
        assert!(!patterns::h0().has_dimension_at_most_2().unwrap());
        assert!(!patterns::g0().has_dimension_at_most_2().unwrap());
        assert_eq!(
            Poset::antichain(11).has_dimension_at_most_2(),
            Err(PosetError::SizeCapExceeded { n: 11, cap: 10 })
        );
    }

    #[test]
    fn semiorder_dimension_examples() {
        assert_eq!(
            patterns::one_plus_three().semiorder_dimension(),
            Err(PosetError::NotASemiorder)
        );
        assert_eq!(patterns::h0().semiorder_dimension(), Ok(3));
        assert_eq!(Poset::antichain(2).semiorder_dimension(), Ok(2));
        assert_eq!(Poset::chain(4).semiorder_dimension(), Ok(1));
    }

    #[test]
    fn pattern_sanity() {
        for p in [patterns::fx2(), patterns::h0(), patterns::g0()] {
            assert_eq!(p.len(), 7);
            assert!(p.is_semiorder());
            assert!(!p.has_dimension_at_most_2().unwrap());
        }
    }

    #[test]
    fn json_round_trip() {
        let p = patterns::g0();
        let back = Poset::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert!(Poset::from_json("{\"n\":2,\"lt\":[[0,1],[1,0]]}").is_err());
    }
}
