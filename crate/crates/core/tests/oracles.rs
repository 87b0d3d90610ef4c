//! Cross-checks between independent characterizations of the same classes.

use semiorders::{patterns, AscentSequence, IntervalRepresentation, Poset};

/// Pairwise quantifier form of interval-order-ness: whenever `x < y` and
/// `z < w`, also `x < w` or `z < y`.
fn quantifier_condition(p: &Poset) -> bool {
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            if !p.lt(x, y) {
                continue;
            }
            for z in 0..n {
                for w in 0..n {
                    if p.lt(z, w) && !p.lt(x, w) && !p.lt(z, y) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The five equivalent interval-order characterizations agree on every coded
/// poset (where they must all hold) and on the forbidden patterns themselves.
#[test]
fn interval_order_characterizations_agree() {
    let two_two = patterns::two_plus_two();
    for n in 1..=7 {
        for seq in AscentSequence::enumerate(n).unwrap() {
            let poset = IntervalRepresentation::from_sequence(&seq).to_poset();
            assert!(!poset.contains_induced(&two_two), "{seq}");
            assert!(quantifier_condition(&poset), "{seq}");
            assert!(poset.down_sets_totally_ordered(), "{seq}");
            assert!(poset.up_sets_totally_ordered(), "{seq}");
            assert!(IntervalRepresentation::from_poset(&poset).is_ok(), "{seq}");
        }
    }
    // and the five conditions all fail together on a non-interval order
    assert!(two_two.contains_induced(&two_two));
    assert!(!quantifier_condition(&two_two));
    assert!(!two_two.down_sets_totally_ordered());
    assert!(!two_two.up_sets_totally_ordered());
    assert!(IntervalRepresentation::from_poset(&two_two).is_err());
}

/// The six-point interval order that is not a semiorder: its containment
/// violation shows up as an induced 1+3.
#[test]
fn nested_interval_forces_one_plus_three() {
    let seq: AscentSequence = "(0,1,0,1,2,0)".parse().unwrap();
    let rep = IntervalRepresentation::from_sequence(&seq);
    assert!(!rep.is_semiorder());
    let poset = rep.to_poset();
    assert!(poset.contains_induced(&patterns::one_plus_three()));
    assert!(!poset.contains_induced(&patterns::two_plus_two()));
}

/// Restriction of a poset to a subset of its elements.
fn restrict(p: &Poset, keep: &[usize]) -> Poset {
    let mut pairs = Vec::new();
    for (i, &a) in keep.iter().enumerate() {
        for (j, &b) in keep.iter().enumerate() {
            if p.lt(a, b) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_strict_pairs(keep.len(), &pairs).unwrap()
}

/// A pattern embedding in an induced restriction embeds in the host.
#[test]
fn embedding_is_monotone_under_restriction() {
    let pats = [
        patterns::two_plus_two(),
        patterns::one_plus_three(),
        Poset::chain(3),
        Poset::antichain(3),
    ];
    for n in 5..=7 {
        for seq in AscentSequence::enumerate(n).unwrap().step_by(7) {
            let host = IntervalRepresentation::from_sequence(&seq).to_poset();
            // all subsets of size n-1 and one of size n-2
            let mut subsets: Vec<Vec<usize>> = (0..n)
                .map(|skip| (0..n).filter(|&x| x != skip).collect())
                .collect();
            subsets.push((2..n).collect());
            for keep in subsets {
                let sub = restrict(&host, &keep);
                for pat in &pats {
                    if sub.contains_induced(pat) {
                        assert!(host.contains_induced(pat), "{seq} restricted to {keep:?}");
                    }
                }
            }
        }
    }
}

/// The lazy enumerator yields exactly the known number of length-10
/// sequences, one per unlabeled interval order on 10 points.
#[test]
fn enumerator_cardinality_at_length_ten() {
    assert_eq!(AscentSequence::enumerate(10).unwrap().count(), 201_608);
}
