//! Property tests over randomized ascent sequences and rational series.

use proptest::prelude::*;

use semiorders::blocks;
use semiorders::{AscentSequence, IntervalRepresentation, Polynomial, Poset, RationalGf};

/// Random valid ascent sequence: each raw draw is folded through the running
/// ascent bound.
fn ascent_sequence(max_extra: usize) -> impl Strategy<Value = AscentSequence> {
    prop::collection::vec(any::<u32>(), 0..max_extra).prop_map(|raw| {
        let mut entries = vec![0u32];
        let mut ascents = 0u32;
        for r in raw {
            let bound = 1 + ascents;
            let value = r % (bound + 1);
            if value > *entries.last().expect("nonempty") {
                ascents += 1;
            }
            entries.push(value);
        }
        AscentSequence::new(entries).expect("constructed under the bound")
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..6).prop_map(|c| Polynomial::from_ints(&c))
}

fn rational_with_constants(
    constants: impl Strategy<Value = i64>,
) -> impl Strategy<Value = RationalGf> {
    (polynomial(), polynomial(), constants).prop_map(|(num, den_tail, constant)| {
        let mut coeffs = vec![constant];
        coeffs.extend(den_tail.coeffs().iter().map(|c| {
            use num_traits::ToPrimitive;
            c.to_i64().expect("small coefficient")
        }));
        RationalGf::new(num, Polynomial::from_ints(&coeffs)).expect("nonzero constant denominator")
    })
}

/// Rational function with an invertible constant term in the denominator.
fn rational() -> impl Strategy<Value = RationalGf> {
    rational_with_constants(prop_oneof![1i64..=6, -6i64..=-1])
}

/// Rational function whose series has integer coefficients (unit constant
/// term in the denominator), like every counting series in the crate.
fn integer_series() -> impl Strategy<Value = RationalGf> {
    rational_with_constants(prop_oneof![Just(1i64), Just(-1i64)])
}

proptest! {
    #[test]
    fn prefixes_stay_valid(seq in ascent_sequence(24)) {
        for len in 1..=seq.len() {
            prop_assert!(AscentSequence::new(seq.entries()[..len].to_vec()).is_ok());
        }
    }

    #[test]
    fn appending_within_the_bound_keeps_validity(seq in ascent_sequence(16), pick in any::<u32>()) {
        let ascents = seq.entries().windows(2).filter(|w| w[0] < w[1]).count() as u32;
        let mut extended = seq.entries().to_vec();
        extended.push(pick % (2 + ascents));
        prop_assert!(AscentSequence::new(extended.clone()).is_ok());
        *extended.last_mut().expect("nonempty") = 2 + ascents;
        prop_assert!(AscentSequence::new(extended).is_err());
    }

    #[test]
    fn display_parse_round_trip(seq in ascent_sequence(20)) {
        let parsed = seq.to_string().parse::<AscentSequence>();
        prop_assert_eq!(parsed.as_ref(), Ok(&seq));
    }

    #[test]
    fn representation_shape(seq in ascent_sequence(24)) {
        let rep = IntervalRepresentation::from_sequence(&seq);
        prop_assert!(rep.is_minimal());
        prop_assert_eq!(rep.point_count(), seq.len());
        // the largest endpoint equals the ascent count
        let ascents = seq.entries().windows(2).filter(|w| w[0] < w[1]).count() as u32;
        prop_assert_eq!(rep.max_right(), ascents);
        prop_assert_eq!(
            rep.has_duplicated_holdings(),
            !seq.has_no_duplicated_holdings()
        );
    }

    #[test]
    fn representation_poset_round_trip(seq in ascent_sequence(40)) {
        let rep = IntervalRepresentation::from_sequence(&seq);
        let back = IntervalRepresentation::from_poset(&rep.to_poset()).expect("interval order");
        prop_assert_eq!(back, rep);
    }

    #[test]
    fn representation_json_round_trip(seq in ascent_sequence(16)) {
        let rep = IntervalRepresentation::from_sequence(&seq);
        let parsed = IntervalRepresentation::from_json(&rep.to_json());
        prop_assert_eq!(parsed.as_ref(), Ok(&rep));
    }

    #[test]
    fn poset_json_round_trip(seq in ascent_sequence(12)) {
        let poset = IntervalRepresentation::from_sequence(&seq).to_poset();
        let parsed = Poset::from_json(&poset.to_json());
        prop_assert_eq!(parsed.as_ref(), Ok(&poset));
    }

    #[test]
    fn decomposition_renders_the_representation(seq in ascent_sequence(18)) {
        let rep = IntervalRepresentation::from_sequence(&seq);
        match blocks::decompose(&seq) {
            Err(err) => {
                prop_assert!(!blocks::is_hereditary(&seq));
                prop_assert!(err.prefix_len <= seq.len());
            }
            Ok(decomp) => {
                prop_assert!(blocks::is_hereditary(&seq));
                prop_assert!(decomp.render().same_interval_set(&rep));
                let text = decomp.to_string();
                let parsed = text.parse::<blocks::BlockDecomposition>();
                prop_assert_eq!(parsed.as_ref(), Ok(&decomp));
            }
        }
    }

    #[test]
    fn rational_arithmetic_distributes(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
    }

    #[test]
    fn coefficients_are_additive(a in integer_series(), b in integer_series()) {
        let sum = a.add(&b);
        let xs = a.coefficients(8);
        let ys = b.coefficients(8);
        let zs = sum.coefficients(8);
        for k in 0..=8 {
            prop_assert_eq!(&zs[k], &(&xs[k] + &ys[k]));
        }
    }

    #[test]
    fn star_satisfies_its_fixed_point_identity(g in rational()) {
        // force a zero constant term by multiplying with x
        let f = RationalGf::x().mul(&g);
        let star = f.star().expect("zero constant term");
        prop_assert_eq!(star.clone(), RationalGf::one().add(&f.mul(&star)));
        prop_assert_eq!(f.plus().expect("zero constant term"), f.mul(&star));
    }

    #[test]
    fn substituting_the_variable_is_identity(a in rational()) {
        prop_assert_eq!(a.substitute(&RationalGf::x()), a);
    }
}
