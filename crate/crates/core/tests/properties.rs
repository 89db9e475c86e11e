use proptest::collection::btree_set;
use proptest::prelude::*;

use subperiod_core::game::reference;
use subperiod_core::periodicity::reference::naive_detect;
use subperiod_core::{
    best_move, detect_period, find_grundy_period, find_period, grundy_sequence, outcome_sequence,
    redundant_elements, verify_certificate, HorizonPolicy, PeriodicityCertificate,
    SubtractionSet, Symbols,
};

fn arb_set(max_elem: u32, max_len: usize) -> impl Strategy<Value = SubtractionSet> {
    btree_set(1..=max_elem, 1..=max_len)
        .prop_map(|s| SubtractionSet::new(s.into_iter().collect()).unwrap())
}

/// Odd elements only, always including 1 (without it `{3}` already breaks
/// parity at position 1).
fn arb_odd_set() -> impl Strategy<Value = SubtractionSet> {
    btree_set(1u32..40, 0..=5).prop_map(|s| {
        let odd = std::iter::once(1).chain(s.into_iter().map(|x| 2 * x + 1));
        SubtractionSet::new(odd.collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn below_min_is_p(set in arb_set(30, 5)) {
        let seq = outcome_sequence(&set, 100).unwrap();
        for p in 0..SubtractionSet::min(&set) as usize {
            prop_assert!(seq.is_p(p));
        }
    }

    #[test]
    fn outcome_recurrence_holds(set in arb_set(80, 6)) {
        let seq = outcome_sequence(&set, 600).unwrap();
        for p in 0..600 {
            let expected = set.elements().iter()
                .any(|&s| s as usize <= p && seq.is_p(p - s as usize));
            prop_assert_eq!(seq.is_n(p), expected, "position {}", p);
        }
    }

    #[test]
    fn grundy_bounded_and_zero_iff_p(set in arb_set(40, 6)) {
        let g = grundy_sequence(&set, 500).unwrap();
        let o = outcome_sequence(&set, 500).unwrap();
        for p in 0..500 {
            prop_assert!(g.values()[p] as usize <= set.len());
            prop_assert_eq!(g.values()[p] == 0, o.is_p(p));
        }
    }

    #[test]
    fn all_odd_sets_play_parity(set in arb_odd_set()) {
        let seq = outcome_sequence(&set, 400).unwrap();
        for p in 0..400 {
            prop_assert_eq!(seq.bit(p) as usize, p % 2);
        }
    }

    #[test]
    fn scaling_law(set in arb_set(12, 4), d in 1u32..6) {
        let base = outcome_sequence(&set, 300).unwrap();
        let scaled = outcome_sequence(&set.scaled(d).unwrap(), 300 * d as usize).unwrap();
        for p in 0..300 * d as usize {
            prop_assert_eq!(scaled.bit(p), base.bit(p / d as usize));
        }
    }

    #[test]
    fn best_move_reaches_p(set in arb_set(20, 4), pos in 0u64..500) {
        let seq = outcome_sequence(&set, 501).unwrap();
        match best_move(&set, pos).unwrap() {
            Some(s) => {
                prop_assert!(seq.is_n(pos as usize));
                prop_assert!(seq.is_p((pos - s as u64) as usize));
                // smallest winning move
                for &t in set.elements().iter().filter(|&&t| t < s && t as u64 <= pos) {
                    prop_assert!(seq.is_n((pos - t as u64) as usize));
                }
            }
            None => {
                prop_assert!(seq.is_p(pos as usize));
                for &t in set.elements().iter().filter(|&&t| t as u64 <= pos) {
                    prop_assert!(seq.is_n((pos - t as u64) as usize));
                }
            }
        }
    }

    #[test]
    fn detection_matches_naive_oracle(set in arb_set(10, 4)) {
        let seq = outcome_sequence(&set, 300).unwrap();
        let fast = detect_period(&seq, set.window()).unwrap();
        prop_assert_eq!(fast, naive_detect(&seq, set.window()));
    }

    #[test]
    fn certificates_are_sound_and_minimal(set in arb_set(14, 4)) {
        let report = find_period(&set, &HorizonPolicy::default()).unwrap();
        let cert = report.certificate;
        let m = set.window();
        let long = outcome_sequence(&set, 3 * cert.required_len()).unwrap();
        prop_assert!(verify_certificate(&long, &cert).unwrap());
        for q in cert.preperiod..long.len() - cert.period {
            prop_assert_eq!(long.bit(q), long.bit(q + cert.period));
        }
        for p in 1..cert.period {
            for l in 0..=cert.preperiod + cert.period {
                let c = PeriodicityCertificate { preperiod: l, period: p, window: m, horizon: 0 };
                prop_assert!(!verify_certificate(&long, &c).unwrap(), "p={} l={}", p, l);
            }
        }
        if cert.preperiod > 0 {
            let c = PeriodicityCertificate { preperiod: cert.preperiod - 1, ..cert };
            prop_assert!(!verify_certificate(&long, &c).unwrap());
        }
    }

    #[test]
    fn outcome_period_divides_grundy_period(set in arb_set(12, 4)) {
        let policy = HorizonPolicy::default();
        let o = find_period(&set, &policy).unwrap();
        let g = find_grundy_period(&set, &policy).unwrap();
        prop_assert_eq!(g.period() % o.period(), 0);
        prop_assert!(o.preperiod() <= g.preperiod());
    }

    #[test]
    fn redundancy_is_consistent(set in arb_set(12, 4).prop_filter("two or more", |s| s.len() >= 2)) {
        let policy = HorizonPolicy::default();
        let full = find_period(&set, &policy).unwrap();
        for s in redundant_elements(&set, &policy).unwrap() {
            let reduced = find_period(&set.without(s).unwrap(), &policy).unwrap();
            prop_assert_eq!(full.preperiod(), reduced.preperiod());
            prop_assert_eq!(full.period(), reduced.period());
            prop_assert_eq!(full.block(), reduced.block());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kernel_matches_reference_long(set in arb_set(64, 6)) {
        let fast: Vec<u8> = outcome_sequence(&set, 100_000).unwrap().bits().collect();
        prop_assert_eq!(fast, reference::outcome_bits(&set, 100_000));
    }

    #[test]
    fn kernel_matches_reference_large_elements(set in arb_set(400, 5)) {
        let fast: Vec<u8> = outcome_sequence(&set, 20_000).unwrap().bits().collect();
        prop_assert_eq!(fast, reference::outcome_bits(&set, 20_000));
    }

    #[test]
    fn grundy_stream_matches_full_history(set in arb_set(50, 6)) {
        let g = grundy_sequence(&set, 2_000).unwrap();
        let expected = reference::grundy_values(&set, 2_000);
        prop_assert_eq!(g.values(), expected.as_slice());
    }
}

#[test]
fn termination_bound_holds_for_small_windows() {
    for mask in 1u32..(1 << 8) {
        let elements: Vec<u32> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let set = SubtractionSet::new(elements).unwrap();
        let m = set.window();
        let horizon = (1usize << m) + 2 * m;
        let seq = outcome_sequence(&set, horizon).unwrap();
        let cert = detect_period(&seq, m).unwrap().expect("bounded state space");
        assert!(cert.preperiod + cert.period <= 1 << m, "{set}");
        assert_eq!(seq.len(), Symbols::len(&seq));
    }
}
