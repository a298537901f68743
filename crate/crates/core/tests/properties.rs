//! Randomized invariants for the stream machinery and the witness library.

use proptest::prelude::*;

use weihrauch_core::fixtures::{registered_witnesses, suite_acc};
use weihrauch_core::names::{
    apply, compose, deinterleave, interleave, NameStream, Prefix, Transducer,
};
use weihrauch_core::problems::acc_nat;
use weihrauch_core::reductions::{check_strong, witness_acc_to_seqacc, witness_lpo_neg};
use weihrauch_core::spaces::{
    consistent_with_point, decode, deinterleave_stream, encode, interleave_streams, DecodeVerdict,
    Ordinal, PointDesc, SpaceDesc,
};
use weihrauch_core::{pair, unpair};

fn small_symbols() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..6, 0..24)
}

fn name_stream() -> impl Strategy<Value = NameStream> {
    (small_symbols(), proptest::collection::vec(0u32..6, 1..6))
        .prop_map(|(head, cycle)| NameStream::new(head, cycle))
}

proptest! {
    #[test]
    fn pairing_round_trips(n in 0u64..5000, m in 0u64..5000) {
        let k = pair(n, m);
        prop_assert_eq!(unpair(k), (n, m));
        prop_assert!(k >= n && k >= m);
    }

    #[test]
    fn unpairing_round_trips(k in 0u64..100_000) {
        let (n, m) = unpair(k);
        prop_assert_eq!(pair(n, m), k);
    }

    #[test]
    fn interleave_round_trips(even in small_symbols(), odd in small_symbols()) {
        let even = Prefix::from_symbols(even);
        let odd = Prefix::from_symbols(odd);
        // interleaving only makes sense when the tracks are balanced
        let n = even.len().min(odd.len());
        let even = even.truncated(n);
        let odd = odd.truncated(if n < odd.len() { n } else { odd.len() });
        let woven = interleave(&even, &odd);
        let (back_even, back_odd) = deinterleave(&woven);
        prop_assert!(back_even.is_prefix_of(&even) || even.is_prefix_of(&back_even));
        prop_assert!(back_odd.is_prefix_of(&odd) || odd.is_prefix_of(&back_odd));
    }

    #[test]
    fn stream_interleave_agrees_with_prefix_interleave(
        x in name_stream(),
        y in name_stream(),
        depth in 1usize..40,
    ) {
        let woven = interleave_streams(&x, &y);
        let direct = interleave(&x.at(depth), &y.at(depth));
        prop_assert_eq!(woven.at(2 * depth), direct);
        let (back_x, back_y) = deinterleave_stream(&woven);
        prop_assert_eq!(back_x.at(depth), x.at(depth));
        prop_assert_eq!(back_y.at(depth), y.at(depth));
    }

    #[test]
    fn library_witnesses_are_monotone_on_random_streams(
        x in name_stream(),
        d1 in 1usize..30,
        extra in 1usize..30,
    ) {
        let d2 = d1 + extra;
        let mut transducers = vec![Transducer::identity()];
        for w in [witness_acc_to_seqacc(), witness_lpo_neg().0, witness_lpo_neg().1] {
            transducers.push(w.inner.clone());
            transducers.push(w.outer.clone());
        }
        for t in &transducers {
            let early = apply(t, &x, d1);
            let late = apply(t, &x, d2);
            prop_assert!(
                early.is_prefix_of(&late),
                "{}: {:?} not a prefix of {:?}",
                t.description(), early, late
            );
        }
    }

    #[test]
    fn composition_agrees_with_sequential_application(
        x in name_stream(),
        depth in 1usize..40,
    ) {
        let w = witness_acc_to_seqacc();
        let composed = compose(&w.outer, &w.inner);
        let sequential = w.outer.step(&w.inner.step(&x.at(depth)));
        prop_assert_eq!(composed.step(&x.at(depth)), sequential);
    }

    #[test]
    fn naturals_encode_decode_round_trip(n in 0u64..500, depth in 1usize..20) {
        let name = encode(&SpaceDesc::Naturals, &PointDesc::Nat(n)).unwrap();
        match decode(&SpaceDesc::Naturals, &name.at(depth)) {
            DecodeVerdict::Determined(PointDesc::Nat(m)) => prop_assert_eq!(m, n),
            other => prop_assert!(false, "unexpected verdict {:?}", other),
        }
    }

    #[test]
    fn ordinal_names_are_self_consistent(n in 0u64..30, depth in 1usize..40) {
        let p = PointDesc::Ordinal(Ordinal::Finite(n));
        let name = encode(&SpaceDesc::OmegaPlusOne, &p).unwrap();
        prop_assert!(consistent_with_point(&SpaceDesc::OmegaPlusOne, &name.at(depth), &p).unwrap());
        let omega = PointDesc::Ordinal(Ordinal::Omega);
        let seen_one = depth as u64 > n;
        prop_assert_eq!(
            consistent_with_point(&SpaceDesc::OmegaPlusOne, &name.at(depth), &omega).unwrap(),
            !seen_one
        );
    }

    #[test]
    fn strong_witnesses_ignore_the_input_track(
        noise in name_stream(),
        depth in 8usize..64,
    ) {
        // a strong witness's output track may not depend on the input track
        let w = witness_acc_to_seqacc();
        prop_assert!(w.strong);
        for inst in suite_acc(3) {
            for q in &inst.oracle_solutions {
                let honest = w.outer.step(&interleave(&q.at(depth), &inst.input.at(depth)));
                let noisy = w.outer.step(&interleave(&q.at(depth), &noise.at(depth)));
                prop_assert_eq!(honest, noisy);
            }
        }
    }

    #[test]
    fn eventually_periodic_streams_agree_iff_prefixes_do(
        x in name_stream(),
        y in name_stream(),
    ) {
        // agreement to head length plus twice the cycle length is decisive
        let bound = x.head().len().max(y.head().len())
            + 2 * x.cycle().len() * y.cycle().len()
            + 1;
        let all_equal = (0..bound + 64).all(|i| x.symbol_at(i) == y.symbol_at(i));
        prop_assert_eq!(x.at(bound) == y.at(bound), all_equal);
    }
}

#[test]
fn registered_witness_checks_are_deterministic() {
    for reg in registered_witnesses() {
        let a = weihrauch_core::reductions::check_witness(
            &reg.f,
            &reg.g,
            &reg.witness,
            &reg.suite,
            reg.default_depth,
        )
        .unwrap();
        let b = weihrauch_core::reductions::check_witness(
            &reg.f,
            &reg.g,
            &reg.witness,
            &reg.suite,
            reg.default_depth,
        )
        .unwrap();
        assert_eq!(a.passed(), b.passed(), "{}", reg.name);
    }
}

#[test]
fn strong_check_accepts_the_acc_witness() {
    let suite = suite_acc(4);
    let inputs: Vec<_> = suite.iter().map(|i| i.input.clone()).collect();
    let solutions: Vec<_> = suite
        .iter()
        .map(|i| i.oracle_solutions[0].clone())
        .collect();
    assert!(check_strong(&witness_acc_to_seqacc(), &inputs, &solutions, 64));
    let _ = acc_nat();
}
