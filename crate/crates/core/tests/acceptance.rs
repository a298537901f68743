//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Every derived value is checked against an oracle that
//! does not share code with the implementation under test.

use std::collections::BTreeMap;
use std::rc::Rc;

use weihrauch_core::fixtures::{
    c2_mind_change_machine, head_problem, head_realizer, omega_instance, realizer_fixtures,
    registered_witnesses, seqacc_commitment_certificate, suite_acc, suite_c2, suite_lpo,
    suite_neq_naturals, suite_neq_product_for_pairing, suite_seqacc, suite_sierp_neg,
};
use weihrauch_core::games::{
    adjudicate, certificate_fixtures, extract_reduction, play, strategy_i_from_certificate,
    strategy_i_from_instance, strategy_ii_constant, strategy_ii_from_mind_change,
    strategy_ii_from_realizer, translate_to_commit, Adjudication, GameConfig, GameKind, Role,
};
use weihrauch_core::names::{check_monotone, NameStream, Prefix};
use weihrauch_core::problems::{
    acc_nat, c_fin, lpo, neq, seqacc_nat, sierp_neg, Instance, VerdictStatus,
};
use weihrauch_core::reductions::{
    candidate_layered_early_commit, candidate_naive_strong_lpo_neg, canonical_seqacc_certificate,
    check_witness, compose_witness, family_layered_commit_adversary, family_lpo_neg_adversary,
    lift_surjection, refute_witness, surjection_pairing, validate_certificate,
    witness_acc_to_seqacc, witness_from_certificate, witness_lpo_neg, witness_omega_example,
    witness_seqacc_to_acc, RefuteBounds, RefuteOutcome,
};
use weihrauch_core::spaces::{
    cb_rank, consistent_with_point, encode, isolated, Ordinal, PointDesc, SpaceDesc,
};
use weihrauch_core::{pair, unpair};

fn report(criterion: u32, what: &str) {
    println!("criterion {criterion}: PASS - {what}");
}

#[test]
fn criterion_01_acc_seqacc_round_trip() {
    let acc = acc_nat();
    let seqacc = seqacc_nat();
    let fwd = check_witness(&acc, &seqacc, &witness_acc_to_seqacc(), &suite_acc(8), 128).unwrap();
    assert!(fwd.passed(), "{:?}", fwd.outcome);
    let bwd = check_witness(&seqacc, &acc, &witness_seqacc_to_acc(), &suite_seqacc(6), 128).unwrap();
    assert!(bwd.passed(), "{:?}", bwd.outcome);
    let composed = compose_witness(&witness_acc_to_seqacc(), &witness_seqacc_to_acc());
    let round = check_witness(&acc, &acc, &composed, &suite_acc(6), 256).unwrap();
    assert!(round.passed(), "{:?}", round.outcome);
    report(1, "ACC/SEQACC round trip witnesses pass, composition included");
}

#[test]
fn criterion_02_library_transducers_monotone() {
    let mut transducers = vec![
        ("head realizer", head_realizer()),
        ("identity", weihrauch_core::names::Transducer::identity()),
    ];
    for w in [
        witness_acc_to_seqacc(),
        witness_seqacc_to_acc(),
        witness_lpo_neg().0,
        witness_lpo_neg().1,
        witness_omega_example().0,
        witness_omega_example().1,
        lift_surjection(&surjection_pairing()).unwrap(),
        witness_from_certificate(&canonical_seqacc_certificate(), 6).unwrap(),
        extract_reduction(
            &strategy_i_from_certificate(&seqacc_nat(), &seqacc_commitment_certificate()).unwrap(),
            &seqacc_nat(),
            &SpaceDesc::Naturals,
        ),
    ] {
        transducers.push(("inner", w.inner.clone()));
        transducers.push(("outer", w.outer.clone()));
    }
    assert!(transducers.len() >= 8);
    for (label, t) in &transducers {
        let rep = check_monotone(t, 8, 6).unwrap();
        assert!(rep.is_empty(), "{label}: {:?}", rep.violations);
    }
    report(2, "all library transducers monotone at alphabet 8, depth 6");
}

#[test]
fn criterion_03_discontinuity_certificate_pipeline() {
    let cert = canonical_seqacc_certificate();
    validate_certificate(&cert, 6).unwrap();
    let w = witness_from_certificate(&cert, 6).unwrap();
    let rep = check_witness(&acc_nat(), &seqacc_nat(), &w, &suite_acc(6), 128).unwrap();
    assert!(rep.passed(), "{:?}", rep.outcome);
    report(3, "canonical discontinuity certificate validates and its witness passes");
}

#[test]
fn criterion_04_commitment_game_pipeline() {
    let f = seqacc_nat();
    let cfg = GameConfig::new(GameKind::ConstantCommit, f.clone()).unwrap();
    let cert = seqacc_commitment_certificate();
    let s_i = strategy_i_from_certificate(&f, &cert).unwrap();
    let fixtures = certificate_fixtures(&cert, 16, 8);
    for value in 0..=8u32 {
        for time in 0..=16usize {
            let trace = play(&cfg, &s_i, &strategy_ii_constant(value, time), 64);
            let adj = adjudicate(&cfg, &trace, &fixtures);
            assert!(
                matches!(adj, Adjudication::IWins { .. }),
                "value {value} time {time}: {adj}"
            );
        }
    }
    let w = extract_reduction(&s_i, &f, &SpaceDesc::Naturals);
    let g_neq = neq(&SpaceDesc::Naturals).unwrap();
    let rep = check_witness(&g_neq, &f, &w, &suite_neq_naturals(6), 128).unwrap();
    assert!(rep.passed(), "{:?}", rep.outcome);
    report(4, "certificate strategy wins the 9x17 commitment grid; extraction passes");
}

#[test]
fn criterion_05_realizer_strategies_never_lose_rule_three() {
    let triples = realizer_fixtures();
    assert!(triples.len() >= 3);
    for (problem, realizer, instances) in triples {
        let cfg = GameConfig::new(GameKind::Wadge, problem.clone()).unwrap();
        let s_ii = strategy_ii_from_realizer(&realizer, "realizer");
        for inst in &instances {
            let s_i = strategy_i_from_instance(inst);
            let trace = play(&cfg, &s_i, &s_ii, 128);
            let adj = adjudicate(&cfg, &trace, &instances);
            assert!(
                !matches!(adj, Adjudication::IWins { rule: 3, .. }),
                "{} / {}: {adj}",
                problem.name,
                inst.label
            );
        }
    }
    report(5, "realizer-driven strategies never lose by rule 3 on fixtures");
}

#[test]
fn criterion_06_lpo_negation_equivalence() {
    let (not_le_lpo, lpo_le_not) = witness_lpo_neg();
    let a = check_witness(&sierp_neg(), &lpo(), &not_le_lpo, &suite_sierp_neg(), 64).unwrap();
    assert!(a.passed(), "{:?}", a.outcome);
    let b = check_witness(&lpo(), &sierp_neg(), &lpo_le_not, &suite_lpo(), 64).unwrap();
    assert!(b.passed(), "{:?}", b.outcome);
    assert!(
        suite_sierp_neg().len() + suite_lpo().len() >= 10,
        "need at least 10 fixtures"
    );
    let outcome = refute_witness(
        &lpo(),
        &sierp_neg(),
        &candidate_naive_strong_lpo_neg(),
        &family_lpo_neg_adversary(),
        RefuteBounds {
            depth: 32,
            max_moves: 8,
            schedule_budget: 10_000,
        },
    );
    assert!(matches!(outcome, RefuteOutcome::Counterexample(_)), "{outcome:?}");
    report(6, "both negation/LPO witnesses pass; naive strong candidate refuted");
}

#[test]
fn criterion_07_layered_inequality_pattern() {
    let layered = SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals);
    let product = SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne);
    let outcome = refute_witness(
        &neq(&layered).unwrap(),
        &neq(&product).unwrap(),
        &candidate_layered_early_commit(),
        &family_layered_commit_adversary(),
        RefuteBounds {
            depth: 64,
            max_moves: 20,
            schedule_budget: 100_000,
        },
    );
    let ce = match outcome {
        RefuteOutcome::Counterexample(ce) => ce,
        other => panic!("expected a counterexample, got {other:?}"),
    };
    assert!(
        ce.schedule.contains(&"reveal ./0".to_string()),
        "expected a commit-then-switch schedule, got {:?}",
        ce.schedule
    );
    let suite = suite_neq_product_for_pairing();
    assert!(suite.len() >= 12);
    let w = lift_surjection(&surjection_pairing()).unwrap();
    let rep = check_witness(&neq(&product).unwrap(), &neq(&layered).unwrap(), &w, &suite, 64)
        .unwrap();
    assert!(rep.passed(), "{:?}", rep.outcome);
    report(7, "naive layered candidate refuted by commit-then-switch; converse lift passes");
}

// --- independent derivative oracle for criterion 8 -------------------------

/// A depth-indexed family of points of a grammar space: every point of the
/// space with "parameter" at most `n`. Independent of `sample_points`.
fn model_points(space: &SpaceDesc, n: u64) -> Vec<PointDesc> {
    match space {
        SpaceDesc::Naturals => (0..=n).map(PointDesc::Nat).collect(),
        SpaceDesc::Finite(k) => (0..*k).map(PointDesc::Fin).collect(),
        SpaceDesc::OmegaPlusOne => {
            let mut pts: Vec<PointDesc> = (0..=n)
                .map(|j| PointDesc::Ordinal(Ordinal::Finite(j)))
                .collect();
            pts.push(PointDesc::Ordinal(Ordinal::Omega));
            pts
        }
        SpaceDesc::Layered(top, bottom) => {
            let mut pts: Vec<PointDesc> = model_points(top, n)
                .into_iter()
                .map(PointDesc::top)
                .collect();
            pts.extend(model_points(bottom, n).into_iter().map(PointDesc::bot));
            pts
        }
        other => panic!("no point model for {other}"),
    }
}

/// The smallest n with p in `model_points(space, n)`; used to budget the
/// isolation search so that every witness point can itself be isolated
/// once its derivative round arrives.
fn model_param(p: &PointDesc) -> u64 {
    match p {
        PointDesc::Nat(n) => *n,
        PointDesc::Fin(_) => 0,
        PointDesc::Ordinal(Ordinal::Finite(n)) => *n,
        PointDesc::Ordinal(Ordinal::Omega) => 0,
        PointDesc::Top(x) => model_param(x),
        PointDesc::Bot(y) => model_param(y),
        other => panic!("no parameter for {other:?}"),
    }
}

/// Cantor–Bendixson rank computed by iterated derivatives over the point
/// model, using only name prefixes and the prefix-membership test: a point
/// is isolated in the r-th derivative iff some finite depth d (bounded by
/// the point's own parameter plus slack) separates it from every surviving
/// point with parameter up to d plus slack.
fn derivative_rank(space: &SpaceDesc, max_rank: u64) -> Option<u64> {
    let mut memo: BTreeMap<(String, u64), bool> = BTreeMap::new();
    fn in_derivative(
        space: &SpaceDesc,
        p: &PointDesc,
        r: u64,
        memo: &mut BTreeMap<(String, u64), bool>,
    ) -> bool {
        if r == 0 {
            return true;
        }
        let key = (format!("{p:?}"), r);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let survives = in_derivative(space, p, r - 1, memo) && {
            let name = encode(space, p).expect("model points encode");
            let budget = model_param(p) as usize + 10;
            let isolated_now = (1..=budget).any(|d| {
                let prefix = name.at(d);
                model_points(space, d as u64 + 4).iter().all(|q| {
                    q == p
                        || !consistent_with_point(space, &prefix, q).unwrap_or(true)
                        || !in_derivative(space, q, r - 1, memo)
                })
            });
            !isolated_now
        };
        memo.insert(key, survives);
        survives
    }
    for r in 1..=max_rank {
        let gone = model_points(space, 4)
            .iter()
            .all(|p| !in_derivative(space, p, r, &mut memo));
        if gone {
            return Some(r);
        }
    }
    None
}

#[test]
fn criterion_08_rank_formula_against_derivative_oracle() {
    let tops = [
        SpaceDesc::Naturals,
        SpaceDesc::Finite(2),
        SpaceDesc::OmegaPlusOne,
        SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals),
        SpaceDesc::layered(SpaceDesc::OmegaPlusOne, SpaceDesc::Naturals),
        SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne),
    ];
    let bottoms = [
        SpaceDesc::Naturals,
        SpaceDesc::Finite(2),
        SpaceDesc::Finite(3),
        SpaceDesc::OmegaPlusOne,
    ];
    let mut cases = 0;
    for top in &tops {
        for bottom in &bottoms {
            let space = SpaceDesc::layered(top.clone(), bottom.clone());
            let formula = cb_rank(&space).unwrap().value();
            let expected_sum = cb_rank(top).unwrap().value() + cb_rank(bottom).unwrap().value();
            assert_eq!(formula, expected_sum, "{space}");
            let oracle = derivative_rank(&space, 8)
                .unwrap_or_else(|| panic!("{space}: derivative oracle found no finite rank"));
            assert_eq!(formula, oracle, "{space}: formula vs derivative oracle");
            cases += 1;
        }
    }
    assert!(cases >= 20, "only {cases} cases");
    // isolation predicates against the derivative characterization: a point
    // is isolated iff it leaves in the first derivative step
    for space in [
        SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals),
        SpaceDesc::layered(SpaceDesc::OmegaPlusOne, SpaceDesc::Naturals),
        SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne),
    ] {
        for p in model_points(&space, 6) {
            let claimed = isolated(&space, &p).unwrap();
            let name = encode(&space, &p).unwrap();
            let observed = (1..=model_param(&p) as usize + 10).any(|d| {
                let prefix = name.at(d);
                model_points(&space, d as u64 + 4)
                    .iter()
                    .all(|q| q == &p || !consistent_with_point(&space, &prefix, q).unwrap_or(true))
            });
            assert_eq!(claimed, observed, "{space}: {p:?}");
        }
    }
    report(8, "rank sum formula matches the derivative oracle on 24 layered pairs");
}

#[test]
fn criterion_09_mind_change_translation() {
    let f = c_fin(2);
    let fixtures = suite_c2();
    let backtrack_cfg = GameConfig::new(GameKind::Backtrack, f.clone()).unwrap();
    let commit_cfg = GameConfig::new(GameKind::ConstantCommit, f.clone()).unwrap();
    let machine_ii = strategy_ii_from_mind_change(&c2_mind_change_machine());
    let translated_ii = translate_to_commit(&machine_ii, 4);
    for inst in &fixtures {
        let s_i = strategy_i_from_instance(inst);
        let back = adjudicate(
            &backtrack_cfg,
            &play(&backtrack_cfg, &s_i, &machine_ii, 64),
            &fixtures,
        );
        assert!(
            matches!(back, Adjudication::IIWins { rule: 3, .. }),
            "backtrack {}: {back}",
            inst.label
        );
        let commit = adjudicate(
            &commit_cfg,
            &play(&commit_cfg, &s_i, &translated_ii, 64),
            &fixtures,
        );
        assert!(
            matches!(commit, Adjudication::IIWins { rule: 3, .. }),
            "commit {}: {commit}",
            inst.label
        );
    }
    report(9, "one-mind-change machine wins backtrack and translated commitment games");
}

/// Independent exact expansion of 2⁻ⁿ as long-division digits.
fn long_division_digits(n: u64, count: usize) -> Vec<u32> {
    let den: u128 = 1u128 << n;
    let mut num: u128 = 1;
    let mut digits = Vec::new();
    for _ in 0..count {
        num *= 10;
        digits.push((num / den) as u32);
        num %= den;
    }
    digits
}

#[test]
fn criterion_10_alternating_decimal_example() {
    let (f_le_c2, c2_le_f) = witness_omega_example();
    for reg in registered_witnesses() {
        if reg.name == "omega-example-to-c2" || reg.name == "c2-to-omega-example" {
            let rep =
                check_witness(&reg.f, &reg.g, &reg.witness, &reg.suite, reg.default_depth).unwrap();
            assert!(rep.passed(), "{}: {:?}", reg.name, rep.outcome);
        }
    }
    let _ = c2_le_f;
    // decoded outputs match (−1)ⁿ2⁻ⁿ within 10⁻¹⁴, against long division
    let scale: i128 = 10i128.pow(16);
    for n in 0..=10u64 {
        let input = encode(&SpaceDesc::OmegaPlusOne, &PointDesc::Ordinal(Ordinal::Finite(n)))
            .unwrap();
        // the surviving option names the sign of (−1)ⁿ
        let q = NameStream::from_head(vec![(n % 2) as u32]);
        let woven = weihrauch_core::names::interleave(&q.at(160), &input.at(160));
        let out = f_le_c2.outer.step(&woven);
        let syms = out.symbols();
        assert!(syms.len() >= 18, "n={n}: only {} symbols", syms.len());
        let negative = syms[0] == 1;
        let mut decoded: i128 = i128::from(syms[1]) * scale;
        for (i, &d) in syms[2..18].iter().enumerate() {
            decoded += i128::from(d) * 10i128.pow(15 - i as u32);
        }
        if negative {
            decoded = -decoded;
        }
        let expected_digits = long_division_digits(n, 16);
        let mut expected: i128 = 0;
        for (i, &d) in expected_digits.iter().enumerate() {
            expected += i128::from(d) * 10i128.pow(15 - i as u32);
        }
        if n % 2 == 1 {
            expected = -expected;
        }
        assert!(
            (decoded - expected).abs() <= 100,
            "n={n}: decoded {decoded} vs expected {expected}"
        );
    }
    // on ω the output must stay within 10⁻¹⁴ of zero as depth grows
    let omega = omega_instance();
    for sign in 0..2u32 {
        let q = NameStream::from_head(vec![sign]);
        let woven = weihrauch_core::names::interleave(&q.at(400), &omega.input.at(400));
        let out = f_le_c2.outer.step(&woven);
        let syms = out.symbols();
        assert_eq!(syms[1], 0, "integer digit on omega");
        for &d in syms[2..].iter().take(16) {
            assert_eq!(d, 0, "fractional digits on omega");
        }
        assert!(syms.len() >= 18, "omega emits enough digits at depth 400");
    }
    report(10, "alternating decimal outputs match long division within 10^-14");
}

#[test]
fn criterion_11_verdict_stability_under_depth_doubling() {
    for reg in registered_witnesses() {
        let d = reg.default_depth;
        let early = check_witness(&reg.f, &reg.g, &reg.witness, &reg.suite, d).unwrap();
        let late = check_witness(&reg.f, &reg.g, &reg.witness, &reg.suite, 2 * d).unwrap();
        for (a, b) in early.records.iter().zip(late.records.iter()) {
            assert_eq!(a.label, b.label);
            for (va, vb) in a.verdicts.iter().zip(b.verdicts.iter()) {
                let flip = matches!(
                    (va.status, vb.status),
                    (VerdictStatus::Verified, VerdictStatus::Refuted)
                        | (VerdictStatus::Refuted, VerdictStatus::Verified)
                );
                assert!(!flip, "{} / {}: {va} then {vb}", reg.name, a.label);
            }
        }
    }
    // the same stability for game adjudication on a fixture game
    let cfg = GameConfig::new(GameKind::Wadge, seqacc_nat()).unwrap();
    let fixtures = suite_seqacc(4);
    for inst in &fixtures {
        let s_i = strategy_i_from_instance(inst);
        let s_ii = strategy_ii_from_realizer(
            &weihrauch_core::names::Transducer::new("answer zero eventually", |u: &Prefix| {
                if u.len() >= 4 {
                    Prefix::from([0])
                } else {
                    Prefix::new()
                }
            }),
            "late zero",
        );
        let early = adjudicate(&cfg, &play(&cfg, &s_i, &s_ii, 32), &fixtures);
        let late = adjudicate(&cfg, &play(&cfg, &s_i, &s_ii, 64), &fixtures);
        if !early.bound_dependent() {
            if let Some(w) = early.winner() {
                assert_eq!(late.winner(), Some(w), "{}: {early} vs {late}", inst.label);
            }
        }
    }
    report(11, "no Verified/Refuted verdict flips when depth doubles");
}

#[test]
fn sanity_pairing_is_the_standard_one() {
    // spot checks of the diagonal enumeration used throughout
    assert_eq!(pair(0, 0), 0);
    assert_eq!(unpair(pair(3, 5)), (3, 5));
    for n in 0..20u64 {
        for m in 0..20u64 {
            assert!(pair(n, m) >= n && pair(n, m) >= m);
        }
    }
}

#[test]
fn sanity_registered_games_adjudicate_deterministically() {
    for game in weihrauch_core::fixtures::registered_games() {
        let cfg = GameConfig::new(game.kind, game.problem.clone()).unwrap();
        let t1 = play(&cfg, &game.strategy_i, &game.strategy_ii, game.default_depth);
        let t2 = play(&cfg, &game.strategy_i, &game.strategy_ii, game.default_depth);
        assert_eq!(t1.moves_i, t2.moves_i, "{}", game.name);
        assert_eq!(
            adjudicate(&cfg, &t1, &game.fixtures),
            adjudicate(&cfg, &t2, &game.fixtures),
            "{}",
            game.name
        );
        assert_eq!(game.strategy_i.role, Role::I);
    }
    let _ = head_problem();
    let _: Rc<dyn Fn(u64) -> Instance> = canonical_seqacc_certificate().sequence;
}
