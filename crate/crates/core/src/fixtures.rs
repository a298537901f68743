//! Shared fixtures: toy problems with evident realizers, instance suites
//! with oracle solutions, and named registries of witnesses, refuter
//! candidates, and games for the command-line front end.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::games::{
    certificate_fixtures, strategy_i_from_certificate, strategy_i_from_instance,
    strategy_ii_constant, strategy_ii_from_mind_change, strategy_ii_from_realizer, GameKind,
    LeastCommitmentCertificate, MindChangeMachine, Strategy, ERASE,
};
use crate::names::{pair, NameStream, Prefix, Transducer};
use crate::problems::{
    acc_nat, c_fin, first_order_verdict, lpo, neq, omega_example_expansions, seqacc_nat,
    sierp_neg, DomainVerdict, Instance, Problem, Verdict,
};
use crate::reductions::{
    candidate_layered_early_commit, candidate_naive_strong_lpo_neg, canonical_seqacc_certificate,
    family_acc_adversary, family_layered_commit_adversary, family_lpo_neg_adversary,
    lift_subspace, lift_surjection, surjection_pairing, surjection_proj1,
    witness_acc_to_seqacc, witness_from_certificate, witness_identity, witness_lpo_neg,
    witness_omega_example, witness_seqacc_to_acc, AdversarialFamily, RefuteBounds, WitnessPair,
};
use crate::reductions::embedding_finite_in_naturals;
use crate::spaces::{completion_of, encode, Ordinal, PointDesc, SpaceDesc};

// ---------------------------------------------------------------------------
// toy problems with evident realizers
// ---------------------------------------------------------------------------

/// Output the first symbol of the input stream.
pub fn head_problem() -> Problem {
    Problem::new(
        "HEAD",
        SpaceDesc::Baire,
        SpaceDesc::Naturals,
        |_: &Prefix| DomainVerdict::StillValid,
        |instance: &Instance, output: &Prefix, _depth: usize| {
            let want = instance.input.symbol_at(0) as u64;
            first_order_verdict(&SpaceDesc::Naturals, output, |m| {
                if m == want {
                    Verdict::verified("output matches the first input symbol")
                } else {
                    Verdict::refuted("output differs from the first input symbol")
                }
            })
        },
        false,
        "output the first symbol of the input",
    )
}

pub fn head_realizer() -> Transducer {
    Transducer::new("first symbol then zeros", |u: &Prefix| match u.symbols().first() {
        Some(&s) => {
            let mut out = vec![s];
            out.extend(vec![0u32; u.len() - 1]);
            Prefix::from_symbols(out)
        }
        None => Prefix::new(),
    })
}

/// Reproduce the input stream verbatim. Correctness is only negatively
/// observable (stream equality is not finitely verifiable), so the output
/// is relaxed: unrefuted counts as passing.
pub fn copy_problem() -> Problem {
    Problem::new(
        "COPY",
        SpaceDesc::Baire,
        SpaceDesc::Baire,
        |_: &Prefix| DomainVerdict::StillValid,
        |instance: &Instance, output: &Prefix, _depth: usize| {
            for (i, &s) in output.symbols().iter().enumerate() {
                if s != instance.input.symbol_at(i) {
                    return Verdict::refuted(format!("output differs at position {i}"));
                }
            }
            Verdict::undetermined("output agrees so far")
        },
        true,
        "reproduce the input stream",
    )
}

pub fn copy_realizer() -> Transducer {
    Transducer::identity()
}

/// The one-mind-change solver for binary choice: guess option 0; if 0 gets
/// excluded, erase and answer 1.
pub fn c2_mind_change_machine() -> MindChangeMachine {
    MindChangeMachine {
        label: "C_2 one mind change".to_string(),
        t: Transducer::new("guess 0, flip if 0 is excluded", |u: &Prefix| {
            if u.is_empty() {
                Prefix::new()
            } else if u.symbols().contains(&1) {
                Prefix::from([0, ERASE, 1])
            } else {
                Prefix::from([0])
            }
        }),
    }
}

// ---------------------------------------------------------------------------
// instance suites (all carrying oracle solutions)
// ---------------------------------------------------------------------------

pub fn ordinal_instance(j: u64, forbidden: u32) -> Instance {
    Instance::new(
        format!("ordinal {j}"),
        encode(&SpaceDesc::OmegaPlusOne, &PointDesc::Ordinal(Ordinal::Finite(j)))
            .expect("ordinals encode"),
    )
    .with_oracle_solutions(vec![NameStream::from_head(vec![forbidden + 1])])
}

pub fn omega_instance() -> Instance {
    Instance::new(
        "omega",
        encode(&SpaceDesc::OmegaPlusOne, &PointDesc::Ordinal(Ordinal::Omega))
            .expect("omega encodes"),
    )
    .with_oracle_solutions(vec![NameStream::from_head(vec![0])])
}

/// The empty exclusion plus every singleton exclusion `U = {k}` revealed at
/// stage `s`, for `k, s ≤ bound`. Oracle solutions answer `k + 1`, which
/// also survives the sequential-choice translation of the instance.
pub fn suite_acc(bound: u32) -> Vec<Instance> {
    let mut suite = vec![Instance::new("U empty", NameStream::constant(0))
        .with_oracle_solutions(vec![NameStream::from_head(vec![0])])];
    for k in 0..=bound {
        for s in 0..=bound {
            let mut head = vec![0u32; s as usize];
            head.push(k + 1);
            suite.push(
                Instance::new(format!("U={{{k}}} at {s}"), NameStream::from_head(head))
                    .with_oracle_solutions(vec![NameStream::from_head(vec![k + 1])]),
            );
        }
    }
    suite
}

/// ω plus every finite ordinal `⟨n, m⟩` for `n, m ≤ bound`. Oracle
/// solutions answer `n + 1`, which the all-or-co-one translation accepts.
pub fn suite_seqacc(bound: u64) -> Vec<Instance> {
    let mut suite = vec![omega_instance()];
    for n in 0..=bound {
        for m in 0..=bound {
            suite.push(ordinal_instance(pair(n, m), n as u32));
        }
    }
    suite
}

/// Sierpiński inputs for the negation problem: ⊥ and ⊤ revealed at several
/// stages. Oracle solutions are names of the negated answer.
pub fn suite_sierp_neg() -> Vec<Instance> {
    let mut suite = vec![Instance::new("bottom", NameStream::constant(0))
        .with_oracle_solutions(vec![NameStream::from_head(vec![1])])];
    for s in [0usize, 2, 5] {
        let mut head = vec![0u32; s];
        head.push(1);
        suite.push(
            Instance::new(format!("top at {s}"), NameStream::from_head(head))
                .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
        );
    }
    suite
}

/// Cantor inputs for LPO: the all-zero stream (answer 1) and streams with a
/// 1 at several positions (answer 0). Oracle solutions name the negation's
/// answer, including a delayed ⊤.
pub fn suite_lpo() -> Vec<Instance> {
    let mut suite = vec![Instance::new("all zero", NameStream::constant(0))
        .with_oracle_solutions(vec![
            NameStream::from_head(vec![1]),
            NameStream::from_head(vec![0, 0, 1]),
        ])];
    for k in [0usize, 1, 3, 6, 10] {
        let mut head = vec![0u32; k];
        head.push(1);
        suite.push(
            Instance::new(format!("1 at {k}"), NameStream::from_head(head))
                .with_oracle_solutions(vec![NameStream::constant(0)]),
        );
    }
    suite
}

/// Completed-name instances for inequality on `N`: embedded numbers plus
/// the fresh bottom. Oracle solutions answer a different number.
pub fn suite_neq_naturals(bound: u64) -> Vec<Instance> {
    let compl = completion_of(&SpaceDesc::Naturals);
    let mut suite = Vec::new();
    for k in 0..=bound {
        let input = encode(&compl, &PointDesc::embedded(PointDesc::Nat(k)))
            .expect("embedded numbers encode");
        suite.push(
            Instance::new(format!("embedded {k}"), input)
                .with_oracle_solutions(vec![NameStream::from_head(vec![k as u32 + 1])]),
        );
    }
    suite.push(
        Instance::new("bottom", NameStream::constant(0))
            .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
    );
    suite
}

fn product_point(n: u64, m: Option<u64>) -> PointDesc {
    PointDesc::pair(
        PointDesc::Nat(n),
        PointDesc::Ordinal(match m {
            Some(m) => Ordinal::Finite(m),
            None => Ordinal::Omega,
        }),
    )
}

/// Completed-name instances for inequality on `N*(w+1)` whose oracle
/// solutions answer on the `N` side (for the projection lifting).
pub fn suite_neq_product_for_proj1() -> Vec<Instance> {
    let x_space = SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne);
    let compl = completion_of(&x_space);
    let mut suite = Vec::new();
    for n in 0..5u64 {
        for m in [None, Some(2u64)] {
            let input = encode(&compl, &PointDesc::embedded(product_point(n, m)))
                .expect("product points encode");
            let tag = match m {
                None => "omega".to_string(),
                Some(m) => format!("{m}"),
            };
            suite.push(
                Instance::new(format!("({n}, {tag})"), input)
                    .with_oracle_solutions(vec![NameStream::from_head(vec![n as u32 + 1])]),
            );
        }
    }
    suite.push(
        Instance::new("bottom", NameStream::constant(0))
            .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
    );
    suite
}

/// Completed-name instances for inequality on `N*(w+1)` whose oracle
/// solutions answer on the layered `N/N` side (for the pairing lifting).
pub fn suite_neq_product_for_pairing() -> Vec<Instance> {
    let x_space = SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne);
    let compl = completion_of(&x_space);
    let mut suite = Vec::new();
    for n in 0..4u64 {
        let input = encode(&compl, &PointDesc::embedded(product_point(n, None)))
            .expect("product points encode");
        // (n, ω) folds to ·/n; the top point 0/· always differs
        suite.push(
            Instance::new(format!("({n}, omega)"), input)
                .with_oracle_solutions(vec![NameStream::from_head(vec![2, 0])]),
        );
        for m in 0..3u64 {
            let input = encode(&compl, &PointDesc::embedded(product_point(n, Some(m))))
                .expect("product points encode");
            // (n, m) folds to ⟨n,m⟩/·; the bottom point ·/(n+1) differs
            let mut unary = vec![0u32; n as usize + 1];
            unary.push(1);
            suite.push(
                Instance::new(format!("({n}, {m})"), input)
                    .with_oracle_solutions(vec![NameStream::from_head(unary)]),
            );
        }
    }
    suite.push(
        Instance::new("bottom", NameStream::constant(0))
            .with_oracle_solutions(vec![NameStream::from_head(vec![2, 0])]),
    );
    suite
}

/// Ordinal inputs for the alternating decimal function, with the exact
/// decimal expansion as the oracle solution.
pub fn suite_omega_example() -> Vec<Instance> {
    let mut suite = Vec::new();
    for n in 0..8u64 {
        suite.push(
            Instance::new(
                format!("n={n}"),
                encode(&SpaceDesc::OmegaPlusOne, &PointDesc::Ordinal(Ordinal::Finite(n)))
                    .expect("ordinals encode"),
            )
            .with_oracle_solutions(vec![NameStream::from_head(vec![(n % 2) as u32])]),
        );
    }
    suite.push(omega_instance().with_oracle_solutions(vec![
        NameStream::from_head(vec![0]),
        NameStream::from_head(vec![1]),
    ]));
    suite
}

/// Binary-choice inputs (possibly delayed exclusions) whose oracle
/// solutions are the exact decimal expansions of the ordinal the canonical
/// reverse witness heads for.
pub fn suite_c2_for_omega_example() -> Vec<Instance> {
    let mut suite = Vec::new();
    let classes: Vec<(&str, Vec<u32>)> =
        vec![("nothing excluded", vec![]), ("exclude 0", vec![0]), ("exclude 1", vec![1])];
    for (label, excluded) in classes {
        for delay in [0usize, 3] {
            let mut head = vec![0u32; delay];
            for &e in &excluded {
                head.push(e + 1);
            }
            let input = NameStream::from_head(head);
            let solution = match input
                .at(64)
                .symbols()
                .iter()
                .enumerate()
                .find(|&(_, &s)| s != 0)
            {
                Some((s, &sym)) => {
                    let e = sym - 1;
                    let choice = 1 - (e % 2);
                    let n = if s as u32 % 2 == choice { s } else { s + 1 };
                    omega_example_expansions(Ordinal::Finite(n as u64)).remove(0)
                }
                None => omega_example_expansions(Ordinal::Omega).remove(0),
            };
            suite.push(
                Instance::new(format!("{label}, delay {delay}"), input)
                    .with_oracle_solutions(vec![solution]),
            );
        }
    }
    suite
}

/// Binary-choice fixtures for the game tournaments.
pub fn suite_c2() -> Vec<Instance> {
    vec![
        Instance::new("nothing excluded", NameStream::constant(0))
            .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
        Instance::new("exclude 0 late", NameStream::from_head(vec![0, 0, 1]))
            .with_oracle_solutions(vec![NameStream::from_head(vec![1])]),
        Instance::new("exclude 1", NameStream::from_head(vec![2]))
            .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
    ]
}

/// Mixed inputs for inequality on `N` against the subspace lifting into
/// `Fin(2)`: numbers inside and outside the subspace, plus bottom.
pub fn suite_neq_for_subspace_lift() -> Vec<Instance> {
    let compl = completion_of(&SpaceDesc::Naturals);
    let embed = |k: u64| {
        encode(&compl, &PointDesc::embedded(PointDesc::Nat(k))).expect("embedded numbers encode")
    };
    vec![
        Instance::new("embedded 0", embed(0))
            .with_oracle_solutions(vec![NameStream::from_head(vec![1])]),
        Instance::new("embedded 1", embed(1))
            .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
        Instance::new("embedded 5", embed(5))
            .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
        Instance::new("bottom", NameStream::constant(0))
            .with_oracle_solutions(vec![NameStream::from_head(vec![1])]),
    ]
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

/// The canonical least-commitment certificate for sequential choice on
/// ω+1: the chain of zero prefixes heads for ω; a commitment to value `i`
/// at stage `j` is punished by the ordinal `⟨i, m⟩` with `pair(i, m)` far
/// enough beyond `j` that late switches stay consistent.
pub fn seqacc_commitment_certificate() -> LeastCommitmentCertificate {
    LeastCommitmentCertificate {
        label: "seqacc least commitment".to_string(),
        chain: Rc::new(|j| Prefix::from_symbols(vec![0; j])),
        extension: Rc::new(|j, i| {
            let m = (0..)
                .find(|&m| pair(i as u64, m) >= (j as u64) + 32)
                .expect("pairing is unbounded");
            ordinal_instance(pair(i as u64, m), i)
        }),
        limit: omega_instance(),
    }
}

// ---------------------------------------------------------------------------
// registries
// ---------------------------------------------------------------------------

/// A cataloged candidate reduction with everything needed to check it.
pub struct RegisteredWitness {
    pub name: String,
    pub f: Problem,
    pub g: Problem,
    pub witness: WitnessPair,
    pub suite: Vec<Instance>,
    pub default_depth: usize,
}

pub fn registered_witnesses() -> Vec<RegisteredWitness> {
    let (not_le_lpo, lpo_le_not) = witness_lpo_neg();
    let (f_le_c2, c2_le_f) = witness_omega_example();
    let product = SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne);
    let layered = SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals);
    let seqacc = seqacc_nat();
    let extracted = {
        let cert = seqacc_commitment_certificate();
        let s_i = strategy_i_from_certificate(&seqacc, &cert)
            .expect("the canonical certificate validates");
        crate::games::extract_reduction(&s_i, &seqacc, &SpaceDesc::Naturals)
    };
    vec![
        RegisteredWitness {
            name: "acc-to-seqacc".to_string(),
            f: acc_nat(),
            g: seqacc_nat(),
            witness: witness_acc_to_seqacc(),
            suite: suite_acc(8),
            default_depth: 256,
        },
        RegisteredWitness {
            name: "seqacc-to-acc".to_string(),
            f: seqacc_nat(),
            g: acc_nat(),
            witness: witness_seqacc_to_acc(),
            suite: suite_seqacc(6),
            default_depth: 128,
        },
        RegisteredWitness {
            name: "identity-acc".to_string(),
            f: acc_nat(),
            g: acc_nat(),
            witness: witness_identity("id"),
            suite: suite_acc(6),
            default_depth: 128,
        },
        RegisteredWitness {
            name: "not-to-lpo".to_string(),
            f: sierp_neg(),
            g: lpo(),
            witness: not_le_lpo,
            suite: suite_sierp_neg(),
            default_depth: 64,
        },
        RegisteredWitness {
            name: "lpo-to-not".to_string(),
            f: lpo(),
            g: sierp_neg(),
            witness: lpo_le_not,
            suite: suite_lpo(),
            default_depth: 64,
        },
        RegisteredWitness {
            name: "omega-example-to-c2".to_string(),
            f: crate::problems::omega_example_f(),
            g: c_fin(2),
            witness: f_le_c2,
            suite: suite_omega_example(),
            default_depth: 128,
        },
        RegisteredWitness {
            name: "c2-to-omega-example".to_string(),
            f: c_fin(2),
            g: crate::problems::omega_example_f(),
            witness: c2_le_f,
            suite: suite_c2_for_omega_example(),
            default_depth: 64,
        },
        RegisteredWitness {
            name: "neq-subspace-lift".to_string(),
            f: neq(&SpaceDesc::Naturals).expect("N has enough points"),
            g: neq(&SpaceDesc::Finite(2)).expect("Fin(2) has enough points"),
            witness: lift_subspace(&embedding_finite_in_naturals(2)),
            suite: suite_neq_for_subspace_lift(),
            default_depth: 64,
        },
        RegisteredWitness {
            name: "neq-proj1-lift".to_string(),
            f: neq(&product).expect("the product has enough points"),
            g: neq(&SpaceDesc::Naturals).expect("N has enough points"),
            witness: lift_surjection(&surjection_proj1()).expect("proj1 section validates"),
            suite: suite_neq_product_for_proj1(),
            default_depth: 64,
        },
        RegisteredWitness {
            name: "neq-pairing-lift".to_string(),
            f: neq(&product).expect("the product has enough points"),
            g: neq(&layered).expect("the layered space has enough points"),
            witness: lift_surjection(&surjection_pairing()).expect("pairing section validates"),
            suite: suite_neq_product_for_pairing(),
            default_depth: 64,
        },
        RegisteredWitness {
            name: "acc-to-seqacc-certificate".to_string(),
            f: acc_nat(),
            g: seqacc_nat(),
            witness: witness_from_certificate(&canonical_seqacc_certificate(), 6)
                .expect("the canonical certificate validates"),
            suite: suite_acc(6),
            default_depth: 128,
        },
        RegisteredWitness {
            name: "neq-extracted-from-game".to_string(),
            f: neq(&SpaceDesc::Naturals).expect("N has enough points"),
            g: seqacc,
            witness: extracted,
            suite: suite_neq_naturals(6),
            default_depth: 128,
        },
    ]
}

/// A cataloged refutation job: a documented-bad candidate witness and the
/// adversarial family that breaks it.
pub struct RegisteredCandidate {
    pub name: String,
    pub f: Problem,
    pub g: Problem,
    pub candidate: WitnessPair,
    pub family: AdversarialFamily,
    pub bounds: RefuteBounds,
    /// Whether the bounded search is expected to find a counterexample.
    pub expect_counterexample: bool,
}

pub fn registered_candidates() -> Vec<RegisteredCandidate> {
    let product = SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne);
    let layered = SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals);
    let (_, lpo_le_not) = witness_lpo_neg();
    vec![
        RegisteredCandidate {
            name: "acc-constant-zero".to_string(),
            f: acc_nat(),
            g: acc_nat(),
            candidate: WitnessPair {
                name: "constant zero outer".to_string(),
                inner: Transducer::identity(),
                outer: Transducer::new("always 0", |u: &Prefix| {
                    Prefix::from_symbols(vec![0; u.len() / 2 + 1])
                }),
                strong: true,
            },
            family: family_acc_adversary(),
            bounds: RefuteBounds {
                depth: 16,
                max_moves: 4,
                schedule_budget: 10_000,
            },
            expect_counterexample: true,
        },
        RegisteredCandidate {
            name: "lpo-naive-strong".to_string(),
            f: lpo(),
            g: sierp_neg(),
            candidate: candidate_naive_strong_lpo_neg(),
            family: family_lpo_neg_adversary(),
            bounds: RefuteBounds::default(),
            expect_counterexample: true,
        },
        RegisteredCandidate {
            name: "lpo-honest".to_string(),
            f: lpo(),
            g: sierp_neg(),
            candidate: lpo_le_not,
            family: family_lpo_neg_adversary(),
            bounds: RefuteBounds::default(),
            expect_counterexample: false,
        },
        RegisteredCandidate {
            name: "layered-early-commit".to_string(),
            f: neq(&layered).expect("the layered space has enough points"),
            g: neq(&product).expect("the product has enough points"),
            candidate: candidate_layered_early_commit(),
            family: family_layered_commit_adversary(),
            bounds: RefuteBounds {
                depth: 64,
                max_moves: 20,
                schedule_budget: 100_000,
            },
            expect_counterexample: true,
        },
    ]
}

/// A cataloged game setup: both strategies, the ground-truth fixtures, and
/// the default depth.
pub struct RegisteredGame {
    pub name: String,
    pub kind: GameKind,
    pub problem: Problem,
    pub strategy_i: Strategy,
    pub strategy_ii: Strategy,
    pub fixtures: Vec<Instance>,
    pub default_depth: usize,
}

pub fn registered_games() -> Vec<RegisteredGame> {
    let seqacc = seqacc_nat();
    let cert = seqacc_commitment_certificate();
    let cert_i = strategy_i_from_certificate(&seqacc, &cert)
        .expect("the canonical certificate validates");
    let c2 = c_fin(2);
    let c2_fixtures = suite_c2();
    vec![
        RegisteredGame {
            name: "wadge-seqacc-omega".to_string(),
            kind: GameKind::Wadge,
            problem: seqacc.clone(),
            strategy_i: strategy_i_from_instance(&omega_instance()),
            strategy_ii: strategy_ii_constant_wadge(4),
            fixtures: suite_seqacc(6),
            default_depth: 32,
        },
        RegisteredGame {
            name: "commit-seqacc-certificate".to_string(),
            kind: GameKind::ConstantCommit,
            problem: seqacc.clone(),
            strategy_i: cert_i,
            strategy_ii: strategy_ii_constant(3, 5),
            fixtures: certificate_fixtures(&cert, 16, 8),
            default_depth: 64,
        },
        RegisteredGame {
            name: "backtrack-c2-mindchange".to_string(),
            kind: GameKind::Backtrack,
            problem: c2.clone(),
            strategy_i: strategy_i_from_instance(&c2_fixtures[1]),
            strategy_ii: strategy_ii_from_mind_change(&c2_mind_change_machine()),
            fixtures: c2_fixtures,
            default_depth: 32,
        },
        RegisteredGame {
            name: "wadge-head-realizer".to_string(),
            kind: GameKind::Wadge,
            problem: head_problem(),
            strategy_i: strategy_i_from_instance(
                &Instance::new("head 3", NameStream::new(vec![3, 7], vec![7]))
                    .with_oracle_solutions(vec![NameStream::from_head(vec![3])]),
            ),
            strategy_ii: strategy_ii_from_realizer(&head_realizer(), "head realizer"),
            fixtures: vec![Instance::new("head 3", NameStream::new(vec![3, 7], vec![7]))
                .with_oracle_solutions(vec![NameStream::from_head(vec![3])])],
            default_depth: 16,
        },
    ]
}

/// A Wadge-legal Player II that answers one number and then skips.
fn strategy_ii_constant_wadge(value: u32) -> Strategy {
    Strategy::new(
        format!("answer {value} once"),
        crate::games::Role::II,
        move |history: &[crate::games::Move]| {
            if history.len() / 2 == 0 {
                crate::games::Move::Nat(value)
            } else {
                crate::games::Move::Skip
            }
        },
    )
}

/// Fixture (problem, realizer, instances) triples for realizer/strategy
/// coherence checks.
pub fn realizer_fixtures() -> Vec<(Problem, Transducer, Vec<Instance>)> {
    let head_instances: Vec<Instance> = (0..4u32)
        .map(|k| {
            Instance::new(format!("head {k}"), NameStream::new(vec![k, 5], vec![5]))
                .with_oracle_solutions(vec![NameStream::from_head(vec![k])])
        })
        .collect();
    let copy_instances: Vec<Instance> = (0..4u32)
        .map(|k| {
            let stream = NameStream::new(vec![k, 0, k], vec![k + 1]);
            Instance::new(format!("copy {k}"), stream.clone())
                .with_oracle_solutions(vec![stream])
        })
        .collect();
    let lpo_realizer = Transducer::new("answer 0 once a 1 appears", |u: &Prefix| {
        if u.symbols().contains(&1) {
            Prefix::from([0])
        } else {
            Prefix::new()
        }
    });
    let lpo_instances: Vec<Instance> = suite_lpo();
    vec![
        (head_problem(), head_realizer(), head_instances),
        (copy_problem(), copy_realizer(), copy_instances),
        (crate::problems::lpo(), lpo_realizer, lpo_instances),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{check_witness, refute_witness, RefuteOutcome};

    #[test]
    fn every_registered_witness_passes_its_suite() {
        for reg in registered_witnesses() {
            let report = check_witness(
                &reg.f,
                &reg.g,
                &reg.witness,
                &reg.suite,
                reg.default_depth,
            )
            .unwrap();
            assert!(report.passed(), "{}: {:?}", reg.name, report.outcome);
        }
    }

    #[test]
    fn every_registered_candidate_matches_expectation() {
        for reg in registered_candidates() {
            let outcome =
                refute_witness(&reg.f, &reg.g, &reg.candidate, &reg.family, reg.bounds);
            match (&outcome, reg.expect_counterexample) {
                (RefuteOutcome::Counterexample(_), true) => {}
                (RefuteOutcome::NotFound { .. }, false) => {}
                other => panic!("{}: unexpected outcome {:?}", reg.name, other.0),
            }
        }
    }

    #[test]
    fn registered_games_have_matching_roles() {
        for game in registered_games() {
            assert_eq!(game.strategy_i.role, crate::games::Role::I, "{}", game.name);
            assert_eq!(game.strategy_ii.role, crate::games::Role::II, "{}", game.name);
        }
    }

    #[test]
    fn copy_problem_is_relaxed_and_head_is_not() {
        assert!(copy_problem().output_relaxed);
        assert!(!head_problem().output_relaxed);
    }
}
