//! Wadge, backtrack, and constant-commitment games: play, adjudication,
//! canonical strategies, strategy translation, and reduction extraction.
//!
//! Player I builds an input name symbol by symbol; Player II answers with
//! naturals, skips, and (in backtrack games) erasures. Adjudication applies
//! three rules with earlier rules taking precedence: I must stay inside the
//! problem's domain, II must assemble a valid output name, and the named
//! output must solve the input. The last rule needs ground truth, which at
//! finite depth only fixtures can supply, so adjudication consults a
//! fixture list tagged with the plays' true instances.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::names::{NameStream, Prefix, Symbol, Transducer};
use crate::problems::{DomainVerdict, Instance, Problem, VerdictStatus};
use crate::reductions::{solution_track_identity, WitnessPair};
use crate::spaces::{decode, DecodeVerdict, SpaceDesc};

/// Marker in a mind-change machine's output alphabet that clears the
/// effective output so far.
pub const ERASE: Symbol = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Nat(Symbol),
    Skip,
    Erase,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Nat(n) => write!(f, "{n}"),
            Move::Skip => write!(f, "skip"),
            Move::Erase => write!(f, "erase"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    I,
    II,
}

/// A strategy reads the full alternating history (Player I's moves at even
/// indices) and produces the next move for its role.
#[derive(Clone)]
pub struct Strategy {
    pub label: String,
    pub role: Role,
    next: Rc<dyn Fn(&[Move]) -> Move>,
}

impl Strategy {
    pub fn new(
        label: impl Into<String>,
        role: Role,
        next: impl Fn(&[Move]) -> Move + 'static,
    ) -> Self {
        Strategy {
            label: label.into(),
            role,
            next: Rc::new(next),
        }
    }

    pub fn next_move(&self, history: &[Move]) -> Move {
        (self.next)(history)
    }
}

impl fmt::Debug for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Strategy({:?}, {})", self.role, self.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameKind {
    Wadge,
    Backtrack,
    ConstantCommit,
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameKind::Wadge => write!(f, "wadge"),
            GameKind::Backtrack => write!(f, "backtrack"),
            GameKind::ConstantCommit => write!(f, "constant-commit"),
        }
    }
}

#[derive(Clone)]
pub struct GameConfig {
    pub kind: GameKind,
    pub problem: Problem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameError {
    /// Constant-commitment games need a first-order output space.
    UnsupportedOutputSpace(String),
    RoleMismatch,
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::UnsupportedOutputSpace(s) => {
                write!(f, "constant-commitment games need N or Fin(n) output, got {s}")
            }
            GameError::RoleMismatch => write!(f, "strategy roles do not match the seats"),
        }
    }
}

impl GameConfig {
    pub fn new(kind: GameKind, problem: Problem) -> Result<Self, GameError> {
        if kind == GameKind::ConstantCommit && !problem.out_space.is_first_order() {
            return Err(GameError::UnsupportedOutputSpace(
                problem.out_space.to_string(),
            ));
        }
        Ok(GameConfig { kind, problem })
    }
}

#[derive(Clone, Debug)]
pub struct PlayTrace {
    pub moves_i: Prefix,
    pub moves_ii: Vec<Move>,
    pub depth: usize,
    pub erase_count: usize,
    /// Set when a player made an illegal move; the trace stops there.
    pub illegal: Option<(Role, String)>,
}

/// Player II's assembled output: the subsequence of naturals, with each
/// erasure clearing everything before it.
pub fn effective_output(moves_ii: &[Move]) -> Prefix {
    let mut out: Vec<Symbol> = Vec::new();
    for mv in moves_ii {
        match mv {
            Move::Nat(n) => out.push(*n),
            Move::Skip => {}
            Move::Erase => out.clear(),
        }
    }
    Prefix::from_symbols(out)
}

/// Alternate the two strategies for `depth` rounds, enforcing move
/// legality per game kind; an illegal move aborts with a diagnosed trace.
pub fn play(cfg: &GameConfig, s_i: &Strategy, s_ii: &Strategy, depth: usize) -> PlayTrace {
    let mut history: Vec<Move> = Vec::new();
    let mut moves_i: Vec<Symbol> = Vec::new();
    let mut moves_ii: Vec<Move> = Vec::new();
    let mut illegal = None;
    if s_i.role != Role::I || s_ii.role != Role::II {
        illegal = Some((Role::I, "strategy roles do not match the seats".to_string()));
    }
    for _ in 0..depth {
        if illegal.is_some() {
            break;
        }
        let mi = s_i.next_move(&history);
        match mi {
            Move::Nat(n) => {
                moves_i.push(n);
                history.push(mi);
            }
            other => {
                illegal = Some((Role::I, format!("Player I played {other}")));
                break;
            }
        }
        let mii = s_ii.next_move(&history);
        let ok = match (cfg.kind, mii) {
            (GameKind::ConstantCommit, Move::Nat(_)) => true,
            (GameKind::ConstantCommit, _) => false,
            (GameKind::Backtrack, _) => true,
            (GameKind::Wadge, Move::Erase) => false,
            (GameKind::Wadge, _) => true,
        };
        if !ok {
            illegal = Some((Role::II, format!("Player II played {mii} in a {} game", cfg.kind)));
            break;
        }
        moves_ii.push(mii);
        history.push(mii);
    }
    let erase_count = moves_ii.iter().filter(|m| **m == Move::Erase).count();
    PlayTrace {
        moves_i: Prefix::from_symbols(moves_i),
        moves_ii,
        depth,
        erase_count,
        illegal,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Adjudication {
    IWins {
        rule: u8,
        depth: usize,
        /// True when the verdict rests on the depth bound (a Π⁰₂ condition
        /// resolved "as of now") rather than on finite data alone.
        bound_dependent: bool,
        note: String,
    },
    IIWins {
        rule: u8,
        depth: usize,
        bound_dependent: bool,
        note: String,
    },
    Open {
        depth: usize,
        note: String,
    },
}

impl Adjudication {
    pub fn winner(&self) -> Option<Role> {
        match self {
            Adjudication::IWins { .. } => Some(Role::I),
            Adjudication::IIWins { .. } => Some(Role::II),
            Adjudication::Open { .. } => None,
        }
    }

    pub fn bound_dependent(&self) -> bool {
        match self {
            Adjudication::IWins { bound_dependent, .. }
            | Adjudication::IIWins { bound_dependent, .. } => *bound_dependent,
            Adjudication::Open { .. } => false,
        }
    }
}

impl fmt::Display for Adjudication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Adjudication::IWins { rule, depth, note, .. } => {
                write!(f, "I wins by rule {rule} at depth {depth}: {note}")
            }
            Adjudication::IIWins { rule, depth, note, .. } => {
                write!(f, "II wins by rule {rule} at depth {depth}: {note}")
            }
            Adjudication::Open { depth, note } => write!(f, "open at depth {depth}: {note}"),
        }
    }
}

/// The index of Player II's last value change in a constant-commitment
/// move list, with the standing value.
fn last_change(moves_ii: &[Move]) -> Option<(usize, Symbol)> {
    let mut result = None;
    let mut prev: Option<Symbol> = None;
    for (i, mv) in moves_ii.iter().enumerate() {
        if let Move::Nat(n) = mv {
            if prev != Some(*n) {
                result = Some((i, *n));
            }
            prev = Some(*n);
        }
    }
    result
}

/// Apply the three winning rules in order. Ground truth for rule 3 comes
/// from the fixture whose tagged input extends Player I's moves; without a
/// matching fixture rule 3 stays open.
pub fn adjudicate(cfg: &GameConfig, trace: &PlayTrace, fixtures: &[Instance]) -> Adjudication {
    let depth = trace.depth;
    // an illegal move forfeits for the offender before any rule applies
    if let Some((role, note)) = &trace.illegal {
        return match role {
            Role::I => Adjudication::IIWins {
                rule: 1,
                depth,
                bound_dependent: false,
                note: format!("illegal move: {note}"),
            },
            Role::II => Adjudication::IWins {
                rule: 2,
                depth,
                bound_dependent: false,
                note: format!("illegal move: {note}"),
            },
        };
    }
    // rule 1: Player I must build a domain element
    if cfg.problem.domain_test(&trace.moves_i) == DomainVerdict::Dead {
        return Adjudication::IIWins {
            rule: 1,
            depth,
            bound_dependent: false,
            note: "Player I left the problem's domain".to_string(),
        };
    }
    // rule 2: Player II must assemble a valid output name
    let output = match cfg.kind {
        GameKind::ConstantCommit => match last_change(&trace.moves_ii) {
            None => {
                return Adjudication::IWins {
                    rule: 2,
                    depth,
                    bound_dependent: true,
                    note: "Player II never played".to_string(),
                }
            }
            Some((at, value)) => {
                if at + 1 == trace.moves_ii.len() && trace.moves_ii.len() > 1 {
                    return Adjudication::IWins {
                        rule: 2,
                        depth,
                        bound_dependent: true,
                        note: "Player II was still changing value at the bound".to_string(),
                    };
                }
                let mut name = vec![value];
                name.extend(vec![0u32; depth]);
                Prefix::from_symbols(name)
            }
        },
        _ => {
            let out = effective_output(&trace.moves_ii);
            if out.is_empty() {
                return Adjudication::IWins {
                    rule: 2,
                    depth,
                    bound_dependent: true,
                    note: "Player II never played a number".to_string(),
                };
            }
            if decode(&cfg.problem.out_space, &out) == DecodeVerdict::Invalid {
                return Adjudication::IWins {
                    rule: 2,
                    depth,
                    bound_dependent: false,
                    note: "Player II's output is not a valid name".to_string(),
                };
            }
            out
        }
    };
    // rule 3: the named output must solve Player I's input
    let tagged = fixtures
        .iter()
        .find(|inst| inst.input.at(trace.moves_i.len()) == trace.moves_i);
    let erase_note = if cfg.kind == GameKind::Backtrack {
        format!(" ({} erasures)", trace.erase_count)
    } else {
        String::new()
    };
    match tagged {
        Some(instance) => {
            let verdict = cfg.problem.solution_verdict(instance, &output, depth);
            match verdict.status {
                VerdictStatus::Verified => Adjudication::IIWins {
                    rule: 3,
                    depth,
                    bound_dependent: false,
                    note: format!("[{}] {}{erase_note}", instance.label, verdict),
                },
                VerdictStatus::Refuted => Adjudication::IWins {
                    rule: 3,
                    depth,
                    bound_dependent: false,
                    note: format!("[{}] {}{erase_note}", instance.label, verdict),
                },
                VerdictStatus::Undetermined => Adjudication::Open {
                    depth,
                    note: format!("[{}] {}{erase_note}", instance.label, verdict),
                },
            }
        }
        None => Adjudication::Open {
            depth,
            note: format!("no ground truth for this input{erase_note}"),
        },
    }
}

/// Player I follows a fixture instance's input name.
pub fn strategy_i_from_instance(instance: &Instance) -> Strategy {
    let input = instance.input.clone();
    Strategy::new(
        format!("follow {}", instance.label),
        Role::I,
        move |history: &[Move]| {
            let turn = history.len() / 2;
            Move::Nat(input.symbol_at(turn))
        },
    )
}

/// Player II replays a realizer transducer on Player I's moves, emitting
/// the next not-yet-played output symbol, or Skip when nothing is new.
pub fn strategy_ii_from_realizer(t: &Transducer, label: impl Into<String>) -> Strategy {
    let t = t.clone();
    Strategy::new(label, Role::II, move |history: &[Move]| {
        let input: Vec<Symbol> = history
            .iter()
            .step_by(2)
            .map(|m| match m {
                Move::Nat(n) => *n,
                _ => 0,
            })
            .collect();
        let out = t.step(&Prefix::from_symbols(input));
        let emitted = history
            .iter()
            .skip(1)
            .step_by(2)
            .filter(|m| matches!(m, Move::Nat(_)))
            .count();
        if out.len() > emitted {
            Move::Nat(out.symbols()[emitted])
        } else {
            Move::Skip
        }
    })
}

// ---------------------------------------------------------------------------
// least-commitment certificates
// ---------------------------------------------------------------------------

/// Evidence that a problem admits no continuous constant choice: a strict
/// chain of input prefixes t₀ ⊏ t₁ ⊏ … below the limit instance and, for
/// every stage j and commitment value i, a certified instance extending
/// t_j on which i fails. Powers the canonical Player-I strategy for the
/// constant-commitment game.
#[derive(Clone)]
pub struct LeastCommitmentCertificate {
    pub label: String,
    pub chain: Rc<dyn Fn(usize) -> Prefix>,
    pub extension: Rc<dyn Fn(usize, Symbol) -> Instance>,
    pub limit: Instance,
}

#[derive(Clone, Debug)]
pub enum CommitCertError {
    ChainNotStrict(usize),
    ChainLeavesLimit(usize),
    ExtensionDoesNotExtend { stage: usize, value: Symbol },
    ValueNotRefuted { stage: usize, value: Symbol },
}

impl fmt::Display for CommitCertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommitCertError::ChainNotStrict(j) => {
                write!(f, "chain stage {j} does not strictly extend its predecessor")
            }
            CommitCertError::ChainLeavesLimit(j) => {
                write!(f, "chain stage {j} is not a prefix of the limit input")
            }
            CommitCertError::ExtensionDoesNotExtend { stage, value } => {
                write!(f, "extension ({stage}, {value}) does not extend the chain")
            }
            CommitCertError::ValueNotRefuted { stage, value } => {
                write!(f, "value {value} still solves extension at stage {stage}")
            }
        }
    }
}

/// Brute-force the certificate invariants over stages and values up to the
/// bounds: the chain is a strict prefix chain below the limit, extensions
/// extend their chain stage, and each committed value is refuted on its
/// extension.
pub fn validate_commitment_certificate(
    f: &Problem,
    cert: &LeastCommitmentCertificate,
    stage_bound: usize,
    value_bound: Symbol,
    depth: usize,
) -> Result<(), CommitCertError> {
    for j in 0..stage_bound {
        let here = (cert.chain)(j);
        let next = (cert.chain)(j + 1);
        if !(here.is_prefix_of(&next) && here.len() < next.len()) {
            return Err(CommitCertError::ChainNotStrict(j + 1));
        }
        if cert.limit.input.at(here.len()) != here {
            return Err(CommitCertError::ChainLeavesLimit(j));
        }
        for i in 0..=value_bound {
            let ext = (cert.extension)(j, i);
            if ext.input.at(here.len()) != here {
                return Err(CommitCertError::ExtensionDoesNotExtend { stage: j, value: i });
            }
            let mut answer = vec![i];
            answer.extend(vec![0u32; depth]);
            let verdict = f.solution_verdict(&ext, &Prefix::from_symbols(answer), depth);
            if verdict.status != VerdictStatus::Refuted {
                return Err(CommitCertError::ValueNotRefuted { stage: j, value: i });
            }
        }
    }
    Ok(())
}

/// The canonical Player-I strategy from a certificate: follow the chain
/// toward the limit; when Player II's standing value changes to i at stage
/// j, switch to the certified extension for (j, i) — provided it is still
/// consistent with the symbols already played (a switch that came too late
/// is ignored; the previously targeted instance remains the ground truth).
pub fn strategy_i_from_certificate(
    f: &Problem,
    cert: &LeastCommitmentCertificate,
) -> Result<Strategy, CommitCertError> {
    validate_commitment_certificate(f, cert, 8, 8, 64)?;
    let extension = cert.extension.clone();
    let limit = cert.limit.input.clone();
    Ok(Strategy::new(
        format!("certificate I [{}]", cert.label),
        Role::I,
        move |history: &[Move]| {
            let turns = history.len() / 2;
            let mut target = limit.clone();
            let mut played: Vec<Symbol> = Vec::new();
            let mut standing: Option<Symbol> = None;
            for r in 0..turns {
                played.push(target.symbol_at(r));
                if let Some(Move::Nat(v)) = history.get(2 * r + 1) {
                    if standing != Some(*v) {
                        let candidate = (extension)(r, *v);
                        let agreed = played
                            .iter()
                            .enumerate()
                            .all(|(p, &s)| candidate.input.symbol_at(p) == s);
                        if agreed {
                            target = candidate.input;
                        }
                        standing = Some(*v);
                    }
                }
            }
            Move::Nat(target.symbol_at(turns))
        },
    ))
}

/// The instances a certificate-driven Player I can realize within the
/// given bounds, for tagging adjudication ground truth.
pub fn certificate_fixtures(
    cert: &LeastCommitmentCertificate,
    stage_bound: usize,
    value_bound: Symbol,
) -> Vec<Instance> {
    let mut out = vec![cert.limit.clone()];
    for j in 0..=stage_bound {
        for i in 0..=value_bound {
            out.push((cert.extension)(j, i));
        }
    }
    out
}

/// Player II strategy committing `value` from turn `time` on (and a filler
/// zero before), for constant-commitment tournaments.
pub fn strategy_ii_constant(value: Symbol, time: usize) -> Strategy {
    Strategy::new(
        format!("commit {value} at {time}"),
        Role::II,
        move |history: &[Move]| {
            let turn = history.len() / 2;
            Move::Nat(if turn >= time { value } else { 0 })
        },
    )
}

// ---------------------------------------------------------------------------
// reduction extraction
// ---------------------------------------------------------------------------

/// Turn a Player-I strategy for the Wadge game on `f` into a witness for
/// `≠_target ≤* f`: the inner transducer simulates the game, feeding the
/// name being read as Player II's moves (skip for the skip symbol) and
/// emitting Player I's replies; the outer hands f's solution through
/// unchanged — by the winning condition it differs from the named point.
/// Validity is established empirically via `check_witness`; the artifact
/// cannot verify that the strategy wins in general.
pub fn extract_reduction(s_i: &Strategy, f: &Problem, target_space: &SpaceDesc) -> WitnessPair {
    let strat = s_i.clone();
    let inner = Transducer::new(
        format!("simulate Player I [{}]", s_i.label),
        move |q: &Prefix| {
            let mut history: Vec<Move> = Vec::new();
            let mut out: Vec<Symbol> = Vec::new();
            for &s in q.symbols() {
                let mi = strat.next_move(&history);
                let n = match mi {
                    Move::Nat(n) => n,
                    // Player I strategies never skip; degrade gracefully
                    _ => 0,
                };
                out.push(n);
                history.push(Move::Nat(n));
                // completion coding: 0 is a skip, s+1 carries base symbol s
                history.push(if s == 0 { Move::Skip } else { Move::Nat(s - 1) });
            }
            Prefix::from_symbols(out)
        },
    );
    WitnessPair {
        name: format!("NEQ({target_space})<=*{} (extracted)", f.name),
        inner,
        outer: solution_track_identity(),
        strong: true,
    }
}

// ---------------------------------------------------------------------------
// mind-change machines and strategy translation
// ---------------------------------------------------------------------------

/// A monotone transducer over the output alphabet extended with [`ERASE`]:
/// computation with finitely many mind-changes.
#[derive(Clone)]
pub struct MindChangeMachine {
    pub label: String,
    pub t: Transducer,
}

/// Run the machine on an input stream: erasures clear the effective
/// output; returns the effective output and the number of erasures.
pub fn run_mind_change(m: &MindChangeMachine, x: &NameStream, depth: usize) -> (Prefix, usize) {
    let raw = m.t.step(&x.at(depth));
    let mut out: Vec<Symbol> = Vec::new();
    let mut erases = 0;
    for &s in raw.symbols() {
        if s == ERASE {
            out.clear();
            erases += 1;
        } else {
            out.push(s);
        }
    }
    (Prefix::from_symbols(out), erases)
}

/// Wrap a mind-change machine as a backtrack Player II: replay the machine
/// on Player I's moves and emit its next raw symbol (erase included), or
/// Skip when nothing is new.
pub fn strategy_ii_from_mind_change(m: &MindChangeMachine) -> Strategy {
    let t = m.t.clone();
    Strategy::new(format!("backtrack [{}]", m.label), Role::II, move |history: &[Move]| {
        let input: Vec<Symbol> = history
            .iter()
            .step_by(2)
            .map(|mv| match mv {
                Move::Nat(n) => *n,
                _ => 0,
            })
            .collect();
        let raw = t.step(&Prefix::from_symbols(input));
        let consumed = history
            .iter()
            .skip(1)
            .step_by(2)
            .filter(|mv| !matches!(mv, Move::Skip))
            .count();
        if raw.len() > consumed {
            let s = raw.symbols()[consumed];
            if s == ERASE {
                Move::Erase
            } else {
                Move::Nat(s)
            }
        } else {
            Move::Skip
        }
    })
}

/// Project a backtrack Player II strategy to a constant-commitment one: at
/// each turn play the last number the wrapped strategy has standing after
/// its erasures (zero before it first plays). Stabilizes as soon as the
/// wrapped strategy stops erasing; `bound` caps the erasures replayed.
pub fn translate_to_commit(s_ii: &Strategy, bound: usize) -> Strategy {
    let wrapped = s_ii.clone();
    Strategy::new(
        format!("commit projection of {}", wrapped.label),
        Role::II,
        move |history: &[Move]| {
            // rebuild the backtrack play against the same Player-I moves
            let mut synth: Vec<Move> = Vec::new();
            let mut standing: Vec<Symbol> = Vec::new();
            let mut erases = 0;
            for idx in (0..history.len()).step_by(2) {
                synth.push(history[idx]);
                let mv = wrapped.next_move(&synth);
                match mv {
                    Move::Nat(n) => standing.push(n),
                    Move::Erase if erases < bound => {
                        standing.clear();
                        erases += 1;
                    }
                    _ => {}
                }
                synth.push(mv);
            }
            Move::Nat(standing.last().copied().unwrap_or(0))
        },
    )
}
