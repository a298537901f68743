//! Command line front end for the reducibility workbench: catalog listing,
//! game playback, witness checking, refutation search, and rank queries.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use weihrauch_core::fixtures::{
    c2_mind_change_machine, registered_candidates, registered_games, registered_witnesses,
    seqacc_commitment_certificate, suite_acc, suite_c2, suite_lpo, suite_neq_naturals,
    suite_neq_product_for_pairing, suite_omega_example, suite_seqacc, suite_sierp_neg,
};
use weihrauch_core::games::{
    adjudicate, certificate_fixtures, play, strategy_i_from_certificate,
    strategy_i_from_instance, strategy_ii_constant, strategy_ii_from_mind_change,
    strategy_ii_from_realizer, translate_to_commit, Adjudication, GameConfig, GameKind, Move,
    PlayTrace, Role, Strategy,
};
use weihrauch_core::names::{check_monotone, Prefix, Transducer};
use weihrauch_core::problems::{catalog_names, problem_by_name, Instance, Problem};
use weihrauch_core::reductions::{check_witness_mode, refute_witness, RefuteBounds, RefuteOutcome};
use weihrauch_core::spaces::{cb_rank, SpaceError};
use weihrauch_core::grammar::parse_space;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "weihrauch",
    about = "Workbench for continuous reducibility at finite precision",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List problems, witnesses, strategies, refutation candidates, and spaces
    Catalog(CatalogArgs),
    /// Play a game between two named strategies and adjudicate the result
    Play(PlayArgs),
    /// Check a registered reduction witness against a fixture suite
    Check(CheckArgs),
    /// Search for a counterexample to a registered candidate witness
    Refute(RefuteArgs),
    /// Parse a space expression and print its Cantor-Bendixson rank
    Rank(RankArgs),
    /// Re-adjudicate a saved JSON trace and compare with its verdict
    TraceReplay(TraceReplayArgs),
}

#[derive(Args)]
struct CatalogArgs {
    /// List catalog problems only
    #[arg(long)]
    problems: bool,
    /// List registered reduction witnesses only
    #[arg(long)]
    witnesses: bool,
    /// List strategies and registered games only
    #[arg(long)]
    strategies: bool,
    /// List registered refutation candidates only
    #[arg(long)]
    candidates: bool,
    /// List the space grammar only
    #[arg(long)]
    spaces: bool,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PlayArgs {
    /// Game kind: wadge | backtrack | constant-commit
    kind: String,
    /// Catalog problem name, e.g. SEQACC_N or C_2
    problem: String,
    /// Player I strategy: any | fixture:<label> | cert-I
    strategy_i: String,
    /// Player II strategy: const-II:<v>[@t] | mindchange-II |
    /// commit-mindchange-II | realizer-II
    strategy_ii: String,
    /// Number of rounds to play
    #[arg(long, default_value_t = 64)]
    depth: usize,
    /// Seed for tournament shuffling; all current plays are deterministic
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the trace and adjudication as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Source problem name; must match the registered witness
    f: String,
    /// Target problem name; must match the registered witness
    g: String,
    /// Registered witness name, e.g. acc-to-seqacc
    witness: String,
    /// Named fixture suite; defaults to the suite bundled with the witness
    suite: Option<String>,
    /// Evaluation depth; defaults to the witness's registered depth
    #[arg(long)]
    depth: Option<usize>,
    /// Count Undetermined verdicts as failures
    #[arg(long)]
    strict: bool,
    /// Also require both transducers monotone up to this alphabet bound
    #[arg(long)]
    alphabet_bound: Option<u32>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RefuteArgs {
    /// Source problem name; must match the registered candidate
    f: String,
    /// Target problem name; must match the registered candidate
    g: String,
    /// Registered candidate name, e.g. lpo-naive-strong
    candidate: String,
    /// Override the adversary depth bound
    #[arg(long)]
    depth: Option<usize>,
    /// Override the maximum number of adversary moves per schedule
    #[arg(long)]
    max_moves: Option<usize>,
    /// Override the schedule budget
    #[arg(long)]
    budget: Option<usize>,
    /// Seed for schedule shuffling; the search is currently deterministic
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the outcome as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RankArgs {
    /// Space expression, e.g. "N/N" or "(w+1)/Fin(3)"
    expression: String,
    /// Emit the result as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TraceReplayArgs {
    /// Path to a JSON trace produced by `play --json`
    file: String,
    /// Emit the replayed adjudication as JSON
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Catalog(args) => cmd_catalog(&args),
        Command::Play(args) => cmd_play(&args),
        Command::Check(args) => cmd_check(&args),
        Command::Refute(args) => cmd_refute(&args),
        Command::Rank(args) => cmd_rank(&args),
        Command::TraceReplay(args) => cmd_trace_replay(&args),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

// --- catalog ---------------------------------------------------------------

fn space_grammar_lines() -> Vec<(&'static str, &'static str)> {
    vec![
        ("N", "discrete natural numbers"),
        ("Fin(k)", "discrete k-element space, k >= 1"),
        ("w+1", "converging sequence with its limit point"),
        ("S", "Sierpinski space"),
        ("Cantor", "Cantor space of binary streams"),
        ("Baire", "Baire space of natural-number streams"),
        ("R10", "decimal reals with signed digit-by-digit names"),
        ("X*Y", "product, names interleaved track by track"),
        ("X/Y", "layered sum: escape to a name in X or stay on the Y track"),
    ]
}

fn strategy_lines() -> Vec<(&'static str, &'static str)> {
    vec![
        ("any", "Player I follows the first fixture instance of the problem"),
        ("fixture:<label>", "Player I follows the named fixture instance"),
        ("cert-I", "Player I punishes commitments via the SEQACC_N certificate"),
        ("const-II:<v>[@t]", "Player II commits to value v at turn t"),
        ("mindchange-II", "Player II runs the one-mind-change C_2 machine"),
        ("commit-mindchange-II", "the same machine translated to constant commitment"),
        ("realizer-II", "Player II replays the problem's library realizer"),
    ]
}

fn cmd_catalog(args: &CatalogArgs) -> u8 {
    let all = !(args.problems || args.witnesses || args.strategies || args.candidates || args.spaces);
    let mut doc = serde_json::Map::new();
    if all || args.problems {
        let mut entries = Vec::new();
        for name in catalog_names() {
            let p = problem_by_name(&name).expect("catalog names resolve");
            entries.push((name, format!("{} -> {}: {}", p.in_space, p.out_space, p.summary)));
        }
        emit_section(args.json, &mut doc, "problems", entries);
    }
    if all || args.witnesses {
        let entries = registered_witnesses()
            .into_iter()
            .map(|w| {
                (
                    w.name.clone(),
                    format!(
                        "{} <= {} ({} instances, depth {})",
                        w.f.name,
                        w.g.name,
                        w.suite.len(),
                        w.default_depth
                    ),
                )
            })
            .collect();
        emit_section(args.json, &mut doc, "witnesses", entries);
    }
    if all || args.strategies {
        let mut entries: Vec<(String, String)> = strategy_lines()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        for g in registered_games() {
            entries.push((
                g.name.clone(),
                format!(
                    "{} game on {}: {} vs {}",
                    g.kind, g.problem.name, g.strategy_i.label, g.strategy_ii.label
                ),
            ));
        }
        emit_section(args.json, &mut doc, "strategies", entries);
    }
    if all || args.candidates {
        let entries = registered_candidates()
            .into_iter()
            .map(|c| {
                let expected = if c.expect_counterexample {
                    "expected to fall"
                } else {
                    "expected to survive"
                };
                (c.name.clone(), format!("{} <= {} ({expected})", c.f.name, c.g.name))
            })
            .collect();
        emit_section(args.json, &mut doc, "candidates", entries);
    }
    if all || args.spaces {
        let entries = space_grammar_lines()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        emit_section(args.json, &mut doc, "spaces", entries);
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&Value::Object(doc)).unwrap());
    }
    EXIT_OK
}

fn emit_section(
    json: bool,
    doc: &mut serde_json::Map<String, Value>,
    title: &str,
    entries: Vec<(String, String)>,
) {
    if json {
        let items: Vec<Value> = entries
            .into_iter()
            .map(|(name, description)| json!({"name": name, "description": description}))
            .collect();
        doc.insert(title.to_string(), Value::Array(items));
    } else {
        println!("{title}:");
        for (name, description) in entries {
            println!("  {name:<24} {description}");
        }
        println!();
    }
}

// --- play ------------------------------------------------------------------

fn parse_kind(s: &str) -> Option<GameKind> {
    match s {
        "wadge" => Some(GameKind::Wadge),
        "backtrack" => Some(GameKind::Backtrack),
        "constant-commit" => Some(GameKind::ConstantCommit),
        _ => None,
    }
}

/// Fixture instances used for rule-3 adjudication, keyed by problem. The
/// same table backs `play` and `trace-replay` so replays adjudicate against
/// identical ground truth.
fn fixtures_for_problem(name: &str) -> Vec<Instance> {
    match name {
        "ACC_N" => suite_acc(6),
        "SEQACC_N" => {
            let mut fx = suite_seqacc(6);
            fx.extend(certificate_fixtures(&seqacc_commitment_certificate(), 16, 8));
            fx
        }
        "C_2" => suite_c2(),
        "LPO" => suite_lpo(),
        "NOT_S" => suite_sierp_neg(),
        "NEQ(N)" => suite_neq_naturals(6),
        "NEQ(N*(w+1))" => suite_neq_product_for_pairing(),
        "OMEGA_EXAMPLE" => suite_omega_example(),
        _ => Vec::new(),
    }
}

fn library_realizer(problem: &str) -> Option<Transducer> {
    match problem {
        "LPO" => Some(Transducer::new("answer 0 once a 1 appears", |u: &Prefix| {
            if u.symbols().contains(&1) {
                Prefix::from([0])
            } else {
                Prefix::new()
            }
        })),
        _ => None,
    }
}

fn resolve_strategy_i(
    name: &str,
    problem: &Problem,
    fixtures: &[Instance],
) -> Result<Strategy, String> {
    if name == "any" {
        let inst = fixtures
            .first()
            .ok_or_else(|| format!("no fixtures for {}", problem.name))?;
        return Ok(strategy_i_from_instance(inst));
    }
    if let Some(label) = name.strip_prefix("fixture:") {
        let inst = fixtures
            .iter()
            .find(|i| i.label == label)
            .ok_or_else(|| format!("no fixture labelled '{label}' for {}", problem.name))?;
        return Ok(strategy_i_from_instance(inst));
    }
    if name == "cert-I" {
        if problem.name != "SEQACC_N" {
            return Err("cert-I is only available for SEQACC_N".to_string());
        }
        return strategy_i_from_certificate(problem, &seqacc_commitment_certificate())
            .map_err(|e| format!("certificate rejected: {e:?}"));
    }
    Err(format!("unknown Player I strategy '{name}'"))
}

fn resolve_strategy_ii(name: &str, problem: &Problem) -> Result<Strategy, String> {
    if let Some(spec) = name.strip_prefix("const-II:") {
        let (value, time) = match spec.split_once('@') {
            Some((v, t)) => (v, t.parse::<usize>().map_err(|_| "bad commit time")?),
            None => (spec, 0),
        };
        let value = value.parse::<u32>().map_err(|_| "bad commit value")?;
        return Ok(strategy_ii_constant(value, time));
    }
    match name {
        "mindchange-II" | "commit-mindchange-II" => {
            if problem.name != "C_2" {
                return Err(format!("{name} is only available for C_2"));
            }
            let base = strategy_ii_from_mind_change(&c2_mind_change_machine());
            if name == "mindchange-II" {
                Ok(base)
            } else {
                Ok(translate_to_commit(&base, 4))
            }
        }
        "realizer-II" => {
            let t = library_realizer(&problem.name)
                .ok_or_else(|| format!("no library realizer for {}", problem.name))?;
            Ok(strategy_ii_from_realizer(&t, "library realizer"))
        }
        _ => Err(format!("unknown Player II strategy '{name}'")),
    }
}

fn adjudication_json(adj: &Adjudication) -> Value {
    match adj {
        Adjudication::IWins {
            rule,
            depth,
            bound_dependent,
            note,
        } => json!({
            "winner": "I", "rule": rule, "depth": depth,
            "bound_dependent": bound_dependent, "note": note,
        }),
        Adjudication::IIWins {
            rule,
            depth,
            bound_dependent,
            note,
        } => json!({
            "winner": "II", "rule": rule, "depth": depth,
            "bound_dependent": bound_dependent, "note": note,
        }),
        Adjudication::Open { depth, note } => json!({
            "winner": null, "depth": depth, "note": note,
        }),
    }
}

fn move_json(mv: &Move) -> Value {
    match mv {
        Move::Nat(n) => json!(n),
        Move::Skip => json!("skip"),
        Move::Erase => json!("erase"),
    }
}

fn trace_json(kind: GameKind, problem: &str, trace: &PlayTrace, adj: &Adjudication) -> Value {
    let mut moves = Vec::new();
    let n = trace.moves_i.len().max(trace.moves_ii.len());
    for i in 0..n {
        if let Some(&s) = trace.moves_i.symbols().get(i) {
            moves.push(json!({"player": "I", "move": s}));
        }
        if let Some(mv) = trace.moves_ii.get(i) {
            moves.push(json!({"player": "II", "move": move_json(mv)}));
        }
    }
    json!({
        "kind": kind.to_string(),
        "problem": problem,
        "depth": trace.depth,
        "moves": moves,
        "adjudication": adjudication_json(adj),
    })
}

fn print_trace_text(trace: &PlayTrace, adj: &Adjudication) {
    let shown = trace.moves_i.len().min(16);
    let i_moves: Vec<String> = trace.moves_i.symbols()[..shown]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let ii_moves: Vec<String> = trace.moves_ii.iter().take(16).map(|m| m.to_string()).collect();
    println!("I : {}{}", i_moves.join(" "), if trace.moves_i.len() > 16 { " ..." } else { "" });
    println!("II: {}{}", ii_moves.join(" "), if trace.moves_ii.len() > 16 { " ..." } else { "" });
    if let Some((role, reason)) = &trace.illegal {
        println!("illegal move by {role:?}: {reason}");
    }
    println!("{adj}");
}

fn cmd_play(args: &PlayArgs) -> u8 {
    let _ = args.seed;
    let Some(kind) = parse_kind(&args.kind) else {
        return usage_error(&format!("unknown game kind '{}'", args.kind));
    };
    let problem = match problem_by_name(&args.problem) {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("unknown problem '{}': {e:?}", args.problem)),
    };
    let cfg = match GameConfig::new(kind, problem.clone()) {
        Ok(cfg) => cfg,
        Err(e) => return usage_error(&format!("cannot set up game: {e:?}")),
    };
    let fixtures = fixtures_for_problem(&problem.name);
    let s_i = match resolve_strategy_i(&args.strategy_i, &problem, &fixtures) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let s_ii = match resolve_strategy_ii(&args.strategy_ii, &problem) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let trace = play(&cfg, &s_i, &s_ii, args.depth);
    let adj = adjudicate(&cfg, &trace, &fixtures);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&trace_json(kind, &problem.name, &trace, &adj)).unwrap()
        );
    } else {
        print_trace_text(&trace, &adj);
    }
    EXIT_OK
}

// --- check -----------------------------------------------------------------

fn named_suite(name: &str) -> Option<Vec<Instance>> {
    match name {
        "suite6" => Some(suite_acc(6)),
        "suite8" => Some(suite_acc(8)),
        "seqacc6" => Some(suite_seqacc(6)),
        "lpo" => Some(suite_lpo()),
        "sierp-neg" => Some(suite_sierp_neg()),
        "neq-nat" => Some(suite_neq_naturals(6)),
        "neq-pairing" => Some(suite_neq_product_for_pairing()),
        "c2" => Some(suite_c2()),
        "omega" => Some(suite_omega_example()),
        _ => None,
    }
}

fn cmd_check(args: &CheckArgs) -> u8 {
    let Some(reg) = registered_witnesses().into_iter().find(|w| w.name == args.witness) else {
        return usage_error(&format!("unknown witness '{}'", args.witness));
    };
    if reg.f.name != args.f || reg.g.name != args.g {
        return usage_error(&format!(
            "witness '{}' reduces {} to {}, not {} to {}",
            reg.name, reg.f.name, reg.g.name, args.f, args.g
        ));
    }
    let suite = match &args.suite {
        None => reg.suite.clone(),
        Some(name) => match named_suite(name) {
            Some(s) => s,
            None => return usage_error(&format!("unknown suite '{name}'")),
        },
    };
    let depth = args.depth.unwrap_or(reg.default_depth);
    if let Some(bound) = args.alphabet_bound {
        for (label, t) in [("inner", &reg.witness.inner), ("outer", &reg.witness.outer)] {
            match check_monotone(t, bound, 6) {
                Ok(rep) if rep.is_empty() => {}
                Ok(rep) => {
                    eprintln!("{label} transducer not monotone: {:?}", rep.violations);
                    return EXIT_FAIL;
                }
                Err(e) => return usage_error(&format!("monotonicity budget exceeded: {e:?}")),
            }
        }
    }
    let report = match check_witness_mode(&reg.f, &reg.g, &reg.witness, &suite, depth, args.strict)
    {
        Ok(r) => r,
        Err(e) => return usage_error(&format!("cannot check: {e:?}")),
    };
    let mut records = report.records.clone();
    records.sort_by(|a, b| a.label.cmp(&b.label));
    if args.json {
        let recs: Vec<Value> = records
            .iter()
            .map(|r| {
                json!({
                    "instance": r.label,
                    "domain": format!("{:?}", r.domain),
                    "verdicts": r.verdicts.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "witness": report.witness,
                "depth": report.depth,
                "strict": report.strict,
                "records": recs,
                "outcome": if report.passed() { "Pass" } else { "Fail" },
            }))
            .unwrap()
        );
    } else {
        println!("witness {} at depth {}", report.witness, report.depth);
        for r in &records {
            let verdicts: Vec<String> = r.verdicts.iter().map(|v| v.to_string()).collect();
            println!("  {:<24} {:?}; {}", r.label, r.domain, verdicts.join("; "));
        }
        println!("{:?}", report.outcome);
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

// --- refute ----------------------------------------------------------------

fn cmd_refute(args: &RefuteArgs) -> u8 {
    let _ = args.seed;
    let Some(reg) = registered_candidates().into_iter().find(|c| c.name == args.candidate) else {
        return usage_error(&format!("unknown candidate '{}'", args.candidate));
    };
    if reg.f.name != args.f || reg.g.name != args.g {
        return usage_error(&format!(
            "candidate '{}' claims {} <= {}, not {} <= {}",
            reg.name, reg.f.name, reg.g.name, args.f, args.g
        ));
    }
    let bounds = RefuteBounds {
        depth: args.depth.unwrap_or(reg.bounds.depth),
        max_moves: args.max_moves.unwrap_or(reg.bounds.max_moves),
        schedule_budget: args.budget.unwrap_or(reg.bounds.schedule_budget),
    };
    let outcome = refute_witness(&reg.f, &reg.g, &reg.candidate, &reg.family, bounds);
    match outcome {
        RefuteOutcome::Counterexample(ce) => {
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "outcome": "Counterexample",
                        "schedule": ce.schedule,
                        "instance": ce.instance_label,
                        "input_head": ce.input_head,
                        "input_cycle": ce.input_cycle,
                        "depth": ce.depth,
                        "violation": ce.violation,
                    }))
                    .unwrap()
                );
            } else {
                println!("Counterexample after schedule [{}]", ce.schedule.join(", "));
                println!("  instance: {}", ce.instance_label);
                println!("  violation: {}", ce.violation);
            }
            EXIT_FAIL
        }
        RefuteOutcome::NotFound { schedules_tried } => {
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({"outcome": "NotFound", "schedules_tried": schedules_tried})
                    )
                    .unwrap()
                );
            } else {
                println!("NotFound after {schedules_tried} schedules");
            }
            EXIT_OK
        }
        RefuteOutcome::BudgetExceeded { schedules_tried } => {
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({"outcome": "BudgetExceeded", "schedules_tried": schedules_tried})
                    )
                    .unwrap()
                );
            } else {
                println!("BudgetExceeded after {schedules_tried} schedules");
            }
            EXIT_BUDGET
        }
    }
}

// --- rank ------------------------------------------------------------------

fn cmd_rank(args: &RankArgs) -> u8 {
    let space = match parse_space(&args.expression) {
        Ok(s) => s,
        Err(e) => return usage_error(&format!("parse error at position {}: {}", e.position, e.message)),
    };
    match cb_rank(&space) {
        Ok(rank) => {
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "space": space.to_string(),
                        "rank": rank.value(),
                        "expression": rank.to_string(),
                    }))
                    .unwrap()
                );
            } else {
                println!("{}", rank.value());
            }
            EXIT_OK
        }
        Err(SpaceError::NotScattered(which)) => {
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "space": space.to_string(),
                        "rank": null,
                        "diagnostic": format!("NotScattered: {which} has no rank in this fragment"),
                    }))
                    .unwrap()
                );
            } else {
                println!("NotScattered: {which} has no rank in this fragment");
            }
            EXIT_OK
        }
        Err(e) => usage_error(&format!("rank undefined: {e:?}")),
    }
}

// --- trace-replay ----------------------------------------------------------

fn parse_move(v: &Value) -> Result<Move, String> {
    if let Some(n) = v.as_u64() {
        return Ok(Move::Nat(n as u32));
    }
    match v.as_str() {
        Some("skip") => Ok(Move::Skip),
        Some("erase") => Ok(Move::Erase),
        _ => Err(format!("bad move {v}")),
    }
}

fn cmd_trace_replay(args: &TraceReplayArgs) -> u8 {
    let text = match fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", args.file)),
    };
    let doc: Value = match serde_json::from_str(&text) {
        Ok(d) => d,
        Err(e) => return usage_error(&format!("bad JSON: {e}")),
    };
    let Some(kind) = doc["kind"].as_str().and_then(parse_kind) else {
        return usage_error("trace is missing a valid \"kind\"");
    };
    let Some(problem_name) = doc["problem"].as_str() else {
        return usage_error("trace is missing \"problem\"");
    };
    let problem = match problem_by_name(problem_name) {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("unknown problem '{problem_name}': {e:?}")),
    };
    let cfg = match GameConfig::new(kind, problem.clone()) {
        Ok(cfg) => cfg,
        Err(e) => return usage_error(&format!("cannot set up game: {e:?}")),
    };
    let Some(moves) = doc["moves"].as_array() else {
        return usage_error("trace is missing \"moves\"");
    };
    let mut moves_i = Prefix::new();
    let mut moves_ii = Vec::new();
    for entry in moves {
        let mv = match parse_move(&entry["move"]) {
            Ok(m) => m,
            Err(e) => return usage_error(&e),
        };
        match entry["player"].as_str() {
            Some("I") => match mv {
                Move::Nat(n) => moves_i.push(n),
                other => return usage_error(&format!("Player I cannot play {other}")),
            },
            Some("II") => moves_ii.push(mv),
            _ => return usage_error("each move needs a \"player\" of \"I\" or \"II\""),
        }
    }
    let depth = doc["depth"].as_u64().map(|d| d as usize).unwrap_or(moves_i.len());
    let erase_count = moves_ii.iter().filter(|m| matches!(m, Move::Erase)).count();
    let trace = PlayTrace {
        moves_i,
        moves_ii,
        depth,
        erase_count,
        illegal: None,
    };
    let adj = adjudicate(&cfg, &trace, &fixtures_for_problem(&problem.name));
    let replayed = adjudication_json(&adj);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&replayed).unwrap());
    } else {
        println!("{adj}");
    }
    let saved = &doc["adjudication"];
    if saved.is_null() {
        return usage_error("trace is missing \"adjudication\"");
    }
    if *saved == replayed {
        EXIT_OK
    } else {
        eprintln!("replayed adjudication differs from the saved one:");
        eprintln!("  saved:    {saved}");
        eprintln!("  replayed: {replayed}");
        EXIT_FAIL
    }
}

// Role is referenced for trace legality errors in future formats.
#[allow(dead_code)]
fn role_name(r: Role) -> &'static str {
    match r {
        Role::I => "I",
        Role::II => "II",
    }
}
