//! The catalog of multivalued problems with prefix-level domain tests and
//! finite-depth solution verdicts.
//!
//! A problem never materializes its solution sets: multivaluedness lives in
//! the verdict function, which judges a finite output prefix against the
//! ground truth carried by the instance's eventually-periodic input stream.
//! `Verified` and `Refuted` are committed verdicts — once issued for a given
//! instance and output stream they persist at every larger depth —
//! while `Undetermined` means the prefix has not yet decided the matter.
//!
//! Negative-information coding for the ACC/C family: input symbol `0` is
//! silence and `k+1` enumerates `k` into the excluded set. LPO answers `1`
//! on the all-zero stream and `0` otherwise.


use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::grammar::{parse_space, ParseError};
use crate::names::{unpair, NameStream, Prefix};
use crate::spaces::{
    self, completion_of, decode, eval_stream, DecodeVerdict, Ordinal, PointDesc,
    SpaceDesc, SpaceError,
};

/// How many symbols of an output prefix must be seen before a verdict
/// commits to a "negatively observable" value (a Sierpiński ⊥ answer, or
/// full agreement with the forbidden stream in an inequality problem).
pub const COMMIT_DEPTH: usize = 8;

/// How many fractional digits must be produced, and agree with an exact
/// expansion, before a decimal output is Verified.
pub const DECIMAL_VERIFY_DIGITS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainVerdict {
    StillValid,
    Dead,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Verified,
    Refuted,
    Undetermined,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub note: String,
}

impl Verdict {
    pub fn verified(note: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::Verified,
            note: note.into(),
        }
    }

    pub fn refuted(note: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::Refuted,
            note: note.into(),
        }
    }

    pub fn undetermined(note: impl Into<String>) -> Self {
        Verdict {
            status: VerdictStatus::Undetermined,
            note: note.into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            VerdictStatus::Verified => write!(f, "Verified ({})", self.note),
            VerdictStatus::Refuted => write!(f, "Refuted ({})", self.note),
            VerdictStatus::Undetermined => write!(f, "Undetermined ({})", self.note),
        }
    }
}

/// A tagged test instance: the input stream carries its own ground truth
/// (the eventually-periodic description determines the named point), plus
/// output streams known to be correct for feeding outer witnesses.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub input: NameStream,
    pub oracle_solutions: Vec<NameStream>,
}

impl Instance {
    pub fn new(label: impl Into<String>, input: NameStream) -> Self {
        Instance {
            label: label.into(),
            input,
            oracle_solutions: Vec::new(),
        }
    }

    pub fn with_oracle_solutions(mut self, solutions: Vec<NameStream>) -> Self {
        self.oracle_solutions = solutions;
        self
    }
}

type DomainFn = Rc<dyn Fn(&Prefix) -> DomainVerdict>;
type VerdictFn = Rc<dyn Fn(&Instance, &Prefix, usize) -> Verdict>;

#[derive(Clone)]
pub struct Problem {
    pub name: String,
    pub in_space: SpaceDesc,
    pub out_space: SpaceDesc,
    domain_fn: DomainFn,
    verdict_fn: VerdictFn,
    /// When set, correct outputs may stay `Undetermined` forever (their
    /// value is only negatively observable); checkers then accept
    /// "unrefuted" in place of "verified".
    pub output_relaxed: bool,
    pub summary: String,
}

impl Problem {
    pub fn new(
        name: impl Into<String>,
        in_space: SpaceDesc,
        out_space: SpaceDesc,
        domain_fn: impl Fn(&Prefix) -> DomainVerdict + 'static,
        verdict_fn: impl Fn(&Instance, &Prefix, usize) -> Verdict + 'static,
        output_relaxed: bool,
        summary: impl Into<String>,
    ) -> Self {
        Problem {
            name: name.into(),
            in_space,
            out_space,
            domain_fn: Rc::new(domain_fn),
            verdict_fn: Rc::new(verdict_fn),
            output_relaxed,
            summary: summary.into(),
        }
    }

    pub fn domain_test(&self, prefix: &Prefix) -> DomainVerdict {
        (self.domain_fn)(prefix)
    }

    pub fn solution_verdict(&self, instance: &Instance, output: &Prefix, depth: usize) -> Verdict {
        (self.verdict_fn)(instance, output, depth)
    }
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Problem({}: {} -> {})", self.name, self.in_space, self.out_space)
    }
}

/// The set enumerated by a negative-information stream: every `k` with
/// `k+1` occurring anywhere in the stream.
pub fn enumerated_set(input: &NameStream) -> Vec<u64> {
    let mut set: Vec<u64> = input
        .symbol_set()
        .into_iter()
        .filter(|&s| s != 0)
        .map(|s| (s - 1) as u64)
        .collect();
    set.sort_unstable();
    set
}

fn enumerated_in_prefix(prefix: &Prefix) -> Vec<u64> {
    let mut set: Vec<u64> = prefix
        .symbols()
        .iter()
        .filter(|&&s| s != 0)
        .map(|&s| (s - 1) as u64)
        .collect();
    set.sort_unstable();
    set.dedup();
    set
}

/// Decode a first-order output prefix (a `Naturals` / `Finite(n)` name) and
/// turn the result into a verdict via `judge` on the committed value.
pub(crate) fn first_order_verdict(
    out_space: &SpaceDesc,
    output: &Prefix,
    judge: impl FnOnce(u64) -> Verdict,
) -> Verdict {
    match decode(out_space, output) {
        DecodeVerdict::Determined(PointDesc::Nat(m)) => judge(m),
        DecodeVerdict::Determined(PointDesc::Fin(m)) => judge(m as u64),
        DecodeVerdict::Determined(_) => Verdict::refuted("output names a non-numeric point"),
        DecodeVerdict::ConsistentMany => Verdict::undetermined("output not yet committed"),
        DecodeVerdict::Invalid => Verdict::refuted("output prefix is not a valid name"),
    }
}

/// All-or-co-one choice on ℕ: the input enumerates an excluded set of size
/// at most one, any natural outside it solves the instance.
pub fn acc_nat() -> Problem {
    Problem {
        name: "ACC_N".to_string(),
        in_space: SpaceDesc::Baire,
        out_space: SpaceDesc::Naturals,
        domain_fn: Rc::new(|prefix| {
            if enumerated_in_prefix(prefix).len() > 1 {
                DomainVerdict::Dead
            } else {
                DomainVerdict::StillValid
            }
        }),
        verdict_fn: Rc::new(|instance, output, _depth| {
            let excluded = enumerated_set(&instance.input);
            first_order_verdict(&SpaceDesc::Naturals, output, |m| {
                if excluded.contains(&m) {
                    Verdict::refuted(format!("{m} is the excluded point"))
                } else {
                    Verdict::verified(format!("{m} avoids the excluded set"))
                }
            })
        }),
        output_relaxed: false,
        summary: "all-or-co-one choice on the naturals (negative information)".to_string(),
    }
}

/// The `ω+1`-indexed form of all-or-co-one choice: the ordinal `⟨n,m⟩`
/// forbids answer `n`, the point `ω` accepts every answer.
pub fn seqacc_nat() -> Problem {
    Problem {
        name: "SEQACC_N".to_string(),
        in_space: SpaceDesc::OmegaPlusOne,
        out_space: SpaceDesc::Naturals,
        domain_fn: Rc::new(|prefix| {
            if prefix.symbols().iter().any(|&s| s > 1) {
                DomainVerdict::Dead
            } else {
                DomainVerdict::StillValid
            }
        }),
        verdict_fn: Rc::new(|instance, output, _depth| {
            let truth = eval_stream(&SpaceDesc::OmegaPlusOne, &instance.input);
            first_order_verdict(&SpaceDesc::Naturals, output, |k| match truth {
                Some(PointDesc::Ordinal(Ordinal::Finite(s))) => {
                    let (n, _) = unpair(s);
                    if k == n {
                        Verdict::refuted(format!("ordinal {s} forbids answer {n}"))
                    } else {
                        Verdict::verified(format!("{k} differs from forbidden {n}"))
                    }
                }
                Some(PointDesc::Ordinal(Ordinal::Omega)) => {
                    Verdict::verified("every answer solves the instance at omega")
                }
                _ => Verdict::refuted("input stream is not an ordinal name"),
            })
        }),
        output_relaxed: false,
        summary: "all-or-co-one choice indexed by an ordinal below omega+1".to_string(),
    }
}

/// All-or-co-one choice on `{0, …, n−1}`.
pub fn acc_fin(n: u32) -> Problem {
    assert!(n >= 2, "acc_fin needs at least two options");
    Problem {
        name: format!("ACC_{n}"),
        in_space: SpaceDesc::Baire,
        out_space: SpaceDesc::Finite(n),
        domain_fn: Rc::new(move |prefix| {
            let enumerated = enumerated_in_prefix(prefix);
            if enumerated.len() > 1 || enumerated.iter().any(|&k| k >= n as u64) {
                DomainVerdict::Dead
            } else {
                DomainVerdict::StillValid
            }
        }),
        verdict_fn: Rc::new(move |instance, output, _depth| {
            let excluded = enumerated_set(&instance.input);
            first_order_verdict(&SpaceDesc::Finite(n), output, |m| {
                if excluded.contains(&m) {
                    Verdict::refuted(format!("{m} is the excluded point"))
                } else {
                    Verdict::verified(format!("{m} avoids the excluded set"))
                }
            })
        }),
        output_relaxed: false,
        summary: format!("all-or-co-one choice on {n} options"),
    }
}

/// Closed choice on ℕ: the input enumerates the complement of a closed
/// nonempty set, any survivor is a solution.
pub fn c_nat() -> Problem {
    Problem {
        name: "C_N".to_string(),
        in_space: SpaceDesc::Baire,
        out_space: SpaceDesc::Naturals,
        domain_fn: Rc::new(|_| DomainVerdict::StillValid),
        verdict_fn: Rc::new(|instance, output, _depth| {
            let excluded = enumerated_set(&instance.input);
            first_order_verdict(&SpaceDesc::Naturals, output, |m| {
                if excluded.contains(&m) {
                    Verdict::refuted(format!("{m} was enumerated out"))
                } else {
                    Verdict::verified(format!("{m} survives the enumeration"))
                }
            })
        }),
        output_relaxed: false,
        summary: "closed choice on the naturals (negative information)".to_string(),
    }
}

/// Closed choice on `{0, …, n−1}`.
pub fn c_fin(n: u32) -> Problem {
    assert!(n >= 1, "c_fin needs at least one option");
    Problem {
        name: format!("C_{n}"),
        in_space: SpaceDesc::Baire,
        out_space: SpaceDesc::Finite(n),
        domain_fn: Rc::new(move |prefix| {
            let enumerated = enumerated_in_prefix(prefix);
            if enumerated.iter().any(|&k| k >= n as u64) || enumerated.len() >= n as usize {
                DomainVerdict::Dead
            } else {
                DomainVerdict::StillValid
            }
        }),
        verdict_fn: Rc::new(move |instance, output, _depth| {
            let excluded = enumerated_set(&instance.input);
            first_order_verdict(&SpaceDesc::Finite(n), output, |m| {
                if excluded.contains(&m) {
                    Verdict::refuted(format!("{m} was enumerated out"))
                } else {
                    Verdict::verified(format!("{m} survives the enumeration"))
                }
            })
        }),
        output_relaxed: false,
        summary: format!("closed choice on {n} options"),
    }
}

/// The limited principle of omniscience: answer `1` on the all-zero stream,
/// `0` as soon as a `1` occurs.
pub fn lpo() -> Problem {
    Problem {
        name: "LPO".to_string(),
        in_space: SpaceDesc::Cantor,
        out_space: SpaceDesc::Finite(2),
        domain_fn: Rc::new(|prefix| {
            if prefix.symbols().iter().any(|&s| s > 1) {
                DomainVerdict::Dead
            } else {
                DomainVerdict::StillValid
            }
        }),
        verdict_fn: Rc::new(|instance, output, _depth| {
            let has_one = instance.input.find(|s| s == 1).is_some();
            let correct = if has_one { 0 } else { 1 };
            first_order_verdict(&SpaceDesc::Finite(2), output, |b| {
                if b == correct {
                    Verdict::verified(format!("answer {b} matches the stream"))
                } else {
                    Verdict::refuted(format!("answer {b}, stream demands {correct}"))
                }
            })
        }),
        output_relaxed: false,
        summary: "limited principle of omniscience on binary streams".to_string(),
    }
}

/// Negation on Sierpiński space. A correct ⊥ answer is only negatively
/// observable, so it is committed after [`COMMIT_DEPTH`] all-zero symbols.
pub fn sierp_neg() -> Problem {
    Problem {
        name: "NOT_S".to_string(),
        in_space: SpaceDesc::Sierpinski,
        out_space: SpaceDesc::Sierpinski,
        domain_fn: Rc::new(|prefix| {
            if prefix.symbols().iter().any(|&s| s > 1) {
                DomainVerdict::Dead
            } else {
                DomainVerdict::StillValid
            }
        }),
        verdict_fn: Rc::new(|instance, output, _depth| {
            let input_top = instance.input.find(|s| s == 1).is_some();
            sierpinski_answer_verdict(output, !input_top)
        }),
        output_relaxed: true,
        summary: "negation on Sierpinski space".to_string(),
    }
}

/// Judge a Sierpiński output prefix against the required truth value.
fn sierpinski_answer_verdict(output: &Prefix, want_top: bool) -> Verdict {
    if output.symbols().iter().any(|&s| s > 1) {
        return Verdict::refuted("output is not a Sierpinski name");
    }
    let has_one = output.symbols().contains(&1);
    match (want_top, has_one) {
        (true, true) => Verdict::verified("output names top"),
        (true, false) => Verdict::undetermined("top answer not yet witnessed"),
        (false, true) => Verdict::refuted("output names top, bottom required"),
        (false, false) => {
            if output.len() >= COMMIT_DEPTH {
                Verdict::verified("output committed to bottom (finite-precision)")
            } else {
                Verdict::undetermined("bottom answer pending")
            }
        }
    }
}

fn stream_total_symbols(s: &NameStream) -> usize {
    s.head().len() + s.cycle().len()
}

/// Inequality: the input names a point of the completion of `space`, a
/// solution is any point different from it (anything at all when the input
/// names the fresh bottom point).
pub fn neq(space: &SpaceDesc) -> Result<Problem, SpaceError> {
    let points = spaces::sample_points(space, 2);
    match points.len() {
        0 => return Err(SpaceError::EmptySpace),
        1 => return Err(SpaceError::SingletonSpace),
        _ => {}
    }
    let out_space = space.clone();
    let in_space = completion_of(space);
    let verdict_space = space.clone();
    Ok(Problem {
        name: format!("NEQ({space})"),
        in_space: in_space.clone(),
        out_space,
        // completion names are total: no prefix is ever Dead
        domain_fn: Rc::new(|_| DomainVerdict::StillValid),
        verdict_fn: Rc::new(move |instance, output, _depth| {
            neq_verdict(&verdict_space, instance, output)
        }),
        output_relaxed: !decode_eventually_total(space),
        summary: format!("produce a point of {space} different from the completed input"),
    })
}

/// Whether finite-depth adjudication can always eventually commit correct
/// outputs of this space (directly or by the finite-precision conventions).
fn decode_eventually_total(space: &SpaceDesc) -> bool {
    match space {
        SpaceDesc::Naturals
        | SpaceDesc::Finite(_)
        | SpaceDesc::Sierpinski
        | SpaceDesc::Baire
        | SpaceDesc::Cantor => true,
        SpaceDesc::Product(x, y) => decode_eventually_total(x) && decode_eventually_total(y),
        SpaceDesc::OmegaPlusOne
        | SpaceDesc::DecimalReal
        | SpaceDesc::Layered(_, _)
        | SpaceDesc::FormalCompletion(_) => false,
    }
}

fn neq_verdict(space: &SpaceDesc, instance: &Instance, output: &Prefix) -> Verdict {
    let truth = instance
        .input
        .truth()
        .cloned()
        .or_else(|| eval_stream(&completion_of(space), &instance.input));
    let forbidden = match truth {
        Some(PointDesc::Bottom) => {
            // anything goes, the output just has to stay a valid name
            return match decode(space, output) {
                DecodeVerdict::Invalid => Verdict::refuted("output prefix is not a valid name"),
                _ if output.is_empty() => Verdict::undetermined("no output yet"),
                _ => Verdict::verified("any point beats the fresh bottom input"),
            };
        }
        Some(PointDesc::Embedded(x)) => *x,
        _ => return Verdict::refuted("input stream does not name a completion point"),
    };
    // stream output spaces: compare position by position against the unique
    // forbidden name
    if let (SpaceDesc::Baire | SpaceDesc::Cantor, PointDesc::Stream(s)) = (space, &forbidden) {
        if matches!(decode(space, output), DecodeVerdict::Invalid) {
            return Verdict::refuted("output prefix is not a valid name");
        }
        let diff = output
            .symbols()
            .iter()
            .enumerate()
            .find(|&(i, &a)| a != s.symbol_at(i));
        return match diff {
            Some((i, _)) => Verdict::verified(format!("differs from the input point at {i}")),
            None if output.len() >= COMMIT_DEPTH.max(stream_total_symbols(s)) => {
                Verdict::refuted("output tracks the forbidden point (finite-precision)")
            }
            None => Verdict::undetermined("no difference witnessed yet"),
        };
    }
    if let (SpaceDesc::Sierpinski, p) = (space, &forbidden) {
        return sierpinski_answer_verdict(output, !matches!(p, PointDesc::SierpTop));
    }
    // layered spaces: a bottom-track answer commits once it is long enough
    // to rule out a late escape at finite precision
    if let SpaceDesc::Layered(_, bottom) = space {
        let escaped = output
            .symbols()
            .iter()
            .any(|&s| s >= spaces::LAYER_ESCAPE);
        if !escaped && output.len() >= COMMIT_DEPTH {
            match spaces::bottom_track_decode(bottom, output) {
                DecodeVerdict::Determined(y) => {
                    return if PointDesc::bot(y.clone()) == forbidden {
                        Verdict::refuted("output committed to the forbidden bottom point")
                    } else {
                        Verdict::verified("output committed to a different bottom point")
                    };
                }
                DecodeVerdict::Invalid => {
                    return Verdict::refuted("output prefix is not a valid name")
                }
                DecodeVerdict::ConsistentMany => {}
            }
        }
    }
    match decode(space, output) {
        DecodeVerdict::Invalid => Verdict::refuted("output prefix is not a valid name"),
        DecodeVerdict::Determined(y) => {
            if y == forbidden {
                Verdict::refuted("output names the forbidden point")
            } else {
                Verdict::verified("output names a different point")
            }
        }
        DecodeVerdict::ConsistentMany => {
            match spaces::consistent_with_point(space, output, &forbidden) {
                Ok(false) => Verdict::verified("output excludes the forbidden point"),
                _ => Verdict::undetermined("output not yet separated from the input"),
            }
        }
    }
}

/// Limit-avoidance: produce a `k` different from the limit of the input
/// stream; any `k` works when the limit does not exist.
pub fn pi02_acc_nat() -> Problem {
    Problem {
        name: "PI02ACC_N".to_string(),
        in_space: SpaceDesc::Baire,
        out_space: SpaceDesc::Naturals,
        domain_fn: Rc::new(|_| DomainVerdict::StillValid),
        verdict_fn: Rc::new(|instance, output, _depth| {
            let limit = instance.input.limit();
            first_order_verdict(&SpaceDesc::Naturals, output, |k| match limit {
                Some(c) if c as u64 == k => {
                    Verdict::refuted(format!("{k} is the limit of the stream"))
                }
                Some(c) => Verdict::verified(format!("{k} differs from the limit {c}")),
                None => Verdict::verified("stream has no limit, every answer works"),
            })
        }),
        output_relaxed: false,
        summary: "avoid the limit of a convergent-or-divergent stream".to_string(),
    }
}

/// Inequality on Baire space under its historical name.
pub fn dis() -> Problem {
    let mut p = neq(&SpaceDesc::Baire).expect("Baire space has many points");
    p.name = "DIS".to_string();
    p
}

/// Exact decimal digits of `2^{-n}`: `5^n` left-padded with zeros to `n`
/// digits, computed by repeated exact halving of the digit string.
pub fn half_power_digits(n: u64) -> Vec<u32> {
    let mut digits: Vec<u32> = Vec::new();
    for step in 0..n {
        if step == 0 {
            digits = vec![5];
            continue;
        }
        let mut out: Vec<u32> = Vec::new();
        let mut rem: u32 = 0;
        for &d in &digits {
            let cur = rem * 10 + d;
            out.push(cur / 2);
            rem = cur % 2;
        }
        if rem == 1 {
            out.push(5);
        }
        digits = out;
    }
    digits
}

/// The alternating function `n ↦ (−1)ⁿ 2⁻ⁿ`, `ω ↦ 0`, into decimal reals.
/// Verified once [`DECIMAL_VERIFY_DIGITS`] fractional digits agree with an
/// exact expansion of the value (terminating and nine-tail forms both
/// count); refuted on the first digit inconsistent with every expansion.
pub fn omega_example_f() -> Problem {
    Problem {
        name: "OMEGA_EXAMPLE".to_string(),
        in_space: SpaceDesc::OmegaPlusOne,
        out_space: SpaceDesc::DecimalReal,
        domain_fn: Rc::new(|prefix| {
            if prefix.symbols().iter().any(|&s| s > 1) {
                DomainVerdict::Dead
            } else {
                DomainVerdict::StillValid
            }
        }),
        verdict_fn: Rc::new(|instance, output, _depth| {
            let truth = eval_stream(&SpaceDesc::OmegaPlusOne, &instance.input);
            let ordinal = match truth {
                Some(PointDesc::Ordinal(o)) => o,
                _ => return Verdict::refuted("input stream is not an ordinal name"),
            };
            let expansions = omega_example_expansions(ordinal);
            let consistent: Vec<&NameStream> = expansions
                .iter()
                .filter(|e| output.is_prefix_of(&e.at(output.len())))
                .collect();
            if consistent.is_empty() {
                Verdict::refuted("output contradicts every exact expansion of the value")
            } else if output.len() >= 2 + DECIMAL_VERIFY_DIGITS {
                Verdict::verified("output agrees with an exact expansion to depth")
            } else {
                Verdict::undetermined("more digits needed")
            }
        }),
        output_relaxed: false,
        summary: "the alternating sequence (-1)^n 2^-n with limit 0, in decimal".to_string(),
    }
}

/// All decimal name streams of `(−1)ⁿ 2⁻ⁿ` (or of `0` at `ω`).
pub fn omega_example_expansions(ordinal: Ordinal) -> Vec<NameStream> {
    match ordinal {
        Ordinal::Omega => vec![
            NameStream::from_head(vec![0, 0]),
            NameStream::from_head(vec![1, 0]),
        ],
        Ordinal::Finite(0) => vec![
            NameStream::from_head(vec![0, 1]),
            NameStream::new(vec![0, 0], vec![9]),
        ],
        Ordinal::Finite(n) => {
            let sign = (n % 2) as u32;
            let digits = half_power_digits(n);
            let mut exact = vec![sign, 0];
            exact.extend_from_slice(&digits);
            let mut low = vec![sign, 0];
            low.extend_from_slice(&digits[..digits.len() - 1]);
            low.push(digits[digits.len() - 1] - 1);
            vec![
                NameStream::from_head(exact),
                NameStream::new(low, vec![9]),
            ]
        }
    }
}

#[derive(Debug, Clone)]
pub enum CatalogError {
    UnknownProblem(String),
    Space(SpaceError),
    Parse(ParseError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownProblem(name) => write!(f, "unknown problem '{name}'"),
            CatalogError::Space(e) => write!(f, "{e}"),
            CatalogError::Parse(e) => write!(f, "{e}"),
        }
    }
}

/// Every fixed catalog name (the `NEQ(<space>)` family is open-ended and
/// represented by its Baire member).
pub fn catalog_names() -> Vec<String> {
    vec![
        "ACC_N".to_string(),
        "SEQACC_N".to_string(),
        "ACC_3".to_string(),
        "C_N".to_string(),
        "C_2".to_string(),
        "LPO".to_string(),
        "NOT_S".to_string(),
        "NEQ(N)".to_string(),
        "NEQ(N*(w+1))".to_string(),
        "NEQ(N/N)".to_string(),
        "PI02ACC_N".to_string(),
        "DIS".to_string(),
        "OMEGA_EXAMPLE".to_string(),
    ]
}

/// Resolve a problem by its catalog name, e.g. `ACC_N`, `C_2`,
/// `NEQ(N*(w+1))`.
pub fn problem_by_name(name: &str) -> Result<Problem, CatalogError> {
    match name {
        "ACC_N" => return Ok(acc_nat()),
        "SEQACC_N" => return Ok(seqacc_nat()),
        "C_N" => return Ok(c_nat()),
        "LPO" => return Ok(lpo()),
        "NOT_S" => return Ok(sierp_neg()),
        "PI02ACC_N" => return Ok(pi02_acc_nat()),
        "DIS" => return Ok(dis()),
        "OMEGA_EXAMPLE" => return Ok(omega_example_f()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("ACC_") {
        if let Ok(n) = rest.parse::<u32>() {
            if n >= 2 {
                return Ok(acc_fin(n));
            }
        }
    }
    if let Some(rest) = name.strip_prefix("C_") {
        if let Ok(n) = rest.parse::<u32>() {
            if n >= 1 {
                return Ok(c_fin(n));
            }
        }
    }
    if let Some(rest) = name.strip_prefix("NEQ(") {
        if let Some(inner) = rest.strip_suffix(')') {
            let space = parse_space(inner).map_err(CatalogError::Parse)?;
            return neq(&space).map_err(CatalogError::Space);
        }
    }
    Err(CatalogError::UnknownProblem(name.to_string()))
}
