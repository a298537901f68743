//! Reduction witnesses as monotone transducer pairs, a finite-depth
//! checker, the explicit witness library, and a bounded adversarial refuter.
//!
//! A witness for `f ≤ g` is an inner transducer (f-input names to g-input
//! names) and an outer transducer reading the interleaving of a g-solution
//! name with the original f-input name (even positions carry the solution
//! track, odd positions the original input). Strong witnesses ignore the
//! original-input track.
//!
//! Oracle solutions for inner-produced g-instances always come from
//! fixtures: solving `g` in general is the very problem being reduced, so
//! the checker never needs it.

use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::names::{
    compose, deinterleave, interleave, pair, unpair, NameStream, Prefix, Symbol, Transducer,
};
use crate::problems::{DomainVerdict, Instance, Problem, Verdict, VerdictStatus};
use crate::spaces::{
    decode, encode, DecodeVerdict, Ordinal, PointDesc, SpaceDesc,
};

#[derive(Clone)]
pub struct WitnessPair {
    pub name: String,
    pub inner: Transducer,
    pub outer: Transducer,
    /// The outer transducer ignores the original-input track.
    pub strong: bool,
}

impl fmt::Debug for WitnessPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WitnessPair({}, strong={})", self.name, self.strong)
    }
}

/// The outer transducer of a witness whose answer translation is the
/// identity: project the solution track out of the interleaving.
pub fn solution_track_identity() -> Transducer {
    Transducer::new("solution track identity", |u: &Prefix| deinterleave(u).0)
}

/// The trivial witness `f ≤ f`.
pub fn witness_identity(name: impl Into<String>) -> WitnessPair {
    WitnessPair {
        name: name.into(),
        inner: Transducer::identity(),
        outer: solution_track_identity(),
        strong: true,
    }
}

// ---------------------------------------------------------------------------
// checking
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct InstanceRecord {
    pub label: String,
    pub domain: DomainVerdict,
    /// One verdict per oracle solution fed to the outer transducer.
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail { instance: String, reason: String },
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub witness: String,
    pub depth: usize,
    pub strict: bool,
    pub records: Vec<InstanceRecord>,
    pub outcome: CheckOutcome,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcome == CheckOutcome::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckError {
    /// An instance carries no oracle solution for the inner-produced
    /// g-instance, so the outer transducer cannot be exercised.
    MissingOracleSolutions(String),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::MissingOracleSolutions(label) => {
                write!(f, "instance '{label}' carries no oracle solutions")
            }
        }
    }
}

/// Run a candidate witness for `f ≤ g` over a suite of f-instances at one
/// depth. Fails on a Dead inner-produced domain prefix or a Refuted outer
/// verdict; `Undetermined` fails unless the problem's relaxation applies
/// (and always fails in strict mode).
pub fn check_witness(
    f: &Problem,
    g: &Problem,
    w: &WitnessPair,
    suite: &[Instance],
    depth: usize,
) -> Result<CheckReport, CheckError> {
    check_witness_mode(f, g, w, suite, depth, false)
}

pub fn check_witness_mode(
    f: &Problem,
    g: &Problem,
    w: &WitnessPair,
    suite: &[Instance],
    depth: usize,
    strict: bool,
) -> Result<CheckReport, CheckError> {
    let mut records = Vec::new();
    let mut outcome = CheckOutcome::Pass;
    let undetermined_fails = strict || !f.output_relaxed;
    for x in suite {
        if x.oracle_solutions.is_empty() {
            return Err(CheckError::MissingOracleSolutions(x.label.clone()));
        }
        let g_input = w.inner.step(&x.input.at(depth));
        let domain = g.domain_test(&g_input);
        let mut verdicts = Vec::new();
        if domain == DomainVerdict::Dead {
            if outcome == CheckOutcome::Pass {
                outcome = CheckOutcome::Fail {
                    instance: x.label.clone(),
                    reason: "inner transducer produced a dead g-instance prefix".to_string(),
                };
            }
        } else {
            for q in &x.oracle_solutions {
                let woven = interleave(&q.at(depth), &x.input.at(depth));
                let output = w.outer.step(&woven);
                let v = f.solution_verdict(x, &output, depth);
                let failed = match v.status {
                    VerdictStatus::Refuted => true,
                    VerdictStatus::Undetermined => undetermined_fails,
                    VerdictStatus::Verified => false,
                };
                if failed && outcome == CheckOutcome::Pass {
                    outcome = CheckOutcome::Fail {
                        instance: x.label.clone(),
                        reason: format!("outer output {output:?}: {v}"),
                    };
                }
                verdicts.push(v);
            }
        }
        records.push(InstanceRecord {
            label: x.label.clone(),
            domain,
            verdicts,
        });
    }
    Ok(CheckReport {
        witness: w.name.clone(),
        depth,
        strict,
        records,
        outcome,
    })
}

/// Compose `f ≤ g` with `g ≤ h` into `f ≤ h`.
pub fn compose_witness(w_fg: &WitnessPair, w_gh: &WitnessPair) -> WitnessPair {
    let inner = compose(&w_gh.inner, &w_fg.inner);
    let fg_inner = w_fg.inner.clone();
    let fg_outer = w_fg.outer.clone();
    let gh_outer = w_gh.outer.clone();
    let outer = Transducer::new(
        format!("composed outer of {} and {}", w_fg.name, w_gh.name),
        move |u: &Prefix| {
            let (r, x) = deinterleave(u);
            let y = fg_inner.step(&x);
            let q = gh_outer.step(&interleave(&r, &y));
            fg_outer.step(&interleave(&q, &x))
        },
    );
    WitnessPair {
        name: format!("{} ∘ {}", w_fg.name, w_gh.name),
        inner,
        outer,
        strong: w_fg.strong && w_gh.strong,
    }
}

/// Sampled strongness check: the outer output must not change when the
/// original-input track is swapped for any other sampled input.
pub fn check_strong(
    w: &WitnessPair,
    inputs: &[NameStream],
    solutions: &[NameStream],
    depth: usize,
) -> bool {
    for q in solutions {
        let mut outputs = Vec::new();
        for x in inputs {
            outputs.push(w.outer.step(&interleave(&q.at(depth), &x.at(depth))));
        }
        if outputs.windows(2).any(|w| w[0] != w[1]) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// explicit witness library
// ---------------------------------------------------------------------------

fn first_enumeration(u: &Prefix) -> Option<(usize, Symbol)> {
    u.symbols()
        .iter()
        .enumerate()
        .find(|&(_, &s)| s != 0)
        .map(|(t, &s)| (t, s - 1))
}

/// ACC_ℕ ≤ₛW SEQACC_ℕ: while the input stays silent through stage `s`, emit
/// `0^s`; when `k` is enumerated at stage `t`, head for the ordinal
/// `⟨k,t⟩`, emitting zeros up to position `pair(k,t)` and ones after. The
/// answer translation is the identity.
pub fn witness_acc_to_seqacc() -> WitnessPair {
    let inner = Transducer::new("silence to ordinal pair(k,t)", |u: &Prefix| {
        match first_enumeration(u) {
            None => Prefix::from_symbols(vec![0; u.len()]),
            Some((t, k)) => {
                let cut = pair(k as u64, t as u64) as usize;
                Prefix::from_symbols(
                    (0..u.len()).map(|i| u32::from(i >= cut)).collect(),
                )
            }
        }
    });
    WitnessPair {
        name: "ACC_N<=SEQACC_N".to_string(),
        inner,
        outer: solution_track_identity(),
        strong: true,
    }
}

/// SEQACC_ℕ ≤ₛW ACC_ℕ: stay silent while reading zeros; on the first `1` at
/// position `s`, enumerate `π₁(s)` and go silent again. The answer
/// translation is the identity.
pub fn witness_seqacc_to_acc() -> WitnessPair {
    let inner = Transducer::new("enumerate pi1 of the observed stage", |u: &Prefix| {
        let mut out = vec![0u32; u.len()];
        if let Some(s) = u.symbols().iter().position(|&x| x == 1) {
            let (n, _) = unpair(s as u64);
            out[s] = n as u32 + 1;
        }
        Prefix::from_symbols(out)
    });
    WitnessPair {
        name: "SEQACC_N<=ACC_N".to_string(),
        inner,
        outer: solution_track_identity(),
        strong: true,
    }
}

// ---------------------------------------------------------------------------
// discontinuity certificates
// ---------------------------------------------------------------------------

/// Evidence that a problem is discontinuous along a convergent sequence of
/// instances, in the exact shape the certificate-to-reduction construction
/// consumes: instances `a_j` converging to `a`, a solution of `a`, an
/// enumeration `w_i` of solution-name prefixes, and the selection oracle
/// `λ(n,i) = j` choosing an instance that agrees with `a` to depth `n`
/// while all its solutions avoid `w_i`.
#[derive(Clone)]
pub struct DiscontinuityCertificate {
    pub sequence: Rc<dyn Fn(u64) -> Instance>,
    pub limit: Instance,
    pub limit_solution: NameStream,
    pub words: Rc<dyn Fn(u64) -> Prefix>,
    pub lambda: Rc<dyn Fn(u64, u64) -> u64>,
}

#[derive(Clone, Debug)]
pub enum CertificateError {
    /// `a_{λ(n,i)}` does not agree with the limit on the first `n` symbols.
    AgreementFailure { n: u64, i: u64, j: u64 },
    /// Some oracle solution of `a_{λ(n,i)}` extends `words(i)`.
    SolutionHitsWord { n: u64, i: u64, j: u64 },
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::AgreementFailure { n, i, j } => write!(
                f,
                "a_{j} = lambda({n},{i}) disagrees with the limit within depth {n}"
            ),
            CertificateError::SolutionHitsWord { n, i, j } => write!(
                f,
                "a solution of a_{j} = lambda({n},{i}) extends the forbidden word {i}"
            ),
        }
    }
}

/// Brute-force the certificate invariants over `n, i ≤ bound`.
pub fn validate_certificate(
    cert: &DiscontinuityCertificate,
    bound: u64,
) -> Result<(), CertificateError> {
    for n in 0..=bound {
        for i in 0..=bound {
            let j = (cert.lambda)(n, i);
            let a_j = (cert.sequence)(j);
            if a_j.input.at(n as usize) != cert.limit.input.at(n as usize) {
                return Err(CertificateError::AgreementFailure { n, i, j });
            }
            let word = (cert.words)(i);
            for q in &a_j.oracle_solutions {
                if word == q.at(word.len()) {
                    return Err(CertificateError::SolutionHitsWord { n, i, j });
                }
            }
        }
    }
    Ok(())
}

/// Build a witness `ACC_ℕ ≤ f` out of a discontinuity certificate for `f`.
///
/// Inner: while the ACC input is silent at stage `n`, follow the limit's
/// name; on seeing `i` enumerated at stage `n`, switch to (and stay on) the
/// name of `a_{λ(n,i)}` — monotone because that name agrees with the
/// limit's on the first `n` symbols. Outer: wait for the first solution
/// symbol and the first input symbol; answer `i+1` if the input already
/// enumerated `i`, otherwise the word index the solution extends.
pub fn witness_from_certificate(
    cert: &DiscontinuityCertificate,
    validation_bound: u64,
) -> Result<WitnessPair, CertificateError> {
    validate_certificate(cert, validation_bound)?;
    let sequence = cert.sequence.clone();
    let lambda = cert.lambda.clone();
    let limit = cert.limit.clone();
    let inner = Transducer::new("follow the limit, switch on enumeration", move |u: &Prefix| {
        match first_enumeration(u) {
            None => limit.input.at(u.len()),
            Some((n, i)) => {
                let j = lambda(n as u64, i as u64);
                sequence(j).input.at(u.len())
            }
        }
    });
    let outer = Transducer::new("enumerated index + 1, else the word index", |u: &Prefix| {
        if u.len() < 2 {
            return Prefix::new();
        }
        let (q, g) = deinterleave(u);
        let answer = if g.symbols()[0] != 0 {
            g.symbols()[0]
        } else {
            q.symbols()[0]
        };
        let mut out = vec![0u32; u.len() / 2];
        out[0] = answer;
        Prefix::from_symbols(out)
    });
    Ok(WitnessPair {
        name: "ACC_N<=f (certificate)".to_string(),
        inner,
        outer,
        strong: false,
    })
}

/// The canonical certificate that SEQACC_ℕ is discontinuous: the ordinal
/// points `j` converge to `ω`, `words(i) = [i]`, and `λ(n,i) = pair(i,n)`
/// (the pairing dominates both arguments, giving the required agreement).
pub fn canonical_seqacc_certificate() -> DiscontinuityCertificate {
    let ordinal_instance = |j: u64| -> Instance {
        let (forbidden, _) = unpair(j);
        Instance::new(
            format!("ordinal {j}"),
            encode(&SpaceDesc::OmegaPlusOne, &PointDesc::Ordinal(Ordinal::Finite(j)))
                .expect("ordinal encodes"),
        )
        .with_oracle_solutions(vec![NameStream::from_head(vec![forbidden as u32 + 1])])
    };
    let limit = Instance::new(
        "omega",
        encode(&SpaceDesc::OmegaPlusOne, &PointDesc::Ordinal(Ordinal::Omega))
            .expect("omega encodes"),
    )
    .with_oracle_solutions(vec![NameStream::from_head(vec![0])]);
    DiscontinuityCertificate {
        sequence: Rc::new(ordinal_instance),
        limit: limit.clone(),
        limit_solution: NameStream::from_head(vec![0]),
        words: Rc::new(|i| Prefix::from_symbols(vec![i as u32])),
        lambda: Rc::new(|n, i| pair(i, n)),
    }
}

// ---------------------------------------------------------------------------
// liftings
// ---------------------------------------------------------------------------

/// A cataloged injection of `sub` into `sup` with both point maps.
#[derive(Clone)]
pub struct Embedding {
    pub label: String,
    pub sub: SpaceDesc,
    pub sup: SpaceDesc,
    pub embed: Rc<dyn Fn(&PointDesc) -> PointDesc>,
    pub preimage: Rc<dyn Fn(&PointDesc) -> Option<PointDesc>>,
}

/// The inclusion `Finite(n) ⊆ Naturals`.
pub fn embedding_finite_in_naturals(n: u32) -> Embedding {
    Embedding {
        label: format!("Fin({n}) in N"),
        sub: SpaceDesc::Finite(n),
        sup: SpaceDesc::Naturals,
        embed: Rc::new(|p| match p {
            PointDesc::Fin(v) => PointDesc::Nat(*v as u64),
            other => other.clone(),
        }),
        preimage: Rc::new(move |p| match p {
            PointDesc::Nat(v) if *v < n as u64 => Some(PointDesc::Fin(*v as u32)),
            _ => None,
        }),
    }
}

/// The identity embedding of `Naturals` in itself.
pub fn embedding_naturals_identity() -> Embedding {
    Embedding {
        label: "N in N".to_string(),
        sub: SpaceDesc::Naturals,
        sup: SpaceDesc::Naturals,
        embed: Rc::new(|p| p.clone()),
        preimage: Rc::new(|p| Some(p.clone())),
    }
}

/// Find the earliest truncation of `u` whose decode is determined, with the
/// committed point. Committing to the earliest determination keeps
/// decode-driven transducers monotone on arbitrary inputs.
fn earliest_determination(space: &SpaceDesc, u: &Prefix) -> Option<(usize, PointDesc)> {
    for d in 0..=u.len() {
        if let DecodeVerdict::Determined(p) = decode(space, &u.truncated(d)) {
            return Some((d, p));
        }
    }
    None
}

/// `≠_sup ≤ₛW ≠_sub` for an embedded subspace: translate completed sup
/// names to completed sub names (sub points to themselves, everything else
/// toward the fresh bottom), and push the sub answer back through the
/// embedding.
pub fn lift_subspace(embedding: &Embedding) -> WitnessPair {
    let sub = embedding.sub.clone();
    let sup = embedding.sup.clone();
    let sup_compl = crate::spaces::completion_of(&sup);
    let preimage = embedding.preimage.clone();
    let inner_sub = sub.clone();
    let inner = Transducer::new(
        format!("restrict completed {sup} names to {sub}"),
        move |u: &Prefix| {
            match earliest_determination(&sup_compl, u) {
                Some((d, PointDesc::Embedded(x))) => {
                    if let Some(y) = preimage(&x) {
                        // skip while undecided, then the embedded sub name
                        let name = encode(&inner_sub, &y).expect("cataloged preimage encodes");
                        let shifted: Vec<Symbol> = (0..u.len().saturating_sub(d))
                            .map(|i| name.symbol_at(i) + 1)
                            .collect();
                        let mut out = vec![0u32; d];
                        out.extend(shifted);
                        Prefix::from_symbols(out)
                    } else {
                        Prefix::from_symbols(vec![0; u.len()])
                    }
                }
                _ => Prefix::from_symbols(vec![0; u.len()]),
            }
        },
    );
    let embed = embedding.embed.clone();
    let outer_sub = sub.clone();
    let outer_sup = sup.clone();
    let outer = Transducer::new(
        format!("embed the {sub} answer into {sup}"),
        move |u: &Prefix| {
            let (q, _) = deinterleave(u);
            match earliest_determination(&outer_sub, &q) {
                Some((_, y)) => {
                    let name = encode(&outer_sup, &embed(&y)).expect("embedded point encodes");
                    name.at(q.len())
                }
                None => Prefix::new(),
            }
        },
    );
    WitnessPair {
        name: format!("NEQ({sup})<=NEQ({sub}) [{}]", embedding.label),
        inner,
        outer,
        strong: true,
    }
}

/// A cataloged surjection `s : X → Y` with a section `t` (`s ∘ t = id`),
/// carried both as point maps (for validation) and as prefix-level
/// transducers (for the witness).
#[derive(Clone)]
pub struct Surjection {
    pub label: String,
    pub x_space: SpaceDesc,
    pub y_space: SpaceDesc,
    pub s_point: Rc<dyn Fn(&PointDesc) -> PointDesc>,
    pub t_point: Rc<dyn Fn(&PointDesc) -> PointDesc>,
    /// Maps completed-X name prefixes to completed-Y name prefixes.
    pub s_names: Transducer,
    /// Maps Y answer prefixes to X answer prefixes.
    pub t_names: Transducer,
}

#[derive(Clone, Debug)]
pub enum LiftError {
    /// `s(t(y)) ≠ y` on a validation fixture.
    SectionMismatch(String),
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftError::SectionMismatch(label) => write!(f, "s∘t is not the identity at {label}"),
        }
    }
}

/// `≠_X ≤ₛW ≠_Y` along a surjection with section: any `y ≠ s(x)` pulls back
/// to `t(y) ≠ x`. Validates `s ∘ t = id` on sampled Y points first.
pub fn lift_surjection(surj: &Surjection) -> Result<WitnessPair, LiftError> {
    for y in crate::spaces::sample_points(&surj.y_space, 8) {
        let back = (surj.s_point)(&(surj.t_point)(&y));
        if back != y {
            return Err(LiftError::SectionMismatch(crate::spaces::point_label(&y)));
        }
    }
    let t_names = surj.t_names.clone();
    let outer = Transducer::new(
        format!("section answer translation [{}]", surj.label),
        move |u: &Prefix| {
            let (q, _) = deinterleave(u);
            t_names.step(&q)
        },
    );
    Ok(WitnessPair {
        name: format!(
            "NEQ({})<=NEQ({}) [{}]",
            surj.x_space, surj.y_space, surj.label
        ),
        inner: surj.s_names.clone(),
        outer,
        strong: true,
    })
}

/// First projection `N*(w+1) → N` with section `n ↦ (n, ω)`.
pub fn surjection_proj1() -> Surjection {
    let x_space = SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne);
    let s_names = Transducer::new("project the first coordinate", |u: &Prefix| {
        // the first base symbol of the product name is the N coordinate;
        // skip until it shows up at position d, then commit the completed
        // N name n+1 followed by shifted zeros
        match u.symbols().iter().position(|&s| s != 0) {
            Some(d) => {
                let n = u.symbols()[d] - 1;
                let mut out = vec![0u32; d];
                out.push(n + 1);
                out.extend(vec![1u32; u.len() - d - 1]);
                Prefix::from_symbols(out)
            }
            None => Prefix::from_symbols(vec![0; u.len()]),
        }
    });
    let t_names = Transducer::new("pair the answer with omega", |u: &Prefix| {
        match earliest_determination(&SpaceDesc::Naturals, u) {
            Some((_, PointDesc::Nat(n))) => {
                // name of (n, ω): n on the even track, zeros elsewhere
                let mut out = vec![0u32; u.len()];
                out[0] = n as u32;
                Prefix::from_symbols(out)
            }
            _ => Prefix::new(),
        }
    });
    Surjection {
        label: "proj1".to_string(),
        x_space,
        y_space: SpaceDesc::Naturals,
        s_point: Rc::new(|p| match p {
            PointDesc::Pair(a, _) => (**a).clone(),
            other => other.clone(),
        }),
        t_point: Rc::new(|p| PointDesc::pair(p.clone(), PointDesc::Ordinal(Ordinal::Omega))),
        s_names,
        t_names,
    }
}

/// The surjection `N*(w+1) → N/N` sending `(n, ω)` to the bottom point
/// `·/n` and `(n, m)` to the top point `⟨n,m⟩/·`, with the section reading
/// the layer back. This is the pairing that turns inequality on the
/// layered space into inequality on the product.
pub fn surjection_pairing() -> Surjection {
    let x_space = SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne);
    let y_space = SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals);
    let s_names = Transducer::new("fold the product into the layered space", |u: &Prefix| {
        // skip until the N coordinate n shows up at position d
        let d = match u.symbols().iter().position(|&s| s != 0) {
            Some(d) => d,
            None => return Prefix::from_symbols(vec![0; u.len()]),
        };
        let n = (u.symbols()[d] - 1) as u64;
        // scan for the ordinal track's first 1: odd base indices of the
        // product name carry the w+1 coordinate
        let mut base_index = 0usize;
        let mut ordinal_zeros = 0u64;
        let mut reveal: Option<(usize, u64)> = None; // (position in u, m)
        for (i, &s) in u.symbols().iter().enumerate().skip(d + 1) {
            if s == 0 {
                continue;
            }
            base_index += 1;
            if base_index % 2 == 1 {
                if s - 1 == 1 {
                    reveal = Some((i, ordinal_zeros));
                    break;
                }
                ordinal_zeros += 1;
            }
        }
        // shifted bottom-track unary name of n: n ones, a two, then ones;
        // one symbol per step after d keeps the transducer monotone, and
        // any binary word may precede the escape once m shows up
        let bottom_sym = |i: usize| if i == n as usize { 2u32 } else { 1u32 };
        let mut target = vec![0u32; d];
        match reveal {
            None => target.extend((0..u.len() - d).map(bottom_sym)),
            Some((pos, m)) => {
                target.extend((0..pos - d).map(bottom_sym));
                target.push(3);
                target.push(pair(n, m) as u32 + 1);
                target.extend(vec![1u32; u.len()]);
                target.truncate(u.len());
            }
        }
        Prefix::from_symbols(target)
    });
    let t_names = Transducer::new("read the layer back into the product", |u: &Prefix| {
        let syms = u.symbols();
        // commit on the first layer event: an escape opens a top answer,
        // a 1 closes a bottom unary answer
        match syms.iter().position(|&s| s == 1 || s == 2) {
            // top answer j/·: once j is visible, name (π₀ j, π₁ j)
            Some(e) if syms[e] == 2 => {
                if syms.len() > e + 1 {
                    let (a, b) = unpair(syms[e + 1] as u64);
                    let even = NameStream::from_head(vec![a as u32]);
                    let mut odd_head = vec![0u32; b as usize];
                    odd_head.push(1);
                    let odd = NameStream::from_head(odd_head);
                    crate::spaces::interleave_streams(&even, &odd).at(u.len())
                } else {
                    Prefix::new()
                }
            }
            // bottom answer ·/k: name (k, ω)
            Some(k) => {
                let mut out = vec![0u32; u.len()];
                out[0] = k as u32;
                Prefix::from_symbols(out)
            }
            None => Prefix::new(),
        }
    });
    Surjection {
        label: "pairing".to_string(),
        x_space,
        y_space,
        s_point: Rc::new(|p| match p {
            PointDesc::Pair(a, b) => match (&**a, &**b) {
                (PointDesc::Nat(n), PointDesc::Ordinal(Ordinal::Omega)) => {
                    PointDesc::bot(PointDesc::Nat(*n))
                }
                (PointDesc::Nat(n), PointDesc::Ordinal(Ordinal::Finite(m))) => {
                    PointDesc::top(PointDesc::Nat(pair(*n, *m)))
                }
                _ => p.clone(),
            },
            other => other.clone(),
        }),
        t_point: Rc::new(|p| match p {
            PointDesc::Bot(y) => match &**y {
                PointDesc::Nat(n) => {
                    PointDesc::pair(PointDesc::Nat(*n), PointDesc::Ordinal(Ordinal::Omega))
                }
                _ => p.clone(),
            },
            PointDesc::Top(x) => match &**x {
                PointDesc::Nat(j) => {
                    let (a, b) = unpair(*j);
                    PointDesc::pair(PointDesc::Nat(a), PointDesc::Ordinal(Ordinal::Finite(b)))
                }
                _ => p.clone(),
            },
            other => other.clone(),
        }),
        s_names,
        t_names,
    }
}

// ---------------------------------------------------------------------------
// LPO and Sierpiński negation
// ---------------------------------------------------------------------------

/// The two directions of the equivalence between Sierpiński negation and
/// LPO: `¬ ≤ₛW LPO` (strong) and `LPO ≤_W ¬` (not strong — the outer must
/// consult the original input).
pub fn witness_lpo_neg() -> (WitnessPair, WitnessPair) {
    // ¬ ≤ₛW LPO: the Sierpiński name is already a binary stream; LPO's bit
    // is exactly the required answer name's first symbol.
    let neg_le_lpo = WitnessPair {
        name: "NOT_S<=LPO".to_string(),
        inner: Transducer::identity(),
        outer: Transducer::new("bit to Sierpinski name", |u: &Prefix| {
            let (q, _) = deinterleave(u);
            match q.symbols().first() {
                Some(&b) => {
                    let mut out = vec![0u32; q.len()];
                    out[0] = b;
                    Prefix::from_symbols(out)
                }
                None => Prefix::new(),
            }
        }),
        strong: true,
    };
    // LPO ≤_W ¬: scan the interleaving for the first 1; on the solution
    // track it shows the input was ⊥ (answer 1), on the input track it
    // shows a 1 occurred (answer 0).
    let lpo_le_neg = WitnessPair {
        name: "LPO<=NOT_S".to_string(),
        inner: Transducer::identity(),
        outer: Transducer::new("first 1 decides the bit", |u: &Prefix| {
            let hit = u.symbols().iter().position(|&s| s == 1);
            match hit {
                Some(i) => {
                    let answer = u32::from(i % 2 == 0);
                    let mut out = vec![0u32; u.len() / 2 + 1];
                    out[0] = answer;
                    Prefix::from_symbols(out)
                }
                None => Prefix::new(),
            }
        }),
        strong: false,
    };
    (neg_le_lpo, lpo_le_neg)
}

// ---------------------------------------------------------------------------
// the alternating decimal example
// ---------------------------------------------------------------------------

fn pow10_leq_pow2(k: usize) -> usize {
    // largest j with 10^j ≤ 2^k, capped by u128 range (a smaller count of
    // safe digits is always sound)
    let two: u128 = 1u128.checked_shl(k.min(126) as u32).unwrap_or(u128::MAX);
    let mut j = 0usize;
    let mut p: u128 = 10;
    while p <= two {
        j += 1;
        p = p.saturating_mul(10);
    }
    j
}

/// Both directions of `f ≡_W C_2` for the alternating decimal function
/// `f(n) = (−1)ⁿ 2⁻ⁿ`, `f(ω) = 0`. Option 0 of the binary choice stands
/// for the non-negative sign.
pub fn witness_omega_example() -> (WitnessPair, WitnessPair) {
    // f ≤_W C_2: ask the choice which sign is right, excluding the wrong
    // parity once n is revealed; the instance is never dead because nothing
    // is excluded on 0^ω.
    let f_le_c2_inner = Transducer::new("exclude the wrong sign on reveal", |u: &Prefix| {
        let mut out = vec![0u32; u.len()];
        if let Some(n) = u.symbols().iter().position(|&s| s == 1) {
            let wrong = 1 - (n % 2) as u32;
            out[n] = wrong + 1;
        }
        Prefix::from_symbols(out)
    });
    let f_le_c2_outer = Transducer::new("sign bit drives the digit schedule", |u: &Prefix| {
        let (q, p) = deinterleave(u);
        let mut out: Vec<u32> = Vec::new();
        let sign = match q.symbols().first() {
            Some(&b) => b,
            None => return Prefix::new(),
        };
        out.push(sign);
        let first_one = p.symbols().iter().position(|&s| s == 1);
        if p.is_empty() {
            return Prefix::from_symbols(out);
        }
        match first_one {
            Some(n) => {
                // the value is exactly (−1)ⁿ 2⁻ⁿ
                out.push(u32::from(n == 0));
                out.extend(crate::problems::half_power_digits(n as u64));
                while out.len() < 2 + p.len() {
                    out.push(0);
                }
            }
            None => {
                // |value| ≤ 2^-k: the integer part is 0 and the first
                // pow10_leq_pow2(k) fractional digits are 0
                let k = p.len();
                out.push(0);
                out.extend(vec![0u32; pow10_leq_pow2(k)]);
            }
        }
        Prefix::from_symbols(out)
    });
    let f_le_c2 = WitnessPair {
        name: "OMEGA_EXAMPLE<=C_2".to_string(),
        inner: f_le_c2_inner,
        outer: f_le_c2_outer,
        strong: false,
    };

    // C_2 ≤_W f: head for an ordinal whose parity matches the surviving
    // option; the sign of the decimal answer hands the option back.
    let c2_le_f_inner = Transducer::new("parity tracks the surviving option", |u: &Prefix| {
        let mut out = vec![0u32; u.len()];
        if let Some((s, e)) = first_enumeration(u) {
            let choice = 1 - (e % 2);
            // the first ordinal ≥ s with the parity of the choice
            let n = if s as u32 % 2 == choice { s } else { s + 1 };
            if n < out.len() {
                out[n] = 1;
            }
        }
        Prefix::from_symbols(out)
    });
    let c2_le_f_outer = Transducer::new("read the option off the sign", |u: &Prefix| {
        let (q, _) = deinterleave(u);
        match q.symbols().first() {
            Some(&sign) => {
                let mut out = vec![0u32; q.len()];
                out[0] = sign;
                Prefix::from_symbols(out)
            }
            None => Prefix::new(),
        }
    });
    let c2_le_f = WitnessPair {
        name: "C_2<=OMEGA_EXAMPLE".to_string(),
        inner: c2_le_f_inner,
        outer: c2_le_f_outer,
        strong: true,
    };
    (f_le_c2, c2_le_f)
}

// ---------------------------------------------------------------------------
// the adversarial refuter
// ---------------------------------------------------------------------------

/// One adversary decision: how to extend the input prefix under
/// construction and the oracle-solution prefix alongside it.
#[derive(Clone, Debug)]
pub struct AdvMove {
    pub label: String,
    pub input_ext: Prefix,
    pub solution_ext: Prefix,
}

/// The adversary's state: the prefixes built so far and the labels of the
/// moves that built them.
#[derive(Clone, Debug, Default)]
pub struct AdvState {
    pub input: Prefix,
    pub solution: Prefix,
    pub moves: Vec<String>,
}

/// A structured space of adversarial schedules for one problem: which
/// extensions are allowed in each state, and how to complete a state into a
/// full, valid instance with correct oracle solutions.
#[derive(Clone)]
pub struct AdversarialFamily {
    pub label: String,
    pub options: Rc<dyn Fn(&AdvState) -> Vec<AdvMove>>,
    pub complete: Rc<dyn Fn(&AdvState) -> Instance>,
}

#[derive(Clone, Copy, Debug)]
pub struct RefuteBounds {
    pub depth: usize,
    pub max_moves: usize,
    /// Total number of schedules that may be completed and evaluated.
    pub schedule_budget: usize,
}

impl Default for RefuteBounds {
    fn default() -> Self {
        RefuteBounds {
            depth: 64,
            max_moves: 8,
            schedule_budget: 10_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub schedule: Vec<String>,
    pub instance_label: String,
    pub input_head: Vec<Symbol>,
    pub input_cycle: Vec<Symbol>,
    pub depth: usize,
    pub inner_output: Prefix,
    pub outer_outputs: Vec<Prefix>,
    pub violation: String,
}

#[derive(Clone, Debug)]
pub enum RefuteOutcome {
    Counterexample(Counterexample),
    NotFound { schedules_tried: usize },
    BudgetExceeded { schedules_tried: usize },
}

/// Evaluate a candidate witness against one adversarial schedule: the
/// outer transducer sees exactly the solution/input prefixes the adversary
/// chose to reveal, and whatever it committed is judged against the
/// completed instance. `Some` is a violation.
fn evaluate_schedule(
    f: &Problem,
    g: &Problem,
    cand: &WitnessPair,
    state: &AdvState,
    family: &AdversarialFamily,
    depth: usize,
) -> Option<Counterexample> {
    let instance = (family.complete)(state);
    let g_input = cand.inner.step(&state.input);
    let mut outer_outputs = Vec::new();
    let mut violation: Option<String> = None;
    if g.domain_test(&g_input) == DomainVerdict::Dead {
        violation = Some("inner transducer produced a dead g-instance prefix".to_string());
    } else {
        let output = cand.outer.step(&interleave(&state.solution, &state.input));
        let v = f.solution_verdict(&instance, &output, depth);
        if v.status == VerdictStatus::Refuted {
            violation = Some(format!("outer verdict: {v}"));
        }
        outer_outputs.push(output);
    }
    violation.map(|violation| Counterexample {
        schedule: state.moves.clone(),
        instance_label: instance.label.clone(),
        input_head: instance.input.head().to_vec(),
        input_cycle: instance.input.cycle().to_vec(),
        depth,
        inner_output: g_input,
        outer_outputs,
        violation,
    })
}

/// Iterative-deepening lexicographic search over adversarial schedules: the
/// first (shortest, then lexicographically least) schedule whose completed
/// instance yields a dead domain or a refuted outer verdict is returned.
pub fn refute_witness(
    f: &Problem,
    g: &Problem,
    cand: &WitnessPair,
    family: &AdversarialFamily,
    bounds: RefuteBounds,
) -> RefuteOutcome {
    let mut tried = 0usize;
    for target_len in 0..=bounds.max_moves {
        let mut stack: Vec<AdvState> = vec![AdvState::default()];
        // depth-first with reversed pushes keeps lexicographic order
        while let Some(state) = stack.pop() {
            if state.moves.len() == target_len {
                tried += 1;
                if tried > bounds.schedule_budget {
                    return RefuteOutcome::BudgetExceeded {
                        schedules_tried: tried - 1,
                    };
                }
                if let Some(ce) = evaluate_schedule(f, g, cand, &state, family, bounds.depth) {
                    return RefuteOutcome::Counterexample(ce);
                }
                continue;
            }
            let opts = (family.options)(&state);
            for mv in opts.into_iter().rev() {
                let mut next = state.clone();
                next.input = next.input.concat(&mv.input_ext);
                next.solution = next.solution.concat(&mv.solution_ext);
                next.moves.push(mv.label);
                stack.push(next);
            }
        }
    }
    RefuteOutcome::NotFound {
        schedules_tried: tried,
    }
}

/// Re-run a counterexample's schedule and confirm the same violation
/// occurs; the refuter is deterministic, so this must always hold for
/// counterexamples it returned.
pub fn replay_counterexample(
    f: &Problem,
    g: &Problem,
    cand: &WitnessPair,
    family: &AdversarialFamily,
    ce: &Counterexample,
) -> bool {
    let mut state = AdvState::default();
    for step in &ce.schedule {
        let opts = (family.options)(&state);
        let mv = match opts.into_iter().find(|m| &m.label == step) {
            Some(mv) => mv,
            None => return false,
        };
        state.input = state.input.concat(&mv.input_ext);
        state.solution = state.solution.concat(&mv.solution_ext);
        state.moves.push(mv.label);
    }
    match evaluate_schedule(f, g, cand, &state, family, ce.depth) {
        Some(again) => again.violation == ce.violation && again.inner_output == ce.inner_output,
        None => false,
    }
}

/// Adversary for ACC-style negative information: stay silent or enumerate a
/// small value; completion freezes the prefix with a zero tail and supplies
/// the least surviving value as the oracle solution.
pub fn family_acc_adversary() -> AdversarialFamily {
    AdversarialFamily {
        label: "ACC_N adversary".to_string(),
        options: Rc::new(|state: &AdvState| {
            let enumerated = state.input.symbols().iter().any(|&s| s != 0);
            let mut moves = vec![AdvMove {
                label: "silence".to_string(),
                input_ext: Prefix::from([0]),
                solution_ext: Prefix::new(),
            }];
            if !enumerated {
                for k in 0..3u32 {
                    moves.push(AdvMove {
                        label: format!("exclude {k}"),
                        input_ext: Prefix::from_symbols(vec![k + 1]),
                        solution_ext: Prefix::new(),
                    });
                }
            }
            moves
        }),
        complete: Rc::new(|state: &AdvState| {
            let input = NameStream::from_head(state.input.symbols().to_vec());
            let excluded = crate::problems::enumerated_set(&input);
            let answer = (0..).find(|k| !excluded.contains(k)).unwrap_or(0);
            Instance::new(format!("adversarial U={excluded:?}"), input)
                .with_oracle_solutions(vec![NameStream::from_head(vec![answer as u32])])
        }),
    }
}

/// Adversary against strong candidates for `LPO ≤ ¬`: delay the solution
/// track, then fire its 1 late. If the 1 fires, the completed input is the
/// all-zero stream (the negation's answer is legitimately ⊤, delayed);
/// otherwise the input reveals a 1 and the answer stays ⊥.
pub fn family_lpo_neg_adversary() -> AdversarialFamily {
    AdversarialFamily {
        label: "delayed negation answer".to_string(),
        options: Rc::new(|state: &AdvState| {
            let fired = state.solution.symbols().contains(&1);
            let mut moves = vec![AdvMove {
                label: "delay".to_string(),
                input_ext: Prefix::from([0]),
                solution_ext: Prefix::from([0]),
            }];
            if !fired {
                moves.push(AdvMove {
                    label: "fire".to_string(),
                    input_ext: Prefix::from([0]),
                    solution_ext: Prefix::from([1]),
                });
            }
            moves
        }),
        complete: Rc::new(|state: &AdvState| {
            let fired = state.solution.symbols().contains(&1);
            if fired {
                // input is truly 0^ω; the fired solution names ⊤ = ¬⊥
                let q = NameStream::from_head(state.solution.symbols().to_vec());
                Instance::new("all-zero input, late top answer", NameStream::constant(0))
                    .with_oracle_solutions(vec![q])
            } else {
                // the input really was 0^ω all along; the ⊤ answer simply
                // had not arrived yet while the adversary stayed silent
                let mut head = state.solution.symbols().to_vec();
                head.push(1);
                Instance::new("all-zero input, answer still pending", NameStream::constant(0))
                    .with_oracle_solutions(vec![NameStream::from_head(head)])
            }
        }),
    }
}

/// Adversary for inequality on the layered space: stay silent (skips) or
/// commit the completed input to the embedded bottom point `·/0`. Oracle
/// solutions answer the inequality on the product side.
pub fn family_layered_commit_adversary() -> AdversarialFamily {
    AdversarialFamily {
        label: "commit-then-punish on NEQ(N/N)".to_string(),
        options: Rc::new(|state: &AdvState| {
            let committed = state.input.symbols().iter().any(|&s| s != 0);
            let mut moves = vec![AdvMove {
                label: "skip".to_string(),
                input_ext: Prefix::from([0]),
                solution_ext: Prefix::from([0]),
            }];
            if !committed {
                moves.push(AdvMove {
                    label: "reveal ./0".to_string(),
                    // shifted unary bottom name of 0: base 1 0^ω, coded 2 1^ω
                    input_ext: Prefix::from([2]),
                    solution_ext: Prefix::new(),
                });
            }
            moves
        }),
        complete: Rc::new(|state: &AdvState| {
            let committed = state.input.symbols().iter().any(|&s| s != 0);
            let head = state.input.symbols().to_vec();
            if committed {
                // completed input names Embedded(·/0); any product-side
                // answer works as the oracle solution of the Bottom or
                // committed inner instance
                let input = NameStream::new(head, vec![1]);
                Instance::new("revealed ./0", input)
                    .with_oracle_solutions(vec![NameStream::from_head(vec![1])])
            } else {
                let input = NameStream::new(head, vec![0]);
                Instance::new("silent forever", input)
                    .with_oracle_solutions(vec![NameStream::from_head(vec![1])])
            }
        }),
    }
}

/// The documented naive strong candidate for `LPO ≤ₛW ¬`: its outer reads
/// only the solution track and declares "a 1 occurred" after a few silent
/// steps. A delayed ⊤ answer on the all-zero input refutes it.
pub fn candidate_naive_strong_lpo_neg() -> WitnessPair {
    WitnessPair {
        name: "naive strong LPO<=NOT_S".to_string(),
        inner: Transducer::identity(),
        outer: Transducer::new("commit 0 after 4 silent solution symbols", |u: &Prefix| {
            let (q, _) = deinterleave(u);
            match q.symbols().iter().position(|&s| s == 1) {
                Some(_) => {
                    let mut out = vec![0u32; q.len()];
                    out[0] = 1;
                    Prefix::from_symbols(out)
                }
                None if q.len() >= 4 => Prefix::from_symbols(vec![0; q.len()]),
                None => Prefix::new(),
            }
        }),
        strong: true,
    }
}

/// The documented naive candidate for `≠_{N/N} ≤ ≠_{N*(w+1)}`: it commits
/// the bottom answer `·/0` after a few silent steps. The commit-then-switch
/// schedule (reveal `·/0` late) refutes it.
pub fn candidate_layered_early_commit() -> WitnessPair {
    WitnessPair {
        name: "naive NEQ(N/N)<=NEQ(N*(w+1))".to_string(),
        inner: Transducer::new("all skips", |u: &Prefix| {
            Prefix::from_symbols(vec![0; u.len()])
        }),
        outer: Transducer::new("commit ./0 after silence", |u: &Prefix| {
            if u.len() >= 2 * crate::problems::COMMIT_DEPTH {
                let mut out = vec![0u32; crate::problems::COMMIT_DEPTH];
                out[0] = 1;
                Prefix::from_symbols(out)
            } else {
                Prefix::new()
            }
        }),
        strong: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::{apply, check_monotone};
    use crate::problems::{
        acc_nat, c_fin, lpo, neq, omega_example_f, seqacc_nat, sierp_neg, CatalogError,
        DECIMAL_VERIFY_DIGITS,
    };
    use crate::spaces::completion_of;

    fn ordinal_name(j: u64) -> NameStream {
        encode(&SpaceDesc::OmegaPlusOne, &PointDesc::Ordinal(Ordinal::Finite(j))).unwrap()
    }

    /// ACC suite: the empty exclusion plus every U={k} at stage s for
    /// k, s ≤ bound, with oracle solutions matching witness_acc_to_seqacc.
    fn acc_suite(bound: u32) -> Vec<Instance> {
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

    fn seqacc_suite(bound: u64) -> Vec<Instance> {
        let mut suite = vec![Instance::new(
            "omega",
            encode(&SpaceDesc::OmegaPlusOne, &PointDesc::Ordinal(Ordinal::Omega)).unwrap(),
        )
        .with_oracle_solutions(vec![NameStream::from_head(vec![0])])];
        for n in 0..=bound {
            for m in 0..=bound {
                let j = pair(n, m);
                suite.push(
                    Instance::new(format!("ordinal pair({n},{m})"), ordinal_name(j))
                        .with_oracle_solutions(vec![NameStream::from_head(vec![n as u32 + 1])]),
                );
            }
        }
        suite
    }

    #[test]
    fn acc_to_seqacc_inner_examples() {
        let w = witness_acc_to_seqacc();
        let silent = NameStream::constant(0);
        assert_eq!(
            apply(&w.inner, &silent, 16),
            Prefix::from_symbols(vec![0; 16])
        );
        // enumerate 3 at stage 2: zeros up to pair(3,2), then ones
        let input = NameStream::from_head(vec![0, 0, 4]);
        let cut = pair(3, 2) as usize;
        let out = apply(&w.inner, &input, cut + 5);
        for i in 0..cut {
            assert_eq!(out.symbols()[i], 0);
        }
        for i in cut..cut + 5 {
            assert_eq!(out.symbols()[i], 1);
        }
    }

    #[test]
    fn acc_to_seqacc_passes_suite() {
        let report = check_witness(
            &acc_nat(),
            &seqacc_nat(),
            &witness_acc_to_seqacc(),
            &acc_suite(8),
            256,
        )
        .unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn seqacc_to_acc_inner_examples() {
        let w = witness_seqacc_to_acc();
        let omega = NameStream::constant(0);
        assert_eq!(
            apply(&w.inner, &omega, 24),
            Prefix::from_symbols(vec![0; 24])
        );
        let j = pair(2, 1);
        let out = apply(&w.inner, &ordinal_name(j), 24);
        let hits: Vec<(usize, u32)> = out
            .symbols()
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s != 0)
            .map(|(i, &s)| (i, s))
            .collect();
        assert_eq!(hits, vec![(j as usize, 3)], "enumerates 2 once");
    }

    #[test]
    fn seqacc_to_acc_passes_suite() {
        let report = check_witness(
            &seqacc_nat(),
            &acc_nat(),
            &witness_seqacc_to_acc(),
            &seqacc_suite(6),
            128,
        )
        .unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn identity_witness_passes_everywhere() {
        let w = witness_identity("id");
        for (problem, suite) in [(acc_nat(), acc_suite(4)), (seqacc_nat(), seqacc_suite(4))] {
            let report = check_witness(&problem, &problem, &w, &suite, 128).unwrap();
            assert!(report.passed(), "{}: {:?}", problem.name, report.outcome);
        }
    }

    #[test]
    fn constant_zero_outer_fails() {
        let w = WitnessPair {
            name: "constant zero outer".to_string(),
            inner: Transducer::identity(),
            outer: Transducer::new("always 0", |u: &Prefix| {
                Prefix::from_symbols(vec![0; u.len() / 2 + 1])
            }),
            strong: true,
        };
        let suite = vec![Instance::new("U={0}", NameStream::from_head(vec![1]))
            .with_oracle_solutions(vec![NameStream::from_head(vec![1])])];
        let report = check_witness(&acc_nat(), &acc_nat(), &w, &suite, 64).unwrap();
        assert!(!report.passed());
        assert!(matches!(report.outcome, CheckOutcome::Fail { .. }));
    }

    #[test]
    fn missing_oracle_solutions_is_an_error() {
        let suite = vec![Instance::new("bare", NameStream::constant(0))];
        let err =
            check_witness(&acc_nat(), &acc_nat(), &witness_identity("id"), &suite, 16).unwrap_err();
        assert!(matches!(err, CheckError::MissingOracleSolutions(_)));
    }

    #[test]
    fn library_witnesses_are_monotone() {
        let mut all: Vec<WitnessPair> = vec![
            witness_acc_to_seqacc(),
            witness_seqacc_to_acc(),
            witness_identity("id"),
            lift_subspace(&embedding_finite_in_naturals(2)),
            lift_surjection(&surjection_proj1()).unwrap(),
            lift_surjection(&surjection_pairing()).unwrap(),
            witness_from_certificate(&canonical_seqacc_certificate(), 6).unwrap(),
        ];
        let (a, b) = witness_lpo_neg();
        let (c, d) = witness_omega_example();
        all.extend([a, b, c, d]);
        for w in &all {
            let inner = check_monotone(&w.inner, 8, 6).unwrap();
            assert!(inner.is_empty(), "{} inner: {:?}", w.name, inner.violations);
            let outer = check_monotone(&w.outer, 8, 6).unwrap();
            assert!(outer.is_empty(), "{} outer: {:?}", w.name, outer.violations);
        }
    }

    #[test]
    fn strong_witnesses_ignore_input_track() {
        let inputs: Vec<NameStream> = (0..10u32)
            .map(|k| NameStream::new(vec![k % 3, 0, k % 2], vec![k % 2]))
            .collect();
        let solutions = vec![
            NameStream::from_head(vec![3]),
            NameStream::from_head(vec![0, 1]),
        ];
        for w in [
            witness_acc_to_seqacc(),
            witness_seqacc_to_acc(),
            witness_identity("id"),
            witness_lpo_neg().0,
            witness_omega_example().1,
        ] {
            assert!(w.strong, "{}", w.name);
            assert!(check_strong(&w, &inputs, &solutions, 64), "{}", w.name);
        }
    }

    #[test]
    fn composition_is_transitive_at_fixture_scale() {
        let composed = compose_witness(&witness_acc_to_seqacc(), &witness_seqacc_to_acc());
        // oracle solutions must solve the final ACC instance: the chain maps
        // U={k} to an ACC instance excluding k again, so k+1 still works
        let report = check_witness(&acc_nat(), &acc_nat(), &composed, &acc_suite(6), 256).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn canonical_certificate_validates() {
        assert!(validate_certificate(&canonical_seqacc_certificate(), 6).is_ok());
    }

    #[test]
    fn broken_certificate_is_rejected() {
        let mut cert = canonical_seqacc_certificate();
        // a selection that ignores n cannot maintain agreement with omega
        cert.lambda = Rc::new(|_, i| i);
        assert!(validate_certificate(&cert, 6).is_err());
    }

    #[test]
    fn certificate_witness_inner_examples() {
        let cert = canonical_seqacc_certificate();
        let w = witness_from_certificate(&cert, 6).unwrap();
        // silent input: the inner output follows omega's name
        let silent = NameStream::constant(0);
        assert_eq!(
            apply(&w.inner, &silent, 32),
            Prefix::from_symbols(vec![0; 32])
        );
        // enumerating i=2 at stage 3 switches to a_{lambda(3,2)}
        let input = NameStream::from_head(vec![0, 0, 0, 3]);
        let j = pair(2, 3);
        assert_eq!(apply(&w.inner, &input, 64), ordinal_name(j).at(64));
    }

    #[test]
    fn certificate_witness_passes_acc_suite() {
        let cert = canonical_seqacc_certificate();
        let w = witness_from_certificate(&cert, 6).unwrap();
        // oracle solutions must solve the seqacc instance the inner
        // produces: a_{pair(k,t)} forbids k, so k+1 works again
        let report =
            check_witness(&acc_nat(), &seqacc_nat(), &w, &acc_suite(6), 128).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    fn completion_instance(space: &SpaceDesc, point: PointDesc, label: &str) -> NameStream {
        let _ = label;
        encode(&completion_of(space), &PointDesc::embedded(point)).unwrap()
    }

    #[test]
    fn subspace_lift_passes_fixtures() {
        let w = lift_subspace(&embedding_finite_in_naturals(2));
        let f = neq(&SpaceDesc::Naturals).unwrap();
        let g = neq(&SpaceDesc::Finite(2)).unwrap();
        let nat = SpaceDesc::Naturals;
        let suite = vec![
            Instance::new(
                "embedded 0",
                completion_instance(&nat, PointDesc::Nat(0), "0"),
            )
            .with_oracle_solutions(vec![NameStream::from_head(vec![1])]),
            Instance::new(
                "embedded 1",
                completion_instance(&nat, PointDesc::Nat(1), "1"),
            )
            .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
            // 5 is outside the subspace: the inner heads for Bottom and any
            // binary answer beats 5
            Instance::new(
                "embedded 5",
                completion_instance(&nat, PointDesc::Nat(5), "5"),
            )
            .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
            Instance::new("bottom", NameStream::constant(0))
                .with_oracle_solutions(vec![NameStream::from_head(vec![1])]),
        ];
        let report = check_witness(&f, &g, &w, &suite, 64).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn subspace_lift_keeps_bottom_unresolved() {
        let w = lift_subspace(&embedding_finite_in_naturals(2));
        let out = apply(&w.inner, &NameStream::constant(0), 64);
        assert_eq!(
            decode(&completion_of(&SpaceDesc::Finite(2)), &out),
            DecodeVerdict::ConsistentMany
        );
    }

    #[test]
    fn identity_embedding_acts_as_identity() {
        let w = lift_subspace(&embedding_naturals_identity());
        for k in 0..10u64 {
            let x = completion_instance(&SpaceDesc::Naturals, PointDesc::Nat(k), "k");
            let out = apply(&w.inner, &x, 32);
            assert_eq!(
                decode(&completion_of(&SpaceDesc::Naturals), &out),
                DecodeVerdict::Determined(PointDesc::embedded(PointDesc::Nat(k)))
            );
        }
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

    #[test]
    fn proj1_surjection_passes_fixtures() {
        let surj = surjection_proj1();
        let w = lift_surjection(&surj).unwrap();
        let x_space = surj.x_space.clone();
        let f = neq(&x_space).unwrap();
        let g = neq(&SpaceDesc::Naturals).unwrap();
        let mut suite = Vec::new();
        for n in 0..5u64 {
            // s(n, ω) = n and s(n, m) = n: the Y-side forbids n, answer n+1
            suite.push(
                Instance::new(
                    format!("({n}, omega)"),
                    completion_instance(&x_space, product_point(n, None), "x"),
                )
                .with_oracle_solutions(vec![NameStream::from_head(vec![n as u32 + 1])]),
            );
            suite.push(
                Instance::new(
                    format!("({n}, 2)"),
                    completion_instance(&x_space, product_point(n, Some(2)), "x"),
                )
                .with_oracle_solutions(vec![NameStream::from_head(vec![n as u32 + 1])]),
            );
        }
        suite.push(
            Instance::new("bottom", NameStream::constant(0))
                .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
        );
        assert_eq!(suite.len(), 11);
        let report = check_witness(&f, &g, &w, &suite, 64).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn pairing_surjection_passes_fixtures() {
        let surj = surjection_pairing();
        let w = lift_surjection(&surj).unwrap();
        let x_space = surj.x_space.clone();
        let y_space = surj.y_space.clone();
        let f = neq(&x_space).unwrap();
        let g = neq(&y_space).unwrap();
        let mut suite = Vec::new();
        for n in 0..4u64 {
            // x = (n, ω) maps to ·/n: a valid Y-answer is the top point
            // 0/· (or anything ≠ ·/n); its name is 2 then the index
            suite.push(
                Instance::new(
                    format!("({n}, omega)"),
                    completion_instance(&x_space, product_point(n, None), "x"),
                )
                .with_oracle_solutions(vec![NameStream::from_head(vec![2, 0])]),
            );
            for m in 0..3u64 {
                // x = (n, m) maps to ⟨n,m⟩/·: answer ·/(n+1), unary-coded
                let mut unary = vec![0u32; n as usize + 1];
                unary.push(1);
                suite.push(
                    Instance::new(
                        format!("({n}, {m})"),
                        completion_instance(&x_space, product_point(n, Some(m)), "x"),
                    )
                    .with_oracle_solutions(vec![NameStream::from_head(unary)]),
                );
            }
        }
        suite.push(
            Instance::new("bottom", NameStream::constant(0))
                .with_oracle_solutions(vec![NameStream::from_head(vec![2, 0])]),
        );
        let report = check_witness(&f, &g, &w, &suite, 64).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn surjection_section_mismatch_is_detected() {
        let mut surj = surjection_proj1();
        surj.t_point = Rc::new(|_| product_point(99, None));
        assert!(matches!(
            lift_surjection(&surj),
            Err(LiftError::SectionMismatch(_))
        ));
    }

    fn sierp_top_name() -> NameStream {
        NameStream::from_head(vec![1])
    }

    #[test]
    fn lpo_neg_first_direction_passes() {
        let (neg_le_lpo, _) = witness_lpo_neg();
        let f = sierp_neg();
        let g = lpo();
        let suite = vec![
            Instance::new("bottom", NameStream::constant(0))
                .with_oracle_solutions(vec![NameStream::from_head(vec![1])]),
            Instance::new("top at 0", sierp_top_name())
                .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
            Instance::new("top at 5", NameStream::from_head(vec![0, 0, 0, 0, 0, 1]))
                .with_oracle_solutions(vec![NameStream::from_head(vec![0])]),
        ];
        let report = check_witness(&f, &g, &neg_le_lpo, &suite, 64).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn lpo_neg_second_direction_passes() {
        let (_, lpo_le_neg) = witness_lpo_neg();
        let f = lpo();
        let g = sierp_neg();
        let mut suite = vec![
            // 0^ω: ¬ answers ⊤ (possibly late): outer answers 1
            Instance::new("all zero", NameStream::constant(0))
                .with_oracle_solutions(vec![sierp_top_name(), NameStream::from_head(vec![0, 0, 1])]),
        ];
        for k in 0..7usize {
            let mut head = vec![0u32; k];
            head.push(1);
            suite.push(
                Instance::new(format!("1 at {k}"), NameStream::from_head(head))
                    .with_oracle_solutions(vec![NameStream::constant(0)]),
            );
        }
        let report = check_witness(&f, &g, &lpo_le_neg, &suite, 64).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    fn omega_point(n: Option<u64>) -> NameStream {
        encode(
            &SpaceDesc::OmegaPlusOne,
            &PointDesc::Ordinal(match n {
                Some(n) => Ordinal::Finite(n),
                None => Ordinal::Omega,
            }),
        )
        .unwrap()
    }

    #[test]
    fn omega_example_forward_direction_passes() {
        let (f_le_c2, _) = witness_omega_example();
        let f = omega_example_f();
        let g = c_fin(2);
        let mut suite = Vec::new();
        for n in 0..8u64 {
            // the inner excludes the wrong sign, the right option survives
            let c = (n % 2) as u32;
            suite.push(
                Instance::new(format!("n={n}"), omega_point(Some(n)))
                    .with_oracle_solutions(vec![NameStream::from_head(vec![c])]),
            );
        }
        suite.push(
            Instance::new("omega", omega_point(None)).with_oracle_solutions(vec![
                NameStream::from_head(vec![0]),
                NameStream::from_head(vec![1]),
            ]),
        );
        let depth = 64.max(4 * (2 + DECIMAL_VERIFY_DIGITS));
        let report = check_witness(&f, &g, &f_le_c2, &suite, depth).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn omega_example_forward_never_dead() {
        let (f_le_c2, _) = witness_omega_example();
        let g = c_fin(2);
        for n in 0..6u64 {
            let out = apply(&f_le_c2.inner, &omega_point(Some(n)), 64);
            assert_eq!(g.domain_test(&out), DomainVerdict::StillValid);
        }
        let out = apply(&f_le_c2.inner, &omega_point(None), 64);
        assert_eq!(g.domain_test(&out), DomainVerdict::StillValid);
    }

    #[test]
    fn omega_example_reverse_direction_passes() {
        let (_, c2_le_f) = witness_omega_example();
        let f = c_fin(2);
        let g = omega_example_f();
        let mut suite = Vec::new();
        // three fixture classes: nothing excluded, exclude 0, exclude 1
        let classes: Vec<(String, Vec<u32>)> = vec![
            ("nothing excluded".to_string(), vec![]),
            ("exclude 0".to_string(), vec![0]),
            ("exclude 1".to_string(), vec![1]),
        ];
        for (label, excluded) in classes {
            for delay in [0usize, 3] {
                let mut head = vec![0u32; delay];
                for &e in &excluded {
                    head.push(e + 1);
                }
                let input = NameStream::from_head(head);
                // recompute the ordinal the inner heads for, to hand the
                // exact decimal expansion over as the oracle solution
                let c2_input_prefix = input.at(64);
                let solution = match first_enumeration(&c2_input_prefix) {
                    Some((s, e)) => {
                        let choice = 1 - (e % 2);
                        let n = if s as u32 % 2 == choice { s } else { s + 1 };
                        crate::problems::omega_example_expansions(Ordinal::Finite(n as u64))
                            .remove(0)
                    }
                    None => crate::problems::omega_example_expansions(Ordinal::Omega).remove(0),
                };
                suite.push(
                    Instance::new(format!("{label}, delay {delay}"), input)
                        .with_oracle_solutions(vec![solution]),
                );
            }
        }
        let report = check_witness(&f, &g, &c2_le_f, &suite, 64).unwrap();
        assert!(report.passed(), "{:?}", report.outcome);
    }

    #[test]
    fn refuter_finds_constant_zero_counterexample() {
        let cand = WitnessPair {
            name: "constant zero outer".to_string(),
            inner: Transducer::identity(),
            outer: Transducer::new("always 0", |u: &Prefix| {
                Prefix::from_symbols(vec![0; u.len() / 2 + 1])
            }),
            strong: true,
        };
        let family = family_acc_adversary();
        let outcome = refute_witness(
            &acc_nat(),
            &acc_nat(),
            &cand,
            &family,
            RefuteBounds {
                depth: 8,
                max_moves: 4,
                schedule_budget: 10_000,
            },
        );
        match outcome {
            RefuteOutcome::Counterexample(ce) => {
                assert!(ce.schedule.contains(&"exclude 0".to_string()), "{ce:?}");
                assert!(replay_counterexample(
                    &acc_nat(),
                    &acc_nat(),
                    &cand,
                    &family,
                    &ce
                ));
            }
            other => panic!("expected a counterexample, got {other:?}"),
        }
    }

    #[test]
    fn refuter_breaks_naive_strong_lpo_candidate() {
        let cand = candidate_naive_strong_lpo_neg();
        let family = family_lpo_neg_adversary();
        let outcome = refute_witness(&lpo(), &sierp_neg(), &cand, &family, RefuteBounds::default());
        match outcome {
            RefuteOutcome::Counterexample(ce) => {
                // the killer schedule delays the top answer past the commit
                assert!(ce.schedule.iter().filter(|m| *m == "delay").count() >= 4);
                assert!(replay_counterexample(&lpo(), &sierp_neg(), &cand, &family, &ce));
            }
            other => panic!("expected a counterexample, got {other:?}"),
        }
    }

    #[test]
    fn honest_lpo_witness_survives_the_adversary() {
        let (_, lpo_le_neg) = witness_lpo_neg();
        let family = family_lpo_neg_adversary();
        let outcome = refute_witness(
            &lpo(),
            &sierp_neg(),
            &lpo_le_neg,
            &family,
            RefuteBounds::default(),
        );
        assert!(matches!(outcome, RefuteOutcome::NotFound { .. }), "{outcome:?}");
    }

    #[test]
    fn refuter_breaks_layered_early_commit() {
        let f = neq(&SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals)).unwrap();
        let g = neq(&SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne)).unwrap();
        let cand = candidate_layered_early_commit();
        let family = family_layered_commit_adversary();
        let outcome = refute_witness(
            &f,
            &g,
            &cand,
            &family,
            RefuteBounds {
                depth: 64,
                max_moves: 20,
                schedule_budget: 100_000,
            },
        );
        match outcome {
            RefuteOutcome::Counterexample(ce) => {
                assert!(ce.schedule.contains(&"reveal ./0".to_string()), "{ce:?}");
                assert!(replay_counterexample(&f, &g, &cand, &family, &ce));
            }
            other => panic!("expected a counterexample, got {other:?}"),
        }
    }

    #[test]
    fn refuter_reports_budget_exhaustion() {
        let cand = witness_identity("id");
        let family = family_acc_adversary();
        let outcome = refute_witness(
            &acc_nat(),
            &acc_nat(),
            &cand,
            &family,
            RefuteBounds {
                depth: 8,
                max_moves: 10,
                schedule_budget: 5,
            },
        );
        assert!(matches!(outcome, RefuteOutcome::BudgetExceeded { .. }), "{outcome:?}");
    }

    #[test]
    fn strict_mode_fails_on_undetermined() {
        // an outer that never outputs: every verdict stays Undetermined
        let w = WitnessPair {
            name: "mute outer".to_string(),
            inner: Transducer::identity(),
            outer: Transducer::new("mute", |_: &Prefix| Prefix::new()),
            strong: true,
        };
        let f = sierp_neg(); // relaxed problem
        let suite = vec![Instance::new("bottom", NameStream::constant(0))
            .with_oracle_solutions(vec![NameStream::from_head(vec![1])])];
        let relaxed = check_witness(&f, &f, &w, &suite, 32).unwrap();
        assert!(relaxed.passed());
        let strict = check_witness_mode(&f, &f, &w, &suite, 32, true).unwrap();
        assert!(!strict.passed());
    }

    #[test]
    fn catalog_error_is_displayable() {
        let err = crate::problems::problem_by_name("NOPE").unwrap_err();
        assert!(matches!(err, CatalogError::UnknownProblem(_)));
    }
}
