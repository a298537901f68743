//! Finite-prefix semantics for infinite names and the monotone-transducer
//! model of continuous functionals.
//!
//! A name is an infinite sequence over one global alphabet (the naturals);
//! sub-alphabets such as `{0,1}` are validity constraints checked by the
//! spaces layer, not separate types. The workbench only ever looks at
//! finite, depth-indexed approximations of names, so streams are stored as
//! eventually-periodic data (`head` then repeating `cycle`) which makes
//! every question about the full stream answerable from finite data.

use alloc::format;
use alloc::boxed::Box;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::spaces::PointDesc;

/// A single name symbol. The global alphabet is the naturals.
pub type Symbol = u32;

/// A finite initial segment of a name.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Prefix(Vec<Symbol>);

impl Prefix {
    pub fn new() -> Self {
        Prefix(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Prefix(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn extended(&self, s: Symbol) -> Prefix {
        let mut v = self.0.clone();
        v.push(s);
        Prefix(v)
    }

    pub fn concat(&self, other: &Prefix) -> Prefix {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Prefix(v)
    }

    /// The prefix order: `self ⊑ other` iff `self` is an initial segment.
    pub fn is_prefix_of(&self, other: &Prefix) -> bool {
        self.0.len() <= other.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    pub fn truncated(&self, len: usize) -> Prefix {
        Prefix(self.0[..self.0.len().min(len)].to_vec())
    }
}

impl fmt::Debug for Prefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

impl From<&[Symbol]> for Prefix {
    fn from(s: &[Symbol]) -> Self {
        Prefix(s.to_vec())
    }
}

impl<const N: usize> From<[Symbol; N]> for Prefix {
    fn from(s: [Symbol; N]) -> Self {
        Prefix(s.to_vec())
    }
}

/// An eventually-periodic infinite name, optionally tagged with the point it
/// codes. The tag is metadata for finite-depth adjudication; transducers
/// never consult it.
#[derive(Clone)]
pub struct NameStream {
    head: Vec<Symbol>,
    cycle: Vec<Symbol>,
    truth: Option<Box<PointDesc>>,
}

impl NameStream {
    /// Stream `head` followed by `cycle` repeated forever. An empty cycle
    /// is normalized to an all-zero tail.
    pub fn new(head: Vec<Symbol>, cycle: Vec<Symbol>) -> Self {
        let cycle = if cycle.is_empty() { vec![0] } else { cycle };
        NameStream {
            head,
            cycle,
            truth: None,
        }
    }

    /// `head` followed by zeros.
    pub fn from_head(head: Vec<Symbol>) -> Self {
        NameStream::new(head, vec![0])
    }

    pub fn constant(s: Symbol) -> Self {
        NameStream::new(Vec::new(), vec![s])
    }

    pub fn with_truth(mut self, truth: PointDesc) -> Self {
        self.truth = Some(Box::new(truth));
        self
    }

    pub fn truth(&self) -> Option<&PointDesc> {
        self.truth.as_deref()
    }

    pub fn head(&self) -> &[Symbol] {
        &self.head
    }

    pub fn cycle(&self) -> &[Symbol] {
        &self.cycle
    }

    pub fn symbol_at(&self, i: usize) -> Symbol {
        if i < self.head.len() {
            self.head[i]
        } else {
            self.cycle[(i - self.head.len()) % self.cycle.len()]
        }
    }

    /// The depth-`d` approximation; always has length exactly `d`.
    pub fn at(&self, depth: usize) -> Prefix {
        Prefix((0..depth).map(|i| self.symbol_at(i)).collect())
    }

    /// Index of the first position satisfying `pred`, scanning the head and
    /// one full cycle (which covers every symbol value the stream contains).
    pub fn find(&self, pred: impl Fn(Symbol) -> bool) -> Option<usize> {
        let bound = self.head.len() + self.cycle.len();
        (0..bound).find(|&i| pred(self.symbol_at(i)))
    }

    /// Every symbol value occurring anywhere in the stream.
    pub fn symbol_set(&self) -> Vec<Symbol> {
        let mut seen: Vec<Symbol> = Vec::new();
        for i in 0..self.head.len() + self.cycle.len() {
            let s = self.symbol_at(i);
            if !seen.contains(&s) {
                seen.push(s);
            }
        }
        seen
    }

    /// The eventual limit value of the stream, if the tail is constant.
    pub fn limit(&self) -> Option<Symbol> {
        let first = self.cycle[0];
        if self.cycle.iter().all(|&s| s == first) {
            Some(first)
        } else {
            None
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PartialEq for NameStream {
    /// Semantic equality of the infinite sequences (tags are ignored).
    fn eq(&self, other: &Self) -> bool {
        let h = self.head.len().max(other.head.len());
        let l = self.cycle.len() * other.cycle.len() / gcd(self.cycle.len(), other.cycle.len());
        (0..h + l).all(|i| self.symbol_at(i) == other.symbol_at(i))
    }
}

impl Eq for NameStream {}

impl fmt::Debug for NameStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "NameStream {{ head: {:?}, cycle: {:?}, truth: {:?} }}",
            self.head, self.cycle, self.truth
        )
    }
}

/// A monotone map from input prefixes to output prefixes: the workbench's
/// model of a continuous realizer. Monotonicity (`u ⊑ v` implies
/// `step(u) ⊑ step(v)`) is a contract on the closure, checkable by
/// [`check_monotone`].
#[derive(Clone)]
pub struct Transducer {
    step: Rc<dyn Fn(&Prefix) -> Prefix>,
    description: String,
}

impl Transducer {
    pub fn new(description: impl Into<String>, step: impl Fn(&Prefix) -> Prefix + 'static) -> Self {
        Transducer {
            step: Rc::new(step),
            description: description.into(),
        }
    }

    pub fn step(&self, input: &Prefix) -> Prefix {
        (self.step)(input)
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn identity() -> Self {
        Transducer::new("identity", |u: &Prefix| u.clone())
    }

    /// Always returns `w` regardless of the input.
    pub fn constant(w: Prefix) -> Self {
        Transducer::new(format!("constant {w:?}"), move |_| w.clone())
    }
}

impl fmt::Debug for Transducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Transducer({})", self.description)
    }
}

/// Evaluate a transducer on a stream at the given depth. By monotonicity
/// the results at increasing depths form a chain of prefixes.
pub fn apply(t: &Transducer, x: &NameStream, depth: usize) -> Prefix {
    t.step(&x.at(depth))
}

/// `outer ∘ inner` as a transducer; composition of monotone maps is monotone.
pub fn compose(outer: &Transducer, inner: &Transducer) -> Transducer {
    let o = outer.clone();
    let i = inner.clone();
    let description = format!("{} ∘ {}", outer.description, inner.description);
    Transducer::new(description, move |u: &Prefix| o.step(&i.step(u)))
}

/// Cantor pairing. Satisfies `pair(n, m) ≥ n` and `pair(n, m) ≥ m`, which
/// keeps prefix emission monotone wherever a pairing index is written after
/// its components have already been partially emitted.
pub fn pair(n: u64, m: u64) -> u64 {
    (n + m) * (n + m + 1) / 2 + m
}

/// Inverse of [`pair`].
pub fn unpair(k: u64) -> (u64, u64) {
    // largest w with w(w+1)/2 <= k
    let mut w = 0u64;
    while (w + 1) * (w + 2) / 2 <= k {
        w += 1;
    }
    let m = k - w * (w + 1) / 2;
    (w - m, m)
}

/// Pairs `(u, v)` with `u ⊑ v` but `step(u) ⋢ step(v)`.
#[derive(Debug, Clone, Default)]
pub struct MonotoneReport {
    pub violations: Vec<(Prefix, Prefix)>,
    pub nodes_visited: usize,
}

impl MonotoneReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceLimit {
    pub budget: usize,
    pub required: usize,
}

impl fmt::Display for ResourceLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "monotonicity enumeration needs {} nodes, budget is {}",
            self.required, self.budget
        )
    }
}

pub const DEFAULT_MONOTONE_BUDGET: usize = 5_000_000;

/// Exhaustively check `u ⊑ v ⇒ step(u) ⊑ step(v)` over all prefixes with
/// symbols below `alphabet_bound` and length up to `depth_bound`.
///
/// Only one-symbol extensions are compared; the general prefix order
/// follows by transitivity. Cost is `(alphabet_bound)^depth_bound` nodes.
pub fn check_monotone(
    t: &Transducer,
    alphabet_bound: Symbol,
    depth_bound: usize,
) -> Result<MonotoneReport, ResourceLimit> {
    check_monotone_with_budget(t, alphabet_bound, depth_bound, DEFAULT_MONOTONE_BUDGET)
}

pub fn check_monotone_with_budget(
    t: &Transducer,
    alphabet_bound: Symbol,
    depth_bound: usize,
    budget: usize,
) -> Result<MonotoneReport, ResourceLimit> {
    let mut required: usize = 0;
    let mut layer: usize = 1;
    for _ in 0..=depth_bound {
        required = required.saturating_add(layer);
        layer = layer.saturating_mul(alphabet_bound.max(1) as usize);
    }
    if required > budget {
        return Err(ResourceLimit { budget, required });
    }

    let mut report = MonotoneReport::default();
    let mut stack: Vec<Prefix> = vec![Prefix::new()];
    while let Some(u) = stack.pop() {
        report.nodes_visited += 1;
        if u.len() >= depth_bound {
            continue;
        }
        let out_u = t.step(&u);
        for a in 0..alphabet_bound {
            let v = u.extended(a);
            let out_v = t.step(&v);
            if !out_u.is_prefix_of(&out_v) {
                report.violations.push((u.clone(), v.clone()));
            }
            stack.push(v);
        }
    }
    Ok(report)
}

/// Interleave two prefixes: even positions from `even`, odd positions from
/// `odd`, stopping as soon as the needed track is exhausted. This is the
/// fixed convention for feeding an outer reduction witness its two tracks.
pub fn interleave(even: &Prefix, odd: &Prefix) -> Prefix {
    let mut out = Vec::new();
    let (e, o) = (even.symbols(), odd.symbols());
    let mut i = 0;
    loop {
        if i / 2 >= e.len() {
            break;
        }
        out.push(e[i / 2]);
        i += 1;
        if i / 2 >= o.len() {
            break;
        }
        out.push(o[i / 2]);
        i += 1;
    }
    Prefix(out)
}

/// Split an interleaved prefix back into its (even, odd) tracks.
pub fn deinterleave(u: &Prefix) -> (Prefix, Prefix) {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, &s) in u.symbols().iter().enumerate() {
        if i % 2 == 0 {
            even.push(s);
        } else {
            odd.push(s);
        }
    }
    (Prefix(even), Prefix(odd))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_closed_form() {
        assert_eq!(pair(0, 0), 0);
        assert_eq!(pair(1, 0), 1);
        assert_eq!(pair(0, 1), 2);
    }

    #[test]
    fn unpair_small_values() {
        assert_eq!(unpair(0), (0, 0));
        assert_eq!(unpair(2), (0, 1));
    }

    #[test]
    fn pair_unpair_round_trip() {
        for n in 0..=64 {
            for m in 0..=64 {
                assert_eq!(unpair(pair(n, m)), (n, m));
            }
        }
        for k in 0..=4096 {
            let (n, m) = unpair(k);
            assert_eq!(pair(n, m), k);
        }
    }

    #[test]
    fn pair_dominates_arguments() {
        for n in 0..=64 {
            for m in 0..=64 {
                assert!(pair(n, m) >= n);
                assert!(pair(n, m) >= m);
            }
        }
    }

    #[test]
    fn stream_depth_indexing() {
        let x = NameStream::new(vec![3, 1], vec![0, 2]);
        assert_eq!(x.at(0), Prefix::new());
        assert_eq!(x.at(6), Prefix::from([3, 1, 0, 2, 0, 2]));
        for d in 0..256 {
            let p = x.at(d);
            assert_eq!(p.len(), d);
            assert!(p.is_prefix_of(&x.at(d + 1)));
        }
    }

    #[test]
    fn stream_semantic_equality() {
        let a = NameStream::new(vec![0, 0], vec![0]);
        let b = NameStream::constant(0);
        assert_eq!(a, b);
        let c = NameStream::new(vec![], vec![0, 0, 1]);
        let d = NameStream::new(vec![0], vec![0, 1, 0]);
        assert_eq!(c, d);
        assert_ne!(a, c);
    }

    #[test]
    fn apply_identity_and_constant() {
        let x = NameStream::new(vec![5, 4], vec![1]);
        let id = Transducer::identity();
        for d in 0..16 {
            assert_eq!(apply(&id, &x, d), x.at(d));
        }
        let w = Prefix::from([7, 7]);
        let c = Transducer::constant(w.clone());
        for d in 0..8 {
            assert_eq!(apply(&c, &x, d), w);
        }
    }

    #[test]
    fn compose_definition_and_units() {
        let double = Transducer::new("double", |u: &Prefix| {
            Prefix::from_symbols(u.symbols().iter().map(|&s| 2 * s).collect())
        });
        let drop1 = Transducer::new("drop1", |u: &Prefix| {
            Prefix::from_symbols(u.symbols().iter().skip(1).copied().collect())
        });
        let x = NameStream::new(vec![1, 2, 3], vec![4]);
        let id = Transducer::identity();
        for d in 0..=32 {
            let u = x.at(d);
            assert_eq!(compose(&double, &drop1).step(&u), double.step(&drop1.step(&u)));
            assert_eq!(compose(&id, &double).step(&u), double.step(&u));
            assert_eq!(compose(&double, &id).step(&u), double.step(&u));
        }
    }

    #[test]
    fn compose_associativity_sampled() {
        let a = Transducer::new("a", |u: &Prefix| {
            Prefix::from_symbols(u.symbols().iter().map(|&s| s + 1).collect())
        });
        let b = Transducer::new("b", |u: &Prefix| u.truncated(u.len() / 2));
        let c = Transducer::new("c", |u: &Prefix| {
            Prefix::from_symbols(u.symbols().iter().rev().copied().collect())
        });
        let x = NameStream::new(vec![9, 8, 7, 6, 5], vec![1, 2]);
        let left = compose(&compose(&a, &b), &c);
        let right = compose(&a, &compose(&b, &c));
        for d in 0..=32 {
            assert_eq!(left.step(&x.at(d)), right.step(&x.at(d)));
        }
    }

    #[test]
    fn monotone_identity() {
        let report = check_monotone(&Transducer::identity(), 3, 6).unwrap();
        assert!(report.is_empty());
    }

    #[test]
    fn monotone_broken_transducer() {
        // maps [0] -> [1] but [0,0] -> [0]
        let broken = Transducer::new("broken", |u: &Prefix| {
            if u.len() == 1 {
                Prefix::from([1])
            } else if u.len() >= 2 {
                Prefix::from([0])
            } else {
                Prefix::new()
            }
        });
        let report = check_monotone(&broken, 2, 3).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|(u, v)| u == &Prefix::from([0]) && v == &Prefix::from([0, 0])));
    }

    #[test]
    fn monotone_budget_exceeded() {
        let err = check_monotone_with_budget(&Transducer::identity(), 10, 10, 1000).unwrap_err();
        assert!(err.required > err.budget);
    }

    #[test]
    fn interleave_round_trip() {
        let q = Prefix::from([1, 2, 3]);
        let x = Prefix::from([4, 5, 6]);
        let u = interleave(&q, &x);
        assert_eq!(u, Prefix::from([1, 4, 2, 5, 3, 6]));
        let (e, o) = deinterleave(&u);
        assert_eq!(e, q);
        assert_eq!(o, x);
    }

    #[test]
    fn interleave_uneven_tracks() {
        let q = Prefix::from([1, 2]);
        let x = Prefix::from([9]);
        assert_eq!(interleave(&q, &x), Prefix::from([1, 9, 2]));
    }
}
