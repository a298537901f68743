//! An inductive grammar of represented spaces with coding and decoding at
//! prefix depth, formal completions, layered spaces, and symbolic
//! Cantor–Bendixson rank.
//!
//! Coding conventions fixed here:
//! - `Naturals` / `Finite(n)`: the value sits in the first symbol, the tail
//!   is all zeros. This keeps first-order outputs determined at depth 1.
//! - `OmegaPlusOne`: unary, `n ↦ 0^n 1 0^ω` and `ω ↦ 0^ω`.
//! - `Sierpinski`: `⊤ ↦ 1 0^ω`, `⊥ ↦ 0^ω`; any `{0,1}` tail after a 1 is
//!   also a name for `⊤`.
//! - `Layered(top, bottom)`: the bottom track uses a `{0,1}` coding of the
//!   bottom space; the symbol `2` escapes to the top track, after which the
//!   top space's own coding applies.
//! - `FormalCompletion(X)`: symbol `0` is the skip symbol and `s+1` stands
//!   for base symbol `s`. Every finite prefix is valid; a stream whose
//!   skip-free projection is a valid name of `x` names `Embedded(x)`,
//!   every other stream names `Bottom`.
//! - `DecimalReal`: sign symbol (`0 = +`, `1 = −`), one symbol for the
//!   integer part (magnitude below 10), then decimal digits. No carry
//!   normalization: distinct digit streams may name the same real.
//! - `Product`: interleaving, even positions from the left factor.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::names::{NameStream, Prefix, Symbol};

/// The escape symbol switching a layered name to the top track.
pub const LAYER_ESCAPE: Symbol = 2;
/// The skip symbol of formal completions.
pub const SKIP: Symbol = 0;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceDesc {
    Naturals,
    Finite(u32),
    OmegaPlusOne,
    Sierpinski,
    Baire,
    Cantor,
    DecimalReal,
    Product(Box<SpaceDesc>, Box<SpaceDesc>),
    /// `Layered(top, bottom)`: points look like bottom-space points until an
    /// escape symbol switches them to top-space points.
    Layered(Box<SpaceDesc>, Box<SpaceDesc>),
    FormalCompletion(Box<SpaceDesc>),
}

impl SpaceDesc {
    pub fn product(x: SpaceDesc, y: SpaceDesc) -> SpaceDesc {
        SpaceDesc::Product(Box::new(x), Box::new(y))
    }

    pub fn layered(top: SpaceDesc, bottom: SpaceDesc) -> SpaceDesc {
        SpaceDesc::Layered(Box::new(top), Box::new(bottom))
    }

    /// True for the discrete grammar spaces (rank-1 scattered).
    pub fn is_discrete(&self) -> bool {
        matches!(self, SpaceDesc::Naturals | SpaceDesc::Finite(_))
    }

    /// Whether the space has natural-number outputs in the game sense.
    pub fn is_first_order(&self) -> bool {
        matches!(self, SpaceDesc::Naturals | SpaceDesc::Finite(_))
    }
}

impl fmt::Display for SpaceDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceDesc::Naturals => write!(f, "N"),
            SpaceDesc::Finite(n) => write!(f, "Fin({n})"),
            SpaceDesc::OmegaPlusOne => write!(f, "w+1"),
            SpaceDesc::Sierpinski => write!(f, "S"),
            SpaceDesc::Baire => write!(f, "Baire"),
            SpaceDesc::Cantor => write!(f, "Cantor"),
            SpaceDesc::DecimalReal => write!(f, "R10"),
            SpaceDesc::Product(x, y) => {
                write_operand(f, x)?;
                write!(f, "*")?;
                write_operand(f, y)
            }
            SpaceDesc::Layered(x, y) => {
                write_operand(f, x)?;
                write!(f, "/")?;
                write_operand(f, y)
            }
            SpaceDesc::FormalCompletion(x) => write!(f, "Compl({x})"),
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, s: &SpaceDesc) -> fmt::Result {
    if matches!(
        s,
        SpaceDesc::Product(_, _) | SpaceDesc::Layered(_, _) | SpaceDesc::OmegaPlusOne
    ) {
        write!(f, "({s})")
    } else {
        write!(f, "{s}")
    }
}

/// An ordinal below `ω + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ordinal {
    Finite(u64),
    Omega,
}

/// A point of a grammar space; the variant must match the space constructor.
#[derive(Clone, Debug, PartialEq)]
pub enum PointDesc {
    Nat(u64),
    Fin(u32),
    Ordinal(Ordinal),
    SierpTop,
    SierpBot,
    Stream(NameStream),
    Decimal {
        negative: bool,
        int_digit: u32,
        frac: NameStream,
    },
    Pair(Box<PointDesc>, Box<PointDesc>),
    /// A top-layer point `x/·` of a layered space.
    Top(Box<PointDesc>),
    /// A bottom-layer point `·/y` of a layered space.
    Bot(Box<PointDesc>),
    /// A proper point embedded in a formal completion.
    Embedded(Box<PointDesc>),
    /// The fresh point of a formal completion, named by every stream whose
    /// skip-free projection is not a valid base name.
    Bottom,
}

impl PointDesc {
    pub fn pair(a: PointDesc, b: PointDesc) -> PointDesc {
        PointDesc::Pair(Box::new(a), Box::new(b))
    }

    pub fn top(x: PointDesc) -> PointDesc {
        PointDesc::Top(Box::new(x))
    }

    pub fn bot(y: PointDesc) -> PointDesc {
        PointDesc::Bot(Box::new(y))
    }

    pub fn embedded(x: PointDesc) -> PointDesc {
        PointDesc::Embedded(Box::new(x))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum DecodeVerdict {
    /// Every valid extension of the prefix names this point.
    Determined(PointDesc),
    /// At least two points remain possible, or the remaining point needs
    /// infinite information.
    ConsistentMany,
    /// No valid extension exists.
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceError {
    PointSpaceMismatch,
    /// The space has no Cantor–Bendixson rank in the scattered grammar
    /// fragment.
    NotScattered(SpaceDesc),
    /// Product rank is only defined here when one factor is discrete.
    UnsupportedProduct,
    /// The space has no `{0,1}` coding usable as a layered bottom track.
    UnsupportedBottomCoding(SpaceDesc),
    SingletonSpace,
    EmptySpace,
}

impl fmt::Display for SpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceError::PointSpaceMismatch => write!(f, "point does not belong to the space"),
            SpaceError::NotScattered(s) => write!(f, "{s} is not in the scattered grammar fragment"),
            SpaceError::UnsupportedProduct => {
                write!(f, "product rank requires a discrete factor")
            }
            SpaceError::UnsupportedBottomCoding(s) => {
                write!(f, "{s} has no binary coding for a layered bottom track")
            }
            SpaceError::SingletonSpace => write!(f, "space has fewer than two points"),
            SpaceError::EmptySpace => write!(f, "space is empty"),
        }
    }
}

/// Wrap a space in its canonical formal completion.
pub fn completion_of(space: &SpaceDesc) -> SpaceDesc {
    SpaceDesc::FormalCompletion(Box::new(space.clone()))
}

fn shift_stream(s: &NameStream) -> NameStream {
    NameStream::new(
        s.head().iter().map(|&x| x + 1).collect(),
        s.cycle().iter().map(|&x| x + 1).collect(),
    )
}

fn prepend(symbols: &[Symbol], s: &NameStream) -> NameStream {
    let mut head: Vec<Symbol> = symbols.to_vec();
    head.extend_from_slice(s.head());
    NameStream::new(head, s.cycle().to_vec())
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Interleave two eventually-periodic streams into one.
pub fn interleave_streams(even: &NameStream, odd: &NameStream) -> NameStream {
    let h = even.head().len().max(odd.head().len());
    let l = lcm(even.cycle().len(), odd.cycle().len());
    let mut head = Vec::with_capacity(2 * h);
    for i in 0..h {
        head.push(even.symbol_at(i));
        head.push(odd.symbol_at(i));
    }
    let mut cycle = Vec::with_capacity(2 * l);
    for i in h..h + l {
        cycle.push(even.symbol_at(i));
        cycle.push(odd.symbol_at(i));
    }
    NameStream::new(head, cycle)
}

/// The skip-free projection of a completion name, shifted back to the base
/// alphabet. Returns `None` when only finitely many non-skip symbols occur
/// (such a stream carries no total base name).
pub fn project_skips(s: &NameStream) -> Option<NameStream> {
    let proj = |syms: &[Symbol]| -> Vec<Symbol> {
        syms.iter().filter(|&&x| x != SKIP).map(|&x| x - 1).collect()
    };
    let cycle = proj(s.cycle());
    if cycle.is_empty() {
        return None;
    }
    Some(NameStream::new(proj(s.head()), cycle))
}

/// The `{0,1}` coding used for the bottom track of layered spaces: unary for
/// the discrete spaces, the native coding where it is already binary.
fn binary_encode(space: &SpaceDesc, point: &PointDesc) -> Result<NameStream, SpaceError> {
    match (space, point) {
        (SpaceDesc::Naturals, PointDesc::Nat(n)) => {
            let mut head = vec![0; *n as usize];
            head.push(1);
            Ok(NameStream::from_head(head))
        }
        (SpaceDesc::Finite(k), PointDesc::Fin(v)) if v < k => {
            let mut head = vec![0; *v as usize];
            head.push(1);
            Ok(NameStream::from_head(head))
        }
        (SpaceDesc::OmegaPlusOne, _)
        | (SpaceDesc::Sierpinski, _)
        | (SpaceDesc::Cantor, _) => encode(space, point),
        (SpaceDesc::Naturals, _) | (SpaceDesc::Finite(_), _) => {
            Err(SpaceError::PointSpaceMismatch)
        }
        _ => Err(SpaceError::UnsupportedBottomCoding(space.clone())),
    }
}

/// Decode a prefix in the `{0,1}` bottom-track coding of a layered space.
/// A determined result here is still escapable in the layered space itself;
/// finite-precision adjudication treats long enough escape-free prefixes as
/// committed bottom answers.
pub fn bottom_track_decode(space: &SpaceDesc, prefix: &Prefix) -> DecodeVerdict {
    binary_decode(space, prefix)
}

fn binary_decode(space: &SpaceDesc, prefix: &Prefix) -> DecodeVerdict {
    match space {
        SpaceDesc::Naturals | SpaceDesc::Finite(_) => {
            // unary: 0^v 1 0^ω
            let syms = prefix.symbols();
            if syms.iter().any(|&s| s > 1) {
                return DecodeVerdict::Invalid;
            }
            match syms.iter().position(|&s| s == 1) {
                None => DecodeVerdict::ConsistentMany,
                Some(v) => {
                    if syms[v + 1..].iter().any(|&s| s != 0) {
                        return DecodeVerdict::Invalid;
                    }
                    let v = v as u64;
                    match space {
                        SpaceDesc::Naturals => DecodeVerdict::Determined(PointDesc::Nat(v)),
                        SpaceDesc::Finite(k) => {
                            if v < *k as u64 {
                                DecodeVerdict::Determined(PointDesc::Fin(v as u32))
                            } else {
                                DecodeVerdict::Invalid
                            }
                        }
                        _ => unreachable!(),
                    }
                }
            }
        }
        SpaceDesc::OmegaPlusOne | SpaceDesc::Sierpinski | SpaceDesc::Cantor => {
            decode(space, prefix)
        }
        _ => DecodeVerdict::Invalid,
    }
}

/// The point named by a full eventually-periodic stream in the binary
/// bottom-track coding, if any.
fn binary_eval(space: &SpaceDesc, s: &NameStream) -> Option<PointDesc> {
    if s.symbol_set().iter().any(|&x| x > 1) {
        return None;
    }
    match space {
        SpaceDesc::Naturals | SpaceDesc::Finite(_) => {
            let v = s.find(|x| x == 1)?;
            // tail after the 1 must be all zeros
            let bound = s.head().len() + 2 * s.cycle().len();
            if (v + 1..bound).any(|i| s.symbol_at(i) != 0) {
                return None;
            }
            match space {
                SpaceDesc::Naturals => Some(PointDesc::Nat(v as u64)),
                SpaceDesc::Finite(k) if (v as u64) < *k as u64 => Some(PointDesc::Fin(v as u32)),
                _ => None,
            }
        }
        SpaceDesc::OmegaPlusOne | SpaceDesc::Sierpinski | SpaceDesc::Cantor => eval_stream(space, s),
        _ => None,
    }
}

/// Canonical name of a point, tagged with the point as ground truth.
pub fn encode(space: &SpaceDesc, point: &PointDesc) -> Result<NameStream, SpaceError> {
    let stream = match (space, point) {
        (SpaceDesc::Naturals, PointDesc::Nat(n)) => {
            NameStream::from_head(vec![u32::try_from(*n).map_err(|_| SpaceError::PointSpaceMismatch)?])
        }
        (SpaceDesc::Finite(k), PointDesc::Fin(v)) if v < k => NameStream::from_head(vec![*v]),
        (SpaceDesc::OmegaPlusOne, PointDesc::Ordinal(Ordinal::Finite(n))) => {
            let mut head = vec![0; *n as usize];
            head.push(1);
            NameStream::from_head(head)
        }
        (SpaceDesc::OmegaPlusOne, PointDesc::Ordinal(Ordinal::Omega)) => NameStream::constant(0),
        (SpaceDesc::Sierpinski, PointDesc::SierpTop) => NameStream::from_head(vec![1]),
        (SpaceDesc::Sierpinski, PointDesc::SierpBot) => NameStream::constant(0),
        (SpaceDesc::Baire, PointDesc::Stream(s)) => s.clone(),
        (SpaceDesc::Cantor, PointDesc::Stream(s)) => {
            if s.symbol_set().iter().any(|&x| x > 1) {
                return Err(SpaceError::PointSpaceMismatch);
            }
            s.clone()
        }
        (
            SpaceDesc::DecimalReal,
            PointDesc::Decimal {
                negative,
                int_digit,
                frac,
            },
        ) => {
            if *int_digit >= 10 || frac.symbol_set().iter().any(|&d| d >= 10) {
                return Err(SpaceError::PointSpaceMismatch);
            }
            prepend(&[*negative as u32, *int_digit], frac)
        }
        (SpaceDesc::Product(x, y), PointDesc::Pair(a, b)) => {
            interleave_streams(&encode(x, a)?, &encode(y, b)?)
        }
        (SpaceDesc::Layered(top, _), PointDesc::Top(x)) => {
            prepend(&[LAYER_ESCAPE], &encode(top, x)?)
        }
        (SpaceDesc::Layered(_, bottom), PointDesc::Bot(y)) => binary_encode(bottom, y)?,
        (SpaceDesc::FormalCompletion(base), PointDesc::Embedded(x)) => {
            shift_stream(&encode(base, x)?)
        }
        (SpaceDesc::FormalCompletion(_), PointDesc::Bottom) => NameStream::constant(SKIP),
        _ => return Err(SpaceError::PointSpaceMismatch),
    };
    Ok(stream.with_truth(point.clone()))
}

/// What a prefix tells us about the named point.
pub fn decode(space: &SpaceDesc, prefix: &Prefix) -> DecodeVerdict {
    let syms = prefix.symbols();
    match space {
        SpaceDesc::Naturals => {
            if syms.is_empty() {
                DecodeVerdict::ConsistentMany
            } else if syms[1..].iter().any(|&s| s != 0) {
                DecodeVerdict::Invalid
            } else {
                DecodeVerdict::Determined(PointDesc::Nat(syms[0] as u64))
            }
        }
        SpaceDesc::Finite(k) => {
            if syms.is_empty() {
                DecodeVerdict::ConsistentMany
            } else if syms[0] >= *k || syms[1..].iter().any(|&s| s != 0) {
                DecodeVerdict::Invalid
            } else {
                DecodeVerdict::Determined(PointDesc::Fin(syms[0]))
            }
        }
        SpaceDesc::OmegaPlusOne => {
            if syms.iter().any(|&s| s > 1) {
                return DecodeVerdict::Invalid;
            }
            match syms.iter().position(|&s| s == 1) {
                None => DecodeVerdict::ConsistentMany,
                Some(n) => DecodeVerdict::Determined(PointDesc::Ordinal(Ordinal::Finite(n as u64))),
            }
        }
        SpaceDesc::Sierpinski => {
            if syms.iter().any(|&s| s > 1) {
                DecodeVerdict::Invalid
            } else if syms.contains(&1) {
                DecodeVerdict::Determined(PointDesc::SierpTop)
            } else {
                DecodeVerdict::ConsistentMany
            }
        }
        SpaceDesc::Baire => DecodeVerdict::ConsistentMany,
        SpaceDesc::Cantor => {
            if syms.iter().any(|&s| s > 1) {
                DecodeVerdict::Invalid
            } else {
                DecodeVerdict::ConsistentMany
            }
        }
        SpaceDesc::DecimalReal => {
            if !syms.is_empty() && syms[0] > 1 {
                return DecodeVerdict::Invalid;
            }
            if syms.len() >= 2 && syms[1] >= 10 {
                return DecodeVerdict::Invalid;
            }
            if syms.iter().skip(2).any(|&d| d >= 10) {
                return DecodeVerdict::Invalid;
            }
            DecodeVerdict::ConsistentMany
        }
        SpaceDesc::Product(x, y) => {
            let (even, odd) = crate::names::deinterleave(prefix);
            let dx = decode(x, &even);
            let dy = decode(y, &odd);
            match (dx, dy) {
                (DecodeVerdict::Invalid, _) | (_, DecodeVerdict::Invalid) => DecodeVerdict::Invalid,
                (DecodeVerdict::Determined(a), DecodeVerdict::Determined(b)) => {
                    DecodeVerdict::Determined(PointDesc::pair(a, b))
                }
                _ => DecodeVerdict::ConsistentMany,
            }
        }
        SpaceDesc::Layered(top, _bottom) => {
            match syms.iter().position(|&s| s == LAYER_ESCAPE) {
                Some(i) => {
                    if syms[..i].iter().any(|&s| s > 1) {
                        return DecodeVerdict::Invalid;
                    }
                    let rest = Prefix::from(&syms[i + 1..]);
                    match decode(top, &rest) {
                        DecodeVerdict::Determined(x) => {
                            DecodeVerdict::Determined(PointDesc::top(x))
                        }
                        other => other,
                    }
                }
                None => {
                    if syms.iter().any(|&s| s > LAYER_ESCAPE) {
                        DecodeVerdict::Invalid
                    } else {
                        // an escape to the top track is still possible, so a
                        // bottom point is never determined at finite depth
                        DecodeVerdict::ConsistentMany
                    }
                }
            }
        }
        SpaceDesc::FormalCompletion(base) => {
            let projected: Vec<Symbol> =
                syms.iter().filter(|&&s| s != SKIP).map(|&s| s - 1).collect();
            match decode(base, &Prefix::from_symbols(projected)) {
                DecodeVerdict::Determined(x) => DecodeVerdict::Determined(PointDesc::embedded(x)),
                // an invalid projection stays invalid, so every extension
                // names the fresh bottom point
                DecodeVerdict::Invalid => DecodeVerdict::Determined(PointDesc::Bottom),
                DecodeVerdict::ConsistentMany => DecodeVerdict::ConsistentMany,
            }
        }
    }
}

/// The point named by a full eventually-periodic stream, if any. This is the
/// finite-data ground-truth evaluator behind finite-depth verdicts.
pub fn eval_stream(space: &SpaceDesc, s: &NameStream) -> Option<PointDesc> {
    match space {
        SpaceDesc::Naturals => {
            let bound = s.head().len() + s.cycle().len();
            if (1..bound).any(|i| s.symbol_at(i) != 0) {
                return None;
            }
            Some(PointDesc::Nat(s.symbol_at(0) as u64))
        }
        SpaceDesc::Finite(k) => {
            let bound = s.head().len() + s.cycle().len();
            if (1..bound).any(|i| s.symbol_at(i) != 0) || s.symbol_at(0) >= *k {
                return None;
            }
            Some(PointDesc::Fin(s.symbol_at(0)))
        }
        SpaceDesc::OmegaPlusOne => {
            if s.symbol_set().iter().any(|&x| x > 1) {
                return None;
            }
            match s.find(|x| x == 1) {
                Some(n) => Some(PointDesc::Ordinal(Ordinal::Finite(n as u64))),
                None => Some(PointDesc::Ordinal(Ordinal::Omega)),
            }
        }
        SpaceDesc::Sierpinski => {
            if s.symbol_set().iter().any(|&x| x > 1) {
                return None;
            }
            match s.find(|x| x == 1) {
                Some(_) => Some(PointDesc::SierpTop),
                None => Some(PointDesc::SierpBot),
            }
        }
        SpaceDesc::Baire => Some(PointDesc::Stream(s.clone())),
        SpaceDesc::Cantor => {
            if s.symbol_set().iter().any(|&x| x > 1) {
                return None;
            }
            Some(PointDesc::Stream(s.clone()))
        }
        SpaceDesc::DecimalReal => {
            let sign = s.symbol_at(0);
            let int_digit = s.symbol_at(1);
            if sign > 1 || int_digit >= 10 {
                return None;
            }
            let frac = drop_front(s, 2);
            if frac.symbol_set().iter().any(|&d| d >= 10) {
                return None;
            }
            Some(PointDesc::Decimal {
                negative: sign == 1,
                int_digit,
                frac,
            })
        }
        SpaceDesc::Product(x, y) => {
            let (even, odd) = deinterleave_stream(s);
            Some(PointDesc::pair(eval_stream(x, &even)?, eval_stream(y, &odd)?))
        }
        SpaceDesc::Layered(top, bottom) => match s.find(|x| x == LAYER_ESCAPE) {
            Some(i) => {
                if (0..i).any(|j| s.symbol_at(j) > 1) {
                    return None;
                }
                Some(PointDesc::top(eval_stream(top, &drop_front(s, i + 1))?))
            }
            None => Some(PointDesc::bot(binary_eval(bottom, s)?)),
        },
        SpaceDesc::FormalCompletion(base) => match project_skips(s) {
            Some(projected) => match eval_stream(base, &projected) {
                Some(x) => Some(PointDesc::embedded(x)),
                None => Some(PointDesc::Bottom),
            },
            None => Some(PointDesc::Bottom),
        },
    }
}

/// The stream with its first `n` symbols removed.
pub fn drop_front(s: &NameStream, n: usize) -> NameStream {
    if n <= s.head().len() {
        NameStream::new(s.head()[n..].to_vec(), s.cycle().to_vec())
    } else {
        let k = (n - s.head().len()) % s.cycle().len();
        let mut cycle = s.cycle()[k..].to_vec();
        cycle.extend_from_slice(&s.cycle()[..k]);
        NameStream::new(Vec::new(), cycle)
    }
}

/// Split an interleaved stream into its (even, odd) tracks.
pub fn deinterleave_stream(s: &NameStream) -> (NameStream, NameStream) {
    // align so both the head boundary and the cycle are even-length
    let h = s.head().len() + (s.head().len() % 2);
    let c = if s.cycle().len() % 2 == 0 {
        s.cycle().len()
    } else {
        2 * s.cycle().len()
    };
    let mut even_head = Vec::new();
    let mut odd_head = Vec::new();
    for i in (0..h).step_by(2) {
        even_head.push(s.symbol_at(i));
        odd_head.push(s.symbol_at(i + 1));
    }
    let mut even_cycle = Vec::new();
    let mut odd_cycle = Vec::new();
    for i in (h..h + c).step_by(2) {
        even_cycle.push(s.symbol_at(i));
        odd_cycle.push(s.symbol_at(i + 1));
    }
    (
        NameStream::new(even_head, even_cycle),
        NameStream::new(odd_head, odd_cycle),
    )
}

/// A finite sum of ordinal rank contributions; every rank arising in the
/// grammar is a finite natural, the summands are kept for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankExpr {
    terms: Vec<u64>,
}

impl RankExpr {
    pub fn atom(n: u64) -> Self {
        RankExpr { terms: vec![n] }
    }

    pub fn sum(self, other: RankExpr) -> Self {
        let mut terms = self.terms;
        terms.extend(other.terms);
        RankExpr { terms }
    }

    pub fn value(&self) -> u64 {
        self.terms.iter().sum()
    }
}

impl fmt::Display for RankExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Cantor–Bendixson rank of a scattered grammar space.
///
/// `Layered(X, Y)` has rank `CBr(X) + CBr(Y)`; products are supported when
/// one factor is discrete, where the rank is the maximum of the factors.
pub fn cb_rank(space: &SpaceDesc) -> Result<RankExpr, SpaceError> {
    match space {
        SpaceDesc::Naturals | SpaceDesc::Finite(_) => Ok(RankExpr::atom(1)),
        SpaceDesc::OmegaPlusOne => Ok(RankExpr::atom(2)),
        SpaceDesc::Layered(top, bottom) => Ok(cb_rank(top)?.sum(cb_rank(bottom)?)),
        SpaceDesc::Product(x, y) => {
            let rx = cb_rank(x)?;
            let ry = cb_rank(y)?;
            if x.is_discrete() {
                Ok(ry)
            } else if y.is_discrete() {
                Ok(rx)
            } else {
                Err(SpaceError::UnsupportedProduct)
            }
        }
        other => Err(SpaceError::NotScattered(other.clone())),
    }
}

/// Whether a point is isolated in a scattered grammar space.
///
/// In `Layered(X, Y)` a point `x/·` is isolated iff `x` is isolated in `X`,
/// and `·/y` is never isolated (the top space is nonempty for every grammar
/// member).
pub fn isolated(space: &SpaceDesc, point: &PointDesc) -> Result<bool, SpaceError> {
    match (space, point) {
        (SpaceDesc::Naturals, PointDesc::Nat(_)) => Ok(true),
        (SpaceDesc::Finite(k), PointDesc::Fin(v)) if v < k => Ok(true),
        (SpaceDesc::OmegaPlusOne, PointDesc::Ordinal(Ordinal::Finite(_))) => Ok(true),
        (SpaceDesc::OmegaPlusOne, PointDesc::Ordinal(Ordinal::Omega)) => Ok(false),
        (SpaceDesc::Layered(top, _), PointDesc::Top(x)) => isolated(top, x),
        (SpaceDesc::Layered(_, bottom), PointDesc::Bot(y)) => {
            // check membership, then report non-isolation
            let _ = binary_encode(bottom, y)?;
            Ok(false)
        }
        (SpaceDesc::Product(sx, sy), PointDesc::Pair(a, b)) => {
            Ok(isolated(sx, a)? && isolated(sy, b)?)
        }
        (SpaceDesc::Naturals, _)
        | (SpaceDesc::Finite(_), _)
        | (SpaceDesc::OmegaPlusOne, _)
        | (SpaceDesc::Layered(_, _), _)
        | (SpaceDesc::Product(_, _), _) => Err(SpaceError::PointSpaceMismatch),
        (other, _) => Err(SpaceError::NotScattered(other.clone())),
    }
}

fn binary_consistent(
    space: &SpaceDesc,
    prefix: &Prefix,
    point: &PointDesc,
) -> Result<bool, SpaceError> {
    match (space, point) {
        (SpaceDesc::Naturals, PointDesc::Nat(_)) | (SpaceDesc::Finite(_), PointDesc::Fin(_)) => {
            let canonical = binary_encode(space, point)?;
            Ok(*prefix == canonical.at(prefix.len()))
        }
        (SpaceDesc::OmegaPlusOne, _) | (SpaceDesc::Sierpinski, _) | (SpaceDesc::Cantor, _) => {
            consistent_with_point(space, prefix, point)
        }
        _ => Err(SpaceError::UnsupportedBottomCoding(space.clone())),
    }
}

/// Whether some name of `point` extends `prefix`. This is the prefix-level
/// membership question behind inequality verdicts and isolation testing.
pub fn consistent_with_point(
    space: &SpaceDesc,
    prefix: &Prefix,
    point: &PointDesc,
) -> Result<bool, SpaceError> {
    let syms = prefix.symbols();
    match (space, point) {
        (SpaceDesc::Naturals, PointDesc::Nat(_))
        | (SpaceDesc::Finite(_), PointDesc::Fin(_))
        | (SpaceDesc::Baire, PointDesc::Stream(_))
        | (SpaceDesc::Cantor, PointDesc::Stream(_)) => {
            // these spaces give each point a unique name
            let canonical = encode(space, point)?;
            Ok(*prefix == canonical.at(prefix.len()))
        }
        (SpaceDesc::OmegaPlusOne, PointDesc::Ordinal(o)) => {
            if syms.iter().any(|&s| s > 1) {
                return Ok(false);
            }
            match (syms.iter().position(|&s| s == 1), o) {
                (Some(i), Ordinal::Finite(n)) => Ok(i as u64 == *n),
                (None, Ordinal::Finite(n)) => Ok(syms.len() as u64 <= *n),
                (Some(_), Ordinal::Omega) => Ok(false),
                (None, Ordinal::Omega) => Ok(true),
            }
        }
        (SpaceDesc::Sierpinski, PointDesc::SierpTop) => Ok(syms.iter().all(|&s| s <= 1)),
        (SpaceDesc::Sierpinski, PointDesc::SierpBot) => Ok(syms.iter().all(|&s| s == 0)),
        (SpaceDesc::Product(sx, sy), PointDesc::Pair(a, b)) => {
            let (even, odd) = crate::names::deinterleave(prefix);
            Ok(consistent_with_point(sx, &even, a)? && consistent_with_point(sy, &odd, b)?)
        }
        (SpaceDesc::Layered(top, _), PointDesc::Top(x)) => {
            match syms.iter().position(|&s| s == LAYER_ESCAPE) {
                Some(i) => {
                    if syms[..i].iter().any(|&s| s > 1) {
                        return Ok(false);
                    }
                    consistent_with_point(top, &Prefix::from(&syms[i + 1..]), x)
                }
                // any {0,1} prefix can still escape to the top track
                None => Ok(syms.iter().all(|&s| s <= 1)),
            }
        }
        (SpaceDesc::Layered(_, bottom), PointDesc::Bot(y)) => {
            if syms.iter().any(|&s| s >= LAYER_ESCAPE) {
                return Ok(false);
            }
            binary_consistent(bottom, prefix, y)
        }
        (SpaceDesc::FormalCompletion(base), PointDesc::Embedded(x)) => {
            let projected: Vec<Symbol> =
                syms.iter().filter(|&&s| s != SKIP).map(|&s| s - 1).collect();
            consistent_with_point(base, &Prefix::from_symbols(projected), x)
        }
        // the skip-forever continuation always names the fresh point
        (SpaceDesc::FormalCompletion(_), PointDesc::Bottom) => Ok(true),
        (SpaceDesc::DecimalReal, PointDesc::Decimal { .. }) => {
            // decimal names are not unique; no prefix-level membership test
            Err(SpaceError::NotScattered(SpaceDesc::DecimalReal))
        }
        _ => Err(SpaceError::PointSpaceMismatch),
    }
}

/// A small catalog of points for a space, used by fixture suites and the
/// point-count check behind the `neq` constructors.
pub fn sample_points(space: &SpaceDesc, count: usize) -> Vec<PointDesc> {
    match space {
        SpaceDesc::Naturals => (0..count as u64).map(PointDesc::Nat).collect(),
        SpaceDesc::Finite(k) => (0..*k.min(&(count as u32))).map(PointDesc::Fin).collect(),
        SpaceDesc::OmegaPlusOne => {
            let mut pts: Vec<PointDesc> = (0..count.saturating_sub(1) as u64)
                .map(|n| PointDesc::Ordinal(Ordinal::Finite(n)))
                .collect();
            pts.push(PointDesc::Ordinal(Ordinal::Omega));
            pts
        }
        SpaceDesc::Sierpinski => vec![PointDesc::SierpBot, PointDesc::SierpTop],
        SpaceDesc::Baire | SpaceDesc::Cantor => (0..count.min(2))
            .map(|b| PointDesc::Stream(NameStream::constant(b as u32)))
            .collect(),
        SpaceDesc::DecimalReal => (0..count.min(10) as u32)
            .map(|d| PointDesc::Decimal {
                negative: false,
                int_digit: d,
                frac: NameStream::constant(0),
            })
            .collect(),
        SpaceDesc::Product(x, y) => {
            let xs = sample_points(x, count);
            let ys = sample_points(y, count);
            let mut pts = Vec::new();
            for a in &xs {
                for b in &ys {
                    if pts.len() >= count {
                        break;
                    }
                    pts.push(PointDesc::pair(a.clone(), b.clone()));
                }
            }
            pts
        }
        SpaceDesc::Layered(top, bottom) => {
            let mut pts = Vec::new();
            for y in sample_points(bottom, count / 2 + 1) {
                pts.push(PointDesc::bot(y));
            }
            for x in sample_points(top, count / 2 + 1) {
                pts.push(PointDesc::top(x));
            }
            pts.truncate(count);
            pts
        }
        SpaceDesc::FormalCompletion(base) => {
            let mut pts: Vec<PointDesc> = sample_points(base, count.saturating_sub(1))
                .into_iter()
                .map(PointDesc::embedded)
                .collect();
            pts.push(PointDesc::Bottom);
            pts
        }
    }
}

/// A human-readable label for a point, used in fixture names and reports.
pub fn point_label(point: &PointDesc) -> String {
    use alloc::format;
    match point {
        PointDesc::Nat(n) => format!("{n}"),
        PointDesc::Fin(v) => format!("{v}"),
        PointDesc::Ordinal(Ordinal::Finite(n)) => format!("{n}"),
        PointDesc::Ordinal(Ordinal::Omega) => String::from("w"),
        PointDesc::SierpTop => String::from("top"),
        PointDesc::SierpBot => String::from("bot"),
        PointDesc::Stream(s) => format!("stream{:?}", s.at(4)),
        PointDesc::Decimal {
            negative,
            int_digit,
            ..
        } => format!("{}{int_digit}.xx", if *negative { "-" } else { "+" }),
        PointDesc::Pair(a, b) => format!("({},{})", point_label(a), point_label(b)),
        PointDesc::Top(x) => format!("{}/.", point_label(x)),
        PointDesc::Bot(y) => format!("./{}", point_label(y)),
        PointDesc::Embedded(x) => format!("emb({})", point_label(x)),
        PointDesc::Bottom => String::from("bottom"),
    }
}
