//! Finite-precision workbench for continuous Weihrauch reducibility.
//!
//! Everything in this crate works with *finite prefixes* of infinite names.
//! A continuous realizer is modelled as a monotone map from input prefixes
//! to output prefixes ([`names::Transducer`]); represented spaces are an
//! inductive grammar with coding and decoding at prefix depth
//! ([`spaces::SpaceDesc`]); multivalued problems carry prefix-level domain
//! tests and finite-depth solution verdicts ([`problems::Problem`]).
//! Reductions between problems are witnessed by transducer pairs
//! ([`reductions::WitnessPair`]) which can be checked against instance
//! suites, extracted from winning game strategies, or refuted by bounded
//! adversarial search. The game engine ([`games`]) plays and adjudicates
//! Wadge, backtrack, and constant-commitment games.
//!
//! The crate is `no_std` (with `alloc`): all evaluation is pure and all
//! values are immutable after construction.

#![no_std]

extern crate alloc;

pub mod fixtures;
pub mod games;
pub mod grammar;
pub mod names;
pub mod problems;
pub mod reductions;
pub mod spaces;

pub use names::{pair, unpair, NameStream, Prefix, Symbol, Transducer};
pub use problems::{Instance, Problem, Verdict, VerdictStatus};
pub use reductions::{CheckReport, WitnessPair};
pub use spaces::{DecodeVerdict, PointDesc, SpaceDesc};
