//! Core machinery for compiling theories of grounded knowledge (two modal
//! operators: `K` for knowledge, `A` for assumption) into disjunctive logic
//! programs, together with brute-force reference semantics that let the
//! whole chain be verified end-to-end at desk scale.
//!
//! The crate is organised along the pipeline:
//!
//! * [`prop`] — propositional formulas, interpretations, model enumeration,
//!   NNF/CNF transforms and atom renamings;
//! * [`names`] — the registry of fresh atoms introduced by the translation;
//! * [`gk`] — pure GK theories and an independent GK-model oracle;
//! * [`embed`] — embeddings of default logic, autoepistemic logic, the logic
//!   of universal causation and simple disjunctive programs into GK, plus a
//!   direct Reiter-extension oracle;
//! * [`dlp`] — disjunctive logic programs with nested expressions: reference
//!   satisfaction, reduct and answer-set semantics;
//! * [`solve`] — a small DPLL-based enumerator that scales the answer-set
//!   semantics to the programs produced by the translation;
//! * [`translate`] — the translation itself: the candidate formula, the
//!   minimality-check formula, the saturation program and the decoder.
//!
//! Everything is deterministic: all operations are pure functions over
//! immutable values, and all enumeration orders are canonical.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dlp;
pub mod embed;
pub mod error;
pub mod gk;
pub mod names;
pub mod prop;
pub mod rng;
pub mod solve;
pub mod translate;

pub use error::{Caps, Error};
