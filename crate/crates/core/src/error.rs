//! Errors and enumeration caps shared across the crate.

use alloc::string::String;
use core::fmt;

/// Limits for the brute-force enumerations. The defaults are desk-scale:
/// exceeding them is reported loudly instead of silently truncating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of propositional atoms for model enumeration (2^n).
    pub atoms: usize,
    /// Maximum number of modal atoms (|AtomK| + |AtomA|) for the GK oracle.
    pub modal_atoms: usize,
    /// Maximum number of literals of interest (2 per atom) for the naive
    /// answer-set enumeration.
    pub literals: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            atoms: 24,
            modal_atoms: 12,
            literals: 20,
        }
    }
}

impl Caps {
    /// Override every cap with the same value, as done by the
    /// `GK2DLP_ENUM_CAP` environment variable.
    pub fn with_all(n: usize) -> Self {
        Caps {
            atoms: n,
            modal_atoms: n,
            literals: n,
        }
    }
}

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A formula mentions an atom outside the interpretation's universe.
    UniverseMismatch { atom: String },
    /// A brute-force enumeration would exceed its configured cap.
    EnumerationLimit { needed: usize, cap: usize },
    /// A renaming tag was applied to an atom that already carries it, or a
    /// generated name clashed irreconcilably with the registry.
    Namespace(String),
    /// Input uses a fragment the operation does not support
    /// (classical literals or nested `not` in simple rules, nested modalities).
    UnsupportedFragment(String),
    /// A purported answer set of a translated program lacks structure the
    /// translation forces (the control atoms `u` and `v`).
    MalformedModel(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UniverseMismatch { atom } => {
                write!(f, "atom `{atom}` is outside the declared universe")
            }
            Error::EnumerationLimit { needed, cap } => {
                write!(f, "enumeration limit exceeded: need {needed}, cap is {cap}")
            }
            Error::Namespace(msg) => write!(f, "namespace error: {msg}"),
            Error::UnsupportedFragment(msg) => write!(f, "unsupported fragment: {msg}"),
            Error::MalformedModel(msg) => write!(f, "malformed model: {msg}"),
        }
    }
}
