//! The registry of every atom a translation touches: base atoms of the input
//! theory and all fresh atoms the construction introduces (modal-atom labels,
//! soundness and witness copies, starred and hatted renamings, control and
//! counter atoms, CNF definition atoms).
//!
//! The registry is a bijection: distinct `(kind, key)` pairs map to distinct
//! names, and no generated name collides with a declared base atom. Names
//! depend only on first-occurrence order, so a fixed input yields a
//! byte-identical registry.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::prop::{Atom, PropFormula};

/// What a registered atom stands for. Indices are first-occurrence positions
/// (`KAtom(0)` is the label of the first distinct K-atom formula, and so on).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum AtomKind {
    /// An atom of the input theory.
    Base,
    /// Label `k_phi` for the i-th K-atom formula.
    KAtom(usize),
    /// Label `a_psi` for the j-th A-atom formula.
    AAtom(usize),
    /// Global soundness copy `p^k` of a base atom.
    KCopy(Atom),
    /// Global soundness copy `p^a` of a base atom.
    ACopy(Atom),
    /// Witness copy `p^{k_psi}` for the i-th K-atom.
    KWitnessCopy(usize, Atom),
    /// Witness copy `p^{a_psi}` for the j-th A-atom.
    AWitnessCopy(usize, Atom),
    /// Starred copy `x*` of any non-assumption atom.
    Star(Atom),
    /// Hatted copy `p^` of a base atom.
    Hat(Atom),
    /// The saturation control atom `u`.
    ControlU,
    /// The consistency control atom `v`.
    ControlV,
    /// Counter atom `c_phi` for the i-th K-atom.
    CAtom(usize),
    /// Fresh definition atom introduced by the structural CNF.
    CnfDef(usize),
}

impl AtomKind {
    /// Short tag used in the sidecar map file.
    pub fn tag(&self) -> &'static str {
        match self {
            AtomKind::Base => "base",
            AtomKind::KAtom(_) => "kAtom",
            AtomKind::AAtom(_) => "aAtom",
            AtomKind::KCopy(_) => "kCopy",
            AtomKind::ACopy(_) => "aCopy",
            AtomKind::KWitnessCopy(..) => "kWitnessCopy",
            AtomKind::AWitnessCopy(..) => "aWitnessCopy",
            AtomKind::Star(_) => "star",
            AtomKind::Hat(_) => "hat",
            AtomKind::ControlU | AtomKind::ControlV => "control",
            AtomKind::CAtom(_) => "cAtom",
            AtomKind::CnfDef(_) => "cnfDef",
        }
    }
}

/// Atom-renaming tags accepted by [`crate::prop::rename`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenameTag {
    /// `p` to `p^k` (global knowledge copy).
    KCopy,
    /// `p` to `p^a` (global assumption copy).
    ACopy,
    /// `p` to `p^{k_psi}` for the K-atom with this index.
    KWitness(usize),
    /// `p` to `p^{a_psi}` for the A-atom with this index.
    AWitness(usize),
    /// `x` to `x*`; applies to every registered kind except star and hat.
    Star,
    /// `p` to `p^`.
    Hat,
}

/// Bijective registry of all atoms of one translation.
#[derive(Debug, Clone, Default)]
pub struct TranslationNamespace {
    by_name: BTreeMap<Atom, AtomKind>,
    by_kind: BTreeMap<AtomKind, Atom>,
    insertion_order: Vec<Atom>,
    k_formulas: Vec<PropFormula>,
    a_formulas: Vec<PropFormula>,
    def_count: usize,
}

impl TranslationNamespace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every registered atom in registration order, with its kind.
    pub fn entries(&self) -> impl Iterator<Item = (&Atom, &AtomKind)> {
        self.insertion_order
            .iter()
            .map(move |a| (a, self.by_name.get(a).expect("registered")))
    }

    pub fn kind_of(&self, atom: &Atom) -> Option<&AtomKind> {
        self.by_name.get(atom)
    }

    pub fn atom_for(&self, kind: &AtomKind) -> Option<&Atom> {
        self.by_kind.get(kind)
    }

    /// The K-atom formulas in first-occurrence order.
    pub fn k_formulas(&self) -> &[PropFormula] {
        &self.k_formulas
    }

    pub fn a_formulas(&self) -> &[PropFormula] {
        &self.a_formulas
    }

    fn register(&mut self, preferred: String, kind: AtomKind) -> Atom {
        if let Some(existing) = self.by_kind.get(&kind) {
            return existing.clone();
        }
        // Keep appending a suffix until the name is free; names therefore
        // stay deterministic even when a base atom shadows a generated one.
        let mut name = preferred;
        while self.by_name.contains_key(&Atom(name.clone())) {
            name.push('x');
        }
        let atom = Atom(name);
        self.by_name.insert(atom.clone(), kind.clone());
        self.by_kind.insert(kind, atom.clone());
        self.insertion_order.push(atom.clone());
        atom
    }

    /// Declare an atom of the input theory. Idempotent; errors if the name is
    /// already taken by a generated atom.
    pub fn declare_base(&mut self, atom: &Atom) -> Result<Atom, Error> {
        match self.by_name.get(atom) {
            Some(AtomKind::Base) => Ok(atom.clone()),
            Some(other) => Err(Error::Namespace(format!(
                "base atom `{atom}` collides with generated {} atom",
                other.tag()
            ))),
            None => {
                // Base atoms all share the keyless `Base` kind, so they are
                // tracked in `by_name` only.
                self.by_name.insert(atom.clone(), AtomKind::Base);
                self.insertion_order.push(atom.clone());
                Ok(atom.clone())
            }
        }
    }

    /// Label atom for a K-atom formula; registers the formula on first use.
    pub fn k_atom(&mut self, formula: &PropFormula) -> Atom {
        let idx = match self.k_formulas.iter().position(|f| f == formula) {
            Some(i) => i,
            None => {
                self.k_formulas.push(formula.clone());
                self.k_formulas.len() - 1
            }
        };
        self.register(format!("k__{}", idx + 1), AtomKind::KAtom(idx))
    }

    /// Label atom for an A-atom formula; registers the formula on first use.
    pub fn a_atom(&mut self, formula: &PropFormula) -> Atom {
        let idx = match self.a_formulas.iter().position(|f| f == formula) {
            Some(i) => i,
            None => {
                self.a_formulas.push(formula.clone());
                self.a_formulas.len() - 1
            }
        };
        self.register(format!("a__{}", idx + 1), AtomKind::AAtom(idx))
    }

    /// The tagged copy of an atom. Stacking a tag on an atom that already
    /// carries it (star on star, hat on hat, or any copy tag on a non-base
    /// atom) is a namespace error.
    pub fn copy(&mut self, atom: &Atom, tag: RenameTag) -> Result<Atom, Error> {
        let kind = self
            .by_name
            .get(atom)
            .cloned()
            .ok_or_else(|| Error::Namespace(format!("atom `{atom}` is not registered")))?;
        match tag {
            RenameTag::KCopy | RenameTag::ACopy | RenameTag::KWitness(_) | RenameTag::AWitness(_) => {
                if kind != AtomKind::Base {
                    return Err(Error::Namespace(format!(
                        "copy tag applied to non-base atom `{atom}` ({})",
                        kind.tag()
                    )));
                }
            }
            RenameTag::Star => {
                if matches!(kind, AtomKind::Star(_) | AtomKind::Hat(_)) {
                    return Err(Error::Namespace(format!(
                        "star applied to already-renamed atom `{atom}`"
                    )));
                }
            }
            RenameTag::Hat => {
                if kind != AtomKind::Base {
                    return Err(Error::Namespace(format!(
                        "hat applied to non-base atom `{atom}` ({})",
                        kind.tag()
                    )));
                }
            }
        }
        let (preferred, kind) = match tag {
            RenameTag::KCopy => (format!("g_k__{atom}"), AtomKind::KCopy(atom.clone())),
            RenameTag::ACopy => (format!("g_a__{atom}"), AtomKind::ACopy(atom.clone())),
            RenameTag::KWitness(i) => (
                format!("w_k{}__{atom}", i + 1),
                AtomKind::KWitnessCopy(i, atom.clone()),
            ),
            RenameTag::AWitness(j) => (
                format!("w_a{}__{atom}", j + 1),
                AtomKind::AWitnessCopy(j, atom.clone()),
            ),
            RenameTag::Star => (format!("s__{atom}"), AtomKind::Star(atom.clone())),
            RenameTag::Hat => (format!("h__{atom}"), AtomKind::Hat(atom.clone())),
        };
        Ok(self.register(preferred, kind))
    }

    pub fn control_u(&mut self) -> Atom {
        self.register("u".to_string(), AtomKind::ControlU)
    }

    pub fn control_v(&mut self) -> Atom {
        self.register("v".to_string(), AtomKind::ControlV)
    }

    pub fn c_atom(&mut self, k_index: usize) -> Atom {
        self.register(format!("c__{}", k_index + 1), AtomKind::CAtom(k_index))
    }

    pub fn cnf_def(&mut self) -> Atom {
        let idx = self.def_count;
        self.def_count += 1;
        self.register(format!("d__{}", idx + 1), AtomKind::CnfDef(idx))
    }
}
