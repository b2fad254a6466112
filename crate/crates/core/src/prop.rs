//! Propositional formulas, interpretations as complete literal sets,
//! brute-force model enumeration and entailment, NNF/CNF transforms, and
//! atom-renaming substitutions.
//!
//! The brute-force semantics here is the verification backbone for the rest
//! of the crate, so enumeration fails loudly on the configured caps instead
//! of truncating.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Caps, Error};
use crate::names::{RenameTag, TranslationNamespace};

/// A propositional atom, identified by name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(pub String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Self {
        Atom(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl core::fmt::Display for Atom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

/// A classical literal: an atom or its classical negation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal { atom, positive: true }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal { atom, positive: false }
    }

    pub fn complement(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            positive: !self.positive,
        }
    }
}

impl core::fmt::Display for Literal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.positive {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "~{}", self.atom)
        }
    }
}

/// Propositional formulas with the two zero-place connectives.
///
/// Implication is parse-level sugar: [`PropFormula::implies`] expands
/// `f -> g` to `~f | g` at construction, so the tree never stores it.
/// Structural equality (`==`) is the syntactic identity used wherever
/// formulas are compared as modal-atom labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropFormula {
    Falsum,
    Verum,
    Atom(Atom),
    Not(Box<PropFormula>),
    And(Box<PropFormula>, Box<PropFormula>),
    Or(Box<PropFormula>, Box<PropFormula>),
}

impl PropFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        PropFormula::Atom(Atom::new(name))
    }

    pub fn not(f: PropFormula) -> Self {
        PropFormula::Not(Box::new(f))
    }

    pub fn and(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::And(Box::new(f), Box::new(g))
    }

    pub fn or(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::Or(Box::new(f), Box::new(g))
    }

    /// `f -> g`, expanded to `~f | g`.
    pub fn implies(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::or(PropFormula::not(f), g)
    }

    /// Conjunction of a sequence; the empty conjunction is `true`.
    pub fn conj(items: impl IntoIterator<Item = PropFormula>) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => PropFormula::Verum,
            Some(first) => it.fold(first, PropFormula::and),
        }
    }

    /// Disjunction of a sequence; the empty disjunction is `false`.
    pub fn disj(items: impl IntoIterator<Item = PropFormula>) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => PropFormula::Falsum,
            Some(first) => it.fold(first, PropFormula::or),
        }
    }

    /// Atoms in first-occurrence order (left-to-right traversal).
    pub fn atoms_ordered(&self) -> Vec<Atom> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.collect_atoms(&mut seen, &mut out);
        out
    }

    fn collect_atoms(&self, seen: &mut BTreeSet<Atom>, out: &mut Vec<Atom>) {
        match self {
            PropFormula::Falsum | PropFormula::Verum => {}
            PropFormula::Atom(a) => {
                if seen.insert(a.clone()) {
                    out.push(a.clone());
                }
            }
            PropFormula::Not(f) => f.collect_atoms(seen, out),
            PropFormula::And(f, g) | PropFormula::Or(f, g) => {
                f.collect_atoms(seen, out);
                g.collect_atoms(seen, out);
            }
        }
    }

    pub fn atom_set(&self) -> BTreeSet<Atom> {
        self.atoms_ordered().into_iter().collect()
    }

    /// Number of nodes in the tree. Renaming preserves this.
    pub fn node_count(&self) -> usize {
        match self {
            PropFormula::Falsum | PropFormula::Verum | PropFormula::Atom(_) => 1,
            PropFormula::Not(f) => 1 + f.node_count(),
            PropFormula::And(f, g) | PropFormula::Or(f, g) => 1 + f.node_count() + g.node_count(),
        }
    }

    /// The conjuncts of a right-to-left flattened conjunction. A formula that
    /// is not an `And` is its own single conjunct.
    pub fn conjuncts(&self) -> Vec<&PropFormula> {
        let mut out = Vec::new();
        fn walk<'a>(f: &'a PropFormula, out: &mut Vec<&'a PropFormula>) {
            match f {
                PropFormula::And(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                other => out.push(other),
            }
        }
        walk(self, &mut out);
        out
    }
}

/// An interpretation: a complete set of literals over a declared atom
/// universe. For each atom of the universe exactly one of `{p, ~p}` is in
/// the set; we store the true atoms and the universe.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interpretation {
    universe: BTreeSet<Atom>,
    true_atoms: BTreeSet<Atom>,
}

impl Interpretation {
    /// Build from the set of true atoms; everything else in the universe is
    /// false. True atoms outside the universe are a universe mismatch.
    pub fn new(universe: BTreeSet<Atom>, true_atoms: BTreeSet<Atom>) -> Result<Self, Error> {
        if let Some(stray) = true_atoms.difference(&universe).next() {
            return Err(Error::UniverseMismatch {
                atom: stray.0.clone(),
            });
        }
        Ok(Interpretation {
            universe,
            true_atoms,
        })
    }

    pub fn universe(&self) -> &BTreeSet<Atom> {
        &self.universe
    }

    pub fn true_atoms(&self) -> &BTreeSet<Atom> {
        &self.true_atoms
    }

    pub fn assigns(&self, atom: &Atom) -> Option<bool> {
        if self.universe.contains(atom) {
            Some(self.true_atoms.contains(atom))
        } else {
            None
        }
    }

    /// The interpretation as a complete literal set.
    pub fn literals(&self) -> BTreeSet<Literal> {
        self.universe
            .iter()
            .map(|a| Literal {
                atom: a.clone(),
                positive: self.true_atoms.contains(a),
            })
            .collect()
    }
}

/// Truth value of `f` under `I`. Errors if `f` mentions an atom outside the
/// universe of `I`.
pub fn evaluate(interp: &Interpretation, f: &PropFormula) -> Result<bool, Error> {
    match f {
        PropFormula::Falsum => Ok(false),
        PropFormula::Verum => Ok(true),
        PropFormula::Atom(a) => interp.assigns(a).ok_or(Error::UniverseMismatch {
            atom: a.0.clone(),
        }),
        PropFormula::Not(g) => Ok(!evaluate(interp, g)?),
        PropFormula::And(g, h) => Ok(evaluate(interp, g)? && evaluate(interp, h)?),
        PropFormula::Or(g, h) => Ok(evaluate(interp, g)? || evaluate(interp, h)?),
    }
}

fn check_universe_cap(universe: &BTreeSet<Atom>, cap: usize) -> Result<(), Error> {
    if universe.len() > cap {
        Err(Error::EnumerationLimit {
            needed: universe.len(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// All interpretations over `universe`, in canonical (bitmask) order.
fn all_interpretations(universe: &BTreeSet<Atom>) -> impl Iterator<Item = Interpretation> + '_ {
    let atoms: Vec<Atom> = universe.iter().cloned().collect();
    let n = atoms.len();
    (0u64..(1u64 << n)).map(move |mask| {
        let true_atoms = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect();
        Interpretation {
            universe: universe.clone(),
            true_atoms,
        }
    })
}

/// Exactly the interpretations over `universe` satisfying `f`.
pub fn models(f: &PropFormula, universe: &BTreeSet<Atom>, caps: &Caps) -> Result<Vec<Interpretation>, Error> {
    if let Some(stray) = f.atom_set().difference(universe).next() {
        return Err(Error::UniverseMismatch {
            atom: stray.0.clone(),
        });
    }
    check_universe_cap(universe, caps.atoms)?;
    let mut out = Vec::new();
    for interp in all_interpretations(universe) {
        if evaluate(&interp, f).expect("universe checked") {
            out.push(interp);
        }
    }
    Ok(out)
}

/// Is the conjunction of `formulas` satisfiable over `universe`? The
/// universe must cover every atom mentioned. Stops at the first model.
pub fn satisfiable<'a>(
    formulas: impl IntoIterator<Item = &'a PropFormula> + Clone,
    universe: &BTreeSet<Atom>,
    caps: &Caps,
) -> Result<bool, Error> {
    for f in formulas.clone() {
        if let Some(stray) = f.atom_set().difference(universe).next() {
            return Err(Error::UniverseMismatch {
                atom: stray.0.clone(),
            });
        }
    }
    check_universe_cap(universe, caps.atoms)?;
    'outer: for interp in all_interpretations(universe) {
        for f in formulas.clone() {
            if !evaluate(&interp, f).expect("universe checked") {
                continue 'outer;
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// Does `gamma` entail `f`? True iff every model of the conjunction of
/// `gamma` over the joint atom universe satisfies `f`.
pub fn entails<'a>(
    gamma: impl IntoIterator<Item = &'a PropFormula> + Clone,
    f: &PropFormula,
    caps: &Caps,
) -> Result<bool, Error> {
    let mut universe = f.atom_set();
    for g in gamma.clone() {
        universe.extend(g.atom_set());
    }
    check_universe_cap(&universe, caps.atoms)?;
    'outer: for interp in all_interpretations(&universe) {
        for g in gamma.clone() {
            if !evaluate(&interp, g).expect("universe checked") {
                continue 'outer;
            }
        }
        if !evaluate(&interp, f).expect("universe checked") {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Negation normal form: negation only immediately above atoms, connectives
/// restricted to `{false, true, ~, &, |}`. Equivalent to the input over its
/// atoms; performs no simplification beyond pushing negations.
pub fn nnf(f: &PropFormula) -> PropFormula {
    match f {
        PropFormula::Falsum | PropFormula::Verum | PropFormula::Atom(_) => f.clone(),
        PropFormula::And(g, h) => PropFormula::and(nnf(g), nnf(h)),
        PropFormula::Or(g, h) => PropFormula::or(nnf(g), nnf(h)),
        PropFormula::Not(g) => match &**g {
            PropFormula::Falsum => PropFormula::Verum,
            PropFormula::Verum => PropFormula::Falsum,
            PropFormula::Atom(_) => f.clone(),
            PropFormula::Not(h) => nnf(h),
            PropFormula::And(a, b) => PropFormula::or(
                nnf(&PropFormula::not((**a).clone())),
                nnf(&PropFormula::not((**b).clone())),
            ),
            PropFormula::Or(a, b) => PropFormula::and(
                nnf(&PropFormula::not((**a).clone())),
                nnf(&PropFormula::not((**b).clone())),
            ),
        },
    }
}

/// A clause `p_1 | .. | p_t | ~p_{t+1} | .. | ~p_m`, kept in the rule shape
/// `p_1; ..; p_t <- p_{t+1}, .., p_m`: `head` holds the positive atoms,
/// `body` the negated ones. Empty head denotes `false`, empty body `true`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClauseRule {
    pub head: BTreeSet<Atom>,
    pub body: BTreeSet<Atom>,
}

impl ClauseRule {
    pub fn is_tautology(&self) -> bool {
        !self.head.is_disjoint(&self.body)
    }

    /// The clause as a formula (for model-equivalence checks).
    pub fn to_formula(&self) -> PropFormula {
        PropFormula::disj(
            self.head
                .iter()
                .map(|a| PropFormula::Atom(a.clone()))
                .chain(
                    self.body
                        .iter()
                        .map(|a| PropFormula::not(PropFormula::Atom(a.clone()))),
                ),
        )
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.head.iter().chain(self.body.iter())
    }
}

/// Which conjunctive-normal-form construction to use.
///
/// The distributive mode yields a clause set equivalent to the input over
/// its atoms (worst-case exponential); the structural mode introduces
/// definition atoms and is linear, model-preserving when projected to the
/// original atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CnfMode {
    Distributive,
    Structural,
}

/// Result of a CNF conversion: the clause set plus any definition atoms the
/// structural mode introduced (with the subformula each one stands for).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfOutput {
    pub clauses: Vec<ClauseRule>,
    pub definitions: Vec<(Atom, PropFormula)>,
}

pub fn cnf(f: &PropFormula, mode: CnfMode, ns: &mut TranslationNamespace) -> CnfOutput {
    match mode {
        CnfMode::Distributive => CnfOutput {
            clauses: cnf_distributive(f),
            definitions: Vec::new(),
        },
        CnfMode::Structural => cnf_structural(f, ns),
    }
}

/// Equivalent CNF by distribution over the NNF. Tautological clauses are
/// dropped and duplicate clauses merged; output in canonical sorted order.
pub fn cnf_distributive(f: &PropFormula) -> Vec<ClauseRule> {
    fn clauses(f: &PropFormula) -> Vec<ClauseRule> {
        match f {
            PropFormula::Verum => Vec::new(),
            PropFormula::Falsum => alloc::vec![ClauseRule {
                head: BTreeSet::new(),
                body: BTreeSet::new(),
            }],
            PropFormula::Atom(a) => alloc::vec![ClauseRule {
                head: BTreeSet::from([a.clone()]),
                body: BTreeSet::new(),
            }],
            PropFormula::Not(g) => match &**g {
                PropFormula::Atom(a) => alloc::vec![ClauseRule {
                    head: BTreeSet::new(),
                    body: BTreeSet::from([a.clone()]),
                }],
                _ => unreachable!("input is in NNF"),
            },
            PropFormula::And(g, h) => {
                let mut out = clauses(g);
                out.extend(clauses(h));
                out
            }
            PropFormula::Or(g, h) => {
                let left = clauses(g);
                let right = clauses(h);
                // An empty clause set means `true`; disjunction with it is `true`.
                if left.is_empty() || right.is_empty() {
                    return Vec::new();
                }
                let mut out = Vec::new();
                for cl in &left {
                    for cr in &right {
                        let mut merged = cl.clone();
                        merged.head.extend(cr.head.iter().cloned());
                        merged.body.extend(cr.body.iter().cloned());
                        out.push(merged);
                    }
                }
                out
            }
        }
    }
    let set: BTreeSet<ClauseRule> = clauses(&nnf(f))
        .into_iter()
        .filter(|c| !c.is_tautology())
        .collect();
    set.into_iter().collect()
}

/// Structure-preserving CNF: one fresh definition atom per internal
/// connective of the NNF, constrained by a full biconditional, so every
/// model of the input extends uniquely to a model of the clause set and the
/// projection of the clause-set models to the original atoms is exactly the
/// model set of the input.
pub fn cnf_structural(f: &PropFormula, ns: &mut TranslationNamespace) -> CnfOutput {
    // Fold constants first so the recursion below only sees atoms, negated
    // atoms and binary connectives.
    fn fold(f: &PropFormula) -> PropFormula {
        match f {
            PropFormula::Falsum | PropFormula::Verum | PropFormula::Atom(_) => f.clone(),
            PropFormula::Not(g) => match fold(g) {
                PropFormula::Falsum => PropFormula::Verum,
                PropFormula::Verum => PropFormula::Falsum,
                other => PropFormula::not(other),
            },
            PropFormula::And(g, h) => match (fold(g), fold(h)) {
                (PropFormula::Falsum, _) | (_, PropFormula::Falsum) => PropFormula::Falsum,
                (PropFormula::Verum, other) | (other, PropFormula::Verum) => other,
                (a, b) => PropFormula::and(a, b),
            },
            PropFormula::Or(g, h) => match (fold(g), fold(h)) {
                (PropFormula::Verum, _) | (_, PropFormula::Verum) => PropFormula::Verum,
                (PropFormula::Falsum, other) | (other, PropFormula::Falsum) => other,
                (a, b) => PropFormula::or(a, b),
            },
        }
    }

    let folded = fold(&nnf(f));
    match folded {
        PropFormula::Verum => {
            return CnfOutput {
                clauses: Vec::new(),
                definitions: Vec::new(),
            }
        }
        PropFormula::Falsum => {
            return CnfOutput {
                clauses: alloc::vec![ClauseRule {
                    head: BTreeSet::new(),
                    body: BTreeSet::new(),
                }],
                definitions: Vec::new(),
            }
        }
        _ => {}
    }

    struct Ctx<'a> {
        ns: &'a mut TranslationNamespace,
        clauses: Vec<ClauseRule>,
        defs: Vec<(Atom, PropFormula)>,
    }

    fn clause(lits: &[(Atom, bool)]) -> ClauseRule {
        let mut c = ClauseRule {
            head: BTreeSet::new(),
            body: BTreeSet::new(),
        };
        for (a, pos) in lits {
            if *pos {
                c.head.insert(a.clone());
            } else {
                c.body.insert(a.clone());
            }
        }
        c
    }

    // Returns the literal standing for the subformula.
    fn walk(f: &PropFormula, ctx: &mut Ctx<'_>) -> (Atom, bool) {
        match f {
            PropFormula::Atom(a) => (a.clone(), true),
            PropFormula::Not(g) => match &**g {
                PropFormula::Atom(a) => (a.clone(), false),
                _ => unreachable!("input is in NNF"),
            },
            PropFormula::And(g, h) => {
                let (xa, xp) = walk(g, ctx);
                let (ya, yp) = walk(h, ctx);
                let d = ctx.ns.cnf_def();
                ctx.defs.push((d.clone(), f.clone()));
                // d <-> x & y
                ctx.clauses.push(clause(&[(d.clone(), false), (xa.clone(), xp)]));
                ctx.clauses.push(clause(&[(d.clone(), false), (ya.clone(), yp)]));
                ctx.clauses
                    .push(clause(&[(d.clone(), true), (xa, !xp), (ya, !yp)]));
                (d, true)
            }
            PropFormula::Or(g, h) => {
                let (xa, xp) = walk(g, ctx);
                let (ya, yp) = walk(h, ctx);
                let d = ctx.ns.cnf_def();
                ctx.defs.push((d.clone(), f.clone()));
                // d <-> x | y
                ctx.clauses
                    .push(clause(&[(d.clone(), false), (xa.clone(), xp), (ya.clone(), yp)]));
                ctx.clauses.push(clause(&[(d.clone(), true), (xa, !xp)]));
                ctx.clauses.push(clause(&[(d.clone(), true), (ya, !yp)]));
                (d, true)
            }
            PropFormula::Verum | PropFormula::Falsum => unreachable!("constants folded"),
        }
    }

    let mut ctx = Ctx {
        ns,
        clauses: Vec::new(),
        defs: Vec::new(),
    };
    let (root, pos) = walk(&folded, &mut ctx);
    ctx.clauses.push(clause(&[(root, pos)]));
    CnfOutput {
        clauses: ctx.clauses,
        definitions: ctx.defs,
    }
}

/// Replace every atom `p` of `f` by its tagged copy, registering the copies
/// in the namespace. The renaming is a bijection on atom names and preserves
/// the formula shape. Applying a tag to an atom that already carries it is a
/// namespace error; plain (clause-level) formulas only ever carry base atoms.
pub fn rename(
    f: &PropFormula,
    tag: RenameTag,
    ns: &mut TranslationNamespace,
) -> Result<PropFormula, Error> {
    let mut cache: BTreeMap<Atom, Atom> = BTreeMap::new();
    rename_inner(f, tag, ns, &mut cache)
}

fn rename_inner(
    f: &PropFormula,
    tag: RenameTag,
    ns: &mut TranslationNamespace,
    cache: &mut BTreeMap<Atom, Atom>,
) -> Result<PropFormula, Error> {
    Ok(match f {
        PropFormula::Falsum | PropFormula::Verum => f.clone(),
        PropFormula::Atom(a) => {
            let copy = match cache.get(a) {
                Some(c) => c.clone(),
                None => {
                    let c = ns.copy(a, tag)?;
                    cache.insert(a.clone(), c.clone());
                    c
                }
            };
            PropFormula::Atom(copy)
        }
        PropFormula::Not(g) => PropFormula::not(rename_inner(g, tag, ns, cache)?),
        PropFormula::And(g, h) => PropFormula::and(
            rename_inner(g, tag, ns, cache)?,
            rename_inner(h, tag, ns, cache)?,
        ),
        PropFormula::Or(g, h) => PropFormula::or(
            rename_inner(g, tag, ns, cache)?,
            rename_inner(h, tag, ns, cache)?,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::TranslationNamespace;

    fn p() -> PropFormula {
        PropFormula::atom("p")
    }
    fn q() -> PropFormula {
        PropFormula::atom("q")
    }

    fn universe(names: &[&str]) -> BTreeSet<Atom> {
        names.iter().map(|n| Atom::new(*n)).collect()
    }

    fn interp(universe_names: &[&str], true_names: &[&str]) -> Interpretation {
        Interpretation::new(
            universe(universe_names),
            true_names.iter().map(|n| Atom::new(*n)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn evaluate_conjunction_with_negation() {
        // I = {p, ~q}, f = p & ~q: true.
        let i = interp(&["p", "q"], &["p"]);
        let f = PropFormula::and(p(), PropFormula::not(q()));
        assert!(evaluate(&i, &f).unwrap());
    }

    #[test]
    fn evaluate_constants() {
        let i = interp(&[], &[]);
        assert!(evaluate(&i, &PropFormula::Verum).unwrap());
        assert!(!evaluate(&i, &PropFormula::Falsum).unwrap());
    }

    #[test]
    fn evaluate_disjunction_all_false() {
        let i = interp(&["p", "q"], &[]);
        assert!(!evaluate(&i, &PropFormula::or(p(), q())).unwrap());
    }

    #[test]
    fn evaluate_universe_mismatch() {
        let i = interp(&["p"], &["p"]);
        assert_eq!(
            evaluate(&i, &q()),
            Err(Error::UniverseMismatch { atom: "q".into() })
        );
    }

    #[test]
    fn models_single_atom() {
        let ms = models(&p(), &universe(&["p"]), &Caps::default()).unwrap();
        assert_eq!(ms.len(), 1);
        assert!(ms[0].assigns(&Atom::new("p")).unwrap());
    }

    #[test]
    fn models_of_falsum_is_empty() {
        let ms = models(&PropFormula::Falsum, &universe(&["p"]), &Caps::default()).unwrap();
        assert!(ms.is_empty());
    }

    #[test]
    fn models_of_disjunction() {
        // Enumerating all 4 assignments over {p, q} leaves 3 models of p | q.
        let ms = models(&PropFormula::or(p(), q()), &universe(&["p", "q"]), &Caps::default())
            .unwrap();
        assert_eq!(ms.len(), 3);
    }

    #[test]
    fn models_cap_exceeded() {
        let big: BTreeSet<Atom> = (0..30).map(|i| Atom::new(alloc::format!("x{i}"))).collect();
        assert!(matches!(
            models(&PropFormula::Verum, &big, &Caps::default()),
            Err(Error::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn entails_examples() {
        let caps = Caps::default();
        assert!(entails([&p()], &PropFormula::or(p(), q()), &caps).unwrap());
        assert!(!entails([] as [&PropFormula; 0], &p(), &caps).unwrap());
        assert!(entails([&PropFormula::and(p(), q())], &q(), &caps).unwrap());
    }

    #[test]
    fn nnf_de_morgan() {
        let f = PropFormula::not(PropFormula::and(p(), q()));
        assert_eq!(
            nnf(&f),
            PropFormula::or(PropFormula::not(p()), PropFormula::not(q()))
        );
    }

    #[test]
    fn nnf_double_negation() {
        let f = PropFormula::not(PropFormula::not(p()));
        assert_eq!(nnf(&f), p());
    }

    #[test]
    fn nnf_negated_implication() {
        // ~(p -> q) expands via sugar to ~(~p | q), then NNF gives p & ~q.
        let f = PropFormula::not(PropFormula::implies(p(), q()));
        assert_eq!(nnf(&f), PropFormula::and(p(), PropFormula::not(q())));
    }

    #[test]
    fn cnf_distributive_implication_clause() {
        // ~p | q as the rule q <- p.
        let f = PropFormula::or(PropFormula::not(p()), q());
        let cs = cnf_distributive(&f);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].head, BTreeSet::from([Atom::new("q")]));
        assert_eq!(cs[0].body, BTreeSet::from([Atom::new("p")]));
    }

    #[test]
    fn cnf_of_verum_is_empty() {
        assert!(cnf_distributive(&PropFormula::Verum).is_empty());
    }

    #[test]
    fn cnf_of_negated_atom_has_empty_head() {
        let cs = cnf_distributive(&PropFormula::not(p()));
        assert_eq!(cs.len(), 1);
        assert!(cs[0].head.is_empty());
        assert_eq!(cs[0].body, BTreeSet::from([Atom::new("p")]));
    }

    /// Brute-force:  clause-set models match formula models over the formula atoms.
    fn clause_set_equivalent(f: &PropFormula, clauses: &[ClauseRule]) -> bool {
        let uni = f.atom_set();
        let caps = Caps::default();
        for interp in all_interpretations(&uni) {
            let fv = evaluate(&interp, f).unwrap();
            let cv = clauses
                .iter()
                .all(|c| evaluate(&interp, &c.to_formula()).unwrap());
            if fv != cv {
                return false;
            }
        }
        let _ = caps;
        true
    }

    #[test]
    fn cnf_distributive_equivalence_samples() {
        let samples = [
            PropFormula::or(PropFormula::and(p(), q()), PropFormula::not(p())),
            PropFormula::implies(PropFormula::or(p(), q()), PropFormula::and(p(), q())),
            PropFormula::not(PropFormula::or(p(), PropFormula::not(q()))),
            PropFormula::and(PropFormula::Verum, PropFormula::or(p(), PropFormula::Falsum)),
        ];
        for f in &samples {
            assert!(clause_set_equivalent(f, &cnf_distributive(f)), "{f:?}");
        }
    }

    #[test]
    fn cnf_structural_projection_preserves_models() {
        let f = PropFormula::or(
            PropFormula::and(p(), q()),
            PropFormula::and(PropFormula::not(p()), PropFormula::atom("r")),
        );
        let mut ns = TranslationNamespace::new();
        for a in f.atoms_ordered() {
            ns.declare_base(&a).unwrap();
        }
        let out = cnf_structural(&f, &mut ns);
        let caps = Caps::default();

        // Project clause-set models to the original atoms and compare.
        let orig_universe = f.atom_set();
        let mut full_universe = orig_universe.clone();
        for c in &out.clauses {
            full_universe.extend(c.atoms().cloned());
        }
        let clause_formula =
            PropFormula::conj(out.clauses.iter().map(|c| c.to_formula()));
        let projected: BTreeSet<BTreeSet<Atom>> = models(&clause_formula, &full_universe, &caps)
            .unwrap()
            .into_iter()
            .map(|m| {
                m.true_atoms()
                    .intersection(&orig_universe)
                    .cloned()
                    .collect()
            })
            .collect();
        let direct: BTreeSet<BTreeSet<Atom>> = models(&f, &orig_universe, &caps)
            .unwrap()
            .into_iter()
            .map(|m| m.true_atoms().clone())
            .collect();
        assert_eq!(projected, direct);

        // Full biconditional definitions: each original model extends uniquely.
        let model_count = models(&clause_formula, &full_universe, &caps).unwrap().len();
        assert_eq!(model_count, direct.len());
    }

    #[test]
    fn rename_preserves_shape_and_is_injective() {
        let mut ns = TranslationNamespace::new();
        ns.declare_base(&Atom::new("p")).unwrap();
        ns.declare_base(&Atom::new("q")).unwrap();
        let f = PropFormula::and(p(), PropFormula::not(q()));
        let g = rename(&f, RenameTag::KWitness(0), &mut ns).unwrap();
        assert_eq!(f.node_count(), g.node_count());
        let renamed_atoms = g.atom_set();
        assert_eq!(renamed_atoms.len(), f.atom_set().len());
        assert!(renamed_atoms.is_disjoint(&f.atom_set()));
    }

    #[test]
    fn rename_constants_untouched() {
        let mut ns = TranslationNamespace::new();
        assert_eq!(
            rename(&PropFormula::Verum, RenameTag::Hat, &mut ns).unwrap(),
            PropFormula::Verum
        );
    }

    #[test]
    fn rename_hat_single_atom() {
        let mut ns = TranslationNamespace::new();
        ns.declare_base(&Atom::new("p")).unwrap();
        let g = rename(&p(), RenameTag::Hat, &mut ns).unwrap();
        assert_eq!(g, PropFormula::atom("h__p"));
    }

    #[test]
    fn rename_stacking_is_an_error() {
        let mut ns = TranslationNamespace::new();
        ns.declare_base(&Atom::new("p")).unwrap();
        let hatted = rename(&p(), RenameTag::Hat, &mut ns).unwrap();
        assert!(matches!(
            rename(&hatted, RenameTag::Hat, &mut ns),
            Err(Error::Namespace(_))
        ));
    }
}
