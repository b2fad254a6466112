//! Disjunctive logic programs with nested expressions: satisfaction, reduct,
//! brute-force answer-set enumeration, and normalization to plain
//! disjunctive rules.
//!
//! This is the reference semantics at desk scale. The enumeration here is
//! exhaustive over consistent literal sets and is capped; the scalable
//! enumerator for translated programs lives in [`crate::solve`].

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Caps, Error};
use crate::prop::{Atom, Literal};

/// Nested expression over classical literals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum NestedExpr {
    Top,
    Bot,
    Lit(Literal),
    Not(Box<NestedExpr>),
    /// Conjunction, written `,` in program text.
    And(Box<NestedExpr>, Box<NestedExpr>),
    /// Disjunction, written `;` in program text.
    Or(Box<NestedExpr>, Box<NestedExpr>),
}

impl NestedExpr {
    pub fn lit(l: Literal) -> Self {
        NestedExpr::Lit(l)
    }

    pub fn pos(atom: Atom) -> Self {
        NestedExpr::Lit(Literal::pos(atom))
    }

    pub fn neg(atom: Atom) -> Self {
        NestedExpr::Lit(Literal::neg(atom))
    }

    pub fn not(e: NestedExpr) -> Self {
        NestedExpr::Not(Box::new(e))
    }

    pub fn and(e: NestedExpr, f: NestedExpr) -> Self {
        NestedExpr::And(Box::new(e), Box::new(f))
    }

    pub fn or(e: NestedExpr, f: NestedExpr) -> Self {
        NestedExpr::Or(Box::new(e), Box::new(f))
    }

    /// Conjunction of a sequence; empty is `Top`.
    pub fn conj(items: impl IntoIterator<Item = NestedExpr>) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => NestedExpr::Top,
            Some(first) => it.fold(first, NestedExpr::and),
        }
    }

    /// Disjunction of a sequence; empty is `Bot`.
    pub fn disj(items: impl IntoIterator<Item = NestedExpr>) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => NestedExpr::Bot,
            Some(first) => it.fold(first, NestedExpr::or),
        }
    }

    /// Atoms in first-occurrence order.
    pub fn atoms_ordered(&self) -> Vec<Atom> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        fn walk(e: &NestedExpr, seen: &mut BTreeSet<Atom>, out: &mut Vec<Atom>) {
            match e {
                NestedExpr::Top | NestedExpr::Bot => {}
                NestedExpr::Lit(l) => {
                    if seen.insert(l.atom.clone()) {
                        out.push(l.atom.clone());
                    }
                }
                NestedExpr::Not(f) => walk(f, seen, out),
                NestedExpr::And(f, g) | NestedExpr::Or(f, g) => {
                    walk(f, seen, out);
                    walk(g, seen, out);
                }
            }
        }
        walk(self, &mut seen, &mut out);
        out
    }

    pub fn contains_not(&self) -> bool {
        match self {
            NestedExpr::Top | NestedExpr::Bot | NestedExpr::Lit(_) => false,
            NestedExpr::Not(_) => true,
            NestedExpr::And(f, g) | NestedExpr::Or(f, g) => f.contains_not() || g.contains_not(),
        }
    }

    /// Fold `Top`/`Bot` through conjunction and disjunction. `Not` nodes are
    /// opaque except directly over constants.
    pub fn fold_constants(&self) -> NestedExpr {
        match self {
            NestedExpr::Top | NestedExpr::Bot | NestedExpr::Lit(_) => self.clone(),
            NestedExpr::Not(f) => match f.fold_constants() {
                NestedExpr::Top => NestedExpr::Bot,
                NestedExpr::Bot => NestedExpr::Top,
                other => NestedExpr::not(other),
            },
            NestedExpr::And(f, g) => match (f.fold_constants(), g.fold_constants()) {
                (NestedExpr::Bot, _) | (_, NestedExpr::Bot) => NestedExpr::Bot,
                (NestedExpr::Top, other) | (other, NestedExpr::Top) => other,
                (a, b) => NestedExpr::and(a, b),
            },
            NestedExpr::Or(f, g) => match (f.fold_constants(), g.fold_constants()) {
                (NestedExpr::Top, _) | (_, NestedExpr::Top) => NestedExpr::Top,
                (NestedExpr::Bot, other) | (other, NestedExpr::Bot) => other,
                (a, b) => NestedExpr::or(a, b),
            },
        }
    }
}

/// A rule `head <- body` over nested expressions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rule {
    pub head: NestedExpr,
    pub body: NestedExpr,
}

impl Rule {
    pub fn new(head: NestedExpr, body: NestedExpr) -> Self {
        Rule { head, body }
    }

    pub fn fact(head: NestedExpr) -> Self {
        Rule {
            head,
            body: NestedExpr::Top,
        }
    }

    pub fn constraint(body: NestedExpr) -> Self {
        Rule {
            head: NestedExpr::Bot,
            body,
        }
    }
}

/// A finite set of rules with a declared atom universe. Literals over atoms
/// outside the universe are not considered during enumeration, so the
/// universe should cover everything the rules mention (it is extended
/// automatically on construction).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    pub rules: Vec<Rule>,
    pub universe: BTreeSet<Atom>,
}

impl Program {
    pub fn new(rules: Vec<Rule>, declared: BTreeSet<Atom>) -> Self {
        let mut universe = declared;
        for r in &rules {
            universe.extend(r.head.atoms_ordered());
            universe.extend(r.body.atoms_ordered());
        }
        Program { rules, universe }
    }
}

/// A consistent set of literals.
pub type LiteralSet = BTreeSet<Literal>;

pub fn is_consistent(s: &LiteralSet) -> bool {
    s.iter()
        .all(|l| l.positive || !s.contains(&l.complement()))
}

/// Satisfaction of a nested expression by a literal set.
pub fn satisfies(s: &LiteralSet, e: &NestedExpr) -> bool {
    match e {
        NestedExpr::Top => true,
        NestedExpr::Bot => false,
        NestedExpr::Lit(l) => s.contains(l),
        NestedExpr::Not(f) => !satisfies(s, f),
        NestedExpr::And(f, g) => satisfies(s, f) && satisfies(s, g),
        NestedExpr::Or(f, g) => satisfies(s, f) || satisfies(s, g),
    }
}

/// A rule is satisfied when the head holds whenever the body does.
pub fn satisfies_rule(s: &LiteralSet, r: &Rule) -> bool {
    !satisfies(s, &r.body) || satisfies(s, &r.head)
}

pub fn satisfies_program(s: &LiteralSet, p: &Program) -> bool {
    p.rules.iter().all(|r| satisfies_rule(s, r))
}

/// The reduct: every maximal subexpression `not F` is replaced by `Bot` if
/// `S` satisfies `F` and by `Top` otherwise. The result contains no `not`.
pub fn reduct_expr(e: &NestedExpr, s: &LiteralSet) -> NestedExpr {
    match e {
        NestedExpr::Top | NestedExpr::Bot | NestedExpr::Lit(_) => e.clone(),
        NestedExpr::Not(f) => {
            if satisfies(s, f) {
                NestedExpr::Bot
            } else {
                NestedExpr::Top
            }
        }
        NestedExpr::And(f, g) => NestedExpr::and(reduct_expr(f, s), reduct_expr(g, s)),
        NestedExpr::Or(f, g) => NestedExpr::or(reduct_expr(f, s), reduct_expr(g, s)),
    }
}

pub fn reduct(p: &Program, s: &LiteralSet) -> Program {
    Program {
        rules: p
            .rules
            .iter()
            .map(|r| Rule {
                head: reduct_expr(&r.head, s),
                body: reduct_expr(&r.body, s),
            })
            .collect(),
        universe: p.universe.clone(),
    }
}

fn relevant_atoms(p: &Program) -> Vec<Atom> {
    p.universe.iter().cloned().collect()
}

fn check_literal_cap(n_atoms: usize, caps: &Caps) -> Result<(), Error> {
    if 2 * n_atoms > caps.literals {
        Err(Error::EnumerationLimit {
            needed: 2 * n_atoms,
            cap: caps.literals,
        })
    } else {
        Ok(())
    }
}

/// All consistent literal sets over the given atoms, in canonical order
/// (base-3 counter; per atom: absent, positive, negative).
fn consistent_sets(atoms: &[Atom]) -> impl Iterator<Item = LiteralSet> + '_ {
    let n = atoms.len();
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut s = LiteralSet::new();
        for atom in atoms {
            match code % 3 {
                0 => {}
                1 => {
                    s.insert(Literal::pos(atom.clone()));
                }
                _ => {
                    s.insert(Literal::neg(atom.clone()));
                }
            }
            code /= 3;
        }
        s
    })
}

/// Does some proper subset of `s` satisfy the (not-free) program `p`?
fn proper_subset_satisfies(p: &Program, s: &LiteralSet) -> bool {
    let lits: Vec<&Literal> = s.iter().collect();
    let n = lits.len();
    // Drop-mask 0 is s itself; every other mask is a proper subset.
    for drop_mask in 1u64..(1u64 << n) {
        let sub: LiteralSet = lits
            .iter()
            .enumerate()
            .filter(|(i, _)| drop_mask & (1 << i) == 0)
            .map(|(_, l)| (*l).clone())
            .collect();
        if satisfies_program(&sub, p) {
            return true;
        }
    }
    false
}

/// Is `s` an answer set of `p`, i.e. is `s` in the set of answer sets of the
/// reduct of `p` by `s`? Equivalent to: `s` is consistent, satisfies the
/// reduct, and no proper subset of `s` satisfies it.
pub fn is_answer_set(p: &Program, s: &LiteralSet) -> bool {
    if !is_consistent(s) {
        return false;
    }
    let red = reduct(p, s);
    satisfies_program(s, &red) && !proper_subset_satisfies(&red, s)
}

/// All answer sets of `p`, by exhaustive enumeration of consistent literal
/// sets over the atoms of `p` plus the declared universe. Deterministic
/// canonical output order.
pub fn answer_sets(p: &Program, caps: &Caps) -> Result<Vec<LiteralSet>, Error> {
    let atoms = relevant_atoms(p);
    check_literal_cap(atoms.len(), caps)?;
    let mut out: Vec<LiteralSet> = consistent_sets(&atoms)
        .filter(|s| is_answer_set(p, s))
        .collect();
    out.sort();
    Ok(out)
}

/// Minimal consistent literal sets satisfying a `not`-free program:
/// enumerate satisfying sets in increasing cardinality and keep those with
/// no kept subset. These are the answer sets of a `not`-free program.
pub fn minimal_models(p: &Program, caps: &Caps) -> Result<Vec<LiteralSet>, Error> {
    debug_assert!(p.rules.iter().all(|r| !r.head.contains_not() && !r.body.contains_not()));
    let atoms = relevant_atoms(p);
    check_literal_cap(atoms.len(), caps)?;
    let mut satisfying: Vec<LiteralSet> = consistent_sets(&atoms)
        .filter(|s| satisfies_program(s, p))
        .collect();
    satisfying.sort_by_key(|s| s.len());
    let mut kept: Vec<LiteralSet> = Vec::new();
    for s in satisfying {
        if !kept.iter().any(|t| t.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    Ok(kept)
}

/// The answer sets of the reduct of `p` by `s` (the Gamma operator).
pub fn gamma(p: &Program, s: &LiteralSet, caps: &Caps) -> Result<Vec<LiteralSet>, Error> {
    minimal_models(&reduct(p, s), caps)
}

/// One element of a normalized rule body.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum BodyElem {
    Lit(Literal),
    Not(Literal),
    NotNot(Literal),
}

/// A rule in the plain disjunctive shape: a disjunction of literals in the
/// head, a conjunction of `l`, `not l`, `not not l` in the body.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalRule {
    pub head: Vec<Literal>,
    pub body: Vec<BodyElem>,
}

impl NormalRule {
    pub fn to_rule(&self) -> Rule {
        let head = NestedExpr::disj(self.head.iter().cloned().map(NestedExpr::lit));
        let body = NestedExpr::conj(self.body.iter().map(|e| match e {
            BodyElem::Lit(l) => NestedExpr::lit(l.clone()),
            BodyElem::Not(l) => NestedExpr::not(NestedExpr::lit(l.clone())),
            BodyElem::NotNot(l) => {
                NestedExpr::not(NestedExpr::not(NestedExpr::lit(l.clone())))
            }
        }));
        Rule { head, body }
    }
}

/// View a rule as a normal disjunctive rule, if it already has that shape.
pub fn normal_rule_view(r: &Rule) -> Option<NormalRule> {
    fn head_lits(e: &NestedExpr, out: &mut Vec<Literal>) -> bool {
        match e {
            NestedExpr::Bot => true,
            NestedExpr::Lit(l) => {
                out.push(l.clone());
                true
            }
            NestedExpr::Or(f, g) => head_lits(f, out) && head_lits(g, out),
            _ => false,
        }
    }
    fn body_elems(e: &NestedExpr, out: &mut Vec<BodyElem>) -> bool {
        match e {
            NestedExpr::Top => true,
            NestedExpr::Lit(l) => {
                out.push(BodyElem::Lit(l.clone()));
                true
            }
            NestedExpr::Not(f) => match &**f {
                NestedExpr::Lit(l) => {
                    out.push(BodyElem::Not(l.clone()));
                    true
                }
                NestedExpr::Not(g) => match &**g {
                    NestedExpr::Lit(l) => {
                        out.push(BodyElem::NotNot(l.clone()));
                        true
                    }
                    _ => false,
                },
                _ => false,
            },
            NestedExpr::And(f, g) => body_elems(f, out) && body_elems(g, out),
            _ => false,
        }
    }
    let mut head = Vec::new();
    let mut body = Vec::new();
    if head_lits(&r.head, &mut head) && body_elems(&r.body, &mut body) {
        Some(NormalRule { head, body })
    } else {
        None
    }
}

/// Leaves of a pushed-down expression: literal, `not l`, `not not l`, or a
/// constant.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Leaf {
    Top,
    Bot,
    Lit(Literal),
    Not(Literal),
    NotNot(Literal),
}

/// Push `not` down to literals using the strongly-equivalent rewritings
/// `not (F,G) = (not F; not G)`, `not (F;G) = (not F, not G)`,
/// `not not not F = not F`, `not Top = Bot`, `not Bot = Top`.
fn push_not(e: &NestedExpr, depth: u8) -> PushedExpr {
    // depth counts enclosing `not`s modulo the collapse 3 -> 1.
    match e {
        NestedExpr::Top => PushedExpr::Leaf(match depth {
            0 => Leaf::Top,
            _ => {
                if depth % 2 == 1 {
                    Leaf::Bot
                } else {
                    Leaf::Top
                }
            }
        }),
        NestedExpr::Bot => PushedExpr::Leaf(match depth {
            0 => Leaf::Bot,
            _ => {
                if depth % 2 == 1 {
                    Leaf::Top
                } else {
                    Leaf::Bot
                }
            }
        }),
        NestedExpr::Lit(l) => PushedExpr::Leaf(match depth {
            0 => Leaf::Lit(l.clone()),
            1 => Leaf::Not(l.clone()),
            _ => Leaf::NotNot(l.clone()),
        }),
        NestedExpr::Not(f) => push_not(f, if depth == 2 { 1 } else { depth + 1 }),
        NestedExpr::And(f, g) => {
            let a = push_not(f, depth);
            let b = push_not(g, depth);
            if depth % 2 == 0 {
                PushedExpr::and(a, b)
            } else {
                PushedExpr::or(a, b)
            }
        }
        NestedExpr::Or(f, g) => {
            let a = push_not(f, depth);
            let b = push_not(g, depth);
            if depth % 2 == 0 {
                PushedExpr::or(a, b)
            } else {
                PushedExpr::and(a, b)
            }
        }
    }
}

enum PushedExpr {
    Leaf(Leaf),
    And(Box<PushedExpr>, Box<PushedExpr>),
    Or(Box<PushedExpr>, Box<PushedExpr>),
}

impl PushedExpr {
    fn and(a: PushedExpr, b: PushedExpr) -> Self {
        PushedExpr::And(Box::new(a), Box::new(b))
    }

    fn or(a: PushedExpr, b: PushedExpr) -> Self {
        PushedExpr::Or(Box::new(a), Box::new(b))
    }

    /// Disjunctive normal form: a list of conjunctions of leaves.
    fn dnf(&self) -> Vec<Vec<Leaf>> {
        match self {
            PushedExpr::Leaf(l) => alloc::vec![alloc::vec![l.clone()]],
            PushedExpr::Or(a, b) => {
                let mut out = a.dnf();
                out.extend(b.dnf());
                out
            }
            PushedExpr::And(a, b) => {
                let left = a.dnf();
                let right = b.dnf();
                let mut out = Vec::new();
                for l in &left {
                    for r in &right {
                        let mut c = l.clone();
                        c.extend(r.iter().cloned());
                        out.push(c);
                    }
                }
                out
            }
        }
    }

    /// Conjunctive normal form: a list of disjunctions of leaves.
    fn cnf(&self) -> Vec<Vec<Leaf>> {
        match self {
            PushedExpr::Leaf(l) => alloc::vec![alloc::vec![l.clone()]],
            PushedExpr::And(a, b) => {
                let mut out = a.cnf();
                out.extend(b.cnf());
                out
            }
            PushedExpr::Or(a, b) => {
                let left = a.cnf();
                let right = b.cnf();
                let mut out = Vec::new();
                for l in &left {
                    for r in &right {
                        let mut c = l.clone();
                        c.extend(r.iter().cloned());
                        out.push(c);
                    }
                }
                out
            }
        }
    }
}

/// Normalize a program to plain disjunctive rules: literal-disjunction
/// heads; bodies of `l`, `not l`, `not not l`. Answer sets are preserved
/// (the rewritings used are strongly equivalent). Worst-case exponential
/// blowup from distribution is accepted at desk scale.
pub fn normalize(p: &Program) -> Program {
    let mut rules = Vec::new();
    for rule in &p.rules {
        // Body to DNF: one rule per disjunct.
        let body_dnf = push_not(&rule.body, 0).dnf();
        // Head to CNF: one rule per conjunct; `not` leaves move to the body
        // (head `not l` becomes body `not not l` and vice versa).
        let head_cnf = push_not(&rule.head, 0).cnf();
        for body_conj in &body_dnf {
            // A false conjunct never fires; a Top leaf is dropped.
            if body_conj.iter().any(|l| matches!(l, Leaf::Bot)) {
                continue;
            }
            let base_body: Vec<BodyElem> = body_conj
                .iter()
                .filter(|l| !matches!(l, Leaf::Top))
                .map(|l| match l {
                    Leaf::Lit(x) => BodyElem::Lit(x.clone()),
                    Leaf::Not(x) => BodyElem::Not(x.clone()),
                    Leaf::NotNot(x) => BodyElem::NotNot(x.clone()),
                    Leaf::Top | Leaf::Bot => unreachable!(),
                })
                .collect();
            'conjunct: for head_disj in &head_cnf {
                // A tautological head disjunct makes the rule vacuous.
                if head_disj.iter().any(|l| matches!(l, Leaf::Top)) {
                    continue 'conjunct;
                }
                let mut head = Vec::new();
                let mut body = base_body.clone();
                for leaf in head_disj {
                    match leaf {
                        Leaf::Bot => {}
                        Leaf::Lit(x) => head.push(x.clone()),
                        // Head `not F` is the same as body `not not F`;
                        // head `not not F` the same as body `not F`.
                        Leaf::Not(x) => body.push(BodyElem::NotNot(x.clone())),
                        Leaf::NotNot(x) => body.push(BodyElem::Not(x.clone())),
                        Leaf::Top => unreachable!(),
                    }
                }
                head.sort();
                head.dedup();
                body.sort();
                body.dedup();
                rules.push(NormalRule { head, body }.to_rule());
            }
        }
    }
    Program::new(rules, p.universe.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(name: &str) -> Atom {
        Atom::new(name)
    }

    fn lit(name: &str) -> Literal {
        Literal::pos(a(name))
    }

    fn set(lits: &[Literal]) -> LiteralSet {
        lits.iter().cloned().collect()
    }

    #[test]
    fn satisfies_disjunction() {
        let s = set(&[lit("p")]);
        let e = NestedExpr::or(NestedExpr::pos(a("p")), NestedExpr::pos(a("q")));
        assert!(satisfies(&s, &e));
    }

    #[test]
    fn satisfies_not_on_empty_set() {
        let s = LiteralSet::new();
        assert!(satisfies(&s, &NestedExpr::not(NestedExpr::pos(a("p")))));
    }

    #[test]
    fn rule_with_unsatisfied_body_holds() {
        let s = set(&[lit("p")]);
        let r = Rule::new(NestedExpr::pos(a("p")), NestedExpr::pos(a("q")));
        assert!(satisfies_rule(&s, &r));
    }

    #[test]
    fn reduct_replaces_not_by_constant() {
        let p = Program::new(
            alloc::vec![Rule::new(
                NestedExpr::pos(a("p")),
                NestedExpr::not(NestedExpr::pos(a("q"))),
            )],
            BTreeSet::new(),
        );
        let r1 = reduct(&p, &set(&[lit("p")]));
        assert_eq!(r1.rules[0].body, NestedExpr::Top);
        let r2 = reduct(&p, &set(&[lit("q")]));
        assert_eq!(r2.rules[0].body, NestedExpr::Bot);
    }

    #[test]
    fn reduct_takes_maximal_not_subexpression() {
        // p <- not not p with S = {p}: the maximal subexpression is
        // not (not p); S does not satisfy not p, so it becomes Top.
        let p = Program::new(
            alloc::vec![Rule::new(
                NestedExpr::pos(a("p")),
                NestedExpr::not(NestedExpr::not(NestedExpr::pos(a("p")))),
            )],
            BTreeSet::new(),
        );
        let r = reduct(&p, &set(&[lit("p")]));
        assert_eq!(r.rules[0].body, NestedExpr::Top);
    }

    #[test]
    fn answer_sets_even_loop() {
        // {p <- not q, q <- not p} has answer sets {p} and {q}.
        let p = Program::new(
            alloc::vec![
                Rule::new(NestedExpr::pos(a("p")), NestedExpr::not(NestedExpr::pos(a("q")))),
                Rule::new(NestedExpr::pos(a("q")), NestedExpr::not(NestedExpr::pos(a("p")))),
            ],
            BTreeSet::new(),
        );
        let sets = answer_sets(&p, &Caps::default()).unwrap();
        assert_eq!(sets, alloc::vec![set(&[lit("p")]), set(&[lit("q")])]);
    }

    #[test]
    fn answer_sets_disjunctive_fact() {
        // {p; q <- Top}: minimality excludes {p, q}.
        let p = Program::new(
            alloc::vec![Rule::fact(NestedExpr::or(
                NestedExpr::pos(a("p")),
                NestedExpr::pos(a("q")),
            ))],
            BTreeSet::new(),
        );
        let sets = answer_sets(&p, &Caps::default()).unwrap();
        assert_eq!(sets, alloc::vec![set(&[lit("p")]), set(&[lit("q")])]);
    }

    #[test]
    fn answer_sets_self_support() {
        // {p <- p} has the single answer set {}.
        let p = Program::new(
            alloc::vec![Rule::new(NestedExpr::pos(a("p")), NestedExpr::pos(a("p")))],
            BTreeSet::new(),
        );
        let sets = answer_sets(&p, &Caps::default()).unwrap();
        assert_eq!(sets, alloc::vec![LiteralSet::new()]);
    }

    #[test]
    fn answer_set_membership_matches_gamma() {
        let caps = Caps::default();
        let p = Program::new(
            alloc::vec![
                Rule::new(NestedExpr::pos(a("p")), NestedExpr::not(NestedExpr::pos(a("q")))),
                Rule::fact(NestedExpr::or(NestedExpr::pos(a("q")), NestedExpr::pos(a("r")))),
            ],
            BTreeSet::new(),
        );
        for s in consistent_sets(&relevant_atoms(&p)) {
            let by_def = gamma(&p, &s, &caps).unwrap().contains(&s);
            assert_eq!(by_def, is_answer_set(&p, &s), "set {s:?}");
        }
    }

    #[test]
    fn answer_sets_cap_exceeded() {
        let universe: BTreeSet<Atom> = (0..15).map(|i| a(&alloc::format!("x{i}"))).collect();
        let p = Program::new(Vec::new(), universe);
        assert!(matches!(
            answer_sets(&p, &Caps::default()),
            Err(Error::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn normalize_splits_body_disjunction() {
        let p = Program::new(
            alloc::vec![Rule::new(
                NestedExpr::pos(a("p")),
                NestedExpr::or(NestedExpr::pos(a("q")), NestedExpr::pos(a("r"))),
            )],
            BTreeSet::new(),
        );
        let n = normalize(&p);
        assert_eq!(n.rules.len(), 2);
        assert!(n.rules.iter().all(|r| normal_rule_view(r).is_some()));
    }

    #[test]
    fn normalize_splits_head_conjunction() {
        let p = Program::new(
            alloc::vec![Rule::new(
                NestedExpr::and(NestedExpr::pos(a("p")), NestedExpr::pos(a("q"))),
                NestedExpr::pos(a("r")),
            )],
            BTreeSet::new(),
        );
        let n = normalize(&p);
        assert_eq!(n.rules.len(), 2);
    }

    #[test]
    fn normalize_pushes_negation_inward() {
        // {Bot <- not (p; q)} becomes {Bot <- not p, not q}.
        let p = Program::new(
            alloc::vec![Rule::constraint(NestedExpr::not(NestedExpr::or(
                NestedExpr::pos(a("p")),
                NestedExpr::pos(a("q")),
            )))],
            BTreeSet::new(),
        );
        let n = normalize(&p);
        assert_eq!(n.rules.len(), 1);
        let view = normal_rule_view(&n.rules[0]).unwrap();
        assert!(view.head.is_empty());
        assert_eq!(
            view.body,
            alloc::vec![BodyElem::Not(lit("p")), BodyElem::Not(lit("q"))]
        );
    }

    #[test]
    fn normalize_preserves_answer_sets_samples() {
        let caps = Caps::default();
        let samples = alloc::vec![
            // Head not: {p; not q <- Top}.
            Program::new(
                alloc::vec![Rule::fact(NestedExpr::or(
                    NestedExpr::pos(a("p")),
                    NestedExpr::not(NestedExpr::pos(a("q"))),
                ))],
                BTreeSet::new(),
            ),
            // Nested double negation in body.
            Program::new(
                alloc::vec![Rule::new(
                    NestedExpr::pos(a("p")),
                    NestedExpr::not(NestedExpr::not(NestedExpr::pos(a("p")))),
                )],
                BTreeSet::new(),
            ),
            // Negative literal and conjunction in head.
            Program::new(
                alloc::vec![
                    Rule::new(
                        NestedExpr::and(NestedExpr::pos(a("p")), NestedExpr::neg(a("q"))),
                        NestedExpr::not(NestedExpr::pos(a("r"))),
                    ),
                    Rule::fact(NestedExpr::or(NestedExpr::pos(a("r")), NestedExpr::pos(a("p")))),
                ],
                BTreeSet::new(),
            ),
        ];
        for p in &samples {
            let direct = answer_sets(p, &caps).unwrap();
            let via = answer_sets(&normalize(p), &caps).unwrap();
            assert_eq!(direct, via, "program {p:?}");
        }
    }
}
