//! Propositional language over fluent atoms.
//!
//! Fluents are named propositional atoms whose truth value may vary over
//! time; this module knows nothing about time and provides the classical
//! layer the rest of the crate builds on: formula trees, two-valued
//! interpretations, entailment by exhaustive model enumeration, and the
//! four-valued belief status of a formula against a set of premises.
//!
//! Enumeration is exact and intended for desk scale (vocabularies of at
//! most a couple dozen atoms), which is the regime timed knowledge bases
//! live in: a cut at an instant only ever mentions a handful of fluents.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use core::fmt;

/// A propositional fluent: a named atom.
///
/// Names are compared by exact string equality and must be non-empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

impl Atom {
    /// Creates an atom. Panics on an empty name.
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(!name.is_empty(), "atom name must be non-empty");
        Atom(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A propositional formula over fluent atoms.
///
/// Implication is not a connective of the tree: [`Formula::implies`]
/// desugars `a -> b` to `!a | b` at construction, so the semantics only
/// ever deals with negation, conjunction and disjunction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Top,
    Bottom,
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(Atom::new(name))
    }

    pub fn not(phi: Formula) -> Self {
        Formula::Not(Box::new(phi))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    /// `lhs -> rhs`, desugared to `!lhs | rhs`.
    pub fn implies(lhs: Formula, rhs: Formula) -> Self {
        Formula::or(Formula::not(lhs), rhs)
    }

    /// True exactly when the tree is a single atom leaf.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// Collects the atoms occurring in the formula into `out`.
    pub fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(inner) => inner.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// The set of atoms occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Not(..) => 3,
            Formula::Top | Formula::Bottom | Formula::Atom(_) => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        if prec < min {
            f.write_str("(")?;
        }
        match self {
            Formula::Top => f.write_str("true")?,
            Formula::Bottom => f.write_str("false")?,
            Formula::Atom(a) => write!(f, "{a}")?,
            Formula::Not(inner) => {
                f.write_str("!")?;
                inner.fmt_prec(f, 3)?;
            }
            Formula::And(l, r) => {
                l.fmt_prec(f, 2)?;
                f.write_str(" & ")?;
                // strict on the right so `a & (b & c)` round-trips
                r.fmt_prec(f, 3)?;
            }
            Formula::Or(l, r) => {
                l.fmt_prec(f, 1)?;
                f.write_str(" | ")?;
                r.fmt_prec(f, 2)?;
            }
        }
        if prec < min {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// A set of formulas, used both as premise sets and as cuts of timed bases.
pub type FormulaSet = BTreeSet<Formula>;

/// The set of atoms occurring in any of the given formulas.
pub fn vocabulary<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> BTreeSet<Atom> {
    let mut out = BTreeSet::new();
    for phi in formulas {
        phi.collect_atoms(&mut out);
    }
    out
}

/// Raised when a formula mentions an atom outside an interpretation's
/// vocabulary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VocabularyError {
    pub atom: Atom,
}

impl fmt::Display for VocabularyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "atom `{}` is outside the interpretation vocabulary", self.atom)
    }
}

impl core::error::Error for VocabularyError {}

/// A total truth assignment over a finite atom vocabulary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpretation {
    assignment: BTreeMap<Atom, bool>,
}

impl Interpretation {
    pub fn new(assignment: BTreeMap<Atom, bool>) -> Self {
        Interpretation { assignment }
    }

    /// Builds an interpretation from `(name, value)` pairs.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, bool)>) -> Self {
        Interpretation {
            assignment: pairs
                .into_iter()
                .map(|(name, value)| (Atom::new(name.to_owned()), value))
                .collect(),
        }
    }

    pub fn value(&self, atom: &Atom) -> Option<bool> {
        self.assignment.get(atom).copied()
    }

    pub fn vocabulary(&self) -> impl Iterator<Item = &Atom> {
        self.assignment.keys()
    }

    /// All `2^n` interpretations over the given vocabulary, in a fixed order.
    ///
    /// Panics above 24 atoms; enumeration is meant for desk-scale
    /// vocabularies.
    pub fn all(vocab: &BTreeSet<Atom>) -> impl Iterator<Item = Interpretation> + '_ {
        let n = vocab.len();
        assert!(n <= 24, "vocabulary too large for exhaustive enumeration ({n} atoms)");
        (0u32..1u32 << n).map(move |mask| {
            let assignment = vocab
                .iter()
                .enumerate()
                .map(|(i, atom)| (atom.clone(), mask & (1 << i) != 0))
                .collect();
            Interpretation { assignment }
        })
    }
}

/// Classical truth value of `phi` under `omega`.
///
/// Errors when `phi` mentions an atom outside the interpretation's
/// vocabulary.
pub fn evaluate(omega: &Interpretation, phi: &Formula) -> Result<bool, VocabularyError> {
    Ok(match phi {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(a) => omega
            .value(a)
            .ok_or_else(|| VocabularyError { atom: a.clone() })?,
        Formula::Not(inner) => !evaluate(omega, inner)?,
        Formula::And(l, r) => evaluate(omega, l)? && evaluate(omega, r)?,
        Formula::Or(l, r) => evaluate(omega, l)? || evaluate(omega, r)?,
    })
}

/// Classical entailment by exhaustive model enumeration over the joint
/// vocabulary of `gamma` and `phi`.
///
/// An unsatisfiable `gamma` entails everything. Atoms outside the joint
/// vocabulary cannot influence the result.
pub fn entails(gamma: &FormulaSet, phi: &Formula) -> bool {
    let mut vocab = vocabulary(gamma.iter());
    phi.collect_atoms(&mut vocab);
    let counterexample = Interpretation::all(&vocab).any(|omega| {
        let premises_hold = gamma
            .iter()
            .all(|g| evaluate(&omega, g).expect("joint vocabulary covers gamma"));
        premises_hold && !evaluate(&omega, phi).expect("joint vocabulary covers phi")
    });
    !counterexample
}

/// Whether some interpretation satisfies every formula of `gamma`.
pub fn satisfiable(gamma: &FormulaSet) -> bool {
    !entails(gamma, &Formula::Bottom)
}

/// Whether `phi` holds under every interpretation.
pub fn tautology(phi: &Formula) -> bool {
    entails(&FormulaSet::new(), phi)
}

/// Whether `phi` holds under no interpretation.
pub fn contradiction(phi: &Formula) -> bool {
    entails(&FormulaSet::new(), &Formula::not(phi.clone()))
}

/// Whether `phi` is neither a tautology nor a contradiction.
pub fn contingent(phi: &Formula) -> bool {
    !tautology(phi) && !contradiction(phi)
}

/// Four-valued belief status of a formula against a premise set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BeliefStatus {
    True,
    False,
    Unknown,
    Inconsistent,
}

impl fmt::Display for BeliefStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BeliefStatus::True => "True",
            BeliefStatus::False => "False",
            BeliefStatus::Unknown => "Unknown",
            BeliefStatus::Inconsistent => "Inconsistent",
        })
    }
}

/// Belief status of `phi` given `gamma`: `Inconsistent` when `gamma` is
/// unsatisfiable, else `True`/`False` when `gamma` decides `phi`, else
/// `Unknown`.
pub fn belief_status(gamma: &FormulaSet, phi: &Formula) -> BeliefStatus {
    if !satisfiable(gamma) {
        BeliefStatus::Inconsistent
    } else if entails(gamma, phi) {
        BeliefStatus::True
    } else if entails(gamma, &Formula::not(phi.clone())) {
        BeliefStatus::False
    } else {
        BeliefStatus::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn a() -> Formula {
        Formula::atom("A")
    }

    fn b() -> Formula {
        Formula::atom("B")
    }

    fn set(formulas: impl IntoIterator<Item = Formula>) -> FormulaSet {
        formulas.into_iter().collect()
    }

    #[test]
    fn vocabulary_collects_atoms_without_duplicates() {
        assert!(vocabulary([].iter()).is_empty());
        let phi = Formula::and(a(), Formula::not(b()));
        assert_eq!(
            vocabulary([phi].iter()),
            BTreeSet::from([Atom::new("A"), Atom::new("B")])
        );
        let pair = [Formula::or(a(), b()), Formula::or(Formula::not(a()), Formula::not(b()))];
        assert_eq!(vocabulary(pair.iter()).len(), 2);
    }

    #[test]
    fn evaluate_on_examples() {
        let w = Interpretation::from_pairs([("A", true)]);
        assert_eq!(evaluate(&w, &a()), Ok(true));

        let w = Interpretation::from_pairs([("A", true), ("B", true)]);
        let phi = Formula::or(Formula::not(a()), Formula::not(b()));
        assert_eq!(evaluate(&w, &phi), Ok(false));

        let w = Interpretation::from_pairs([("A", false)]);
        assert_eq!(evaluate(&w, &Formula::Bottom), Ok(false));
    }

    #[test]
    fn evaluate_rejects_unknown_atom() {
        let w = Interpretation::from_pairs([("A", true)]);
        assert_eq!(
            evaluate(&w, &b()),
            Err(VocabularyError { atom: Atom::new("B") })
        );
    }

    #[test]
    fn entails_on_examples() {
        assert!(entails(&set([a()]), &a()));
        let gamma = set([a(), Formula::or(Formula::not(a()), Formula::not(b()))]);
        assert!(entails(&gamma, &Formula::not(b())));
        assert!(!entails(&set([Formula::or(a(), b())]), &a()));
    }

    #[test]
    fn unsatisfiable_premises_entail_everything() {
        let gamma = set([a(), Formula::not(a())]);
        assert!(entails(&gamma, &b()));
        assert!(entails(&gamma, &Formula::Bottom));
        assert!(!satisfiable(&gamma));
    }

    #[test]
    fn belief_status_on_examples() {
        assert_eq!(belief_status(&set([Formula::or(a(), b())]), &a()), BeliefStatus::Unknown);
        assert_eq!(
            belief_status(&set([a(), Formula::not(a())]), &b()),
            BeliefStatus::Inconsistent
        );
        let gamma = set([Formula::or(Formula::not(a()), Formula::not(b())), b()]);
        assert_eq!(belief_status(&gamma, &a()), BeliefStatus::False);
    }

    #[test]
    fn implication_desugars_to_disjunction() {
        let imp = Formula::implies(a(), b());
        assert_eq!(imp, Formula::or(Formula::not(a()), b()));
    }

    #[test]
    fn contingency_classification() {
        assert!(tautology(&Formula::or(a(), Formula::not(a()))));
        assert!(contradiction(&Formula::and(a(), Formula::not(a()))));
        assert!(contingent(&a()));
        assert!(!contingent(&Formula::Top));
    }

    #[test]
    fn display_round_trip_shapes() {
        let phi = Formula::and(a(), Formula::or(b(), Formula::not(a())));
        assert_eq!(format!("{phi}"), "A & (B | !A)");
        let psi = Formula::or(Formula::and(a(), b()), Formula::not(Formula::or(a(), b())));
        assert_eq!(format!("{psi}"), "A & B | !(A | B)");
        let nested = Formula::and(a(), Formula::and(b(), a()));
        assert_eq!(format!("{nested}"), "A & (B & A)");
    }

    #[test]
    fn interpretation_enumeration_is_exhaustive() {
        let vocab = BTreeSet::from([Atom::new("A"), Atom::new("B")]);
        let all: vec::Vec<_> = Interpretation::all(&vocab).collect();
        assert_eq!(all.len(), 4);
        let truths: BTreeSet<_> = all
            .iter()
            .map(|w| (w.value(&Atom::new("A")).unwrap(), w.value(&Atom::new("B")).unwrap()))
            .collect();
        assert_eq!(truths.len(), 4);
    }
}
