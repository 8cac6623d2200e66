//! Possibilistic knowledge bases and their semantics.
//!
//! A possibilistic knowledge base is a finite set of necessity-valued
//! formulas `(φ, α)` constraining `N(φ) ≥ α`. Its semantics is the
//! *least specific* possibility distribution over interpretations that
//! satisfies every constraint:
//!
//! ```text
//! π*(ω) = min { 1 − α  |  (φ, α) in the base, ω falsifies φ },   min ∅ = 1
//! ```
//!
//! From `π*` the necessity and possibility measures, the inconsistency
//! degree `Incons = 1 − sup π*`, and the nonmonotonic inference relation
//! (`ψ` is accepted iff `N(ψ) > Incons`) follow by direct enumeration of
//! the finite vocabulary. Degrees are exact rationals: acceptance is a
//! strict comparison, and equality of degrees must mean rejection, never a
//! rounding accident.

use alloc::collections::{BTreeMap, BTreeSet};
use core::fmt;
use core::ops::Mul;

use num_traits::{One, Zero};

use crate::logic::{evaluate, Atom, Formula, Interpretation, VocabularyError};
use crate::Rational;

/// An exact certainty degree in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Rational);

/// Raised when a rational outside `[0, 1]` is used as a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOutOfRange(pub Rational);

impl fmt::Display for DegreeOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {} lies outside [0, 1]", self.0)
    }
}

impl core::error::Error for DegreeOutOfRange {}

impl Degree {
    pub fn new(value: Rational) -> Result<Self, DegreeOutOfRange> {
        if value < Rational::zero() || value > Rational::one() {
            Err(DegreeOutOfRange(value))
        } else {
            Ok(Degree(value))
        }
    }

    /// Builds a degree from a small ratio; panics outside `[0, 1]`.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Degree::new(crate::ratio(numer, denom)).expect("degree within [0, 1]")
    }

    pub fn zero() -> Self {
        Degree(Rational::zero())
    }

    pub fn one() -> Self {
        Degree(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }

    /// `1 − d`.
    pub fn complement(&self) -> Degree {
        Degree(Rational::one() - &self.0)
    }

    pub fn min(self, other: Degree) -> Degree {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Degree) -> Degree {
        if self >= other {
            self
        } else {
            other
        }
    }
}

/// Degrees are closed under multiplication.
impl Mul for Degree {
    type Output = Degree;

    fn mul(self, rhs: Degree) -> Degree {
        Degree(self.0 * rhs.0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A necessity-valued formula `(φ, α)`: the constraint `N(φ) ≥ α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessityFormula {
    pub formula: Formula,
    pub lower_bound: Degree,
}

/// A finite set of necessity-valued formulas.
///
/// Zero-valued bounds are vacuous and dropped on insertion; duplicate
/// formulas keep the maximal bound (necessity bounds are lower bounds, so
/// the stronger one subsumes).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PossibilisticKb {
    entries: BTreeMap<Formula, Degree>,
}

impl PossibilisticKb {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, formula: Formula, lower_bound: Degree) {
        if lower_bound.is_zero() {
            return;
        }
        let slot = self.entries.entry(formula).or_insert_with(Degree::zero);
        if *slot < lower_bound {
            *slot = lower_bound;
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Formula, &Degree)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> impl Iterator<Item = NecessityFormula> + '_ {
        self.entries.iter().map(|(formula, bound)| NecessityFormula {
            formula: formula.clone(),
            lower_bound: bound.clone(),
        })
    }

    /// The atoms occurring in any entry.
    pub fn vocabulary(&self) -> BTreeSet<Atom> {
        crate::logic::vocabulary(self.entries.keys())
    }

    /// The least-specific possibility distribution `π*` at `omega`.
    ///
    /// `omega` must cover the base's vocabulary.
    pub fn least_specific_pi(&self, omega: &Interpretation) -> Result<Degree, VocabularyError> {
        let mut pi = Degree::one();
        for (formula, bound) in &self.entries {
            if !evaluate(omega, formula)? {
                pi = pi.min(bound.complement());
            }
        }
        Ok(pi)
    }

    /// Vocabulary of the base joined with the atoms of `phi`.
    fn joint_vocabulary(&self, phi: &Formula) -> BTreeSet<Atom> {
        let mut vocab = self.vocabulary();
        phi.collect_atoms(&mut vocab);
        vocab
    }

    fn pi_at(&self, omega: &Interpretation) -> Degree {
        self.least_specific_pi(omega)
            .expect("enumeration vocabulary covers the base")
    }

    /// Necessity measure `N(φ) = inf { 1 − π*(ω) | ω ⊨ ¬φ }`, `inf ∅ = 1`.
    pub fn necessity(&self, phi: &Formula) -> Degree {
        let vocab = self.joint_vocabulary(phi);
        let mut necessity = Degree::one();
        for omega in Interpretation::all(&vocab) {
            let phi_holds = evaluate(&omega, phi).expect("joint vocabulary covers phi");
            if !phi_holds {
                necessity = necessity.min(self.pi_at(&omega).complement());
            }
        }
        necessity
    }

    /// Possibility measure `Π(φ) = sup { π*(ω) | ω ⊨ φ }`, `sup ∅ = 0`.
    pub fn possibility(&self, phi: &Formula) -> Degree {
        let vocab = self.joint_vocabulary(phi);
        let mut possibility = Degree::zero();
        for omega in Interpretation::all(&vocab) {
            let phi_holds = evaluate(&omega, phi).expect("joint vocabulary covers phi");
            if phi_holds {
                possibility = possibility.max(self.pi_at(&omega));
            }
        }
        possibility
    }

    /// Inconsistency degree `Incons = N(⊥) = 1 − sup π*`.
    ///
    /// Zero iff some interpretation is fully possible (the distribution is
    /// normalized); positive degrees measure partial inconsistency.
    pub fn inconsistency_degree(&self) -> Degree {
        let vocab = self.vocabulary();
        let mut sup = Degree::zero();
        for omega in Interpretation::all(&vocab) {
            sup = sup.max(self.pi_at(&omega));
        }
        sup.complement()
    }

    /// Conditional nonmonotonic inference: `φ |~ ψ` iff
    /// `N(φ -> ψ) > N(¬φ)` (strict, exact).
    pub fn nm_entails(&self, phi: &Formula, psi: &Formula) -> bool {
        let lhs = self.necessity(&Formula::implies(phi.clone(), psi.clone()));
        let rhs = self.necessity(&Formula::not(phi.clone()));
        lhs > rhs
    }

    /// Unconditional acceptance: `|~ ψ` iff `N(ψ) > Incons`.
    pub fn nm_accepts(&self, psi: &Formula) -> bool {
        self.necessity(psi) > self.inconsistency_degree()
    }
}

impl FromIterator<(Formula, Degree)> for PossibilisticKb {
    fn from_iter<I: IntoIterator<Item = (Formula, Degree)>>(iter: I) -> Self {
        let mut kb = PossibilisticKb::new();
        for (formula, bound) in iter {
            kb.insert(formula, bound);
        }
        kb
    }
}
