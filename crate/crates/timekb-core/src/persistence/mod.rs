//! Decreasing-persistence schemata and their application to histories.
//!
//! A schema attaches four piecewise-linear certainty functions to a fluent:
//! how certainty in the fluent being true (resp. false) decays with the
//! distance to a reference point, extrapolating forward (resp. backward).
//! All four start at certainty 1 (the fluent is certain at its reference
//! point) and never rise with distance.
//!
//! On a maximal non-informative interval the schema instantiates to a
//! certainty function per problem class:
//!
//! - *forward / backward unbounded*: the schema function of the adjacent
//!   known value, read at the offset from the finite end;
//! - *bounded, no change*: the pointwise maximum of the forward function
//!   from the left end and the backward function from the right end — each
//!   known end confirms the other, so certainty can only go up against the
//!   one-sided reading;
//! - *bounded, with change*: each side's function multiplied by a linear
//!   taper that vanishes at the split point (midpoint by default), so the
//!   certainty of the old value dies before the certainty of the new one
//!   appears and no instant believes both.
//!
//! Applying a schema set to a timed base at an instant yields a
//! possibilistic base: the cut formulas at degree 1 plus extrapolated
//! literals at their decayed degrees.

mod checks;
mod pl;
mod poly;

pub use checks::{
    check_d1, check_d2, check_d3, check_d4, check_fb_symmetry, check_h1, check_h2, check_h3,
    check_negation_symmetry, HDirection, PersistenceClass, Strictness, ValidationReport, Violation,
    Witness,
};
pub use pl::{PiecewiseLinearFn, PlError};
pub use poly::{PiecewisePoly, Poly, PolyError, Trend};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::logic::{Atom, Formula};
use crate::posslog::{Degree, PossibilisticKb};
use crate::timeline::{ExtrapolationProblem, HistoryError, Interval, ProblemClass, TimedKb};
use crate::{ratio, Rational};

/// Which of a schema's four certainty functions is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FnRole {
    ForwardTrue,
    BackwardTrue,
    ForwardFalse,
    BackwardFalse,
}

impl FnRole {
    pub const ALL: [FnRole; 4] =
        [FnRole::ForwardTrue, FnRole::BackwardTrue, FnRole::ForwardFalse, FnRole::BackwardFalse];

    fn monotonicity_axiom(self) -> &'static str {
        match self {
            FnRole::ForwardTrue | FnRole::ForwardFalse => "D1",
            FnRole::BackwardTrue | FnRole::BackwardFalse => "D2",
        }
    }
}

impl fmt::Display for FnRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FnRole::ForwardTrue => "forward true",
            FnRole::BackwardTrue => "backward true",
            FnRole::ForwardFalse => "forward false",
            FnRole::BackwardFalse => "backward false",
        })
    }
}

/// Raised on malformed schemata or schema sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemaError {
    /// Certainty at offset 0 must be 1: the fluent is certain at its
    /// reference point.
    ReferenceValueNotOne { role: FnRole, value: Degree },
    /// A certainty function rises with the distance to the reference point.
    Rises { role: FnRole, from: Rational, to: Rational },
    /// The with-change split fraction must lie strictly between 0 and 1.
    InvalidChangeSplit(Rational),
    /// At most one schema per fluent.
    DuplicateFluent(Atom),
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemaError::ReferenceValueNotOne { role, value } => {
                write!(f, "{role} function must have value 1 at offset 0, found {value}")
            }
            SchemaError::Rises { role, from, to } => write!(
                f,
                "{role} function rises on segment [{from},{to}], violating {}",
                role.monotonicity_axiom()
            ),
            SchemaError::InvalidChangeSplit(split) => {
                write!(f, "change_split must lie strictly between 0 and 1, found {split}")
            }
            SchemaError::DuplicateFluent(fluent) => {
                write!(f, "duplicate schema for fluent `{fluent}`")
            }
        }
    }
}

impl core::error::Error for SchemaError {}

/// The per-fluent persistence knowledge: four certainty functions plus the
/// split fraction for bounded-with-change intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FluentSchema {
    fluent: Atom,
    forward_true: PiecewiseLinearFn,
    backward_true: PiecewiseLinearFn,
    forward_false: PiecewiseLinearFn,
    backward_false: PiecewiseLinearFn,
    change_split: Rational,
}

impl FluentSchema {
    pub fn new(
        fluent: Atom,
        forward_true: PiecewiseLinearFn,
        backward_true: PiecewiseLinearFn,
        forward_false: PiecewiseLinearFn,
        backward_false: PiecewiseLinearFn,
    ) -> Result<Self, SchemaError> {
        let schema = FluentSchema {
            fluent,
            forward_true,
            backward_true,
            forward_false,
            backward_false,
            change_split: ratio(1, 2),
        };
        for role in FnRole::ALL {
            let function = schema.function(role);
            if !function.initial_value().is_one() {
                return Err(SchemaError::ReferenceValueNotOne {
                    role,
                    value: function.initial_value().clone(),
                });
            }
            if let Some(pair) = function
                .breakpoints()
                .windows(2)
                .find(|pair| pair[1].1 > pair[0].1)
            {
                return Err(SchemaError::Rises {
                    role,
                    from: pair[0].0.clone(),
                    to: pair[1].0.clone(),
                });
            }
        }
        Ok(schema)
    }

    /// Replaces the default midpoint split for with-change intervals.
    pub fn with_change_split(mut self, split: Rational) -> Result<Self, SchemaError> {
        if split <= Rational::zero() || split >= Rational::one() {
            return Err(SchemaError::InvalidChangeSplit(split));
        }
        self.change_split = split;
        Ok(self)
    }

    pub fn fluent(&self) -> &Atom {
        &self.fluent
    }

    pub fn function(&self, role: FnRole) -> &PiecewiseLinearFn {
        match role {
            FnRole::ForwardTrue => &self.forward_true,
            FnRole::BackwardTrue => &self.backward_true,
            FnRole::ForwardFalse => &self.forward_false,
            FnRole::BackwardFalse => &self.backward_false,
        }
    }

    /// Forward function for the given truth value.
    pub fn forward(&self, value: bool) -> &PiecewiseLinearFn {
        if value {
            &self.forward_true
        } else {
            &self.forward_false
        }
    }

    /// Backward function for the given truth value.
    pub fn backward(&self, value: bool) -> &PiecewiseLinearFn {
        if value {
            &self.backward_true
        } else {
            &self.backward_false
        }
    }

    pub fn change_split(&self) -> &Rational {
        &self.change_split
    }
}

/// A set of persistence schemata, at most one per fluent. Fluents without
/// a schema receive no extrapolation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchemaSet {
    schemas: BTreeMap<Atom, FluentSchema>,
}

impl SchemaSet {
    pub fn new() -> Self {
        SchemaSet::default()
    }

    pub fn insert(&mut self, schema: FluentSchema) -> Result<(), SchemaError> {
        if self.schemas.contains_key(&schema.fluent) {
            return Err(SchemaError::DuplicateFluent(schema.fluent.clone()));
        }
        self.schemas.insert(schema.fluent.clone(), schema);
        Ok(())
    }

    pub fn get(&self, fluent: &Atom) -> Option<&FluentSchema> {
        self.schemas.get(fluent)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, &FluentSchema)> {
        self.schemas.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.schemas.is_empty()
    }

    pub fn len(&self) -> usize {
        self.schemas.len()
    }
}

/// Extrapolated certainty in a fluent and its negation at one instant.
///
/// At most one of the two degrees is positive: extrapolation never
/// manufactures partially inconsistent instants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtrapolatedDegrees {
    n_true: Degree,
    n_false: Degree,
}

/// Raised when both degrees of a would-be extrapolation are positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialInconsistency {
    pub n_true: Degree,
    pub n_false: Degree,
}

impl fmt::Display for PartialInconsistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "extrapolation must leave one polarity at 0, got N(f)={} and N(!f)={}",
            self.n_true, self.n_false
        )
    }
}

impl core::error::Error for PartialInconsistency {}

impl ExtrapolatedDegrees {
    pub fn new(n_true: Degree, n_false: Degree) -> Result<Self, PartialInconsistency> {
        if !n_true.is_zero() && !n_false.is_zero() {
            return Err(PartialInconsistency { n_true, n_false });
        }
        Ok(ExtrapolatedDegrees { n_true, n_false })
    }

    fn for_value(value: bool, degree: Degree) -> Self {
        if value {
            ExtrapolatedDegrees { n_true: degree, n_false: Degree::zero() }
        } else {
            ExtrapolatedDegrees { n_true: Degree::zero(), n_false: degree }
        }
    }

    pub fn n_true(&self) -> &Degree {
        &self.n_true
    }

    pub fn n_false(&self) -> &Degree {
        &self.n_false
    }
}

/// Raised by [`extrapolate`] on mismatched inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtrapolateError {
    FluentMismatch { problem: Atom, schema: Atom },
    OutsideInterval { t: Rational, interval: Interval },
}

impl fmt::Display for ExtrapolateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtrapolateError::FluentMismatch { problem, schema } => {
                write!(f, "problem concerns `{problem}` but the schema is for `{schema}`")
            }
            ExtrapolateError::OutsideInterval { t, interval } => {
                write!(f, "{t} lies outside the open extrapolation interval {interval}")
            }
        }
    }
}

impl core::error::Error for ExtrapolateError {}

fn finite(point: crate::timeline::TimePoint) -> Rational {
    point.finite().cloned().expect("class shape guarantees a finite end")
}

/// Linear taper `max(0, 1 - offset / reach)` as a degree.
fn taper(offset: &Rational, reach: &Rational) -> Degree {
    let raw = Rational::one() - offset / reach;
    if raw < Rational::zero() {
        Degree::zero()
    } else {
        Degree::new(raw).expect("clipped taper is within [0, 1]")
    }
}

/// Certainty of the fluent and its negation at an instant strictly inside
/// a maximal non-informative interval, per the problem's class.
pub fn extrapolate(
    problem: &ExtrapolationProblem,
    schema: &FluentSchema,
    t: &Rational,
) -> Result<ExtrapolatedDegrees, ExtrapolateError> {
    if problem.fluent() != schema.fluent() {
        return Err(ExtrapolateError::FluentMismatch {
            problem: problem.fluent().clone(),
            schema: schema.fluent().clone(),
        });
    }
    if !problem.interval().contains(t) {
        return Err(ExtrapolateError::OutsideInterval {
            t: t.clone(),
            interval: problem.interval().clone(),
        });
    }
    let eval = |f: &PiecewiseLinearFn, offset: &Rational| {
        f.eval(offset).expect("offsets inside the interval are non-negative")
    };
    Ok(match problem.class() {
        ProblemClass::ForwardUnbounded => {
            let value = problem.left_value().expect("forward problems know the left value");
            let start = finite(problem.interval().lower_point());
            ExtrapolatedDegrees::for_value(value, eval(schema.forward(value), &(t - start)))
        }
        ProblemClass::BackwardUnbounded => {
            let value = problem.right_value().expect("backward problems know the right value");
            let end = finite(problem.interval().upper_point());
            ExtrapolatedDegrees::for_value(value, eval(schema.backward(value), &(end - t)))
        }
        ProblemClass::BoundedNoChange => {
            let value = problem.left_value().expect("bounded problems know both values");
            let start = finite(problem.interval().lower_point());
            let end = finite(problem.interval().upper_point());
            let from_left = eval(schema.forward(value), &(t - start));
            let from_right = eval(schema.backward(value), &(end - t));
            ExtrapolatedDegrees::for_value(value, from_left.max(from_right))
        }
        ProblemClass::BoundedWithChange => {
            let left = problem.left_value().expect("bounded problems know both values");
            let right = !left;
            let start = finite(problem.interval().lower_point());
            let end = finite(problem.interval().upper_point());
            let length = &end - &start;
            let left_reach = schema.change_split() * &length;
            let right_reach = (Rational::one() - schema.change_split()) * &length;
            let left_offset = t - &start;
            let right_offset = &end - t;
            let left_degree =
                eval(schema.forward(left), &left_offset) * taper(&left_offset, &left_reach);
            let right_degree =
                eval(schema.backward(right), &right_offset) * taper(&right_offset, &right_reach);
            let (n_true, n_false) =
                if left { (left_degree, right_degree) } else { (right_degree, left_degree) };
            ExtrapolatedDegrees::new(n_true, n_false)
                .expect("tapers have disjoint supports around the split point")
        }
    })
}

/// The possibilistic base induced at instant `t`: cut formulas at degree 1
/// plus, for every schema-bearing fluent that is not informative at `t` but
/// has a reference point somewhere, its extrapolated literals (zero degrees
/// omitted).
///
/// Propagates closedness violations; fluents with an empty informative set
/// or without a schema contribute nothing.
pub fn apply_at(
    kb: &TimedKb,
    schemas: &SchemaSet,
    t: &Rational,
) -> Result<PossibilisticKb, HistoryError> {
    let mut out = PossibilisticKb::new();
    for phi in kb.cut(t) {
        out.insert(phi, Degree::one());
    }
    for (fluent, schema) in schemas.iter() {
        let itp = kb.itp(fluent)?;
        if itp.is_empty() || itp.contains(t) {
            continue;
        }
        let problems = kb.extrapolation_problems(fluent)?;
        let problem = problems
            .iter()
            .find(|p| p.interval().contains(t))
            .expect("non-informative instants lie in exactly one maximal interval");
        let degrees = extrapolate(problem, schema, t)
            .expect("t lies inside the problem interval and fluents match");
        if !degrees.n_true().is_zero() {
            out.insert(Formula::Atom(fluent.clone()), degrees.n_true().clone());
        }
        if !degrees.n_false().is_zero() {
            out.insert(
                Formula::not(Formula::Atom(fluent.clone())),
                degrees.n_false().clone(),
            );
        }
    }
    Ok(out)
}

/// The forward-class certainty function on `[t0, hi]` as an exact
/// piecewise polynomial (used by validators and shape checks).
pub fn forward_profile(
    schema: &FluentSchema,
    value: bool,
    t0: &Rational,
    hi: &Rational,
) -> PiecewisePoly {
    pl_profile_forward(schema.forward(value), t0, hi)
}

/// The backward-class certainty function on `[lo, t1]`.
pub fn backward_profile(
    schema: &FluentSchema,
    value: bool,
    lo: &Rational,
    t1: &Rational,
) -> PiecewisePoly {
    pl_profile_backward(schema.backward(value), lo, t1)
}

/// The bounded-no-change construction on `[t0, t1]`: pointwise max of the
/// forward decay from `t0` and the backward decay from `t1`.
pub fn no_change_profile(
    schema: &FluentSchema,
    value: bool,
    t0: &Rational,
    t1: &Rational,
) -> PiecewisePoly {
    forward_profile(schema, value, t0, t1)
        .pointwise_max(&backward_profile(schema, value, t0, t1))
        .expect("class profiles are piecewise linear on a shared domain")
}

/// The bounded-with-change construction on `[t0, t1]`: the pair of tapered
/// certainty functions for the left-known and right-known polarity.
pub fn with_change_profile(
    schema: &FluentSchema,
    left_value: bool,
    t0: &Rational,
    t1: &Rational,
) -> (PiecewisePoly, PiecewisePoly) {
    let split = t0 + schema.change_split() * (t1 - t0);
    let one = Rational::one();
    let zero = Rational::zero();
    let left_taper = PiecewisePoly::from_points(&[
        (t0.clone(), one.clone()),
        (split.clone(), zero.clone()),
        (t1.clone(), zero.clone()),
    ])
    .expect("split lies strictly inside the interval");
    let right_taper = PiecewisePoly::from_points(&[
        (t0.clone(), zero.clone()),
        (split, zero),
        (t1.clone(), one),
    ])
    .expect("split lies strictly inside the interval");
    let left_fn = forward_profile(schema, left_value, t0, t1)
        .product(&left_taper)
        .expect("linear times linear stays quadratic");
    let right_fn = backward_profile(schema, !left_value, t0, t1)
        .product(&right_taper)
        .expect("linear times linear stays quadratic");
    (left_fn, right_fn)
}

/// `f(t - t0)` on `[t0, hi]`, sampling every breakpoint inside the domain.
fn pl_profile_forward(f: &PiecewiseLinearFn, t0: &Rational, hi: &Rational) -> PiecewisePoly {
    let mut xs = alloc::vec![t0.clone(), hi.clone()];
    for (offset, _) in f.breakpoints() {
        let x = t0 + offset;
        if &x > t0 && &x < hi {
            xs.push(x);
        }
    }
    xs.sort();
    xs.dedup();
    let points: Vec<(Rational, Rational)> = xs
        .into_iter()
        .map(|x| {
            let value = f.eval(&(&x - t0)).expect("non-negative offset").into_value();
            (x, value)
        })
        .collect();
    PiecewisePoly::from_points(&points).expect("domain has two distinct ends")
}

/// `f(t1 - t)` on `[lo, t1]`, sampling every breakpoint inside the domain.
fn pl_profile_backward(f: &PiecewiseLinearFn, lo: &Rational, t1: &Rational) -> PiecewisePoly {
    let mut xs = alloc::vec![lo.clone(), t1.clone()];
    for (offset, _) in f.breakpoints() {
        let x = t1 - offset;
        if &x > lo && &x < t1 {
            xs.push(x);
        }
    }
    xs.sort();
    xs.dedup();
    let points: Vec<(Rational, Rational)> = xs
        .into_iter()
        .map(|x| {
            let value = f.eval(&(t1 - &x)).expect("non-negative offset").into_value();
            (x, value)
        })
        .collect();
    PiecewisePoly::from_points(&points).expect("domain has two distinct ends")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::int;
    use crate::timeline::TimedFormula;

    /// The reference schema shared by the two-machine fixture: forward
    /// decay of 1/10 per day towards a 1/5 floor, backward decay of 1/10
    /// per day to zero, and fast two-day decay for the false polarity.
    pub(crate) fn reference_schema(fluent: &str) -> FluentSchema {
        FluentSchema::new(
            Atom::new(fluent),
            PiecewiseLinearFn::from_breakpoints(&[(0, 1, 1), (8, 1, 5)]),
            PiecewiseLinearFn::from_breakpoints(&[(0, 1, 1), (10, 0, 1)]),
            PiecewiseLinearFn::from_breakpoints(&[(0, 1, 1), (2, 0, 1)]),
            PiecewiseLinearFn::from_breakpoints(&[(0, 1, 1), (2, 0, 1)]),
        )
        .expect("reference schema is well-formed")
    }

    pub(crate) fn reference_schemas() -> SchemaSet {
        let mut set = SchemaSet::new();
        set.insert(reference_schema("A")).unwrap();
        set.insert(reference_schema("B")).unwrap();
        set
    }

    fn reference_kb() -> TimedKb {
        let a = Formula::atom("A");
        let b = Formula::atom("B");
        TimedKb::from_iter([
            TimedFormula::on(Interval::closed(int(0), int(10)).unwrap(), a.clone()),
            TimedFormula::on(Interval::point(int(15)), Formula::or(Formula::not(a), Formula::not(b.clone()))),
            TimedFormula::on(Interval::closed(int(17), int(30)).unwrap(), b),
        ])
    }

    fn forward_problem() -> ExtrapolationProblem {
        ExtrapolationProblem::new(
            Atom::new("A"),
            Interval::above(int(10)),
            ProblemClass::ForwardUnbounded,
            Some(true),
            None,
        )
        .unwrap()
    }

    #[test]
    fn forward_extrapolation_decays_from_the_left_end() {
        let degrees = extrapolate(&forward_problem(), &reference_schema("A"), &int(15)).unwrap();
        assert_eq!(degrees.n_true(), &Degree::from_ratio(1, 2));
        assert_eq!(degrees.n_false(), &Degree::zero());
    }

    #[test]
    fn backward_extrapolation_decays_from_the_right_end() {
        let problem = ExtrapolationProblem::new(
            Atom::new("B"),
            Interval::below(int(17)),
            ProblemClass::BackwardUnbounded,
            None,
            Some(true),
        )
        .unwrap();
        let degrees = extrapolate(&problem, &reference_schema("B"), &int(15)).unwrap();
        assert_eq!(degrees.n_true(), &Degree::from_ratio(4, 5));
        assert_eq!(degrees.n_false(), &Degree::zero());
    }

    #[test]
    fn with_change_tapers_vanish_at_the_midpoint() {
        let problem = ExtrapolationProblem::new(
            Atom::new("A"),
            Interval::open(int(0), int(10)).unwrap(),
            ProblemClass::BoundedWithChange,
            Some(true),
            Some(false),
        )
        .unwrap();
        let schema = reference_schema("A");
        let at_mid = extrapolate(&problem, &schema, &int(5)).unwrap();
        assert_eq!(at_mid.n_true(), &Degree::zero());
        assert_eq!(at_mid.n_false(), &Degree::zero());

        let early = extrapolate(&problem, &schema, &int(2)).unwrap();
        assert_eq!(early.n_true(), &Degree::from_ratio(12, 25));
        assert_eq!(early.n_false(), &Degree::zero());
    }

    #[test]
    fn no_change_takes_the_better_of_both_ends() {
        let problem = ExtrapolationProblem::new(
            Atom::new("A"),
            Interval::open(int(0), int(4)).unwrap(),
            ProblemClass::BoundedNoChange,
            Some(true),
            Some(true),
        )
        .unwrap();
        let schema = reference_schema("A");
        // forward gives 1 - 3/10 = 7/10, backward gives 1 - 1/10 = 9/10
        let degrees = extrapolate(&problem, &schema, &int(3)).unwrap();
        assert_eq!(degrees.n_true(), &Degree::from_ratio(9, 10));
    }

    #[test]
    fn extrapolate_guards_its_inputs() {
        let schema = reference_schema("B");
        let err = extrapolate(&forward_problem(), &schema, &int(15)).unwrap_err();
        assert!(matches!(err, ExtrapolateError::FluentMismatch { .. }));

        let schema = reference_schema("A");
        let err = extrapolate(&forward_problem(), &schema, &int(10)).unwrap_err();
        assert!(matches!(err, ExtrapolateError::OutsideInterval { .. }));
    }

    #[test]
    fn apply_at_the_inconsistent_instant() {
        let kb = reference_kb();
        let out = apply_at(&kb, &reference_schemas(), &int(15)).unwrap();
        let a = Formula::atom("A");
        let b = Formula::atom("B");
        let expected = PossibilisticKb::from_iter([
            (Formula::or(Formula::not(a.clone()), Formula::not(b.clone())), Degree::one()),
            (a, Degree::from_ratio(1, 2)),
            (b, Degree::from_ratio(4, 5)),
        ]);
        assert_eq!(out, expected);
    }

    #[test]
    fn apply_at_a_late_instant_hits_the_floor() {
        let kb = reference_kb();
        let out = apply_at(&kb, &reference_schemas(), &int(35)).unwrap();
        let expected = PossibilisticKb::from_iter([
            (Formula::atom("A"), Degree::from_ratio(1, 5)),
            (Formula::atom("B"), Degree::from_ratio(1, 2)),
        ]);
        assert_eq!(out, expected);
    }

    #[test]
    fn apply_at_an_informative_instant_is_the_cut_alone() {
        let kb = reference_kb();
        let out = apply_at(&kb, &reference_schemas(), &int(5)).unwrap();
        let expected = PossibilisticKb::from_iter([(Formula::atom("A"), Degree::one())]);
        assert_eq!(out, expected);
    }

    #[test]
    fn apply_propagates_closedness_violations() {
        let kb = TimedKb::from_iter([TimedFormula::on(
            Interval::open(int(0), int(5)).unwrap(),
            Formula::atom("A"),
        )]);
        assert!(matches!(
            apply_at(&kb, &reference_schemas(), &int(7)),
            Err(HistoryError::ClosedHistoryViolation { .. })
        ));
    }

    #[test]
    fn schema_construction_enforces_shape() {
        let rising = PiecewiseLinearFn::from_breakpoints(&[(0, 1, 1), (2, 1, 2), (4, 3, 4)]);
        let ok = PiecewiseLinearFn::from_breakpoints(&[(0, 1, 1), (2, 0, 1)]);
        let err = FluentSchema::new(
            Atom::new("A"),
            rising,
            ok.clone(),
            ok.clone(),
            ok.clone(),
        )
        .unwrap_err();
        assert_eq!(
            err,
            SchemaError::Rises { role: FnRole::ForwardTrue, from: int(2), to: int(4) }
        );

        let low_start = PiecewiseLinearFn::from_breakpoints(&[(0, 1, 2), (2, 0, 1)]);
        let err =
            FluentSchema::new(Atom::new("A"), ok.clone(), low_start, ok.clone(), ok.clone())
                .unwrap_err();
        assert!(matches!(err, SchemaError::ReferenceValueNotOne { role: FnRole::BackwardTrue, .. }));

        let schema = reference_schema("A");
        assert!(schema.clone().with_change_split(ratio(1, 3)).is_ok());
        assert!(schema.clone().with_change_split(int(1)).is_err());
        assert!(schema.with_change_split(int(0)).is_err());
    }

    #[test]
    fn schema_sets_reject_duplicates() {
        let mut set = SchemaSet::new();
        set.insert(reference_schema("A")).unwrap();
        assert_eq!(
            set.insert(reference_schema("A")),
            Err(SchemaError::DuplicateFluent(Atom::new("A")))
        );
    }

    #[test]
    fn profiles_match_pointwise_extrapolation() {
        let schema = reference_schema("A");
        // no-change on [0, 4]
        let profile = no_change_profile(&schema, true, &int(0), &int(4));
        let problem = ExtrapolationProblem::new(
            Atom::new("A"),
            Interval::open(int(0), int(4)).unwrap(),
            ProblemClass::BoundedNoChange,
            Some(true),
            Some(true),
        )
        .unwrap();
        for t in [ratio(1, 2), int(1), ratio(5, 2), int(3)] {
            let via_profile = profile.eval(&t).unwrap();
            let via_extrapolate = extrapolate(&problem, &schema, &t).unwrap();
            assert_eq!(&via_profile, via_extrapolate.n_true().value());
        }

        // with-change on [0, 10]
        let (left_fn, right_fn) = with_change_profile(&schema, true, &int(0), &int(10));
        let problem = ExtrapolationProblem::new(
            Atom::new("A"),
            Interval::open(int(0), int(10)).unwrap(),
            ProblemClass::BoundedWithChange,
            Some(true),
            Some(false),
        )
        .unwrap();
        for t in [int(1), int(2), int(5), ratio(17, 2), int(9)] {
            let degrees = extrapolate(&problem, &schema, &t).unwrap();
            assert_eq!(&left_fn.eval(&t).unwrap(), degrees.n_true().value());
            assert_eq!(&right_fn.eval(&t).unwrap(), degrees.n_false().value());
        }
    }
}
