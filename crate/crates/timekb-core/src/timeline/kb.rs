//! Timed knowledge bases over the continuous time line.
//!
//! A timed knowledge base is a finite list of declarations `τ : φ` — the
//! formula `φ` holds at every instant of the time set `τ`. The *cut* at an
//! instant `t` is the classical set of formulas whose `τ` contains `t`;
//! the belief status of any formula at `t` is its status against that cut.
//!
//! Because cuts only change at interval endpoints, every status question
//! over the continuum reduces to finitely many: the endpoints ("breakpoints")
//! partition the line into points and open gaps, and the status is constant
//! on each gap. The informative-time-point set of a fluent and its maximal
//! non-informative intervals are computed exactly on that partition.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::logic::{belief_status, contingent, Atom, BeliefStatus, Formula, FormulaSet};
use crate::timeline::{Interval, IntervalSet};
use crate::{int, ratio, Rational};

/// A declaration `τ : φ`: the formula holds throughout the time set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimedFormula {
    tau: IntervalSet,
    phi: Formula,
}

impl TimedFormula {
    pub fn new(tau: IntervalSet, phi: Formula) -> Self {
        TimedFormula { tau, phi }
    }

    /// Declaration over a single interval.
    pub fn on(interval: Interval, phi: Formula) -> Self {
        TimedFormula { tau: IntervalSet::singleton(interval), phi }
    }

    pub fn time_set(&self) -> &IntervalSet {
        &self.tau
    }

    pub fn formula(&self) -> &Formula {
        &self.phi
    }
}

/// A finite sequence of timed declarations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TimedKb {
    entries: Vec<TimedFormula>,
}

/// The set of informative time points of a fluent: instants where the
/// history makes the fluent True or False. Admissible histories have
/// topologically closed informative sets; construction validates this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItpSet {
    components: IntervalSet,
}

impl ItpSet {
    pub fn components(&self) -> &[Interval] {
        self.components.intervals()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, t: &Rational) -> bool {
        self.components.contains(t)
    }
}

impl fmt::Display for ItpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.components)
    }
}

/// Errors raised by history analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HistoryError {
    /// The informative set of a fluent has a component with an open finite
    /// end; such histories are rejected, not repaired.
    ClosedHistoryViolation { fluent: Atom, component: Interval },
    /// The fluent has no informative time point at all, so there is no
    /// reference to extrapolate from.
    EmptyItp { fluent: Atom },
}

impl fmt::Display for HistoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HistoryError::ClosedHistoryViolation { fluent, component } => write!(
                f,
                "informative time points of `{fluent}` include the non-closed component {component}"
            ),
            HistoryError::EmptyItp { fluent } => {
                write!(f, "fluent `{fluent}` has no informative time point")
            }
        }
    }
}

impl core::error::Error for HistoryError {}

/// Classification of a maximal non-informative interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemClass {
    ForwardUnbounded,
    BackwardUnbounded,
    BoundedNoChange,
    BoundedWithChange,
}

impl fmt::Display for ProblemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProblemClass::ForwardUnbounded => "forward",
            ProblemClass::BackwardUnbounded => "backward",
            ProblemClass::BoundedNoChange => "bounded-no-change",
            ProblemClass::BoundedWithChange => "bounded-with-change",
        })
    }
}

/// Raised when an extrapolation problem's parts do not fit its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemError {
    /// The interval of a problem must be open on both sides.
    NotOpen,
    /// Interval ends do not match the class (e.g. a bounded class with an
    /// infinite end).
    ShapeMismatch,
    /// Known truth values present/absent on the wrong sides, or equal where
    /// a change is claimed (and vice versa).
    ValueMismatch,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProblemError::NotOpen => "extrapolation interval must be open",
            ProblemError::ShapeMismatch => "interval ends do not match the problem class",
            ProblemError::ValueMismatch => "known boundary values do not match the problem class",
        })
    }
}

impl core::error::Error for ProblemError {}

/// A classified maximal non-informative interval of a fluent, together
/// with the fluent's known truth values at the finite reference ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtrapolationProblem {
    fluent: Atom,
    interval: Interval,
    class: ProblemClass,
    left_value: Option<bool>,
    right_value: Option<bool>,
}

impl ExtrapolationProblem {
    pub fn new(
        fluent: Atom,
        interval: Interval,
        class: ProblemClass,
        left_value: Option<bool>,
        right_value: Option<bool>,
    ) -> Result<Self, ProblemError> {
        if interval.lower_closed() || interval.upper_closed() {
            return Err(ProblemError::NotOpen);
        }
        let lower_finite = interval.lower_point().is_finite();
        let upper_finite = interval.upper_point().is_finite();
        let shape_ok = match class {
            ProblemClass::ForwardUnbounded => lower_finite && !upper_finite,
            ProblemClass::BackwardUnbounded => !lower_finite && upper_finite,
            ProblemClass::BoundedNoChange | ProblemClass::BoundedWithChange => {
                lower_finite && upper_finite
            }
        };
        if !shape_ok {
            return Err(ProblemError::ShapeMismatch);
        }
        let values_ok = match class {
            ProblemClass::ForwardUnbounded => left_value.is_some() && right_value.is_none(),
            ProblemClass::BackwardUnbounded => left_value.is_none() && right_value.is_some(),
            ProblemClass::BoundedNoChange => {
                matches!((left_value, right_value), (Some(l), Some(r)) if l == r)
            }
            ProblemClass::BoundedWithChange => {
                matches!((left_value, right_value), (Some(l), Some(r)) if l != r)
            }
        };
        if !values_ok {
            return Err(ProblemError::ValueMismatch);
        }
        Ok(ExtrapolationProblem { fluent, interval, class, left_value, right_value })
    }

    pub fn fluent(&self) -> &Atom {
        &self.fluent
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn class(&self) -> ProblemClass {
        self.class
    }

    pub fn left_value(&self) -> Option<bool> {
        self.left_value
    }

    pub fn right_value(&self) -> Option<bool> {
        self.right_value
    }
}

impl fmt::Display for ExtrapolationProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.class, self.interval)?;
        if let Some(v) = self.left_value {
            write!(f, " left={v}")?;
        }
        if let Some(v) = self.right_value {
            write!(f, " right={v}")?;
        }
        Ok(())
    }
}

/// One cell of the breakpoint partition: a breakpoint or an open gap.
enum Cell {
    Point(Rational),
    Gap(Interval),
}

impl Cell {
    fn interval(&self) -> Interval {
        match self {
            Cell::Point(b) => Interval::point(b.clone()),
            Cell::Gap(g) => g.clone(),
        }
    }

    /// An instant inside the cell; the cut is constant across a gap, so any
    /// interior point represents it.
    fn representative(&self) -> Rational {
        match self {
            Cell::Point(b) => b.clone(),
            Cell::Gap(g) => match (g.lower_point().finite(), g.upper_point().finite()) {
                (Some(a), Some(b)) => (a + b) * ratio(1, 2),
                (Some(a), None) => a + int(1),
                (None, Some(b)) => b - int(1),
                (None, None) => Rational::zero(),
            },
        }
    }
}

impl TimedKb {
    pub fn new() -> Self {
        TimedKb::default()
    }

    pub fn push(&mut self, entry: TimedFormula) {
        self.entries.push(entry);
    }

    pub fn entries(&self) -> &[TimedFormula] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All atoms mentioned anywhere in the base.
    pub fn fluents(&self) -> BTreeSet<Atom> {
        crate::logic::vocabulary(self.entries.iter().map(TimedFormula::formula))
    }

    /// All finite interval endpoints, sorted and deduplicated.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let set: BTreeSet<&Rational> = self
            .entries
            .iter()
            .flat_map(|e| e.tau.intervals())
            .flat_map(|i| i.finite_endpoints())
            .collect();
        set.into_iter().cloned().collect()
    }

    /// The classical knowledge base holding at instant `t`.
    pub fn cut(&self, t: &Rational) -> FormulaSet {
        self.entries
            .iter()
            .filter(|e| e.tau.contains(t))
            .map(|e| e.phi.clone())
            .collect()
    }

    /// Belief status of `phi` at instant `t`.
    ///
    /// At instants with an unsatisfiable cut, contingent formulas report
    /// `Unknown` — inconsistent instants are neutralized rather than
    /// propagated.
    pub fn history_status(&self, t: &Rational, phi: &Formula) -> BeliefStatus {
        let status = belief_status(&self.cut(t), phi);
        if status == BeliefStatus::Inconsistent && contingent(phi) {
            BeliefStatus::Unknown
        } else {
            status
        }
    }

    /// The breakpoint partition of the time line.
    fn cells(&self) -> Vec<Cell> {
        let breaks = self.breakpoints();
        if breaks.is_empty() {
            return alloc::vec![Cell::Gap(Interval::full())];
        }
        let mut cells = Vec::with_capacity(2 * breaks.len() + 1);
        cells.push(Cell::Gap(Interval::below(breaks[0].clone())));
        for (i, b) in breaks.iter().enumerate() {
            cells.push(Cell::Point(b.clone()));
            match breaks.get(i + 1) {
                Some(next) => {
                    cells.push(Cell::Gap(Interval::open(b.clone(), next.clone()).expect(
                        "breakpoints are strictly increasing",
                    )));
                }
                None => cells.push(Cell::Gap(Interval::above(b.clone()))),
            }
        }
        cells
    }

    /// The informative time points of `f`, computed exactly on the
    /// breakpoint partition.
    ///
    /// Fails when the resulting set is not closed (a component with an open
    /// finite end), reporting the offending component.
    pub fn itp(&self, f: &Atom) -> Result<ItpSet, HistoryError> {
        let phi = Formula::Atom(f.clone());
        let informative = self
            .cells()
            .into_iter()
            .filter(|cell| {
                matches!(
                    self.history_status(&cell.representative(), &phi),
                    BeliefStatus::True | BeliefStatus::False
                )
            })
            .map(|cell| cell.interval())
            .collect::<IntervalSet>();
        if let Some(open) = informative
            .intervals()
            .iter()
            .find(|c| !c.is_topologically_closed())
        {
            return Err(HistoryError::ClosedHistoryViolation {
                fluent: f.clone(),
                component: open.clone(),
            });
        }
        Ok(ItpSet { components: informative })
    }

    /// Truth of the fluent at an informative instant.
    fn known_value(&self, f: &Atom, t: &Rational) -> bool {
        match self.history_status(t, &Formula::Atom(f.clone())) {
            BeliefStatus::True => true,
            BeliefStatus::False => false,
            status => unreachable!("instant {t} must be informative for {f}, got {status}"),
        }
    }

    /// The maximal non-informative intervals of `f`, classified.
    ///
    /// Requires a non-empty informative set: with no reference point at all
    /// there is nothing to extrapolate from.
    pub fn extrapolation_problems(
        &self,
        f: &Atom,
    ) -> Result<Vec<ExtrapolationProblem>, HistoryError> {
        let itp = self.itp(f)?;
        if itp.is_empty() {
            return Err(HistoryError::EmptyItp { fluent: f.clone() });
        }
        let components = itp.components();
        let mut problems = Vec::new();

        let first = &components[0];
        if let Some(start) = first.lower_point().finite() {
            problems.push(
                ExtrapolationProblem::new(
                    f.clone(),
                    Interval::below(start.clone()),
                    ProblemClass::BackwardUnbounded,
                    None,
                    Some(self.known_value(f, start)),
                )
                .expect("backward problem is well-formed"),
            );
        }

        for pair in components.windows(2) {
            let left_end = pair[0]
                .upper_point()
                .finite()
                .cloned()
                .expect("inner component ends are finite");
            let right_start = pair[1]
                .lower_point()
                .finite()
                .cloned()
                .expect("inner component starts are finite");
            let left_value = self.known_value(f, &left_end);
            let right_value = self.known_value(f, &right_start);
            let class = if left_value == right_value {
                ProblemClass::BoundedNoChange
            } else {
                ProblemClass::BoundedWithChange
            };
            problems.push(
                ExtrapolationProblem::new(
                    f.clone(),
                    Interval::open(left_end, right_start)
                        .expect("normalized components leave non-empty gaps"),
                    class,
                    Some(left_value),
                    Some(right_value),
                )
                .expect("bounded problem is well-formed"),
            );
        }

        let last = components.last().expect("non-empty");
        if let Some(end) = last.upper_point().finite() {
            problems.push(
                ExtrapolationProblem::new(
                    f.clone(),
                    Interval::above(end.clone()),
                    ProblemClass::ForwardUnbounded,
                    Some(self.known_value(f, end)),
                    None,
                )
                .expect("forward problem is well-formed"),
            );
        }

        Ok(problems)
    }
}

impl FromIterator<TimedFormula> for TimedKb {
    fn from_iter<I: IntoIterator<Item = TimedFormula>>(iter: I) -> Self {
        TimedKb { entries: iter.into_iter().collect() }
    }
}
