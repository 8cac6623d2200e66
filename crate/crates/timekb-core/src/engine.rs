//! End-to-end query evaluation: extrapolate at an instant, then infer.
//!
//! Each query instant is treated independently: the timed base and the
//! schema set induce a possibilistic base at `t` (the cut at degree 1 plus
//! extrapolated literals), and the verdict compares the necessity of the
//! conclusion against the degree it must strictly exceed — the
//! inconsistency degree for plain queries, `N(¬φ)` for queries conditioned
//! on `φ`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::logic::{Atom, BeliefStatus, Formula};
use crate::persistence::{apply_at, SchemaSet};
use crate::posslog::Degree;
use crate::timeline::{HistoryError, TimedKb};
use crate::Rational;

/// Outcome of one nonmonotonic query.
///
/// `accepted` holds exactly when `necessity > inconsistency`; for
/// conditional queries the `inconsistency` field carries the bound
/// `N(¬φ)`, which reduces to the inconsistency degree when `φ = ⊤`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryVerdict {
    pub formula: Formula,
    pub time: Rational,
    pub necessity: Degree,
    pub inconsistency: Degree,
    pub accepted: bool,
}

impl fmt::Display for QueryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N({}) = {} at {}; bound {}; {}",
            self.formula,
            self.necessity,
            self.time,
            self.inconsistency,
            if self.accepted { "accepted" } else { "not accepted" }
        )
    }
}

/// One row of a certainty timeline for a fluent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimelineRow {
    pub t: Rational,
    pub n_true: Degree,
    pub n_false: Degree,
    pub status: BeliefStatus,
}

/// Raised by [`timeline`] on malformed ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    History(HistoryError),
    RangeInverted { from: Rational, to: Rational },
    NonPositiveStep(Rational),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::History(e) => write!(f, "{e}"),
            EngineError::RangeInverted { from, to } => {
                write!(f, "timeline range start {from} exceeds end {to}")
            }
            EngineError::NonPositiveStep(step) => {
                write!(f, "timeline step must be positive, found {step}")
            }
        }
    }
}

impl core::error::Error for EngineError {}

impl From<HistoryError> for EngineError {
    fn from(e: HistoryError) -> Self {
        EngineError::History(e)
    }
}

/// Is `psi` accepted at instant `t`? Builds the extrapolated possibilistic
/// base and compares `N(ψ)` against the inconsistency degree.
pub fn nm_query_at(
    kb: &TimedKb,
    schemas: &SchemaSet,
    t: &Rational,
    psi: &Formula,
) -> Result<QueryVerdict, HistoryError> {
    let base = apply_at(kb, schemas, t)?;
    let necessity = base.necessity(psi);
    let inconsistency = base.inconsistency_degree();
    Ok(QueryVerdict {
        formula: psi.clone(),
        time: t.clone(),
        accepted: necessity > inconsistency,
        necessity,
        inconsistency,
    })
}

/// Is `psi` accepted given `phi` at instant `t`? Compares `N(φ -> ψ)`
/// against `N(¬φ)`.
pub fn conditional_query_at(
    kb: &TimedKb,
    schemas: &SchemaSet,
    t: &Rational,
    phi: &Formula,
    psi: &Formula,
) -> Result<QueryVerdict, HistoryError> {
    let base = apply_at(kb, schemas, t)?;
    let necessity = base.necessity(&Formula::implies(phi.clone(), psi.clone()));
    let bound = base.necessity(&Formula::not(phi.clone()));
    Ok(QueryVerdict {
        formula: psi.clone(),
        time: t.clone(),
        accepted: necessity > bound,
        necessity,
        inconsistency: bound,
    })
}

/// Certainty rows for `fluent` at `from, from + step, ...`, with `to`
/// always included as the last row. Each row is exactly what independent
/// queries at that instant would report.
pub fn timeline(
    kb: &TimedKb,
    schemas: &SchemaSet,
    fluent: &Atom,
    from: &Rational,
    to: &Rational,
    step: &Rational,
) -> Result<Vec<TimelineRow>, EngineError> {
    if from > to {
        return Err(EngineError::RangeInverted { from: from.clone(), to: to.clone() });
    }
    if *step <= Rational::zero() {
        return Err(EngineError::NonPositiveStep(step.clone()));
    }
    let positive = Formula::Atom(fluent.clone());
    let negative = Formula::not(positive.clone());
    let mut rows = Vec::new();
    let mut t = from.clone();
    loop {
        let last = t >= *to;
        let at = if last { to.clone() } else { t.clone() };
        let base = apply_at(kb, schemas, &at)?;
        rows.push(TimelineRow {
            n_true: base.necessity(&positive),
            n_false: base.necessity(&negative),
            status: kb.history_status(&at, &positive),
            t: at,
        });
        if last {
            break;
        }
        t += step;
    }
    Ok(rows)
}
