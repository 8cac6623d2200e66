//! Executable validators for persistence axioms and symmetry properties.
//!
//! The D-checks validate shapes of certainty functions: monotone decay away
//! from a reference point (D1 forward, D2 backward), valley shape on a
//! bounded interval without change (D3), and the two-phase shape with
//! disjoint positive supports on an interval with change (D4).
//!
//! The H-checks compare class constructions across interval lengths at
//! equal offsets. The homogeneity literature states these inequalities in
//! two mutually inconsistent ways; the validators default to the direction
//! the worked examples support (`Prose`) and can be flipped to the
//! displayed inequalities (`Displayed`) for comparison:
//!
//! - H1 (no-change vs. no-change): prose says the shorter interval is at
//!   least as certain at equal offsets from either end; displayed says at
//!   most.
//! - H2 (no-change vs. forward): both readings agree — two known ends
//!   confirm at least as much as one.
//! - H3 (with-change vs. with-change): prose says the shorter interval
//!   decays the outgoing value at least as fast and raises the incoming
//!   value at least as fast, compared at equal offsets from the left end;
//!   displayed compares the outgoing value the other way and aligns the
//!   incoming value to the right end.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::pl::PiecewiseLinearFn;
use super::poly::{PiecewisePoly, Trend};
use super::{forward_profile, no_change_profile, with_change_profile, FluentSchema};
use crate::Rational;

/// Trichotomy of bounded-no-change functions by their minimum value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PersistenceClass {
    /// Certainty stays at 1 across the whole interval.
    Full,
    /// Certainty dips but never reaches 0.
    Elastic,
    /// Certainty reaches 0 somewhere inside the interval.
    PartiallyElastic,
}

impl fmt::Display for PersistenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PersistenceClass::Full => "full persistence",
            PersistenceClass::Elastic => "elastic persistence",
            PersistenceClass::PartiallyElastic => "partially elastic persistence",
        })
    }
}

/// One reason a check failed, optionally anchored to a span of offsets or
/// time points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub span: Option<(Rational, Rational)>,
    pub message: String,
}

impl Violation {
    fn spanned(from: Rational, to: Rational, message: impl Into<String>) -> Self {
        Violation { span: Some((from, to)), message: message.into() }
    }

    fn plain(message: impl Into<String>) -> Self {
        Violation { span: None, message: message.into() }
    }
}

/// A named exact witness reported by a passing check (e.g. the valley
/// point of a D3 instance).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub label: &'static str,
    pub at: Rational,
}

/// Outcome of one validator run. Violations are content, not errors: a
/// failing shape yields a report, never a panic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub check: &'static str,
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub witnesses: Vec<Witness>,
    pub class: Option<PersistenceClass>,
}

impl ValidationReport {
    fn from_violations(check: &'static str, violations: Vec<Violation>) -> Self {
        ValidationReport {
            check,
            passed: violations.is_empty(),
            violations,
            witnesses: Vec::new(),
            class: None,
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, if self.passed { "ok" } else { "FAIL" })?;
        if let Some(class) = &self.class {
            write!(f, " [{class}]")?;
        }
        for witness in &self.witnesses {
            write!(f, " {}={}", witness.label, witness.at)?;
        }
        for violation in &self.violations {
            match &violation.span {
                Some((from, to)) => write!(f, "; [{from},{to}] {}", violation.message)?,
                None => write!(f, "; {}", violation.message)?,
            }
        }
        Ok(())
    }
}

/// How demanding the monotonicity checks are.
///
/// The strict variants judge the explicit breakpoint span; the constant
/// tail beyond the last breakpoint is exempt (a single-breakpoint constant
/// function has an empty span and fails both strict variants).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    /// Never rises (the bare axiom).
    NonIncreasing,
    /// Additionally strictly decreasing on the first segment.
    StrictNearZero,
    /// Additionally strictly decreasing on every segment.
    StrictEverywhere,
}

/// Which reading of the homogeneity inequalities to validate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HDirection {
    Prose,
    Displayed,
}

fn monotone_violations(function: &PiecewiseLinearFn, strictness: Strictness) -> Vec<Violation> {
    let mut violations = Vec::new();
    let points = function.breakpoints();
    for pair in points.windows(2) {
        let (from, to) = (&pair[0], &pair[1]);
        if to.1 > from.1 {
            violations.push(Violation::spanned(
                from.0.clone(),
                to.0.clone(),
                format!("rises from {} to {}", from.1, to.1),
            ));
        } else if to.1 == from.1 && strictness == Strictness::StrictEverywhere {
            violations.push(Violation::spanned(
                from.0.clone(),
                to.0.clone(),
                format!("stays constant at {}", from.1),
            ));
        }
    }
    if strictness != Strictness::NonIncreasing {
        let strictly_drops_at_zero = points.len() >= 2 && points[1].1 < points[0].1;
        if !strictly_drops_at_zero {
            violations.push(Violation::spanned(
                Rational::zero(),
                points.get(1).map(|p| p.0.clone()).unwrap_or_else(Rational::zero),
                "not strictly decreasing in the right neighbourhood of 0",
            ));
        }
    }
    violations
}

/// D1: a forward certainty function never rises with the offset.
pub fn check_d1(function: &PiecewiseLinearFn, strictness: Strictness) -> ValidationReport {
    ValidationReport::from_violations("D1", monotone_violations(function, strictness))
}

/// D2: a backward certainty function never rises with the offset.
///
/// Backward functions are parameterized by the distance to the reference
/// point, so the scan is the same as D1's; in absolute time they are
/// non-decreasing up to the reference.
pub fn check_d2(function: &PiecewiseLinearFn, strictness: Strictness) -> ValidationReport {
    ValidationReport::from_violations("D2", monotone_violations(function, strictness))
}

/// D3: a bounded-no-change certainty function is valley-shaped — it never
/// rises again once it has risen. Reports the first global minimizer `t*`
/// and classifies the instance by its minimum value.
pub fn check_d3(function: &PiecewisePoly) -> ValidationReport {
    let mut violations = Vec::new();
    let mut seen_rise = false;
    for (from, to, trend) in function.trends() {
        match trend {
            Trend::Flat => {}
            Trend::Down => {
                if seen_rise {
                    violations.push(Violation::spanned(
                        from, to,
                        "decreases again after an increasing stretch",
                    ));
                }
            }
            Trend::Up => seen_rise = true,
            Trend::Valley => {
                if seen_rise {
                    violations.push(Violation::spanned(
                        from, to,
                        "dips again after an increasing stretch",
                    ));
                } else {
                    seen_rise = true;
                }
            }
            Trend::Peak => {
                violations.push(Violation::spanned(from, to, "rises and then falls"));
            }
        }
    }
    let (min_value, min_at) = function.global_min();
    let class = if min_value.is_one() {
        PersistenceClass::Full
    } else if min_value.is_zero() {
        PersistenceClass::PartiallyElastic
    } else {
        PersistenceClass::Elastic
    };
    ValidationReport {
        check: "D3",
        passed: violations.is_empty(),
        violations,
        witnesses: alloc::vec![Witness { label: "t*", at: min_at }],
        class: Some(class),
    }
}

fn monotone_poly_violations(
    function: &PiecewisePoly,
    increasing: bool,
    what: &str,
) -> Vec<Violation> {
    function
        .trends()
        .into_iter()
        .filter(|(_, _, trend)| match trend {
            Trend::Flat => false,
            Trend::Up => !increasing,
            Trend::Down => increasing,
            Trend::Valley | Trend::Peak => true,
        })
        .map(|(from, to, _)| {
            Violation::spanned(
                from,
                to,
                format!("{what} is not {}", if increasing { "non-decreasing" } else { "non-increasing" }),
            )
        })
        .collect()
}

/// D4: on a bounded-with-change interval, the certainty of the outgoing
/// value decays to 0 by some `t'`, the certainty of the incoming value is 0
/// until some `t'' >= t'` and then grows — so the two positive supports are
/// disjoint and no instant believes both polarities.
///
/// `outgoing` is the certainty function of the value known at the left end,
/// `incoming` of the value known at the right end, both on the same
/// interval.
pub fn check_d4(outgoing: &PiecewisePoly, incoming: &PiecewisePoly) -> ValidationReport {
    let mut violations = Vec::new();
    let mut witnesses = Vec::new();
    let lo = outgoing.lo().clone();
    let hi = outgoing.hi().clone();

    let out_zero_from = outgoing.zero_suffix_start();
    match &out_zero_from {
        None => violations.push(Violation::spanned(
            hi.clone(),
            hi.clone(),
            "outgoing value still has positive certainty at the right end",
        )),
        Some(z) => {
            if *z > lo {
                let head = outgoing.restrict(&lo, z).expect("non-degenerate prefix");
                violations.extend(monotone_poly_violations(&head, false, "outgoing certainty"));
            }
            witnesses.push(Witness { label: "t'", at: z.clone() });
        }
    }

    let in_zero_until = incoming.zero_prefix_end();
    match &in_zero_until {
        None => violations.push(Violation::spanned(
            lo.clone(),
            lo.clone(),
            "incoming value already has positive certainty at the left end",
        )),
        Some(z) => {
            if *z < hi {
                let tail = incoming.restrict(z, &hi).expect("non-degenerate suffix");
                violations.extend(monotone_poly_violations(&tail, true, "incoming certainty"));
            }
            witnesses.push(Witness { label: "t''", at: z.clone() });
        }
    }

    if let (Some(t_out), Some(t_in)) = (&out_zero_from, &in_zero_until) {
        if t_out > t_in {
            violations.push(Violation::spanned(
                t_in.clone(),
                t_out.clone(),
                "positive supports of the two polarities overlap",
            ));
        }
    }

    ValidationReport {
        check: "D4",
        passed: violations.is_empty(),
        violations,
        witnesses,
        class: None,
    }
}

/// Compares `short_fn` against `long_fn` on the shorter domain, recording a
/// violation when the required domination fails.
fn compare(
    violations: &mut Vec<Violation>,
    winner: &PiecewisePoly,
    loser: &PiecewisePoly,
    context: &str,
) {
    // the comparison runs on the shorter of the two domains
    let restricted;
    let (winner, loser) = if winner.hi() > loser.hi() {
        restricted = winner.restrict(loser.lo(), loser.hi()).expect("shorter domain is inside");
        (&restricted, loser)
    } else if loser.hi() > winner.hi() {
        restricted = loser.restrict(winner.lo(), winner.hi()).expect("shorter domain is inside");
        (winner, &restricted)
    } else {
        (winner, loser)
    };
    if let Some((at, lhs, rhs)) = winner.ge_witness(loser).expect("shared domain") {
        violations.push(Violation::spanned(
            at.clone(),
            at,
            format!("{context}: {lhs} < {rhs}"),
        ));
    }
}

fn equality_violations(
    violations: &mut Vec<Violation>,
    a: &PiecewisePoly,
    b: &PiecewisePoly,
    context: &str,
) {
    if !a.same_function(b).expect("shared domain") {
        violations.push(Violation::plain(format!(
            "{context}: equal lengths must yield pointwise-identical functions"
        )));
    }
}

fn sorted_lengths<'a>(d1: &'a Rational, d2: &'a Rational) -> (&'a Rational, &'a Rational) {
    assert!(
        *d1 > Rational::zero() && *d2 > Rational::zero(),
        "interval lengths must be positive"
    );
    if d1 <= d2 {
        (d1, d2)
    } else {
        (d2, d1)
    }
}

/// H1: across two bounded-no-change intervals, certainty in the shorter one
/// dominates at equal offsets from either end (`Prose`) or is dominated
/// (`Displayed`). Equal lengths must yield identical functions.
pub fn check_h1(
    schema: &FluentSchema,
    d1: &Rational,
    d2: &Rational,
    direction: HDirection,
) -> ValidationReport {
    let (short, long) = sorted_lengths(d1, d2);
    let zero = Rational::zero();
    let mut violations = Vec::new();
    for value in [true, false] {
        let f_short = no_change_profile(schema, value, &zero, short);
        let f_long = no_change_profile(schema, value, &zero, long);
        if short == long {
            equality_violations(&mut violations, &f_short, &f_long, &format!("value {value}"));
            continue;
        }
        let (left_winner, left_loser, right_winner, right_loser) = match direction {
            HDirection::Prose => (&f_short, &f_long, f_short.reflect(), f_long.reflect()),
            HDirection::Displayed => (&f_long, &f_short, f_long.reflect(), f_short.reflect()),
        };
        compare(
            &mut violations,
            left_winner,
            left_loser,
            &format!("value {value}, offsets from the left end"),
        );
        compare(
            &mut violations,
            &right_winner,
            &right_loser,
            &format!("value {value}, offsets from the right end"),
        );
    }
    ValidationReport::from_violations("H1", violations)
}

/// H2: a bounded-no-change interval is at least as certain as a forward
/// extrapolation at equal offsets from the reference point. Both readings
/// of homogeneity agree on this direction.
pub fn check_h2(schema: &FluentSchema, delta: &Rational) -> ValidationReport {
    assert!(*delta > Rational::zero(), "interval length must be positive");
    let zero = Rational::zero();
    let mut violations = Vec::new();
    for value in [true, false] {
        let bounded = no_change_profile(schema, value, &zero, delta);
        let forward = forward_profile(schema, value, &zero, delta);
        compare(&mut violations, &bounded, &forward, &format!("value {value}"));
    }
    ValidationReport::from_violations("H2", violations)
}

/// H3: across two bounded-with-change intervals, the shorter one decays the
/// outgoing value at least as fast and raises the incoming value at least
/// as fast (`Prose`, offsets from the left end), or the displayed variant
/// (`Displayed`: outgoing dominated left-aligned, incoming dominated
/// right-aligned). Equal lengths must yield identical functions.
pub fn check_h3(
    schema: &FluentSchema,
    d1: &Rational,
    d2: &Rational,
    direction: HDirection,
) -> ValidationReport {
    let (short, long) = sorted_lengths(d1, d2);
    let zero = Rational::zero();
    let mut violations = Vec::new();
    for left_value in [true, false] {
        let (out_short, in_short) = with_change_profile(schema, left_value, &zero, short);
        let (out_long, in_long) = with_change_profile(schema, left_value, &zero, long);
        if short == long {
            equality_violations(
                &mut violations,
                &out_short,
                &out_long,
                &format!("outgoing value {left_value}"),
            );
            equality_violations(
                &mut violations,
                &in_short,
                &in_long,
                &format!("incoming value {}", !left_value),
            );
            continue;
        }
        match direction {
            HDirection::Prose => {
                compare(
                    &mut violations,
                    &out_long,
                    &out_short,
                    &format!("outgoing value {left_value} decays faster in the shorter interval"),
                );
                compare(
                    &mut violations,
                    &in_short,
                    &in_long,
                    &format!("incoming value {} rises faster in the shorter interval", !left_value),
                );
            }
            HDirection::Displayed => {
                compare(
                    &mut violations,
                    &out_short,
                    &out_long,
                    &format!("outgoing value {left_value}, offsets from the left end"),
                );
                compare(
                    &mut violations,
                    &in_long.reflect(),
                    &in_short.reflect(),
                    &format!("incoming value {}, offsets from the right end", !left_value),
                );
            }
        }
    }
    ValidationReport::from_violations("H3", violations)
}

/// Forward/backward symmetry: the fluent persists the same way into the
/// future and into the past (per polarity, as functions).
pub fn check_fb_symmetry(schema: &FluentSchema) -> ValidationReport {
    let mut violations = Vec::new();
    if schema.forward(true) != schema.backward(true) {
        violations.push(Violation::plain("forward true differs from backward true"));
    }
    if schema.forward(false) != schema.backward(false) {
        violations.push(Violation::plain("forward false differs from backward false"));
    }
    ValidationReport::from_violations("forward/backward symmetry", violations)
}

/// Negation symmetry: the value `true` persists exactly the way `false`
/// does (per direction, as functions).
pub fn check_negation_symmetry(schema: &FluentSchema) -> ValidationReport {
    let mut violations = Vec::new();
    if schema.forward(true) != schema.forward(false) {
        violations.push(Violation::plain("forward true differs from forward false"));
    }
    if schema.backward(true) != schema.backward(false) {
        violations.push(Violation::plain("backward true differs from backward false"));
    }
    ValidationReport::from_violations("negation symmetry", violations)
}
