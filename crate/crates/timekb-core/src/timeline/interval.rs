//! Intervals over the rational time line and normalized unions of them.
//!
//! The time scale is the open continuum `(-inf, +inf)`: every actual time
//! point is a finite rational, and infinities only ever appear as interval
//! ends. Endpoint membership is exact — open versus closed bounds matter
//! throughout (informative sets must come out closed, extrapolation
//! intervals are open).

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Bound;

use crate::Rational;

/// A point of the extended time line: a finite rational or an infinity.
///
/// Infinities orient interval ends and reports; operations that take an
/// instant (cuts, queries) take finite rationals directly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TimePoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl TimePoint {
    pub fn is_finite(&self) -> bool {
        matches!(self, TimePoint::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TimePoint::Finite(value) => Some(value),
            _ => None,
        }
    }
}

impl From<Rational> for TimePoint {
    fn from(value: Rational) -> Self {
        TimePoint::Finite(value)
    }
}

impl PartialOrd for TimePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TimePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        use TimePoint::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimePoint::NegInf => f.write_str("-inf"),
            TimePoint::Finite(value) => write!(f, "{value}"),
            TimePoint::PosInf => f.write_str("+inf"),
        }
    }
}

/// Raised on malformed interval bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalError {
    /// Lower bound lies above the upper bound.
    Inverted { lower: Rational, upper: Rational },
    /// Equal endpoints with an open bound denote the empty set.
    EmptyAtPoint(Rational),
}

impl fmt::Display for IntervalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalError::Inverted { lower, upper } => {
                write!(f, "interval lower bound {lower} exceeds upper bound {upper}")
            }
            IntervalError::EmptyAtPoint(p) => {
                write!(f, "interval at {p} with an open bound is empty; use [{p}] for a point")
            }
        }
    }
}

impl core::error::Error for IntervalError {}

/// A non-empty interval of the time line.
///
/// Unbounded ends stand for `-inf`/`+inf` and are open by construction; a
/// point interval `[a, a]` has both bounds closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lower: Bound<Rational>,
    upper: Bound<Rational>,
}

impl Interval {
    pub fn new(lower: Bound<Rational>, upper: Bound<Rational>) -> Result<Self, IntervalError> {
        if let (Some(l), Some(u)) = (bound_value(&lower), bound_value(&upper)) {
            match l.cmp(u) {
                Ordering::Greater => {
                    return Err(IntervalError::Inverted { lower: l.clone(), upper: u.clone() })
                }
                Ordering::Equal => {
                    let both_closed = matches!(lower, Bound::Included(_))
                        && matches!(upper, Bound::Included(_));
                    if !both_closed {
                        return Err(IntervalError::EmptyAtPoint(l.clone()));
                    }
                }
                Ordering::Less => {}
            }
        }
        Ok(Interval { lower, upper })
    }

    pub fn closed(lower: Rational, upper: Rational) -> Result<Self, IntervalError> {
        Interval::new(Bound::Included(lower), Bound::Included(upper))
    }

    pub fn open(lower: Rational, upper: Rational) -> Result<Self, IntervalError> {
        Interval::new(Bound::Excluded(lower), Bound::Excluded(upper))
    }

    pub fn point(at: Rational) -> Self {
        Interval { lower: Bound::Included(at.clone()), upper: Bound::Included(at) }
    }

    /// `[lower, +inf)`.
    pub fn at_least(lower: Rational) -> Self {
        Interval { lower: Bound::Included(lower), upper: Bound::Unbounded }
    }

    /// `(lower, +inf)`.
    pub fn above(lower: Rational) -> Self {
        Interval { lower: Bound::Excluded(lower), upper: Bound::Unbounded }
    }

    /// `(-inf, upper]`.
    pub fn at_most(upper: Rational) -> Self {
        Interval { lower: Bound::Unbounded, upper: Bound::Included(upper) }
    }

    /// `(-inf, upper)`.
    pub fn below(upper: Rational) -> Self {
        Interval { lower: Bound::Unbounded, upper: Bound::Excluded(upper) }
    }

    /// The whole time line `(-inf, +inf)`.
    pub fn full() -> Self {
        Interval { lower: Bound::Unbounded, upper: Bound::Unbounded }
    }

    pub fn lower(&self) -> &Bound<Rational> {
        &self.lower
    }

    pub fn upper(&self) -> &Bound<Rational> {
        &self.upper
    }

    pub fn lower_point(&self) -> TimePoint {
        match &self.lower {
            Bound::Unbounded => TimePoint::NegInf,
            Bound::Included(v) | Bound::Excluded(v) => TimePoint::Finite(v.clone()),
        }
    }

    pub fn upper_point(&self) -> TimePoint {
        match &self.upper {
            Bound::Unbounded => TimePoint::PosInf,
            Bound::Included(v) | Bound::Excluded(v) => TimePoint::Finite(v.clone()),
        }
    }

    pub fn lower_closed(&self) -> bool {
        matches!(self.lower, Bound::Included(_))
    }

    pub fn upper_closed(&self) -> bool {
        matches!(self.upper, Bound::Included(_))
    }

    pub fn is_point(&self) -> bool {
        match (&self.lower, &self.upper) {
            (Bound::Included(l), Bound::Included(u)) => l == u,
            _ => false,
        }
    }

    /// Exact membership test.
    pub fn contains(&self, t: &Rational) -> bool {
        let above_lower = match &self.lower {
            Bound::Unbounded => true,
            Bound::Included(l) => t >= l,
            Bound::Excluded(l) => t > l,
        };
        let below_upper = match &self.upper {
            Bound::Unbounded => true,
            Bound::Included(u) => t <= u,
            Bound::Excluded(u) => t < u,
        };
        above_lower && below_upper
    }

    /// Both finite endpoint values, in order.
    pub fn finite_endpoints(&self) -> impl Iterator<Item = &Rational> {
        bound_value(&self.lower).into_iter().chain(bound_value(&self.upper))
    }

    /// Whether the interval is closed as a subset of the open time line:
    /// every finite endpoint is included.
    pub fn is_topologically_closed(&self) -> bool {
        !matches!(self.lower, Bound::Excluded(_)) && !matches!(self.upper, Bound::Excluded(_))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            if let Bound::Included(v) = &self.lower {
                return write!(f, "[{v}]");
            }
        }
        match &self.lower {
            Bound::Unbounded => write!(f, "(-inf,")?,
            Bound::Included(v) => write!(f, "[{v},")?,
            Bound::Excluded(v) => write!(f, "({v},")?,
        }
        match &self.upper {
            Bound::Unbounded => write!(f, "+inf)"),
            Bound::Included(v) => write!(f, "{v}]"),
            Bound::Excluded(v) => write!(f, "{v})"),
        }
    }
}

fn bound_value(bound: &Bound<Rational>) -> Option<&Rational> {
    match bound {
        Bound::Unbounded => None,
        Bound::Included(v) | Bound::Excluded(v) => Some(v),
    }
}

/// Sort key for lower bounds: position first, then closed-before-open.
fn lower_key(interval: &Interval) -> (TimePoint, u8) {
    let kind = match interval.lower {
        Bound::Unbounded | Bound::Included(_) => 0,
        Bound::Excluded(_) => 1,
    };
    (interval.lower_point(), kind)
}

/// Sort key for upper bounds: position first, then open-before-closed.
fn upper_key(interval: &Interval) -> (TimePoint, u8) {
    let kind = match interval.upper {
        Bound::Excluded(_) => 0,
        Bound::Unbounded | Bound::Included(_) => 1,
    };
    (interval.upper_point(), kind)
}

/// `left` and `right` overlap or touch (their union is one interval),
/// assuming `left`'s lower key is not above `right`'s.
fn merges_into(left: &Interval, right: &Interval) -> bool {
    let end = match bound_value(&left.upper) {
        None => return true,
        Some(v) => v,
    };
    match bound_value(&right.lower) {
        None => true,
        Some(start) => match start.cmp(end) {
            Ordering::Less => true,
            Ordering::Equal => left.upper_closed() || right.lower_closed(),
            Ordering::Greater => false,
        },
    }
}

/// A finite union of pairwise-disjoint intervals, kept normalized: sorted,
/// non-overlapping, and with touching pieces merged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn singleton(interval: Interval) -> Self {
        IntervalSet { intervals: alloc::vec![interval] }
    }

    pub fn new(mut intervals: Vec<Interval>) -> Self {
        intervals.sort_by_key(lower_key);
        let mut normalized: Vec<Interval> = Vec::with_capacity(intervals.len());
        for next in intervals {
            match normalized.last_mut() {
                Some(last) if merges_into(last, &next) => {
                    if upper_key(&next) > upper_key(last) {
                        last.upper = next.upper;
                    }
                }
                _ => normalized.push(next),
            }
        }
        IntervalSet { intervals: normalized }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, t: &Rational) -> bool {
        self.intervals.iter().any(|i| i.contains(t))
    }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<I: IntoIterator<Item = Interval>>(iter: I) -> Self {
        IntervalSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("{}");
        }
        for (i, interval) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            write!(f, "{interval}")?;
        }
        Ok(())
    }
}
