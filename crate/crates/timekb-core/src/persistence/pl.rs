//! Piecewise-linear certainty functions of a non-negative offset.

use alloc::vec::Vec;
use core::fmt;

use crate::posslog::Degree;
use crate::Rational;

/// A continuous piecewise-linear function from offsets (distances to a
/// reference time point) to certainty degrees.
///
/// The function interpolates linearly between its breakpoints and holds the
/// last value constant beyond the final offset (the asymptote). The first
/// breakpoint must sit at offset 0. Construction canonicalizes the
/// breakpoint list — collinear interior points and redundant trailing
/// points are dropped — so equality of breakpoint lists is equality of
/// functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinearFn {
    breakpoints: Vec<(Rational, Degree)>,
}

/// Raised on malformed breakpoint lists or negative evaluation offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlError {
    Empty,
    FirstOffsetNotZero(Rational),
    OffsetsNotIncreasing { at: Rational },
    NegativeOffset(Rational),
}

impl fmt::Display for PlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlError::Empty => f.write_str("piecewise-linear function needs at least one breakpoint"),
            PlError::FirstOffsetNotZero(o) => {
                write!(f, "first breakpoint must sit at offset 0, found {o}")
            }
            PlError::OffsetsNotIncreasing { at } => {
                write!(f, "breakpoint offsets must be strictly increasing (at offset {at})")
            }
            PlError::NegativeOffset(o) => write!(f, "cannot evaluate at negative offset {o}"),
        }
    }
}

impl core::error::Error for PlError {}

impl PiecewiseLinearFn {
    pub fn new(breakpoints: Vec<(Rational, Degree)>) -> Result<Self, PlError> {
        let first = breakpoints.first().ok_or(PlError::Empty)?;
        if !num_traits::Zero::is_zero(&first.0) {
            return Err(PlError::FirstOffsetNotZero(first.0.clone()));
        }
        for pair in breakpoints.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(PlError::OffsetsNotIncreasing { at: pair[1].0.clone() });
            }
        }
        Ok(PiecewiseLinearFn { breakpoints: canonicalize(breakpoints) })
    }

    /// Builds a function from small-integer `(offset, numer/denom)` triples;
    /// panics on malformed input. Convenience for fixtures.
    pub fn from_breakpoints(points: &[(i64, i64, i64)]) -> Self {
        PiecewiseLinearFn::new(
            points
                .iter()
                .map(|(o, n, d)| (crate::int(*o), Degree::from_ratio(*n, *d)))
                .collect(),
        )
        .expect("well-formed breakpoints")
    }

    /// The constant function with the given value.
    pub fn constant(value: Degree) -> Self {
        PiecewiseLinearFn { breakpoints: alloc::vec![(Rational::from_integer(0.into()), value)] }
    }

    pub fn breakpoints(&self) -> &[(Rational, Degree)] {
        &self.breakpoints
    }

    /// Value at offset 0.
    pub fn initial_value(&self) -> &Degree {
        &self.breakpoints[0].1
    }

    /// Value held beyond the last breakpoint.
    pub fn final_value(&self) -> &Degree {
        &self.breakpoints[self.breakpoints.len() - 1].1
    }

    /// Exact evaluation: linear interpolation on the segment containing the
    /// offset, the final value beyond the last breakpoint.
    pub fn eval(&self, offset: &Rational) -> Result<Degree, PlError> {
        if offset < &Rational::from_integer(0.into()) {
            return Err(PlError::NegativeOffset(offset.clone()));
        }
        let last = &self.breakpoints[self.breakpoints.len() - 1];
        if offset >= &last.0 {
            return Ok(last.1.clone());
        }
        let i = self
            .breakpoints
            .partition_point(|(o, _)| o <= offset)
            .saturating_sub(1);
        let (o0, v0) = &self.breakpoints[i];
        let (o1, v1) = &self.breakpoints[i + 1];
        if offset == o0 {
            return Ok(v0.clone());
        }
        let span = v1.value() - v0.value();
        let value = v0.value() + span * (offset - o0) / (o1 - o0);
        Ok(Degree::new(value).expect("interpolation between degrees stays in [0, 1]"))
    }

    /// Whether consecutive breakpoint values never rise (the function is
    /// non-increasing).
    pub fn is_non_increasing(&self) -> bool {
        self.breakpoints.windows(2).all(|pair| pair[1].1 <= pair[0].1)
    }
}

impl fmt::Display for PiecewiseLinearFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("pw[")?;
        for (i, (offset, value)) in self.breakpoints.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({offset},{value})")?;
        }
        f.write_str("]")
    }
}

/// Drops redundant trailing points (equal to their predecessor's value, so
/// the asymptote already covers them) and collinear interior points.
fn canonicalize(points: Vec<(Rational, Degree)>) -> Vec<(Rational, Degree)> {
    let mut out: Vec<(Rational, Degree)> = Vec::with_capacity(points.len());
    for point in points {
        out.push(point);
        while out.len() >= 3 {
            let [a, b, c] = &out[out.len() - 3..] else { unreachable!() };
            let left = (b.1.value() - a.1.value()) * (&c.0 - &b.0);
            let right = (c.1.value() - b.1.value()) * (&b.0 - &a.0);
            if left == right {
                out.remove(out.len() - 2);
            } else {
                break;
            }
        }
    }
    while out.len() >= 2 && out[out.len() - 1].1 == out[out.len() - 2].1 {
        out.pop();
    }
    out
}
