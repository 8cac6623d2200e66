//! Exact piecewise-polynomial functions on a bounded domain.
//!
//! Persistence class constructions instantiated on an interval are not all
//! piecewise linear: the bounded-with-change construction multiplies a
//! piecewise-linear decay by a piecewise-linear taper, which yields
//! quadratic pieces. This module carries the exact machinery the shape
//! validators need for such functions: pointwise comparison, monotonicity
//! of pieces, global minima and zero runs — all in rational arithmetic,
//! with quadratic pieces handled through their vertex rather than sampling.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::Zero;

use crate::{ratio, Rational};

/// A polynomial of degree at most 2: `c0 + c1·x + c2·x²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub(crate) c0: Rational,
    pub(crate) c1: Rational,
    pub(crate) c2: Rational,
}

impl Poly {
    /// The line through `(x0, y0)` and `(x1, y1)`; `x0 != x1`.
    pub(crate) fn line(x0: &Rational, y0: &Rational, x1: &Rational, y1: &Rational) -> Self {
        let slope = (y1 - y0) / (x1 - x0);
        Poly { c0: y0 - &slope * x0, c1: slope, c2: Rational::zero() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &self.c0 + (&self.c1 + &self.c2 * x) * x
    }

    fn degree(&self) -> u8 {
        if !self.c2.is_zero() {
            2
        } else if !self.c1.is_zero() {
            1
        } else {
            0
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.degree() == 0 && self.c0.is_zero()
    }

    fn sub(&self, other: &Poly) -> Poly {
        Poly { c0: &self.c0 - &other.c0, c1: &self.c1 - &other.c1, c2: &self.c2 - &other.c2 }
    }

    fn mul(&self, other: &Poly) -> Option<Poly> {
        if self.degree() + other.degree() > 2 {
            return None;
        }
        Some(Poly {
            c0: &self.c0 * &other.c0,
            c1: &self.c0 * &other.c1 + &self.c1 * &other.c0,
            c2: &self.c0 * &other.c2 + &self.c1 * &other.c1 + &self.c2 * &other.c0,
        })
    }

    /// Derivative value at `x`.
    fn slope_at(&self, x: &Rational) -> Rational {
        &self.c1 + ratio(2, 1) * &self.c2 * x
    }

    /// Vertex of a genuine quadratic.
    fn vertex(&self) -> Option<Rational> {
        if self.c2.is_zero() {
            None
        } else {
            Some(-&self.c1 / (ratio(2, 1) * &self.c2))
        }
    }

    /// Minimum of the piece over `[a, b]`, with the first point attaining it.
    fn min_on(&self, a: &Rational, b: &Rational) -> (Rational, Rational) {
        let mut candidates = Vec::with_capacity(3);
        candidates.push(a.clone());
        if self.c2 > Rational::zero() {
            if let Some(v) = self.vertex() {
                if &v > a && &v < b {
                    candidates.push(v);
                }
            }
        }
        candidates.push(b.clone());
        let mut best_x = candidates[0].clone();
        let mut best = self.eval(&best_x);
        for x in &candidates[1..] {
            let y = self.eval(x);
            if y < best {
                best = y;
                best_x = x.clone();
            }
        }
        (best, best_x)
    }
}

/// Direction of a single polynomial piece over its interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trend {
    Flat,
    Down,
    Up,
    /// Decreases, then increases (convex vertex inside the piece).
    Valley,
    /// Increases, then decreases (concave vertex inside the piece).
    Peak,
}

/// Raised on malformed constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    TooFewPoints,
    XNotIncreasing(Rational),
    DomainMismatch,
    DegreeTooHigh,
    OutsideDomain(Rational),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::TooFewPoints => f.write_str("need at least two sample points"),
            PolyError::XNotIncreasing(x) => {
                write!(f, "sample abscissas must be strictly increasing (at {x})")
            }
            PolyError::DomainMismatch => f.write_str("functions are defined on different domains"),
            PolyError::DegreeTooHigh => f.write_str("product would exceed quadratic degree"),
            PolyError::OutsideDomain(x) => write!(f, "{x} lies outside the function domain"),
        }
    }
}

impl core::error::Error for PolyError {}

/// A continuous piecewise-polynomial function (pieces of degree at most 2)
/// on a bounded domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePoly {
    /// `n + 1` strictly increasing piece boundaries.
    breaks: Vec<Rational>,
    /// `n` pieces; `polys[i]` is valid on `[breaks[i], breaks[i + 1]]`.
    polys: Vec<Poly>,
}

impl PiecewisePoly {
    fn assemble(breaks: Vec<Rational>, polys: Vec<Poly>) -> Self {
        debug_assert_eq!(breaks.len(), polys.len() + 1);
        debug_assert!(breaks.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(
            polys
                .windows(2)
                .zip(breaks[1..].iter())
                .all(|(pair, b)| pair[0].eval(b) == pair[1].eval(b)),
            "pieces must agree at their shared boundary"
        );
        let mut merged = PiecewisePoly { breaks: Vec::new(), polys: Vec::new() };
        let mut bounds = breaks.into_iter();
        let mut lo = bounds.next().expect("at least one boundary");
        for (poly, hi) in polys.into_iter().zip(bounds) {
            merged.push_piece(lo, hi.clone(), poly);
            lo = hi;
        }
        merged
    }

    fn push_piece(&mut self, lo: Rational, hi: Rational, poly: Poly) {
        if self.polys.last() == Some(&poly) {
            *self.breaks.last_mut().expect("non-empty") = hi;
            return;
        }
        if self.breaks.is_empty() {
            self.breaks.push(lo);
        }
        self.breaks.push(hi);
        self.polys.push(poly);
    }

    /// Piecewise-linear interpolation through strictly increasing samples.
    pub fn from_points(points: &[(Rational, Rational)]) -> Result<Self, PolyError> {
        if points.len() < 2 {
            return Err(PolyError::TooFewPoints);
        }
        for pair in points.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(PolyError::XNotIncreasing(pair[1].0.clone()));
            }
        }
        let breaks = points.iter().map(|(x, _)| x.clone()).collect();
        let polys = points
            .windows(2)
            .map(|pair| Poly::line(&pair[0].0, &pair[0].1, &pair[1].0, &pair[1].1))
            .collect();
        Ok(Self::assemble(breaks, polys))
    }

    pub fn lo(&self) -> &Rational {
        &self.breaks[0]
    }

    pub fn hi(&self) -> &Rational {
        &self.breaks[self.breaks.len() - 1]
    }

    fn piece_index(&self, x: &Rational) -> Option<usize> {
        if x < self.lo() || x > self.hi() {
            return None;
        }
        // last piece whose lower boundary is <= x
        Some(self.breaks.partition_point(|b| b <= x).saturating_sub(1).min(self.polys.len() - 1))
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, PolyError> {
        let i = self.piece_index(x).ok_or_else(|| PolyError::OutsideDomain(x.clone()))?;
        Ok(self.polys[i].eval(x))
    }

    /// The function restricted to `[lo, hi]` (a non-degenerate sub-domain).
    pub fn restrict(&self, lo: &Rational, hi: &Rational) -> Result<Self, PolyError> {
        if lo >= hi {
            return Err(PolyError::DomainMismatch);
        }
        if lo < self.lo() || hi > self.hi() {
            return Err(PolyError::OutsideDomain(if lo < self.lo() {
                lo.clone()
            } else {
                hi.clone()
            }));
        }
        let mut breaks = Vec::new();
        let mut polys = Vec::new();
        breaks.push(lo.clone());
        for (i, poly) in self.polys.iter().enumerate() {
            let (a, b) = (&self.breaks[i], &self.breaks[i + 1]);
            if b <= lo || a >= hi {
                continue;
            }
            let end = if b < hi { b } else { hi };
            breaks.push(end.clone());
            polys.push(poly.clone());
        }
        Ok(Self::assemble(breaks, polys))
    }

    /// The reflection `x -> f(lo + hi - x)` on the same domain.
    pub fn reflect(&self) -> Self {
        let total = self.lo() + self.hi();
        let breaks: Vec<Rational> = self.breaks.iter().rev().map(|b| &total - b).collect();
        let polys: Vec<Poly> = self
            .polys
            .iter()
            .rev()
            .map(|p| Poly {
                c0: &p.c0 + &p.c1 * &total + &p.c2 * &total * &total,
                c1: -(&p.c1 + ratio(2, 1) * &p.c2 * &total),
                c2: p.c2.clone(),
            })
            .collect();
        Self::assemble(breaks, polys)
    }

    /// The union of both break grids over a shared domain.
    fn merged_breaks(&self, other: &Self) -> Result<Vec<Rational>, PolyError> {
        if self.lo() != other.lo() || self.hi() != other.hi() {
            return Err(PolyError::DomainMismatch);
        }
        let mut all: Vec<Rational> = self.breaks.iter().chain(other.breaks.iter()).cloned().collect();
        all.sort();
        all.dedup();
        Ok(all)
    }

    /// Exact pointwise product; fails if any resulting piece would exceed
    /// degree 2.
    pub fn product(&self, other: &Self) -> Result<Self, PolyError> {
        let grid = self.merged_breaks(other)?;
        let mut polys = Vec::with_capacity(grid.len() - 1);
        for pair in grid.windows(2) {
            let a = &pair[0];
            let p = &self.polys[self.piece_index(a).expect("grid point in domain")];
            let q = &other.polys[other.piece_index(a).expect("grid point in domain")];
            polys.push(p.mul(q).ok_or(PolyError::DegreeTooHigh)?);
        }
        Ok(Self::assemble(grid, polys))
    }

    /// Exact pointwise maximum of two piecewise-linear functions; crossing
    /// points become breaks. Fails on quadratic pieces.
    pub fn pointwise_max(&self, other: &Self) -> Result<Self, PolyError> {
        if self.polys.iter().chain(other.polys.iter()).any(|p| p.degree() > 1) {
            return Err(PolyError::DegreeTooHigh);
        }
        let grid = self.merged_breaks(other)?;
        let mut out = PiecewisePoly { breaks: Vec::new(), polys: Vec::new() };
        for pair in grid.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let p = self.polys[self.piece_index(a).expect("in domain")].clone();
            let q = other.polys[other.piece_index(a).expect("in domain")].clone();
            let diff = p.sub(&q);
            let (da, db) = (diff.eval(a), diff.eval(b));
            if da >= Rational::zero() && db >= Rational::zero() {
                out.push_piece(a.clone(), b.clone(), p);
            } else if da <= Rational::zero() && db <= Rational::zero() {
                out.push_piece(a.clone(), b.clone(), q);
            } else {
                // strict sign change: the lines cross inside the piece
                let cross = -&diff.c0 / &diff.c1;
                let (first, second) = if da > Rational::zero() { (p, q) } else { (q, p) };
                out.push_piece(a.clone(), cross.clone(), first);
                out.push_piece(cross, b.clone(), second);
            }
        }
        Ok(out)
    }

    /// A point where `self` falls strictly below `other`, if any, together
    /// with both values there (the earliest failing piece boundary or
    /// vertex). `None` means `self >= other` throughout the shared domain.
    pub fn ge_witness(&self, other: &Self) -> Result<Option<(Rational, Rational, Rational)>, PolyError> {
        let grid = self.merged_breaks(other)?;
        for pair in grid.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let p = &self.polys[self.piece_index(a).expect("in domain")];
            let q = &other.polys[other.piece_index(a).expect("in domain")];
            let diff = p.sub(q);
            let (min, at) = diff.min_on(a, b);
            if min < Rational::zero() {
                // walk candidates in x-order for the earliest witness
                for x in [a.clone(), at.clone(), b.clone()] {
                    if diff.eval(&x) < Rational::zero() {
                        return Ok(Some((x.clone(), p.eval(&x), q.eval(&x))));
                    }
                }
            }
        }
        Ok(None)
    }

    /// `self >= other` everywhere on the shared domain.
    pub fn dominates(&self, other: &Self) -> Result<bool, PolyError> {
        Ok(self.ge_witness(other)?.is_none())
    }

    /// Equality as functions.
    pub fn same_function(&self, other: &Self) -> Result<bool, PolyError> {
        Ok(self.dominates(other)? && other.dominates(self)?)
    }

    /// Global minimum value and the first point attaining it.
    pub fn global_min(&self) -> (Rational, Rational) {
        let mut best: Option<(Rational, Rational)> = None;
        for (i, poly) in self.polys.iter().enumerate() {
            let (value, at) = poly.min_on(&self.breaks[i], &self.breaks[i + 1]);
            match &best {
                Some((b, _)) if *b <= value => {}
                _ => best = Some((value, at)),
            }
        }
        best.expect("at least one piece")
    }

    /// Per-piece directional classification, with piece bounds.
    pub fn trends(&self) -> Vec<(Rational, Rational, Trend)> {
        self.polys
            .iter()
            .enumerate()
            .map(|(i, poly)| {
                let (a, b) = (&self.breaks[i], &self.breaks[i + 1]);
                let trend = if poly.c2.is_zero() {
                    match poly.c1.cmp(&Rational::zero()) {
                        Ordering::Less => Trend::Down,
                        Ordering::Equal => Trend::Flat,
                        Ordering::Greater => Trend::Up,
                    }
                } else {
                    let (sa, sb) = (poly.slope_at(a), poly.slope_at(b));
                    if sa <= Rational::zero() && sb <= Rational::zero() {
                        Trend::Down
                    } else if sa >= Rational::zero() && sb >= Rational::zero() {
                        Trend::Up
                    } else if sa < Rational::zero() {
                        Trend::Valley
                    } else {
                        Trend::Peak
                    }
                };
                (a.clone(), b.clone(), trend)
            })
            .collect()
    }

    /// Smallest `z` such that the function is identically zero on
    /// `[z, hi]`; `None` if it is nonzero at the right end.
    pub fn zero_suffix_start(&self) -> Option<Rational> {
        let mut z = self.hi().clone();
        for (i, poly) in self.polys.iter().enumerate().rev() {
            if !poly.is_zero() {
                break;
            }
            z = self.breaks[i].clone();
        }
        if z == *self.hi() && self.eval(&z).expect("hi is in domain") != Rational::zero() {
            return None;
        }
        Some(z)
    }

    /// Largest `z` such that the function is identically zero on
    /// `[lo, z]`; `None` if it is nonzero at the left end.
    pub fn zero_prefix_end(&self) -> Option<Rational> {
        let mut z = self.lo().clone();
        for (i, poly) in self.polys.iter().enumerate() {
            if !poly.is_zero() {
                break;
            }
            z = self.breaks[i + 1].clone();
        }
        if z == *self.lo() && self.eval(&z).expect("lo is in domain") != Rational::zero() {
            return None;
        }
        Some(z)
    }
}

impl fmt::Display for PiecewisePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "piecewise[{} pieces on [{},{}]]", self.polys.len(), self.lo(), self.hi())
    }
}
