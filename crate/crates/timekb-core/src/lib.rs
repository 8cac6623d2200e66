//! Graded temporal reasoning over timed knowledge bases.
//!
//! The crate answers queries of the form "how certain is φ at time t?" from
//! two inputs: a *timed knowledge base* of hard facts holding over intervals
//! of a continuous time scale, and per-fluent *persistence schemata*
//! describing how certainty in a fluent's last known value decays with
//! temporal distance from it. Certainty is measured by necessity degrees in
//! the sense of possibility theory, and queries are answered nonmonotonically:
//! a conclusion is accepted when its necessity strictly exceeds the
//! inconsistency degree of the extrapolated knowledge at that instant.
//!
//! Everything is computed with exact rational arithmetic; acceptance hinges
//! on strict comparisons between degrees, so floating point is never used.
//!
//! Modules:
//! - [`logic`] — propositional formulas over fluent atoms, model enumeration,
//!   classical entailment and four-valued belief status.
//! - [`posslog`] — possibilistic knowledge bases: least-specific possibility
//!   distribution, necessity/possibility measures, inconsistency degree, and
//!   the nonmonotonic inference relation.
//! - [`timeline`] — intervals over the rational time line, timed knowledge
//!   bases, cuts, informative time points and extrapolation problems.
//! - [`persistence`] — piecewise-linear persistence schemata, the canonical
//!   class constructions, axiom validators, and the application of schemata
//!   to a history at an instant.
//! - [`engine`] — end-to-end query evaluation and certainty timelines.
//!
//! The crate is `no_std` (with `alloc`); parsing, file formats and the
//! command-line front end live in the companion `timekb` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod engine;
pub mod logic;
pub mod persistence;
pub mod posslog;
pub mod timeline;

/// Exact rational scalar used throughout (time points, degrees, offsets).
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;

/// Shorthand for building a [`Rational`] from small integers.
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for building an integral [`Rational`].
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}
