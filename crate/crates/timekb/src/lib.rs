//! File formats and text output for the `timekb` temporal reasoner.
//!
//! The reasoning itself lives in `timekb-core`; this crate adds the parts
//! that touch text and the outside world: parsers for formulas, timed
//! knowledge bases and persistence schemata ([`parse`]), and canonical
//! rendering plus decimal presentation ([`render`]). The `timekb` binary
//! is a thin front end over the two.

pub mod parse;
pub mod render;
