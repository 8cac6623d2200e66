//! Interval parser: `[a,b]`, `(a,b)`, `[a,b)`, `(a,b]`, the point form
//! `[a]`, and `-inf`/`+inf` endpoints (which must be open).

use core::ops::Bound;

use timekb_core::timeline::Interval;
use timekb_core::Rational;

use super::{ErrorKind, ParseError, Scanner};

enum Endpoint {
    NegInf,
    PosInf,
    Finite(Rational),
}

fn endpoint(scanner: &mut Scanner<'_>) -> Result<Endpoint, ParseError> {
    let at = scanner.position();
    match scanner.peek() {
        Some('+') => {
            scanner.bump();
            scanner.expect_keyword("inf")?;
            Ok(Endpoint::PosInf)
        }
        Some('-') if !matches!(scanner.rest_first_after_sign(), Some(c) if c.is_ascii_digit()) => {
            scanner.bump();
            scanner.expect_keyword("inf")?;
            Ok(Endpoint::NegInf)
        }
        Some(c) if c == '-' || c.is_ascii_digit() => Ok(Endpoint::Finite(scanner.rational()?)),
        _ => Err(scanner.error_at(
            at,
            ErrorKind::Syntax,
            format!("expected an interval endpoint{}", scanner.found_note()),
        )),
    }
}

/// Parses a complete interval; trailing input is an error.
pub fn parse_interval(text: &str) -> Result<Interval, ParseError> {
    let mut scanner = Scanner::new(text);
    scanner.skip_inline_ws();
    let parsed = interval(&mut scanner)?;
    scanner.skip_inline_ws();
    if !scanner.at_end() {
        return Err(scanner.syntax_error(format!("unexpected input after interval{}", scanner.found_note())));
    }
    Ok(parsed)
}

/// Parses an interval from an ongoing scanner.
pub(crate) fn interval(scanner: &mut Scanner<'_>) -> Result<Interval, ParseError> {
    let start = scanner.position();
    let lower_closed = match scanner.peek() {
        Some('[') => true,
        Some('(') => false,
        _ => {
            return Err(scanner.syntax_error(format!("expected `[` or `(`{}", scanner.found_note())))
        }
    };
    scanner.bump();
    scanner.skip_inline_ws();
    let lower_at = scanner.position();
    let lower = endpoint(scanner)?;
    scanner.skip_inline_ws();

    // point form `[a]`
    if scanner.peek() == Some(']') && lower_closed {
        scanner.bump();
        return match lower {
            Endpoint::Finite(value) => Ok(Interval::point(value)),
            _ => Err(scanner.error_at(
                lower_at,
                ErrorKind::Semantic,
                "a point interval needs a finite time point",
            )),
        };
    }

    scanner.expect(',')?;
    scanner.skip_inline_ws();
    let upper_at = scanner.position();
    let upper = endpoint(scanner)?;
    scanner.skip_inline_ws();
    let upper_closed = match scanner.peek() {
        Some(']') => true,
        Some(')') => false,
        _ => {
            return Err(scanner.syntax_error(format!("expected `]` or `)`{}", scanner.found_note())))
        }
    };
    scanner.bump();

    let lower = match lower {
        Endpoint::NegInf if lower_closed => {
            return Err(scanner.error_at(
                lower_at,
                ErrorKind::Semantic,
                "an infinite endpoint must be open; use `(`",
            ))
        }
        Endpoint::NegInf => Bound::Unbounded,
        Endpoint::PosInf => {
            return Err(scanner.error_at(lower_at, ErrorKind::Semantic, "`+inf` cannot be a lower endpoint"))
        }
        Endpoint::Finite(value) => {
            if lower_closed {
                Bound::Included(value)
            } else {
                Bound::Excluded(value)
            }
        }
    };
    let upper = match upper {
        Endpoint::PosInf if upper_closed => {
            return Err(scanner.error_at(
                upper_at,
                ErrorKind::Semantic,
                "an infinite endpoint must be open; use `)`",
            ))
        }
        Endpoint::PosInf => Bound::Unbounded,
        Endpoint::NegInf => {
            return Err(scanner.error_at(upper_at, ErrorKind::Semantic, "`-inf` cannot be an upper endpoint"))
        }
        Endpoint::Finite(value) => {
            if upper_closed {
                Bound::Included(value)
            } else {
                Bound::Excluded(value)
            }
        }
    };

    Interval::new(lower, upper)
        .map_err(|e| scanner.error_at(start, ErrorKind::Semantic, e.to_string()))
}

impl Scanner<'_> {
    /// The character right after a leading `-`, used to tell `-inf` from a
    /// negative number without consuming anything.
    fn rest_first_after_sign(&self) -> Option<char> {
        let mut chars = self.rest.chars();
        chars.next();
        chars.next()
    }
}
