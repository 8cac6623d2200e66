//! Recursive-descent formula parser.
//!
//! Grammar (loosest binding first): `->` (right-associative), `|`, `&`,
//! `!`; parentheses; literals `true` and `false`; atoms are identifiers.
//! Implications are desugared at parse time, so the resulting tree only
//! carries negation, conjunction and disjunction.

use timekb_core::logic::Formula;

use super::{ParseError, Scanner};

/// Parses a complete formula; trailing input is an error.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut scanner = Scanner::new(text);
    scanner.skip_inline_ws();
    let formula = implication(&mut scanner)?;
    scanner.skip_inline_ws();
    if !scanner.at_end() {
        return Err(scanner.syntax_error(format!("unexpected input after formula{}", scanner.found_note())));
    }
    Ok(formula)
}

/// Parses a formula from an ongoing scanner, stopping at the first token
/// that cannot continue it.
pub(crate) fn formula(scanner: &mut Scanner<'_>) -> Result<Formula, ParseError> {
    implication(scanner)
}

fn implication(scanner: &mut Scanner<'_>) -> Result<Formula, ParseError> {
    let lhs = disjunction(scanner)?;
    scanner.skip_inline_ws();
    if scanner.peek() == Some('-') {
        scanner.bump();
        scanner.expect('>')?;
        scanner.skip_inline_ws();
        let rhs = implication(scanner)?;
        return Ok(Formula::implies(lhs, rhs));
    }
    Ok(lhs)
}

fn disjunction(scanner: &mut Scanner<'_>) -> Result<Formula, ParseError> {
    let mut lhs = conjunction(scanner)?;
    loop {
        scanner.skip_inline_ws();
        if scanner.peek() == Some('|') {
            scanner.bump();
            scanner.skip_inline_ws();
            let rhs = conjunction(scanner)?;
            lhs = Formula::or(lhs, rhs);
        } else {
            return Ok(lhs);
        }
    }
}

fn conjunction(scanner: &mut Scanner<'_>) -> Result<Formula, ParseError> {
    let mut lhs = unary(scanner)?;
    loop {
        scanner.skip_inline_ws();
        if scanner.peek() == Some('&') {
            scanner.bump();
            scanner.skip_inline_ws();
            let rhs = unary(scanner)?;
            lhs = Formula::and(lhs, rhs);
        } else {
            return Ok(lhs);
        }
    }
}

fn unary(scanner: &mut Scanner<'_>) -> Result<Formula, ParseError> {
    scanner.skip_inline_ws();
    match scanner.peek() {
        Some('!') => {
            scanner.bump();
            Ok(Formula::not(unary(scanner)?))
        }
        Some('(') => {
            scanner.bump();
            let inner = implication(scanner)?;
            scanner.skip_inline_ws();
            scanner.expect(')')?;
            Ok(inner)
        }
        _ => {
            let at = scanner.position();
            match scanner.ident() {
                Some(name) if name == "true" => Ok(Formula::Top),
                Some(name) if name == "false" => Ok(Formula::Bottom),
                Some(name) => Ok(Formula::atom(name)),
                None => Err(scanner.error_at(
                    at,
                    super::ErrorKind::Syntax,
                    format!("expected a formula{}", scanner.found_note()),
                )),
            }
        }
    }
}
