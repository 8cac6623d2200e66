//! Parsers for the tool's three text formats: formulas, knowledge-base
//! files and persistence-schema files. All parsers report exact
//! line/column diagnostics and distinguish syntax errors (malformed text)
//! from semantic errors (well-formed text denoting an invalid object,
//! such as a rising persistence function).

mod formula;
mod interval;
mod kb;
mod schema;

pub use formula::parse_formula;
pub use interval::parse_interval;
pub use kb::parse_kb;
pub use schema::parse_schema;

/// Parses a full string as an exact rational scalar (`p`, `p/q`, or a
/// decimal).
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let mut scanner = Scanner::new(text);
    scanner.skip_inline_ws();
    let value = scanner.rational()?;
    scanner.skip_inline_ws();
    if !scanner.at_end() {
        return Err(scanner.syntax_error(format!("unexpected input after number{}", scanner.found_note())));
    }
    Ok(value)
}

use std::fmt;

use num_bigint::BigInt;
use timekb_core::Rational;

/// How a parse failed: the text itself is malformed, or it denotes an
/// invalid object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Semantic,
}

/// A diagnostic with an exact 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
    pub kind: ErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Character cursor with position tracking and `#` comment support.
pub(crate) struct Scanner<'a> {
    rest: &'a str,
    line: u32,
    col: u32,
}

impl<'a> Scanner<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Scanner { rest: src, line: 1, col: 1 }
    }

    /// A scanner for an isolated line of a larger file.
    pub(crate) fn for_line(src: &'a str, line: u32) -> Self {
        Scanner { rest: src, line, col: 1 }
    }

    pub(crate) fn syntax_error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, message: message.into(), kind: ErrorKind::Syntax }
    }

    pub(crate) fn error_at(
        &self,
        at: (u32, u32),
        kind: ErrorKind,
        message: impl Into<String>,
    ) -> ParseError {
        ParseError { line: at.0, col: at.1, message: message.into(), kind }
    }

    pub(crate) fn position(&self) -> (u32, u32) {
        (self.line, self.col)
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest.chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.rest = &self.rest[c.len_utf8()..];
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Skips spaces and tabs (never newlines).
    pub(crate) fn skip_inline_ws(&mut self) {
        while matches!(self.peek(), Some(' ') | Some('\t') | Some('\r')) {
            self.bump();
        }
    }

    /// Skips whitespace including newlines, and `#` comments to end of line.
    pub(crate) fn skip_ws_and_comments(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => return,
            }
        }
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax_error(format!("expected `{c}`{}", self.found_note())))
        }
    }

    pub(crate) fn found_note(&self) -> String {
        match self.peek() {
            Some(c) => format!(", found `{c}`"),
            None => ", found end of input".to_string(),
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.peek().is_none()
    }

    /// Consumes an identifier `[A-Za-z_][A-Za-z0-9_]*` if one starts here.
    pub(crate) fn ident(&mut self) -> Option<String> {
        let first = self.peek()?;
        if !(first.is_ascii_alphabetic() || first == '_') {
            return None;
        }
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Some(name)
    }

    /// Consumes a keyword exactly (an identifier equal to `word`).
    pub(crate) fn expect_keyword(&mut self, word: &str) -> Result<(), ParseError> {
        let at = self.position();
        match self.ident() {
            Some(found) if found == word => Ok(()),
            Some(found) => {
                Err(self.error_at(at, ErrorKind::Syntax, format!("expected `{word}`, found `{found}`")))
            }
            None => Err(self.syntax_error(format!("expected `{word}`{}", self.found_note()))),
        }
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() {
            Err(self.syntax_error(format!("expected a digit{}", self.found_note())))
        } else {
            Ok(out)
        }
    }

    /// Consumes an exact rational scalar: `p`, `p/q`, or a decimal `p.d`,
    /// optionally signed.
    pub(crate) fn rational(&mut self) -> Result<Rational, ParseError> {
        let negative = self.eat('-');
        let whole = self.digits()?;
        let mut numer: BigInt = whole.parse().expect("digits parse as an integer");
        let mut denom = BigInt::from(1);
        if self.eat('/') {
            let at = self.position();
            let q: BigInt = self.digits()?.parse().expect("digits parse as an integer");
            if q == BigInt::from(0) {
                return Err(self.error_at(at, ErrorKind::Semantic, "denominator must be non-zero"));
            }
            denom = q;
        } else if self.eat('.') {
            let frac = self.digits()?;
            let scale = BigInt::from(10).pow(frac.len() as u32);
            numer = numer * &scale + frac.parse::<BigInt>().expect("digits parse as an integer");
            denom = scale;
        }
        if negative {
            numer = -numer;
        }
        Ok(Rational::new(numer, denom))
    }
}
