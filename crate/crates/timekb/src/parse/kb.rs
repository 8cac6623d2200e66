//! Knowledge-base file parser. One declaration per line:
//!
//! ```text
//! # comment
//! at [0,10]: A
//! at [15]: !A | !B
//! at (30,+inf): maintenance -> !A
//! ```

use timekb_core::timeline::{TimedFormula, TimedKb};

use super::{formula, interval, ParseError, Scanner};

/// Parses a knowledge-base file: `#` comments, blank lines, and one
/// `at <interval>: <formula>` declaration per line.
pub fn parse_kb(text: &str) -> Result<TimedKb, ParseError> {
    let mut kb = TimedKb::new();
    for (index, raw_line) in text.lines().enumerate() {
        let line_no = index as u32 + 1;
        let content = match raw_line.find('#') {
            Some(at) => &raw_line[..at],
            None => raw_line,
        };
        if content.trim().is_empty() {
            continue;
        }
        let mut scanner = Scanner::for_line(content, line_no);
        scanner.skip_inline_ws();
        scanner.expect_keyword("at")?;
        scanner.skip_inline_ws();
        let tau = interval::interval(&mut scanner)?;
        scanner.skip_inline_ws();
        scanner.expect(':')?;
        scanner.skip_inline_ws();
        let phi = formula::formula(&mut scanner)?;
        scanner.skip_inline_ws();
        if !scanner.at_end() {
            return Err(scanner
                .syntax_error(format!("unexpected input after declaration{}", scanner.found_note())));
        }
        kb.push(TimedFormula::on(tau, phi));
    }
    Ok(kb)
}
