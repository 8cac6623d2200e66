//! Persistence-schema file parser. One block per fluent:
//!
//! ```text
//! fluent A {
//!   forward true: pw[(0,1),(8,1/5)];
//!   backward true: pw[(0,1),(10,0)];
//!   forward false: pw[(0,1),(2,0)];
//!   backward false: pw[(0,1),(2,0)];
//!   change_split: 1/2;
//! }
//! ```
//!
//! All four functions are required, `change_split` is optional (midpoint
//! by default), and unknown keys are errors.

use timekb_core::logic::Atom;
use timekb_core::persistence::{FluentSchema, PiecewiseLinearFn, SchemaSet};
use timekb_core::posslog::Degree;
use timekb_core::Rational;

use super::{ErrorKind, ParseError, Scanner};

/// Parses a schema file into a schema set.
pub fn parse_schema(text: &str) -> Result<SchemaSet, ParseError> {
    let mut scanner = Scanner::new(text);
    let mut schemas = SchemaSet::new();
    loop {
        scanner.skip_ws_and_comments();
        if scanner.at_end() {
            return Ok(schemas);
        }
        let block_at = scanner.position();
        scanner.expect_keyword("fluent")?;
        scanner.skip_ws_and_comments();
        let name = scanner
            .ident()
            .ok_or_else(|| scanner.syntax_error(format!("expected a fluent name{}", scanner.found_note())))?;
        scanner.skip_ws_and_comments();
        scanner.expect('{')?;

        let mut forward_true = None;
        let mut backward_true = None;
        let mut forward_false = None;
        let mut backward_false = None;
        let mut change_split: Option<Rational> = None;
        loop {
            scanner.skip_ws_and_comments();
            if scanner.eat('}') {
                break;
            }
            let key_at = scanner.position();
            let key = scanner
                .ident()
                .ok_or_else(|| scanner.syntax_error(format!("expected a schema key or `}}`{}", scanner.found_note())))?;
            match key.as_str() {
                "forward" | "backward" => {
                    scanner.skip_ws_and_comments();
                    let polarity_at = scanner.position();
                    let polarity = scanner.ident().ok_or_else(|| {
                        scanner.syntax_error(format!("expected `true` or `false`{}", scanner.found_note()))
                    })?;
                    let slot = match (key.as_str(), polarity.as_str()) {
                        ("forward", "true") => &mut forward_true,
                        ("forward", "false") => &mut forward_false,
                        ("backward", "true") => &mut backward_true,
                        ("backward", "false") => &mut backward_false,
                        _ => {
                            return Err(scanner.error_at(
                                polarity_at,
                                ErrorKind::Syntax,
                                format!("expected `true` or `false`, found `{polarity}`"),
                            ))
                        }
                    };
                    if slot.is_some() {
                        return Err(scanner.error_at(
                            key_at,
                            ErrorKind::Semantic,
                            format!("`{key} {polarity}` given twice for fluent `{name}`"),
                        ));
                    }
                    scanner.skip_ws_and_comments();
                    scanner.expect(':')?;
                    scanner.skip_ws_and_comments();
                    *slot = Some(piecewise(&mut scanner)?);
                }
                "change_split" => {
                    if change_split.is_some() {
                        return Err(scanner.error_at(
                            key_at,
                            ErrorKind::Semantic,
                            format!("`change_split` given twice for fluent `{name}`"),
                        ));
                    }
                    scanner.skip_ws_and_comments();
                    scanner.expect(':')?;
                    scanner.skip_ws_and_comments();
                    change_split = Some(scanner.rational()?);
                }
                other => {
                    return Err(scanner.error_at(
                        key_at,
                        ErrorKind::Syntax,
                        format!("unknown schema key `{other}`"),
                    ))
                }
            }
            scanner.skip_ws_and_comments();
            if !scanner.eat(';') {
                scanner.skip_ws_and_comments();
                scanner.expect('}')?;
                break;
            }
        }

        let missing = [
            (forward_true.is_none(), "forward true"),
            (backward_true.is_none(), "backward true"),
            (forward_false.is_none(), "forward false"),
            (backward_false.is_none(), "backward false"),
        ];
        if let Some((_, what)) = missing.iter().find(|(absent, _)| *absent) {
            return Err(scanner.error_at(
                block_at,
                ErrorKind::Semantic,
                format!("fluent `{name}` is missing its `{what}` function"),
            ));
        }

        let mut schema = FluentSchema::new(
            Atom::new(name),
            forward_true.expect("checked"),
            backward_true.expect("checked"),
            forward_false.expect("checked"),
            backward_false.expect("checked"),
        )
        .map_err(|e| scanner.error_at(block_at, ErrorKind::Semantic, e.to_string()))?;
        if let Some(split) = change_split {
            schema = schema
                .with_change_split(split)
                .map_err(|e| scanner.error_at(block_at, ErrorKind::Semantic, e.to_string()))?;
        }
        schemas
            .insert(schema)
            .map_err(|e| scanner.error_at(block_at, ErrorKind::Semantic, e.to_string()))?;
    }
}

/// `pw[(o0,v0),(o1,v1),...]`
fn piecewise(scanner: &mut Scanner<'_>) -> Result<PiecewiseLinearFn, ParseError> {
    let start = scanner.position();
    scanner.expect_keyword("pw")?;
    scanner.expect('[')?;
    let mut points = Vec::new();
    loop {
        scanner.skip_ws_and_comments();
        scanner.expect('(')?;
        scanner.skip_ws_and_comments();
        let offset = scanner.rational()?;
        scanner.skip_ws_and_comments();
        scanner.expect(',')?;
        scanner.skip_ws_and_comments();
        let value_at = scanner.position();
        let raw = scanner.rational()?;
        let value = Degree::new(raw)
            .map_err(|e| scanner.error_at(value_at, ErrorKind::Semantic, e.to_string()))?;
        scanner.skip_ws_and_comments();
        scanner.expect(')')?;
        points.push((offset, value));
        scanner.skip_ws_and_comments();
        if !scanner.eat(',') {
            scanner.expect(']')?;
            break;
        }
    }
    PiecewiseLinearFn::new(points)
        .map_err(|e| scanner.error_at(start, ErrorKind::Semantic, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE: &str = "\
# shared by both machines
fluent A {
  forward true: pw[(0,1),(8,1/5)];
  backward true: pw[(0,1),(10,0)];
  forward false: pw[(0,1),(2,0)];
  backward false: pw[(0,1),(2,0)];
}
fluent B {
  forward true: pw[(0,1),(8,1/5)];
  backward true: pw[(0,1),(10,0)];
  forward false: pw[(0,1),(2,0)];
  backward false: pw[(0,1),(2,0)];
}
";

    #[test]
    fn parses_the_reference_schema_file() {
        let schemas = parse_schema(REFERENCE).unwrap();
        assert_eq!(schemas.len(), 2);
        let a = schemas.get(&Atom::new("A")).unwrap();
        assert_eq!(
            a.forward(true),
            &PiecewiseLinearFn::from_breakpoints(&[(0, 1, 1), (8, 1, 5)])
        );
        assert_eq!(a.change_split(), &timekb_core::ratio(1, 2));
    }

    #[test]
    fn change_split_and_trailing_semicolons_are_accepted() {
        let text = "fluent A { forward true: pw[(0,1)]; backward true: pw[(0,1)]; \
                    forward false: pw[(0,1)]; backward false: pw[(0,1)]; change_split: 1/3; }";
        let schemas = parse_schema(text).unwrap();
        assert_eq!(
            schemas.get(&Atom::new("A")).unwrap().change_split(),
            &timekb_core::ratio(1, 3)
        );
    }

    #[test]
    fn rising_functions_are_semantic_errors_citing_the_axiom() {
        let text = "fluent A { forward true: pw[(0,1),(2,1/2),(4,3/4)]; backward true: pw[(0,1)]; \
                    forward false: pw[(0,1)]; backward false: pw[(0,1)]; }";
        let err = parse_schema(text).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Semantic);
        assert!(err.message.contains("D1"), "{}", err.message);
    }

    #[test]
    fn reference_value_must_be_one() {
        let text = "fluent A { forward true: pw[(0,1/2)]; backward true: pw[(0,1)]; \
                    forward false: pw[(0,1)]; backward false: pw[(0,1)]; }";
        let err = parse_schema(text).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Semantic);
        assert!(err.message.contains("value 1 at offset 0"));
    }

    #[test]
    fn unknown_keys_and_missing_functions_are_rejected() {
        let err = parse_schema("fluent A { sideways true: pw[(0,1)]; }").unwrap_err();
        assert_eq!(err.kind, ErrorKind::Syntax);
        assert!(err.message.contains("unknown schema key"));

        let err = parse_schema("fluent A { forward true: pw[(0,1)]; }").unwrap_err();
        assert_eq!(err.kind, ErrorKind::Semantic);
        assert!(err.message.contains("missing"));
    }

    #[test]
    fn duplicate_fluents_and_duplicate_keys_are_rejected() {
        let block = "fluent A { forward true: pw[(0,1)]; backward true: pw[(0,1)]; \
                     forward false: pw[(0,1)]; backward false: pw[(0,1)]; }";
        let err = parse_schema(&format!("{block}\n{block}")).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Semantic);
        assert!(err.message.contains("duplicate schema"));

        let text = "fluent A { forward true: pw[(0,1)]; forward true: pw[(0,1)]; \
                    backward true: pw[(0,1)]; forward false: pw[(0,1)]; backward false: pw[(0,1)]; }";
        let err = parse_schema(text).unwrap_err();
        assert!(err.message.contains("given twice"));
    }

    #[test]
    fn degree_range_and_offsets_are_validated() {
        let text = "fluent A { forward true: pw[(0,1),(2,3/2)]; backward true: pw[(0,1)]; \
                    forward false: pw[(0,1)]; backward false: pw[(0,1)]; }";
        let err = parse_schema(text).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Semantic);
        assert!(err.message.contains("outside [0, 1]"));

        let text = "fluent A { forward true: pw[(0,1),(0,1/2)]; backward true: pw[(0,1)]; \
                    forward false: pw[(0,1)]; backward false: pw[(0,1)]; }";
        let err = parse_schema(text).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Semantic);
        assert!(err.message.contains("strictly increasing"));
    }
}
