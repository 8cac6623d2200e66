//! Canonical text output: knowledge bases and schema sets in their file
//! grammars (so rendered output reparses to an equal value), and decimal
//! presentation of exact rationals.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use timekb_core::persistence::{FluentSchema, FnRole, SchemaSet};
use timekb_core::timeline::TimedKb;
use timekb_core::{ratio, Rational};

/// Renders a knowledge base, one declaration per line. Entries over a
/// multi-interval time set become one line per interval.
pub fn render_kb(kb: &TimedKb) -> String {
    let mut out = String::new();
    for entry in kb.entries() {
        for interval in entry.time_set().intervals() {
            out.push_str(&format!("at {}: {}\n", interval, entry.formula()));
        }
    }
    out
}

/// Renders a schema set as fluent blocks.
pub fn render_schema(schemas: &SchemaSet) -> String {
    let mut out = String::new();
    for (_, schema) in schemas.iter() {
        out.push_str(&render_fluent_schema(schema));
    }
    out
}

fn render_fluent_schema(schema: &FluentSchema) -> String {
    let mut out = format!("fluent {} {{\n", schema.fluent());
    for role in FnRole::ALL {
        out.push_str(&format!("  {}: {};\n", role, schema.function(role)));
    }
    if schema.change_split() != &ratio(1, 2) {
        out.push_str(&format!("  change_split: {};\n", schema.change_split()));
    }
    out.push_str("}\n");
    out
}

/// Rounds an exact rational to `digits` decimal places (half away from
/// zero) for presentation; the reasoning itself never rounds.
pub fn decimal_string(value: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let numer = value.numer() * &scale;
    let denom = value.denom().clone();
    let (quotient, remainder) = (numer.abs() / &denom, numer.abs() % &denom);
    let mut scaled = quotient;
    if &remainder * BigInt::from(2) >= denom {
        scaled += 1;
    }
    let sign = if value.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{scaled}");
    }
    let text = scaled.to_string();
    if text.len() <= digits as usize {
        let padded = format!("{text:0>width$}", width = digits as usize + 1);
        let (whole, frac) = padded.split_at(padded.len() - digits as usize);
        format!("{sign}{whole}.{frac}")
    } else {
        let (whole, frac) = text.split_at(text.len() - digits as usize);
        format!("{sign}{whole}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_kb, parse_schema};
    use timekb_core::int;

    #[test]
    fn rendered_kb_reparses_to_an_equal_value() {
        let text = "at [0,10]: A\nat [15]: !A | !B\nat [17,30]: B\n";
        let kb = parse_kb(text).unwrap();
        let rendered = render_kb(&kb);
        assert_eq!(rendered, text);
        assert_eq!(parse_kb(&rendered).unwrap(), kb);
    }

    #[test]
    fn rendered_schema_reparses_to_an_equal_value() {
        let text = "fluent A {\n  forward true: pw[(0,1),(8,1/5)];\n  backward true: pw[(0,1),(10,0)];\n  forward false: pw[(0,1),(2,0)];\n  backward false: pw[(0,1),(2,0)];\n  change_split: 1/3;\n}\n";
        let schemas = parse_schema(text).unwrap();
        let rendered = render_schema(&schemas);
        assert_eq!(rendered, text);
        assert_eq!(parse_schema(&rendered).unwrap(), schemas);
    }

    #[test]
    fn decimals_round_half_away_from_zero() {
        assert_eq!(decimal_string(&ratio(4, 5), 3), "0.800");
        assert_eq!(decimal_string(&ratio(1, 3), 4), "0.3333");
        assert_eq!(decimal_string(&ratio(2, 3), 2), "0.67");
        assert_eq!(decimal_string(&ratio(1, 2), 0), "1");
        assert_eq!(decimal_string(&ratio(-1, 8), 2), "-0.13");
        assert_eq!(decimal_string(&int(15), 1), "15.0");
        assert_eq!(decimal_string(&ratio(-1, 1000), 1), "0.0");
    }
}
