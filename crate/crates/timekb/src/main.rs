//! `timekb` — query graded certainty about fluents over time.
//!
//! The tool reads a timed knowledge base (`--kb`) and, optionally, a
//! persistence schema file (`--schema`), and answers nonmonotonic queries
//! at arbitrary instants, lists extrapolation problems, emits certainty
//! timelines as CSV, and validates schema files against the persistence
//! axioms.
//!
//! Exit codes: 0 success, 2 parse error, 3 semantic or validation error,
//! 4 closedness violation.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use timekb::parse::{parse_formula, parse_kb, parse_rational, parse_schema, ErrorKind, ParseError};
use timekb::render::decimal_string;
use timekb_core::engine::{conditional_query_at, nm_query_at, timeline, EngineError, QueryVerdict};
use timekb_core::logic::Atom;
use timekb_core::persistence::{
    check_d1, check_d2, check_d3, check_d4, check_fb_symmetry, check_h1, check_h2, check_h3,
    check_negation_symmetry, no_change_profile, with_change_profile, FluentSchema, FnRole,
    HDirection, SchemaSet, Strictness, ValidationReport,
};
use timekb_core::posslog::Degree;
use timekb_core::timeline::{HistoryError, TimedKb};
use timekb_core::{int, ratio, Rational};

const EXIT_IO: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SEMANTIC: u8 = 3;
const EXIT_CLOSEDNESS: u8 = 4;

#[derive(Parser)]
#[command(name = "timekb", version, about = "Graded temporal reasoning over timed knowledge bases")]
struct Cli {
    /// Timed knowledge base file (`at <interval>: <formula>` per line)
    #[arg(short = 'k', long = "kb", global = true, value_name = "FILE")]
    kb: Option<PathBuf>,

    /// Persistence schema file (fluent blocks); omitted means no
    /// extrapolation
    #[arg(short = 's', long = "schema", global = true, value_name = "FILE")]
    schema: Option<PathBuf>,

    /// Present degrees (and timeline instants) as decimals with this many
    /// digits instead of exact rationals
    #[arg(long, global = true, value_name = "DIGITS")]
    decimal: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Belief status of a formula at an instant (True/False/Unknown)
    Status {
        /// Time point (rational: `15`, `3/2`, `-0.5`)
        t: String,
        /// Formula (`!`, `&`, `|`, `->`, `true`, `false`, atoms)
        formula: String,
    },
    /// Nonmonotonic query: is the formula accepted at an instant?
    Query {
        /// Time point
        t: String,
        /// Formula to query
        formula: String,
        /// Condition the query on this formula (the bound becomes N(!given))
        #[arg(long, value_name = "FORMULA")]
        given: Option<String>,
    },
    /// List the classified extrapolation problems of a fluent
    Problems {
        /// Fluent name
        fluent: String,
    },
    /// Certainty timeline of a fluent as CSV on standard output
    Timeline {
        /// Fluent name
        fluent: String,
        /// Range start (rational)
        from: String,
        /// Range end (rational, always included as the last row)
        to: String,
        /// Step between rows (positive rational)
        step: String,
    },
    /// Run the persistence axiom and symmetry checks on the schema file
    Validate {
        /// Check the displayed homogeneity inequalities instead of the
        /// prose direction
        #[arg(long)]
        displayed_h_direction: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn parse_failure(err: ParseError, context: &str) -> Failure {
    let code = match err.kind {
        ErrorKind::Syntax => EXIT_PARSE,
        ErrorKind::Semantic => EXIT_SEMANTIC,
    };
    Failure::new(code, format!("{context}:{err}"))
}

fn history_failure(err: HistoryError) -> Failure {
    let code = match err {
        HistoryError::ClosedHistoryViolation { .. } => EXIT_CLOSEDNESS,
        HistoryError::EmptyItp { .. } => EXIT_SEMANTIC,
    };
    Failure::new(code, err.to_string())
}

fn engine_failure(err: EngineError) -> Failure {
    match err {
        EngineError::History(e) => history_failure(e),
        other => Failure::new(EXIT_SEMANTIC, other.to_string()),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot read {}: {e}", path.display())))
}

fn load_kb(path: Option<&PathBuf>) -> Result<TimedKb, Failure> {
    let path = path.ok_or_else(|| {
        Failure::new(EXIT_PARSE, "this command needs a knowledge base; pass --kb <FILE>")
    })?;
    let text = read_file(path)?;
    parse_kb(&text).map_err(|e| parse_failure(e, &path.display().to_string()))
}

fn load_schemas(path: Option<&PathBuf>) -> Result<SchemaSet, Failure> {
    match path {
        None => Ok(SchemaSet::new()),
        Some(path) => {
            let text = read_file(path)?;
            parse_schema(&text).map_err(|e| parse_failure(e, &path.display().to_string()))
        }
    }
}

fn argument_rational(text: &str, what: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| parse_failure(e, &format!("in {what} `{text}`")))
}

fn argument_formula(text: &str) -> Result<timekb_core::logic::Formula, Failure> {
    parse_formula(text).map_err(|e| parse_failure(e, &format!("in formula `{text}`")))
}

fn show_degree(degree: &Degree, decimal: Option<u32>) -> String {
    match decimal {
        Some(digits) => decimal_string(degree.value(), digits),
        None => degree.to_string(),
    }
}

fn show_time(t: &Rational, decimal: Option<u32>) -> String {
    match decimal {
        Some(digits) => decimal_string(t, digits),
        None => t.to_string(),
    }
}

fn print_verdict(verdict: &QueryVerdict, decimal: Option<u32>) {
    println!("necessity: {}", show_degree(&verdict.necessity, decimal));
    println!("bound: {}", show_degree(&verdict.inconsistency, decimal));
    println!("verdict: {}", if verdict.accepted { "accepted" } else { "not accepted" });
}

fn run(cli: Cli) -> Result<(), Failure> {
    let decimal = cli.decimal;
    match cli.command {
        Command::Status { t, formula } => {
            let kb = load_kb(cli.kb.as_ref())?;
            let t = argument_rational(&t, "time point")?;
            let phi = argument_formula(&formula)?;
            println!("{}", kb.history_status(&t, &phi));
            Ok(())
        }
        Command::Query { t, formula, given } => {
            let kb = load_kb(cli.kb.as_ref())?;
            let schemas = load_schemas(cli.schema.as_ref())?;
            let t = argument_rational(&t, "time point")?;
            let psi = argument_formula(&formula)?;
            let verdict = match given {
                None => nm_query_at(&kb, &schemas, &t, &psi).map_err(history_failure)?,
                Some(given) => {
                    let phi = argument_formula(&given)?;
                    conditional_query_at(&kb, &schemas, &t, &phi, &psi).map_err(history_failure)?
                }
            };
            print_verdict(&verdict, decimal);
            Ok(())
        }
        Command::Problems { fluent } => {
            let kb = load_kb(cli.kb.as_ref())?;
            let problems =
                kb.extrapolation_problems(&Atom::new(fluent)).map_err(history_failure)?;
            for problem in problems {
                println!("{problem}");
            }
            Ok(())
        }
        Command::Timeline { fluent, from, to, step } => {
            let kb = load_kb(cli.kb.as_ref())?;
            let schemas = load_schemas(cli.schema.as_ref())?;
            let from = argument_rational(&from, "range start")?;
            let to = argument_rational(&to, "range end")?;
            let step = argument_rational(&step, "step")?;
            let rows = timeline(&kb, &schemas, &Atom::new(fluent), &from, &to, &step)
                .map_err(engine_failure)?;
            println!("t,N_true,N_false,status");
            for row in rows {
                println!(
                    "{},{},{},{}",
                    show_time(&row.t, decimal),
                    show_degree(&row.n_true, decimal),
                    show_degree(&row.n_false, decimal),
                    row.status
                );
            }
            Ok(())
        }
        Command::Validate { displayed_h_direction } => {
            let path = cli.schema.as_ref().ok_or_else(|| {
                Failure::new(EXIT_PARSE, "validate needs a schema file; pass --schema <FILE>")
            })?;
            let text = read_file(path)?;
            let schemas =
                parse_schema(&text).map_err(|e| parse_failure(e, &path.display().to_string()))?;
            let direction = if displayed_h_direction {
                HDirection::Displayed
            } else {
                HDirection::Prose
            };
            validate(&schemas, direction)
        }
    }
}

/// Interval lengths the instantiation checks run over.
fn length_grid() -> Vec<Rational> {
    vec![ratio(1, 2), int(1), int(2), int(5), int(10)]
}

fn print_aggregate(name: &str, reports: &[ValidationReport]) -> bool {
    let failures: Vec<&ValidationReport> = reports.iter().filter(|r| !r.passed).collect();
    if failures.is_empty() {
        println!("  {name}: ok");
        true
    } else {
        println!("  {name}: FAIL");
        for report in failures {
            println!("    {report}");
        }
        false
    }
}

fn validate(schemas: &SchemaSet, direction: HDirection) -> Result<(), Failure> {
    let lengths = length_grid();
    let mut all_ok = true;
    for (fluent, schema) in schemas.iter() {
        println!("fluent {fluent}:");

        for role in [FnRole::ForwardTrue, FnRole::ForwardFalse] {
            let report = check_d1(schema.function(role), Strictness::NonIncreasing);
            all_ok &= print_aggregate(&format!("D1 ({role})"), &[report]);
        }
        for role in [FnRole::BackwardTrue, FnRole::BackwardFalse] {
            let report = check_d2(schema.function(role), Strictness::NonIncreasing);
            all_ok &= print_aggregate(&format!("D2 ({role})"), &[report]);
        }

        let zero = int(0);
        let d3: Vec<ValidationReport> = lengths
            .iter()
            .flat_map(|len| {
                [true, false]
                    .map(|value| check_d3(&no_change_profile(schema, value, &zero, len)))
            })
            .collect();
        all_ok &= print_aggregate("D3 (no-change instances)", &d3);

        let d4: Vec<ValidationReport> = lengths
            .iter()
            .flat_map(|len| {
                [true, false].map(|left| {
                    let (outgoing, incoming) = with_change_profile(schema, left, &zero, len);
                    check_d4(&outgoing, &incoming)
                })
            })
            .collect();
        all_ok &= print_aggregate("D4 (with-change instances)", &d4);

        let mut h1 = Vec::new();
        let mut h3 = Vec::new();
        for (i, short) in lengths.iter().enumerate() {
            for long in &lengths[i..] {
                h1.push(check_h1(schema, short, long, direction));
                h3.push(check_h3(schema, short, long, direction));
            }
        }
        let h2: Vec<ValidationReport> =
            lengths.iter().map(|len| check_h2(schema, len)).collect();
        all_ok &= print_aggregate("H1 (no-change vs no-change)", &h1);
        all_ok &= print_aggregate("H2 (no-change vs forward)", &h2);
        all_ok &= print_aggregate("H3 (with-change vs with-change)", &h3);

        let mut strictness = String::new();
        for role in FnRole::ALL {
            let strict = check_d1(schema.function(role), Strictness::StrictNearZero).passed;
            let _ = write!(strictness, "{role}: {}; ", if strict { "yes" } else { "no" });
        }
        println!(
            "  strict decay near the reference (informational): {}",
            strictness.trim_end_matches("; ")
        );
        print_symmetry(schema);
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::new(EXIT_SEMANTIC, "schema validation failed"))
    }
}

fn print_symmetry(schema: &FluentSchema) {
    let fb = check_fb_symmetry(schema);
    println!(
        "  forward/backward symmetry (informational): {}",
        if fb.passed { "holds" } else { "differs" }
    );
    let neg = check_negation_symmetry(schema);
    println!(
        "  negation symmetry (informational): {}",
        if neg.passed { "holds" } else { "differs" }
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
