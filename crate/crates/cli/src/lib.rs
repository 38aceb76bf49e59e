//! The `seminormal` command line.
//!
//! Exit codes: 0 when every verification passes, 1 when some check fails
//! (the report is still printed), 2 for usage and input errors.

mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use seminormal::instances::{AlgebraName, Gates, InstanceSpec, ScalarText};
use seminormal::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "seminormal", version, about = "Seminormal forms, Gram determinants, idempotents and blocks in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Lift the size gates (also via SEMINORMAL_NO_SIZE_GATE=1).
    #[arg(long = "no-size-gate", global = true)]
    pub no_size_gate: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Per-cell gamma_t and Gram determinants.
    Gram(InstanceArgs),
    /// Transition matrices a -> f and the actions of F_t.
    Seminormal(InstanceArgs),
    /// Algebra-level idempotents F_t and the separated-case identities.
    Idempotents(InstanceArgs),
    /// Residue classes, linkage classes and block idempotents at t = q.
    Blocks(InstanceArgs),
    /// Orthogonal idempotents from a family of upper-triangular matrices.
    Appendix(AppendixArgs),
    /// The full invariant suite for an instance plus randomized families.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArgs {
    /// Instance specification JSON file (instead of the flags below).
    #[arg(long, conflicts_with_all = ["algebra", "n", "field", "q", "contents"])]
    pub spec: Option<std::path::PathBuf>,
    #[arg(long, value_enum)]
    pub algebra: Option<AlgebraArg>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Q, F_p, Q(q), F_p(q) or q-generic.  For `blocks` this is the residue field k.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Comma-separated contents of the toy algebra (for `blocks`, elements of k(t)).
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub contents: Option<Vec<String>>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Toy,
    Matrix,
    Hecke,
}

#[derive(Args, Debug, Clone)]
pub struct AppendixArgs {
    /// Family JSON: {"d": .., "field": .., "matrices": [..]}.
    #[arg(long)]
    pub input: std::path::PathBuf,
    /// Work over the local ring k[t] localised at t = q (field must be k(t)).
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Reduce modulo (t - q) first and work over k.
    #[arg(long, requires = "q")]
    pub reduce: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Random appendix families per kind.
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    /// Random basis pairs sampled when exhaustive checks are too large.
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
}

impl InstanceArgs {
    pub fn spec(&self) -> Result<InstanceSpec> {
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            return InstanceSpec::from_json(&text);
        }
        let algebra = match self.algebra.ok_or_else(|| Error::Invalid("--algebra or --spec is required".into()))? {
            AlgebraArg::Toy => AlgebraName::Toy,
            AlgebraArg::Matrix => AlgebraName::Matrix,
            AlgebraArg::Hecke => AlgebraName::Hecke,
        };
        Ok(InstanceSpec {
            algebra,
            n: self.n,
            field: self.field.clone(),
            q: self.q.clone().map(ScalarText::Text),
            contents: self.contents.as_ref().map(|cs| cs.iter().cloned().map(ScalarText::Text).collect()),
        })
    }
}

/// Outcome of a subcommand before rendering.
pub struct Outcome {
    pub command: &'static str,
    pub result: serde_json::Value,
    pub report: seminormal::report::Report,
    pub table: String,
}

/// Parses `argv` (including the program name), runs, writes to `out`/`err`
/// and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let gates = if cli.no_size_gate { Gates::off() } else { Gates::from_env() };
    match commands::dispatch(&cli, gates) {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Json => render::json(&outcome),
                Format::Table => render::table(&outcome),
            };
            let _ = out.write_all(text.as_bytes());
            exit_code(&outcome.report)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn exit_code(report: &seminormal::report::Report) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use seminormal::report::Report;

    #[test]
    fn failed_checks_exit_with_one() {
        let mut r = Report::new();
        r.check("fine", true);
        assert_eq!(exit_code(&r), 0);
        r.check_first("broken", Some("witness".into()));
        assert_eq!(exit_code(&r), 1);
        let o = Outcome { command: "test", result: serde_json::Value::Null, report: r, table: String::new() };
        let text = render::table(&o);
        assert!(text.contains("[FAIL] broken (witness)"));
        assert!(render::json(&o).contains("\"passed\": false"));
    }
}
