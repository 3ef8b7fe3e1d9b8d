//! The `gopprre` command line.
//!
//! Exit status: 0 when everything checks out, 1 when validation or
//! verification finds problems, 2 for usage, IO and parse errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dsl::{read_metamodel, read_model, DslError};
use crate::kg::{
    parse_ntriples, serialize_ntriples, serialize_turtle, ExportError, Exporter, Vocabulary,
};
use crate::model::{MetaModel, Model};
use crate::query::{completeness_report, logic_report, verify};
use crate::summary::{connector_arithmetic, count_summary};
use crate::validate::{validate_metamodel, validate_model, ValidationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Nt,
    Ttl,
}

#[derive(Debug, Parser)]
#[command(
    name = "gopprre",
    version,
    about = "Validate, export, verify and count GOPPRRE meta-models and models"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Triple serialization for `export`.
    #[arg(long, global = true, value_enum, default_value = "nt")]
    pub format: Format,
    /// Namespace for exported IRIs.
    #[arg(long, global = true, value_name = "IRI")]
    pub base_iri: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a meta-model, and optionally a model against it.
    Validate {
        metamodel: PathBuf,
        model: Option<PathBuf>,
    },
    /// Export a meta-model (and optionally a model) as triples.
    Export {
        metamodel: PathBuf,
        model: Option<PathBuf>,
    },
    /// Run the completeness and logic queries on a triple file and diff them against the model.
    Verify {
        metamodel: PathBuf,
        model: PathBuf,
        triples: PathBuf,
    },
    /// Print declaration counts and connector arithmetic.
    Stats { metamodel: PathBuf },
}

/// A failure that ends the command with status 2.
struct Fatal(String);

impl From<std::io::Error> for Fatal {
    fn from(e: std::io::Error) -> Self {
        Fatal(format!("IO_ERROR: {e}"))
    }
}

struct Outcome {
    status: i32,
    text: String,
}

impl Outcome {
    fn new(status: i32, text: String) -> Self {
        Outcome { status, text }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return status;
        }
    };
    execute(&cli, stdout, stderr)
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = dispatch(cli).and_then(|outcome| {
        match &cli.out {
            Some(path) => fs::write(path, &outcome.text)?,
            None => stdout.write_all(outcome.text.as_bytes())?,
        }
        Ok(outcome.status)
    });
    match result {
        Ok(status) => status,
        Err(Fatal(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Fatal> {
    let vocab = match &cli.base_iri {
        Some(base) => Vocabulary::with_base(base).map_err(|e| Fatal(format!("--base-iri: {e}")))?,
        None => Vocabulary::default(),
    };
    match &cli.command {
        Command::Validate { metamodel, model } => {
            cmd_validate(cli.json, metamodel, model.as_deref())
        }
        Command::Export { metamodel, model } => cmd_export(cli, vocab, metamodel, model.as_deref()),
        Command::Verify {
            metamodel,
            model,
            triples,
        } => cmd_verify(cli.json, &vocab, metamodel, model, triples),
        Command::Stats { metamodel } => cmd_stats(cli.json, metamodel),
    }
}

fn read(path: &Path) -> Result<String, Fatal> {
    fs::read_to_string(path).map_err(|e| Fatal(format!("IO_ERROR: {}: {e}", path.display())))
}

fn dsl_fatal(path: &Path, e: DslError) -> Fatal {
    Fatal(format!("{}: {e}", path.display()))
}

fn load_metamodel(path: &Path) -> Result<MetaModel, Fatal> {
    read_metamodel(&read(path)?).map_err(|e| dsl_fatal(path, e))
}

fn load_model(path: &Path) -> Result<Model, Fatal> {
    read_model(&read(path)?).map_err(|e| dsl_fatal(path, e))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn render_report(json: bool, report: &ValidationReport) -> String {
    if json {
        to_json(report)
    } else {
        report.to_string()
    }
}

/// Meta-model report, then the model report if the meta-model is valid.
fn check(mm: &MetaModel, m: Option<&Model>) -> ValidationReport {
    let report = validate_metamodel(mm);
    match m {
        Some(m) if report.ok() => validate_model(mm, m),
        _ => report,
    }
}

fn findings(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FINDINGS
    }
}

fn cmd_validate(json: bool, mm_path: &Path, m_path: Option<&Path>) -> Result<Outcome, Fatal> {
    let mm = load_metamodel(mm_path)?;
    let m = m_path.map(load_model).transpose()?;
    let report = check(&mm, m.as_ref());
    Ok(Outcome::new(
        findings(report.ok()),
        render_report(json, &report),
    ))
}

fn cmd_export(
    cli: &Cli,
    vocab: Vocabulary,
    mm_path: &Path,
    m_path: Option<&Path>,
) -> Result<Outcome, Fatal> {
    let mm = load_metamodel(mm_path)?;
    let m = m_path.map(load_model).transpose()?;
    let exporter = Exporter::new(vocab);
    let triples = exporter.export_metamodel(&mm).and_then(|ts| match &m {
        Some(m) => Ok(ts.union(&exporter.export_model(&mm, m)?)),
        None => Ok(ts),
    });
    match triples {
        Ok(ts) => {
            let text = match cli.format {
                Format::Nt => serialize_ntriples(&ts),
                Format::Ttl => serialize_turtle(&ts, exporter.vocabulary()),
            };
            Ok(Outcome::new(EXIT_OK, text))
        }
        Err(ExportError::InvalidInput(report)) => Ok(Outcome::new(
            EXIT_FINDINGS,
            render_report(cli.json, &report),
        )),
    }
}

fn cmd_verify(
    json: bool,
    vocab: &Vocabulary,
    mm_path: &Path,
    m_path: &Path,
    t_path: &Path,
) -> Result<Outcome, Fatal> {
    let mm = load_metamodel(mm_path)?;
    let m = load_model(m_path)?;
    let ts =
        parse_ntriples(&read(t_path)?).map_err(|e| Fatal(format!("{}: {e}", t_path.display())))?;
    let report = check(&mm, Some(&m));
    if !report.ok() {
        return Ok(Outcome::new(EXIT_FINDINGS, render_report(json, &report)));
    }
    let completeness = completeness_report(&ts, vocab);
    let logic = logic_report(&ts, vocab);
    let diff = verify(&m, &mm, &ts, vocab);
    let text = if json {
        #[derive(Serialize)]
        struct VerifyJson<'a, C, L, D> {
            completeness: &'a C,
            logic: &'a L,
            diff: &'a D,
        }
        to_json(&VerifyJson {
            completeness: &completeness,
            logic: &logic,
            diff: &diff,
        })
    } else {
        format!("{completeness}{logic}{diff}")
    };
    Ok(Outcome::new(findings(diff.is_empty()), text))
}

fn cmd_stats(json: bool, mm_path: &Path) -> Result<Outcome, Fatal> {
    let mm = load_metamodel(mm_path)?;
    let counts = count_summary(&mm);
    let arithmetic = connector_arithmetic(&mm);
    let text = if json {
        #[derive(Serialize)]
        struct StatsJson<C, A> {
            counts: C,
            arithmetic: A,
        }
        to_json(&StatsJson { counts, arithmetic })
    } else {
        format!("{counts}{arithmetic}")
    };
    Ok(Outcome::new(EXIT_OK, text))
}
