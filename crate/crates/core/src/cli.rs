//! The `chevkit` command-line frontend.
//!
//! Exit codes: `0` when everything requested passed, `1` when a check failed, `2` on a
//! usage error. The `CHEVKIT_SEED` environment variable is reserved and ignored: every
//! sampling loop uses the fixed generator behind [`crate::SAMPLING_SEED`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chevalley::AdjointEngine;
use crate::cohomology::{build_sym4_model, derive_descriptor, h1_classes, structure_descriptor, GroupAutomorphism, TABLE1};
use crate::groupelems::{torus_involution_census, InvolutionClassLabel};
use crate::intlinalg::determinant;
use crate::lattices::{fundamental_group, TorusLattice};
use crate::rootsystem::{CartanType, RootSystem};
use crate::verification::{run_report, theorem_decision, validate_prime, validate_q, Status, DEFAULT_QS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "chevkit", version, about = "Exact computations in the Chevalley group E7")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value = "plain", global = true)]
    pub format: Format,
    /// Only print the summary (and failures).
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root system, fundamental group and involution classes.
    Info,
    /// Run the full verification suite.
    Verify {
        /// Characteristic of the matrix engine.
        #[arg(long = "prime", default_value_t = 17)]
        p: u64,
        /// Frobenius powers q for the q-dependent checks (repeatable).
        #[arg(long = "q")]
        qs: Vec<u64>,
        /// Also write the JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Outer part of the normaliser in the derived group for a given q.
    Theorem {
        #[arg(long)]
        q: u64,
    },
    /// Twisted classes of the Sym4 model and their structure descriptors.
    H1,
    /// Fixed-space dimensions of the adjoint torus involutions.
    Census {
        #[arg(long = "prime", default_value_t = 17)]
        p: u64,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut io = Io { out, err };
    match dispatch(&cfg, &mut io) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Runtime(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

fn check_prime(p: u64) -> Result<(), CliError> {
    validate_prime(p).map_err(|_| CliError::Usage(format!("--prime must be an odd prime, got {p}")))
}

fn check_q(q: u64) -> Result<(), CliError> {
    if q.is_multiple_of(2) {
        return Err(CliError::Usage("q must be odd".into()));
    }
    validate_q(q).map_err(|_| CliError::Usage(format!("q must be a power of an odd prime, got {q}")))
}

fn dispatch(cfg: &CliConfig, io: &mut Io<'_>) -> Result<i32, CliError> {
    match &cfg.command {
        Command::Info => cmd_info(cfg, io),
        Command::Verify { p, qs, json } => cmd_verify(cfg, io, *p, qs, json.as_ref()),
        Command::Theorem { q } => cmd_theorem(cfg, io, *q),
        Command::H1 => cmd_h1(cfg, io),
        Command::Census { p } => cmd_census(cfg, io, *p),
    }
}

fn fundamental_group_name(factors: &[i64]) -> String {
    if factors.is_empty() {
        "1".into()
    } else {
        factors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" x ")
    }
}

fn cmd_info(cfg: &CliConfig, io: &mut Io<'_>) -> Result<i32, CliError> {
    let rs = RootSystem::e7();
    let pi1 = fundamental_group(CartanType::E(7)).map_err(|e| CliError::Runtime(e.to_string()))?;
    let det = determinant(rs.cartan());
    match cfg.format {
        Format::Json => {
            let classes: Vec<_> = InvolutionClassLabel::ALL
                .iter()
                .map(|l| json!({ "class": l.to_string(), "fixed_dim": l.fixed_dim() }))
                .collect();
            let v = json!({
                "type": "E7",
                "roots": rs.roots().len(),
                "positive_roots": rs.num_positive(),
                "highest_root": rs.highest_root().to_string(),
                "cartan_determinant": det,
                "fundamental_group": pi1,
                "involution_classes": classes,
            });
            writeln!(io.out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
        Format::Plain => {
            writeln!(io.out, "E7: {} roots, {} positive", rs.roots().len(), rs.num_positive())?;
            writeln!(io.out, "highest root: {}", rs.highest_root())?;
            writeln!(io.out, "Cartan determinant: {det}")?;
            writeln!(io.out, "fundamental group: {}", fundamental_group_name(&pi1))?;
            writeln!(io.out, "involution classes of the adjoint group (fixed-space dimension on Lie(G)):")?;
            for l in InvolutionClassLabel::ALL {
                writeln!(io.out, "  {:<5} {}", l.to_string(), l.fixed_dim())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cfg: &CliConfig, io: &mut Io<'_>, p: u64, qs: &[u64], json_path: Option<&PathBuf>) -> Result<i32, CliError> {
    check_prime(p)?;
    for &q in qs {
        check_q(q)?;
    }
    let qs: Vec<u64> = if qs.is_empty() { DEFAULT_QS.to_vec() } else { qs.to_vec() };
    let report = run_report(p, &qs).map_err(|e| CliError::Runtime(e.to_string()))?;
    let text = report.to_json();
    if let Some(path) = json_path {
        std::fs::write(path, format!("{text}\n"))?;
    }
    match cfg.format {
        Format::Json => writeln!(io.out, "{text}")?,
        Format::Plain => {
            if !cfg.quiet {
                writeln!(io.out, "engine: GF({}^{})", report.engine.p, report.engine.k)?;
                for c in &report.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skipped => "SKIP",
                    };
                    writeln!(io.out, "{tag}  {}", c.name)?;
                }
            }
            writeln!(io.out, "{}/{} checks passed", report.summary.passed, report.summary.total)?;
        }
    }
    if report.all_passed() {
        Ok(EXIT_OK)
    } else {
        writeln!(io.err, "failing checks: {}", report.failing().join(", "))?;
        Ok(EXIT_CHECK_FAILED)
    }
}

fn cmd_theorem(cfg: &CliConfig, io: &mut Io<'_>, q: u64) -> Result<i32, CliError> {
    check_q(q)?;
    let d = theorem_decision(q).map_err(|e| CliError::Runtime(e.to_string()))?;
    let outer = format!("C.{}", d.outer_part.as_str());
    match cfg.format {
        Format::Json => {
            let v = json!({
                "q": q,
                "epsilon": d.epsilon,
                "y_in_derived": d.y_in_derived,
                "outer_part": d.outer_part.as_str(),
                "normalizer": outer,
                "closed_form_agrees": d.agrees(),
            });
            writeln!(io.out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
        Format::Plain => {
            let residue = if q % 8 == 1 || q % 8 == 7 { "+-1" } else { "+-3" };
            writeln!(io.out, "{outer}")?;
            if !cfg.quiet {
                writeln!(
                    io.out,
                    "q = {q} = {} mod 8 (class {residue}); epsilon = {:+}; lift of y fixed by the twisted Frobenius: {}",
                    q % 8,
                    d.epsilon,
                    if d.y_in_derived { "yes" } else { "no" }
                )?;
            }
        }
    }
    Ok(if d.agrees() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_h1(cfg: &CliConfig, io: &mut Io<'_>) -> Result<i32, CliError> {
    let model = build_sym4_model();
    let classes = h1_classes(&model.group, &GroupAutomorphism::trivial(&model.group));
    let mut rows = Vec::new();
    let mut ok = true;
    for c in &classes {
        let derived = derive_descriptor(&model, c.representative);
        let tabulated = structure_descriptor(&model, c).ok();
        ok &= tabulated == Some(derived.descriptor.as_str());
        rows.push((derived.class_label, c.members.len(), derived.descriptor));
    }
    rows.sort_by_key(|(l, _, _)| TABLE1.iter().position(|(t, _)| t == l));
    let rows: Vec<(String, usize, String)> = rows.into_iter().map(|(l, n, d)| (format!("[{l}]"), n, d)).collect();
    match cfg.format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(l, n, d)| json!({ "class": l, "size": n, "descriptor": d }))
                .collect();
            writeln!(io.out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
        Format::Plain => {
            for (l, n, d) in &rows {
                writeln!(io.out, "{l:<13} {n:>2}  {d}")?;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_census(cfg: &CliConfig, io: &mut Io<'_>, p: u64) -> Result<i32, CliError> {
    check_prime(p)?;
    let engine = AdjointEngine::e7(p).map_err(|e| CliError::Runtime(e.to_string()))?;
    let census = torus_involution_census(&engine, &TorusLattice::e7()).map_err(|e| CliError::Runtime(e.to_string()))?;
    match cfg.format {
        Format::Json => {
            let v = json!({
                "torsion_size": census.torsion_size,
                "total": census.nontrivial,
                "counts": census.counts,
            });
            writeln!(io.out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
        Format::Plain => {
            writeln!(io.out, "{:<10} {:<5} count", "fixed dim", "class")?;
            for (dim, n) in &census.counts {
                let label = InvolutionClassLabel::from_fixed_dim(*dim).map_or("?".to_string(), |l| l.to_string());
                writeln!(io.out, "{dim:<10} {label:<5} {n}")?;
            }
            writeln!(io.out, "total {}", census.nontrivial)?;
        }
    }
    Ok(EXIT_OK)
}
