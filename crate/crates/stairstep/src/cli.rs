//! The `stairstep` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use stairstep_core::betti::graded_betti;
use stairstep_core::oracle::{
    compare_betti, default_max_degree, minimal_resolution_bruteforce, verify, CheckKind, FieldConfig,
    OracleError,
};
use stairstep_core::series::{poincare_series, series_expand};
use stairstep_core::text::parse_ideal;
use stairstep_core::{build_resolution, classify, MonomialIdeal};

use crate::corpus;
use crate::json;
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "stairstep", version, about = "Minimal free resolutions of k over k[x,y]/M")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Window {
    /// Last homological stage.
    #[arg(long, default_value_t = 6)]
    pub stages: usize,
    /// Largest total degree examined; defaults to the largest generator
    /// degree times (stages + 2).
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Coefficient field: `q` or `p:PRIME`.
    #[arg(long, env = "STAIRSTEP_FIELD", default_value = "q")]
    pub field: FieldConfig,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the construction class of the ideal.
    Classify {
        ideal: String,
        #[command(flatten)]
        common: Common,
    },
    /// Build the resolution through a stage.
    Resolve {
        ideal: String,
        #[arg(long, default_value_t = 6)]
        stages: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Total or graded Betti numbers of the resolution.
    Betti {
        ideal: String,
        #[arg(long, default_value_t = 6)]
        stages: usize,
        /// Print the graded table instead of the totals.
        #[arg(long)]
        graded: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The Poincaré–Betti series as a rational function.
    Poincare {
        ideal: String,
        /// Also print the first N coefficients.
        #[arg(long, value_name = "N")]
        expand: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Check that the resolution is a minimal exact complex; without an
    /// ideal, checks the whole test corpus.
    Verify {
        ideal: Option<String>,
        #[command(flatten)]
        window: Window,
        /// Seed for the random part of the corpus.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the Betti table from scratch and compare it with the
    /// resolution; without an ideal, runs over the whole test corpus.
    Oracle {
        ideal: Option<String>,
        #[command(flatten)]
        window: Window,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Draw the staircase of the ideal.
    Staircase {
        ideal: String,
        /// Write an SVG file instead of printing ASCII.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
}

fn parse(text: &str) -> Result<MonomialIdeal, UsageError> {
    parse_ideal(text).map_err(|e| UsageError(format!("cannot parse ideal {text:?}: {e}")))
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn ideals(ideal: &Option<String>, seed: u64) -> Result<Vec<MonomialIdeal>, UsageError> {
    match ideal {
        Some(text) => Ok(vec![parse(text)?]),
        None => Ok(corpus::standard(seed)),
    }
}

fn run_command(cmd: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cmd {
        Command::Classify { ideal, common } => {
            let m = parse(&ideal)?;
            let class = classify(&m);
            match common.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({ "ideal": m.to_string(), "class": class.name() })
                )?,
                _ => writeln!(out, "{class}")?,
            }
        }
        Command::Resolve { ideal, stages, common } => {
            let m = parse(&ideal)?;
            let res = build_resolution(&m, stages);
            match common.format {
                Format::Json => writeln!(out, "{}", json::resolution_to_json(&res))?,
                Format::Text => write!(out, "{}", render::resolution_text(&res))?,
                Format::Csv => return Err(UsageError("resolve has no CSV form".into()).into()),
            }
        }
        Command::Betti {
            ideal,
            stages,
            graded,
            common,
        } => {
            let m = parse(&ideal)?;
            let table = graded_betti(&build_resolution(&m, stages));
            match common.format {
                Format::Json => writeln!(out, "{}", json::betti_to_json(&table))?,
                Format::Csv => write!(out, "{}", json::betti_to_csv(&table))?,
                Format::Text if graded => write!(out, "{}", table.render_text())?,
                Format::Text => {
                    let totals: Vec<String> = table.totals().iter().map(u64::to_string).collect();
                    writeln!(out, "{}", totals.join(" "))?;
                }
            }
        }
        Command::Poincare { ideal, expand, common } => {
            let m = parse(&ideal)?;
            let p = poincare_series(classify(&m), m.len());
            let coeffs = expand.map(|n| series_expand(&p, n));
            match common.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({
                        "numerator": p.numerator.coeffs(),
                        "denominator": p.denominator.coeffs(),
                        "expansion": coeffs,
                    })
                )?,
                _ => {
                    writeln!(out, "{p}")?;
                    if let Some(c) = coeffs {
                        let c: Vec<String> = c.iter().map(i128::to_string).collect();
                        writeln!(out, "{}", c.join(" "))?;
                    }
                }
            }
        }
        Command::Verify {
            ideal,
            window,
            seed,
            common,
        } => {
            let mut all_pass = true;
            for m in ideals(&ideal, seed)? {
                let max_degree = window.max_degree.unwrap_or_else(|| default_max_degree(&m, window.stages));
                let res = build_resolution(&m, window.stages + 1);
                let report = verify(&res, window.stages, max_degree, window.field)?;
                all_pass &= report.passed();
                match common.format {
                    Format::Json => writeln!(out, "{}", json::report_to_json(&m, &report))?,
                    _ => {
                        let verdict = if report.passed() { "pass" } else { "fail" };
                        let mut parts = Vec::new();
                        for kind in [CheckKind::Complex, CheckKind::Minimality, CheckKind::Exactness] {
                            let total = report.of_kind(kind).count();
                            let ok = report.of_kind(kind).filter(|c| c.pass).count();
                            parts.push(format!("{kind} {ok}/{total}"));
                        }
                        writeln!(out, "{m}: {verdict} ({})", parts.join(", "))?;
                        for c in report.failures().take(5) {
                            let degree = c.degree.map_or_else(|| "-".to_string(), |d| d.to_string());
                            writeln!(out, "  {} stage {} degree {}: {}", c.kind, c.stage, degree, c.detail)?;
                        }
                    }
                }
            }
            if ideal.is_none() && common.format != Format::Json {
                writeln!(out, "verdict: {}", if all_pass { "pass" } else { "fail" })?;
            }
            return Ok(if all_pass { EXIT_OK } else { EXIT_FAIL });
        }
        Command::Oracle {
            ideal,
            window,
            seed,
            common,
        } => {
            let mut all_pass = true;
            for m in ideals(&ideal, seed)? {
                let max_degree = window.max_degree.unwrap_or_else(|| default_max_degree(&m, window.stages));
                let oracle = minimal_resolution_bruteforce(&m, window.stages, max_degree, window.field)?;
                let engine = graded_betti(&build_resolution(&m, window.stages));
                let diff = compare_betti(&engine, &oracle);
                all_pass &= diff.is_empty();
                match common.format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "ideal": m.to_string(),
                            "oracle": serde_json::from_str::<serde_json::Value>(&json::betti_to_json(&oracle))?,
                            "mismatches": diff.mismatches.iter().map(|x| serde_json::json!({
                                "i": x.stage, "d": x.degree, "engine": x.left, "oracle": x.right,
                            })).collect::<Vec<_>>(),
                            "verdict": if diff.is_empty() { "pass" } else { "fail" },
                        })
                    )?,
                    Format::Csv => write!(out, "{}", json::betti_to_csv(&oracle))?,
                    Format::Text => {
                        if ideal.is_some() {
                            write!(out, "{}", oracle.render_text())?;
                            writeln!(out, "{diff}")?;
                        } else {
                            let verdict = if diff.is_empty() { "agree" } else { "DIFFER" };
                            writeln!(out, "{m}: {verdict}")?;
                            if !diff.is_empty() {
                                writeln!(out, "{diff}")?;
                            }
                        }
                    }
                }
            }
            return Ok(if all_pass { EXIT_OK } else { EXIT_FAIL });
        }
        Command::Staircase { ideal, svg } => {
            let m = parse(&ideal)?;
            match svg {
                Some(path) => std::fs::write(&path, render::staircase_svg(&m))
                    .with_context(|| format!("writing {}", path.display()))?,
                None => write!(out, "{}", render::staircase_ascii(&m))?,
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match run_command(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() || e.downcast_ref::<OracleError>().is_some() {
                EXIT_USAGE
            } else {
                EXIT_FAIL
            }
        }
    }
}
