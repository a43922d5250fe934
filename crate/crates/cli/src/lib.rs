//! Command-line front end for `threegap-core`.
//!
//! [`parse_args`] turns argv into a [`CliInvocation`]; [`run`] executes it and
//! returns the exit status together with the document to emit. Exit status is
//! 0 when every check passes, 1 when at least one check fails, and 2 for usage
//! or parse errors.

pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;
use threegap_core::{
    build_config_oracle, check_engine_equivalence, check_fact2, check_prop1,
    check_prop2_with_predecessor, check_symmetry_theorem, parse_alpha, relabeling_times, sweep,
    Alpha, CheckError, CheckReport, CircleConfig, Engine, GapError, IncrementalEngine, QuadError,
    SymmetryReport, DENSE_EQUIVALENCE_LIMIT,
};

use crate::render::{render_svg_with, RenderError, Style, DEFAULT_MAX_POINTS};

/// Significant digits of every decimal approximation printed.
pub const DECIMAL_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Command {
    Word,
    Gaps,
    Points,
    Relabel,
    Symcheck,
    Props,
    Verify,
    Render,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, ValueEnum)]
pub enum EngineChoice {
    #[default]
    Oracle,
    Incremental,
}

impl From<EngineChoice> for Engine {
    fn from(e: EngineChoice) -> Self {
        match e {
            EngineChoice::Oracle => Engine::Oracle,
            EngineChoice::Incremental => Engine::Incremental,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliInvocation {
    pub command: Command,
    pub alpha_spec: String,
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    pub p: Option<usize>,
    pub format: Format,
    pub output_path: Option<PathBuf>,
    pub engine: Engine,
    pub max_points: usize,
}

impl CliInvocation {
    pub fn new(command: Command, alpha_spec: impl Into<String>) -> Self {
        Self {
            command,
            alpha_spec: alpha_spec.into(),
            n: None,
            n_max: None,
            p: None,
            format: Format::Text,
            output_path: None,
            engine: Engine::Oracle,
            max_points: DEFAULT_MAX_POINTS,
        }
    }
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Rotation angle: sqrt:<d>, quad:<a>:<b>:<c>:<d> for (a + b√d)/c, or golden
    #[arg(long)]
    alpha: String,
    /// Number of points N
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    /// Upper bound for sweeps over N
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: Option<u64>,
    /// Offset p for the symmetry about the point N - p
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the document here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Construction used for per-configuration checks
    #[arg(long, value_enum, default_value_t = EngineChoice::Oracle)]
    engine: EngineChoice,
    /// Largest N that `render` accepts
    #[arg(long, default_value_t = DEFAULT_MAX_POINTS)]
    max_points: usize,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Print the gap word
    Word(CommonArgs),
    /// Tabulate the gaps δ_j exactly and in decimal
    Gaps(CommonArgs),
    /// Tabulate the sorted points y_j and the visit order u_j
    Points(CommonArgs),
    /// List relabeling times up to --n-max
    Relabel(CommonArgs),
    /// Check mirror symmetry about every c, at --n or at every N up to --n-max
    Symcheck(CommonArgs),
    /// Check the relabeling-time facts and propositions at --n, or sweep to --n-max
    Props(CommonArgs),
    /// Cross-check the incremental engine against the sorting oracle up to --n-max
    Verify(CommonArgs),
    /// Draw the configuration at --n as SVG
    Render(CommonArgs),
}

#[derive(Debug, Parser)]
#[command(name = "threegap", version, about = "Three-gap configurations of irrational rotations")]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

/// Parses command-line arguments (including the program name).
pub fn parse_args<I, T>(args: I) -> Result<CliInvocation, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let (command, common) = match cli.command {
        CliCommand::Word(c) => (Command::Word, c),
        CliCommand::Gaps(c) => (Command::Gaps, c),
        CliCommand::Points(c) => (Command::Points, c),
        CliCommand::Relabel(c) => (Command::Relabel, c),
        CliCommand::Symcheck(c) => (Command::Symcheck, c),
        CliCommand::Props(c) => (Command::Props, c),
        CliCommand::Verify(c) => (Command::Verify, c),
        CliCommand::Render(c) => (Command::Render, c),
    };
    Ok(CliInvocation {
        command,
        alpha_spec: common.alpha,
        n: common.n.map(|n| n as usize),
        n_max: common.n_max.map(|n| n as usize),
        p: common.p,
        format: common.format,
        output_path: common.output,
        engine: common.engine.into(),
        max_points: common.max_points,
    })
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Alpha(#[from] QuadError),
    #[error(transparent)]
    Gap(#[from] GapError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("`{command}` requires {what}")]
    Missing { command: &'static str, what: &'static str },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub document: String,
    /// Message for standard error when the invocation could not run.
    pub error: Option<String>,
}

pub fn run(inv: &CliInvocation) -> Outcome {
    match execute(inv) {
        Ok((document, all_passed)) => Outcome {
            status: if all_passed { 0 } else { 1 },
            document,
            error: None,
        },
        Err(e) => Outcome {
            status: 2,
            document: String::new(),
            error: Some(e.to_string()),
        },
    }
}

fn require(value: Option<usize>, command: &'static str, what: &'static str) -> Result<usize, CliError> {
    value.ok_or(CliError::Missing { command, what })
}

fn execute(inv: &CliInvocation) -> Result<(String, bool), CliError> {
    let alpha = parse_alpha(&inv.alpha_spec)?;
    match inv.command {
        Command::Word => {
            let n = require(inv.n, "word", "--n")?;
            let config = inv.engine.build(&alpha, n)?;
            Ok((emit_word(&config, inv.format)?, true))
        }
        Command::Gaps => {
            let n = require(inv.n, "gaps", "--n")?;
            let config = inv.engine.build(&alpha, n)?;
            Ok((emit_gaps(&config, inv.format)?, true))
        }
        Command::Points => {
            let n = require(inv.n, "points", "--n")?;
            let config = inv.engine.build(&alpha, n)?;
            Ok((emit_points(&config, inv.format)?, true))
        }
        Command::Relabel => {
            let n_max = require(inv.n_max, "relabel", "--n-max")?;
            Ok((emit_relabel(&alpha, n_max, inv.format)?, true))
        }
        Command::Symcheck => {
            let reports = symmetry_reports(&alpha, inv)?;
            let ok = reports.iter().all(|r| r.overall);
            Ok((emit_symmetry(&reports, inv.format)?, ok))
        }
        Command::Props => {
            let reports = prop_reports(&alpha, inv)?;
            let ok = !reports.iter().any(CheckReport::failed);
            Ok((emit_reports(&reports, inv.format)?, ok))
        }
        Command::Verify => {
            let n_max = require(inv.n_max, "verify", "--n-max")?;
            let report = check_engine_equivalence(&alpha, n_max, DENSE_EQUIVALENCE_LIMIT);
            let ok = !report.failed();
            Ok((emit_reports(&[report], inv.format)?, ok))
        }
        Command::Render => {
            let n = require(inv.n, "render", "--n")?;
            let config = inv.engine.build(&alpha, n)?;
            let style = Style {
                max_points: inv.max_points,
                ..Style::default()
            };
            Ok((render_svg_with(&config, &style)?, true))
        }
    }
}

fn symmetry_reports(alpha: &Alpha, inv: &CliInvocation) -> Result<Vec<SymmetryReport>, CliError> {
    if let Some(n) = inv.n {
        let config = inv.engine.build(alpha, n)?;
        return Ok(vec![check_symmetry_theorem(config.word())]);
    }
    let n_max = require(inv.n_max, "symcheck", "--n or --n-max")?;
    match inv.engine {
        Engine::Oracle => (1..=n_max)
            .map(|n| Ok(check_symmetry_theorem(build_config_oracle(alpha, n)?.word())))
            .collect(),
        Engine::Incremental => {
            let mut engine = IncrementalEngine::new(alpha);
            let mut out = vec![check_symmetry_theorem(&engine.word()?)];
            while engine.n() < n_max {
                engine.advance();
                out.push(check_symmetry_theorem(&engine.word()?));
            }
            Ok(out)
        }
    }
}

fn prop_reports(alpha: &Alpha, inv: &CliInvocation) -> Result<Vec<CheckReport>, CliError> {
    let Some(n) = inv.n else {
        let n_max = require(inv.n_max, "props", "--n or --n-max")?;
        return Ok(sweep(alpha, n_max, inv.engine)?);
    };
    let config = inv.engine.build(alpha, n)?;
    let mut reports = vec![check_fact2(&config), check_prop1(&config)];
    let times = relabeling_times(alpha, n);
    if times.last() == Some(&n) {
        let predecessor = times.iter().rev().nth(1).copied().unwrap_or(1);
        let ps = match inv.p {
            Some(p) => p..=p,
            None => 1..=n - predecessor,
        };
        for p in ps {
            reports.push(check_prop2_with_predecessor(&config, p, predecessor, times.len())?);
        }
    } else if inv.p.is_some() {
        return Err(CheckError::NotRelabelingTime(n).into());
    }
    Ok(reports)
}

fn csv_document<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn json_lines<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String, CliError> {
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(&row)?);
        out.push('\n');
    }
    Ok(out)
}

fn emit_word(config: &CircleConfig, format: Format) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct WordDoc<'a> {
        alpha: String,
        n: usize,
        word: &'a str,
    }
    #[derive(Serialize)]
    struct LetterRow {
        j: usize,
        letter: char,
    }
    let word = config.word().to_string();
    Ok(match format {
        Format::Text => format!("{word}\n"),
        Format::Json => {
            let doc = WordDoc {
                alpha: config.alpha().spec(),
                n: config.n(),
                word: &word,
            };
            format!("{}\n", serde_json::to_string(&doc)?)
        }
        Format::Csv => csv_document(word.chars().enumerate().map(|(j, letter)| LetterRow { j, letter }))?,
    })
}

#[derive(Serialize)]
struct GapRow {
    j: usize,
    u_j: usize,
    y_j_decimal: String,
    delta_j_decimal: String,
    letter: char,
    a: String,
    b: String,
    c: String,
    d: u64,
}

fn gap_rows(config: &CircleConfig) -> Vec<GapRow> {
    config
        .gaps()
        .iter()
        .enumerate()
        .map(|(j, g)| GapRow {
            j,
            u_j: config.visit()[j],
            y_j_decimal: config.points()[j].to_decimal(DECIMAL_DIGITS),
            delta_j_decimal: g.to_decimal(DECIMAL_DIGITS),
            letter: config.word().letters()[j].as_char(),
            a: g.a().to_string(),
            b: g.b().to_string(),
            c: g.c().to_string(),
            d: g.d(),
        })
        .collect()
}

fn emit_gaps(config: &CircleConfig, format: Format) -> Result<String, CliError> {
    let rows = gap_rows(config);
    Ok(match format {
        Format::Csv => csv_document(rows)?,
        Format::Json => format!("{}\n", serde_json::to_string(&rows)?),
        Format::Text => {
            let mut out = format!("# alpha = {}, N = {}, D = {}\n", config.alpha(), config.n(), config.distinct_count());
            for (k, s) in config.distinct().iter().enumerate() {
                out.push_str(&format!("# size {}: {} ≈ {}\n", k + 1, s, s.to_decimal(DECIMAL_DIGITS)));
            }
            for (row, g) in rows.iter().zip(config.gaps()) {
                out.push_str(&format!("{:>6}  {}  {:<18}  {}\n", row.j, row.letter, row.delta_j_decimal, g));
            }
            out
        }
    })
}

fn emit_points(config: &CircleConfig, format: Format) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct PointRow {
        j: usize,
        u_j: usize,
        y_j_decimal: String,
        a: String,
        b: String,
        c: String,
        d: u64,
    }
    let rows: Vec<PointRow> = config
        .points()
        .iter()
        .zip(config.visit())
        .enumerate()
        .map(|(j, (y, &u))| PointRow {
            j,
            u_j: u,
            y_j_decimal: y.to_decimal(DECIMAL_DIGITS),
            a: y.a().to_string(),
            b: y.b().to_string(),
            c: y.c().to_string(),
            d: y.d(),
        })
        .collect();
    Ok(match format {
        Format::Csv => csv_document(rows)?,
        Format::Json => format!("{}\n", serde_json::to_string(&rows)?),
        Format::Text => {
            let mut out = String::new();
            for (row, y) in rows.iter().zip(config.points()) {
                out.push_str(&format!("{:>6}  u={:<6}  {:<18}  {}\n", row.j, row.u_j, row.y_j_decimal, y));
            }
            out
        }
    })
}

fn emit_relabel(alpha: &Alpha, n_max: usize, format: Format) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct RelabelDoc {
        alpha: String,
        n_max: usize,
        relabeling_times: Vec<usize>,
    }
    #[derive(Serialize)]
    struct Row {
        k: usize,
        r: usize,
    }
    let times = relabeling_times(alpha, n_max);
    Ok(match format {
        Format::Text => {
            let list: Vec<String> = times.iter().map(ToString::to_string).collect();
            format!("{}\n", list.join(" "))
        }
        Format::Json => {
            let doc = RelabelDoc {
                alpha: alpha.spec(),
                n_max,
                relabeling_times: times,
            };
            format!("{}\n", serde_json::to_string(&doc)?)
        }
        Format::Csv => csv_document(times.iter().enumerate().map(|(i, &r)| Row { k: i + 1, r }))?,
    })
}

fn emit_symmetry(reports: &[SymmetryReport], format: Format) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        center: usize,
        radius: usize,
        ok: bool,
        first_mismatch: Option<usize>,
    }
    Ok(match format {
        Format::Json => json_lines(reports)?,
        Format::Csv => csv_document(reports.iter().flat_map(|r| {
            r.centers.iter().map(move |c| Row {
                n: r.n,
                center: c.center,
                radius: c.radius,
                ok: c.ok,
                first_mismatch: c.first_mismatch,
            })
        }))?,
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let verdict = if r.overall { "pass" } else { "FAIL" };
                out.push_str(&format!("N={} {verdict} centers={} word={}\n", r.n, r.centers.len(), r.word));
                for c in &r.centers {
                    match c.first_mismatch {
                        None => out.push_str(&format!("  J={} l={} ok\n", c.center, c.radius)),
                        Some(k) => out.push_str(&format!("  J={} l={} mismatch at k={k}\n", c.center, c.radius)),
                    }
                }
            }
            out
        }
    })
}

fn emit_reports(reports: &[CheckReport], format: Format) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Row<'a> {
        check_name: &'a str,
        alpha: &'a str,
        n: usize,
        p: Option<usize>,
        q: Option<usize>,
        status: threegap_core::Status,
        witnesses: usize,
    }
    Ok(match format {
        Format::Json => json_lines(reports)?,
        Format::Csv => csv_document(reports.iter().map(|r| Row {
            check_name: &r.check_name,
            alpha: &r.params.alpha,
            n: r.params.n,
            p: r.params.p,
            q: r.params.q,
            status: r.status,
            witnesses: r.witnesses.len(),
        }))?,
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let status = serde_json::to_value(r.status)?;
                let mut line = format!(
                    "{:<20} {:<22} alpha={} n={}",
                    status.as_str().unwrap_or_default(),
                    r.check_name,
                    r.params.alpha,
                    r.params.n
                );
                if let Some(p) = r.params.p {
                    line.push_str(&format!(" p={p}"));
                }
                if let Some(q) = r.params.q {
                    line.push_str(&format!(" q={q}"));
                }
                out.push_str(&line);
                out.push('\n');
                for w in &r.witnesses {
                    out.push_str(&format!("    k={} left={} right={}", w.index, w.left, w.right));
                    if let Some(d) = &w.detail {
                        out.push_str(&format!(" ({d})"));
                    }
                    out.push('\n');
                }
            }
            out
        }
    })
}
