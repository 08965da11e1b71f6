//! The `distspec` command line.
//!
//! Exit status: 0 success, 1 bound violation (known-open ones only with
//! `--strict`), 2 usage or input error, 3 numerical failure.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{analyze, Analysis, EvalOptions};
use crate::error::{Error, Result};
use crate::graph::{parse_edgelist, FamilyKind, Graph};
use crate::graph6::{parse_graph6, to_graph6};
use crate::harness::{
    exhaustive_range, scan_tightness, verify, FamilySpec, ScanConfig, VerificationSummary,
};
use crate::report::{format_fixed, write_reports_csv, write_tightness_csv};
use crate::spectral::{distance_estrada_series, SeriesOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "distspec",
    version,
    about = "Distance spectra, distance Estrada index and bound verification for connected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print n, m, diameter, Wiener index, distance spectrum, DEE (both routes), energy and n+.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every bound on one graph.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        eval: EvalArgs,
        /// Emit the reports as JSON.
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit the reports as CSV rows.
        #[arg(long)]
        csv: bool,
        /// Treat known-open violations as failures.
        #[arg(long)]
        strict: bool,
    },
    /// Sample graph families and summarize bound violations.
    Verify(ScanArgs),
    /// Sample graph families and write one CSV row per (graph, bound).
    Scan(ScanArgs),
    /// Check every labeled connected graph with the given orders (at most 8).
    Exhaustive {
        /// Order or range of orders, e.g. `6` or `1..6`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        eval: EvalArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
        /// Also write the JSON summary to this path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Input format; inferred from the extension (.g6, .txt, .el) or content when omitted.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

impl EvalArgs {
    fn options(&self) -> Result<EvalOptions> {
        if self.t == 0 || self.t >= crate::distance::MAX_POWER_DEPTH {
            return Err(Error::InvalidParameter(format!(
                "--t must lie in 1..{}",
                crate::distance::MAX_POWER_DEPTH
            )));
        }
        if self.tol.is_nan() || self.tol < 0.0 {
            return Err(Error::InvalidParameter("--tol must be non-negative".into()));
        }
        Ok(EvalOptions {
            alpha: self.alpha,
            t: self.t,
            tol: self.tol,
            ..EvalOptions::default()
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Star,
    Complete,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    Gnp,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Graph family; repeat to scan several.
    #[arg(long = "family", value_enum, default_value = "gnp")]
    families: Vec<FamilyArg>,
    /// Order or range of orders, e.g. `8` or `2..10`.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// Edge probabilities for `gnp`, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    p: Vec<f64>,
    /// Samples per random cell.
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    eval: EvalArgs,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    strict: bool,
    /// Output file (CSV for `scan`, JSON summary for `verify`).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Evaluate graphs on one thread.
    #[arg(long)]
    serial: bool,
}

impl ScanArgs {
    fn config(&self) -> Result<ScanConfig> {
        let families = self
            .families
            .iter()
            .map(|f| {
                let orders = self.n.clone();
                let kind = match f {
                    FamilyArg::Gnp => {
                        return FamilySpec::Gnp {
                            orders,
                            p: self.p.clone(),
                        }
                    }
                    FamilyArg::Path => FamilyKind::Path,
                    FamilyArg::Cycle => FamilyKind::Cycle,
                    FamilyArg::Star => FamilyKind::Star,
                    FamilyArg::Complete => FamilyKind::Complete,
                    FamilyArg::CompleteBipartite => FamilyKind::CompleteBipartite,
                };
                FamilySpec::Named { kind, orders }
            })
            .collect();
        let config = ScanConfig {
            families,
            count: self.count,
            seed: self.seed,
            eval: self.eval.options()?,
            parallel: !self.serial,
            ..ScanConfig::default()
        };
        config.validate()?;
        Ok(config)
    }
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid order {t:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "distspec: {e}");
            if e.is_numerical() {
                EXIT_NUMERIC
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute { input, json } => {
            let g = read_graph(&input, stdin)?;
            let analysis = analyze(&g, &EvalOptions::default())?;
            let series = distance_estrada_series(&analysis.profile, &SeriesOptions::default())?;
            print_compute(&g, &analysis, series, json, out)?;
            Ok(EXIT_OK)
        }
        Command::Bounds {
            input,
            eval,
            json,
            csv,
            strict,
        } => {
            let g = read_graph(&input, stdin)?;
            let analysis = analyze(&g, &eval.options()?)?;
            if json {
                writeln!(out, "{}", to_json(&analysis.reports))?;
            } else if csv {
                write_reports_csv(&analysis.reports, &mut *out)?;
            } else {
                print_bound_table(&analysis, out)?;
            }
            let failed = analysis
                .reports
                .iter()
                .any(|r| !r.satisfied && (strict || !r.bound_id.is_known_open()));
            Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
        }
        Command::Verify(args) => {
            let summary = verify(&args.config()?)?;
            finish_summary(
                &summary,
                args.json,
                args.strict,
                args.output.as_deref(),
                out,
            )
        }
        Command::Scan(args) => {
            let rows = scan_tightness(&args.config()?)?;
            match &args.output {
                Some(path) => {
                    let file = fs::File::create(path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    write_tightness_csv(&rows, std::io::BufWriter::new(file))?;
                }
                None => write_tightness_csv(&rows, &mut *out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Exhaustive {
            n,
            eval,
            json,
            strict,
            output,
        } => {
            let summary = exhaustive_range(n, &eval.options()?)?;
            finish_summary(&summary, json, strict, output.as_deref(), out)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn read_graph(input: &InputArgs, stdin: &mut dyn Read) -> Result<Graph> {
    let text = if input.input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.input).map_err(|e| Error::Io(format!("{}: {e}", input.input)))?
    };
    let format = input
        .format
        .or_else(|| format_from_extension(Path::new(&input.input)))
        .unwrap_or_else(|| sniff_format(&text));
    match format {
        InputFormat::Edgelist => parse_edgelist(&text),
        InputFormat::Graph6 => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let first = lines
                .next()
                .ok_or_else(|| Error::Graph6("empty input".into()))?;
            if lines.next().is_some() {
                return Err(Error::Graph6("expected a single graph".into()));
            }
            parse_graph6(first)
        }
    }
}

fn format_from_extension(path: &Path) -> Option<InputFormat> {
    match path.extension()?.to_str()? {
        "g6" => Some(InputFormat::Graph6),
        "txt" | "el" => Some(InputFormat::Edgelist),
        _ => None,
    }
}

/// Edge lists start with a numeric `n m` header (after comments); anything
/// else is taken as graph6.
fn sniff_format(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line)
            if line.starts_with('#')
                || line
                    .split_whitespace()
                    .all(|t| t.chars().all(|c| c.is_ascii_digit())) =>
        {
            InputFormat::Edgelist
        }
        _ if text.trim_start().starts_with('#') => InputFormat::Edgelist,
        _ => InputFormat::Graph6,
    }
}

#[derive(Serialize)]
struct ComputeOutput<'a> {
    graph6: String,
    n: usize,
    m: usize,
    diameter: u32,
    wiener: u64,
    spectrum: &'a [f64],
    dee: f64,
    dee_series: f64,
    energy: f64,
    n_plus: usize,
    residual: f64,
}

fn print_compute(
    g: &Graph,
    a: &Analysis,
    series: f64,
    json: bool,
    out: &mut dyn Write,
) -> Result<()> {
    if json {
        let report = ComputeOutput {
            graph6: to_graph6(g),
            n: g.n(),
            m: g.m(),
            diameter: a.profile.diameter(),
            wiener: a.profile.wiener(),
            spectrum: a.spectrum.eigenvalues(),
            dee: a.estrada,
            dee_series: series,
            energy: a.energy,
            n_plus: a.spectrum.n_plus(),
            residual: a.spectrum.residual(),
        };
        writeln!(out, "{}", to_json(&report))?;
        return Ok(());
    }
    let spectrum: Vec<String> = a
        .spectrum
        .eigenvalues()
        .iter()
        .map(|mu| format_fixed(*mu, 6))
        .collect();
    writeln!(out, "n {}", g.n())?;
    writeln!(out, "m {}", g.m())?;
    writeln!(out, "diameter {}", a.profile.diameter())?;
    writeln!(out, "wiener {}", a.profile.wiener())?;
    writeln!(out, "spectrum {}", spectrum.join(" "))?;
    writeln!(out, "DEE {}", format_fixed(a.estrada, 6))?;
    writeln!(out, "DEE_series {}", format_fixed(series, 6))?;
    writeln!(out, "energy {}", format_fixed(a.energy, 6))?;
    writeln!(out, "n_plus {}", a.spectrum.n_plus())?;
    Ok(())
}

fn print_bound_table(a: &Analysis, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "bound_id bound actual slack satisfied equality")?;
    for r in &a.reports {
        writeln!(
            out,
            "{} {} {} {} {} {}",
            r.bound_id,
            format_fixed(r.bound_value, 3),
            format_fixed(r.actual_value, 3),
            format_fixed(r.slack, 3),
            r.satisfied,
            r.equality
        )?;
    }
    Ok(())
}

fn finish_summary(
    summary: &VerificationSummary,
    json: bool,
    strict: bool,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    if let Some(path) = output {
        fs::write(path, summary.to_json() + "\n")
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    if json {
        writeln!(out, "{}", summary.to_json())?;
    } else {
        print_summary(summary, out)?;
    }
    Ok(if !summary.passed(strict) {
        EXIT_VIOLATION
    } else if !summary.numeric_failures.is_empty() {
        EXIT_NUMERIC
    } else {
        EXIT_OK
    })
}

fn print_summary(s: &VerificationSummary, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "graphs_tested {}", s.graphs_tested)?;
    writeln!(
        out,
        "violations {} unexpected {} known-open",
        s.unexpected_violations().count(),
        s.known_open_violations().count()
    )?;
    for v in &s.violations {
        let severity = match v.severity {
            crate::harness::Severity::KnownOpen => "known-open",
            crate::harness::Severity::Unexpected => "unexpected",
        };
        writeln!(
            out,
            "  violation {} {} {} slack {}",
            v.bound_id,
            severity,
            v.graph6,
            format_fixed(v.slack, 6)
        )?;
    }
    writeln!(out, "equality_hits {}", s.equality_hits.len())?;
    for h in &s.equality_hits {
        writeln!(out, "  equality {} {}", h.bound_id, h.graph6)?;
    }
    for c in &s.skipped_cells {
        writeln!(out, "skipped {}: {}", c.cell, c.reason)?;
    }
    for f in &s.numeric_failures {
        writeln!(out, "numeric_failure {}: {}", f.graph6, f.message)?;
    }
    writeln!(out, "slack min mean max")?;
    for (id, st) in &s.tightness_stats {
        writeln!(
            out,
            "  {} {} {} {}",
            id,
            format_fixed(st.min_slack, 6),
            format_fixed(st.mean_slack, 6),
            format_fixed(st.max_slack, 6)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert_eq!(parse_range("2..10").unwrap(), 2..=10);
        assert_eq!(parse_range("2..=10").unwrap(), 2..=10);
        assert!(parse_range("10..2").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(sniff_format("4 3\n0 1\n1 2\n2 3\n"), InputFormat::Edgelist);
        assert_eq!(sniff_format("# path\n2 1\n0 1\n"), InputFormat::Edgelist);
        assert_eq!(sniff_format("Ch\n"), InputFormat::Graph6);
        assert_eq!(sniff_format("A_"), InputFormat::Graph6);
        assert_eq!(
            format_from_extension(Path::new("x.g6")),
            Some(InputFormat::Graph6)
        );
        assert_eq!(
            format_from_extension(Path::new("p4.txt")),
            Some(InputFormat::Edgelist)
        );
        assert_eq!(format_from_extension(Path::new("-")), None);
    }
}
