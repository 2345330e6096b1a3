use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use regfactor::{
    build_extremal, check_condition, circulant_regular, grid_check, max_regular_factor, random_min_degree,
    theorem_certificate, CertificateInstance, CertificateRoute, FactorSpec,
};
use regfactor_cli::output::{write_human, write_records};
use regfactor_cli::sweep::{pairs_for, parse_int_list, parse_pair, parse_ratio, Outcome};
use regfactor_cli::{plan_sweep, read_edge_list, run_sweep, to_edge_list, Format, Source, SweepPlan, SweepRecord};
use serde::Serialize;

/// Regular spanning subgraphs of balanced bipartite graphs.
#[derive(Parser)]
#[command(name = "regfactor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen {
        kind: GenKind,
        n: usize,
        /// Minimum degree d for extremal and random graphs, degree r for circulant ones.
        param: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest degree of a regular spanning subgraph of an edge-list graph.
    Maxreg {
        input: PathBuf,
        /// Also write one such subgraph as an edge list.
        #[arg(long)]
        emit_subgraph: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Gale–Ryser and certificate checks; exit status 0 iff the check passes.
    Check {
        #[command(subcommand)]
        mode: CheckMode,
    },
    /// Tabulate r_max against ⌊ρ₀n⌋ and ⌈ρ₀n⌉ over many graphs.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Extremal,
    Random,
    Circulant,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Jsonlike)]
    format: Format,
}

#[derive(Subcommand)]
enum CheckMode {
    /// Exhaustive Gale–Ryser check for an r-regular factor (n <= 20).
    GaleRyser {
        input: PathBuf,
        r: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Certify ⌊ρ₀n⌋ for every graph with minimum degree d.
    Cert {
        n: u64,
        d: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Scan the degree bound over the (n+1)² grid for a given r.
    Grid {
        n: u64,
        d: u64,
        r: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// Explicit N:D pairs, comma separated or repeated.
    #[arg(long = "pair", value_parser = parse_pair, value_delimiter = ',')]
    pairs: Vec<(usize, usize)>,
    /// Class sizes, e.g. `2-12,16`. Without --ratio every d with 2d >= n is used.
    #[arg(long = "n", value_parser = parse_int_list)]
    ns: Option<IntList>,
    /// Minimum-degree ratios P/Q in [1/2, 1]; d = ⌈n·P/Q⌉.
    #[arg(long = "ratio", value_parser = parse_ratio, value_delimiter = ',')]
    ratios: Vec<(usize, usize)>,
    #[arg(long = "source", value_enum, value_delimiter = ',', default_value = "extremal")]
    sources: Vec<Source>,
    /// Edge-list files to include as `file` rows.
    #[arg(long = "file")]
    files: Vec<PathBuf>,
    /// First seed for random graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of consecutive seeds per (n, d) for random graphs.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Record wall time per row. Off by default so output is reproducible.
    #[arg(long)]
    timing: bool,
}

type IntList = Vec<usize>;

/// Verdict of a command that ran to completion.
enum Verdict {
    Pass,
    Fail,
}

/// Errors that indicate a bug rather than bad input.
#[derive(Debug, thiserror::Error)]
#[error("internal error: {0}")]
struct Internal(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Internal>() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    match cli.command {
        Command::Gen { kind, n, param, seed, out } => gen(kind, n, param, seed, out.as_deref()),
        Command::Maxreg { input, emit_subgraph, output } => maxreg(&input, emit_subgraph.as_deref(), output.format),
        Command::Check { mode } => check(mode),
        Command::Sweep(args) => sweep(args),
    }
}

fn emit<T: Serialize>(record: &T, format: Format) -> anyhow::Result<()> {
    write_human(record, io::stderr().lock())?;
    write_records(std::slice::from_ref(record), format, io::stdout().lock())
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().lock().write_all(bytes).context("writing stdout"),
    }
}

fn gen(kind: GenKind, n: usize, param: usize, seed: u64, out: Option<&Path>) -> anyhow::Result<Verdict> {
    if n == 0 {
        bail!("n must be positive");
    }
    let g = match kind {
        GenKind::Extremal => build_extremal(n, param)?,
        GenKind::Random => random_min_degree(n, param, seed)?,
        GenKind::Circulant => circulant_regular(n, param)?,
    };
    write_output(out, to_edge_list(&g).as_bytes())?;
    eprintln!("n: {n}\nedges: {}\nmin_degree: {}", g.edge_count(), g.min_degree());
    Ok(Verdict::Pass)
}

fn maxreg(input: &Path, emit_subgraph: Option<&Path>, format: Format) -> anyhow::Result<Verdict> {
    let g = read_edge_list(input).with_context(|| format!("reading {}", input.display()))?;
    let (r_max, h) = max_regular_factor(&g);
    if !h.is_regular(r_max) || !h.is_subgraph_of(&g) {
        return Err(Internal(format!("extracted subgraph is not a {r_max}-regular subgraph of the input")).into());
    }
    if let Some(path) = emit_subgraph {
        write_output(Some(path), to_edge_list(&h).as_bytes())?;
    }
    let record = SweepRecord::from_r_max(&g, g.min_degree(), r_max, Source::File, None, None);
    emit(&record, format)?;
    Ok(Verdict::Pass)
}

#[derive(Serialize)]
struct GaleRyserRecord {
    mode: &'static str,
    n: usize,
    r: usize,
    satisfied: bool,
    slack: i64,
    witness_x: Option<String>,
    witness_y: Option<String>,
}

#[derive(Serialize)]
struct CertRecord {
    mode: &'static str,
    n: u64,
    d: u64,
    r: Option<u64>,
    route: Option<&'static str>,
    discriminant: Option<i128>,
    passed: bool,
    failing_i: Option<u64>,
    failing_j: Option<u64>,
    margin: Option<i128>,
    reason: Option<&'static str>,
}

#[derive(Serialize)]
struct GridRecord {
    mode: &'static str,
    n: u64,
    d: u64,
    r: u64,
    passed: bool,
    failing_i: Option<u64>,
    failing_j: Option<u64>,
    margin: i128,
}

fn verdict(passed: bool) -> Verdict {
    if passed {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn check(mode: CheckMode) -> anyhow::Result<Verdict> {
    match mode {
        CheckMode::GaleRyser { input, r, output } => {
            let g = read_edge_list(&input).with_context(|| format!("reading {}", input.display()))?;
            let f = FactorSpec::constant(g.n(), r)?;
            let v = check_condition(&g, &f).context("refusing exhaustive check")?;
            let (witness_x, witness_y) = match &v.witness {
                Some((x, y)) => (Some(x.to_string()), Some(y.to_string())),
                None => (None, None),
            };
            emit(
                &GaleRyserRecord {
                    mode: "gale-ryser",
                    n: g.n(),
                    r,
                    satisfied: v.satisfied,
                    slack: v.slack,
                    witness_x,
                    witness_y,
                },
                output.format,
            )?;
            Ok(verdict(v.satisfied))
        }
        CheckMode::Cert { n, d, output } => {
            let record = match theorem_certificate(n, d) {
                Ok(c) => CertRecord {
                    mode: "cert",
                    n,
                    d,
                    r: Some(c.instance.r()),
                    route: Some(match c.route {
                        CertificateRoute::Discriminant => "discriminant",
                        CertificateRoute::RootPair => "root-pair",
                    }),
                    discriminant: Some(c.discriminant),
                    passed: true,
                    failing_i: None,
                    failing_j: None,
                    margin: Some(c.grid.margin),
                    reason: None,
                },
                Err(regfactor::Error::CertificateFailure { r, point, reason, .. }) => CertRecord {
                    mode: "cert",
                    n,
                    d,
                    r: Some(r),
                    route: None,
                    discriminant: None,
                    passed: false,
                    failing_i: point.map(|p| p.0),
                    failing_j: point.map(|p| p.1),
                    margin: None,
                    reason: Some(reason),
                },
                Err(e) => return Err(e.into()),
            };
            emit(&record, output.format)?;
            Ok(verdict(record.passed))
        }
        CheckMode::Grid { n, d, r, output } => {
            let c = CertificateInstance::new(n, d, r)?;
            let v = grid_check(&c);
            emit(
                &GridRecord {
                    mode: "grid",
                    n,
                    d,
                    r,
                    passed: v.passed,
                    failing_i: v.failing_point.map(|p| p.0),
                    failing_j: v.failing_point.map(|p| p.1),
                    margin: v.margin,
                },
                output.format,
            )?;
            Ok(verdict(v.passed))
        }
    }
}

fn sweep(args: SweepArgs) -> anyhow::Result<Verdict> {
    let mut pairs = args.pairs;
    if let Some(ns) = &args.ns {
        for p in pairs_for(ns, &args.ratios) {
            if !pairs.contains(&p) {
                pairs.push(p);
            }
        }
    }
    let files = args
        .files
        .iter()
        .map(|p| Ok((p.clone(), read_edge_list(p).with_context(|| format!("reading {}", p.display()))?)))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if pairs.is_empty() && files.is_empty() {
        bail!("nothing to sweep: give --pair, --n or --file");
    }
    let plan = SweepPlan { pairs, sources: args.sources, seed: args.seed, seeds: args.seeds, files };
    let jobs = plan_sweep(&plan)?;
    let (outcomes, summary) = run_sweep(&jobs, args.timing);

    let mut rows = Vec::with_capacity(outcomes.len());
    for o in outcomes {
        match o {
            Outcome::Row(r) => rows.push(r),
            Outcome::Skipped { n, d, source, reason } => {
                eprintln!("skipped n={n} d={d} source={source:?}: {reason}");
            }
        }
    }
    let mut buf = Vec::new();
    write_records(&rows, args.format, &mut buf)?;
    write_output(args.out.as_deref(), &buf)?;
    eprintln!("{summary}");
    Ok(verdict(summary.below_floor == 0))
}
