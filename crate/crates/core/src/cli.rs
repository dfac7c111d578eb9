//! Command-line front end.

use std::fs::{self, File};
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{parse_manifest, render_table, run_bench, run_max_clique, RowStatus};
use crate::correspondence::{
    build_correspondence_metric_with, max_correspondence, parse_points, top_k_filter, MetricPair,
};
use crate::error::Error;
use crate::io::{load_graph, GraphFormat};
use crate::isomorphism::find_subgraph_isomorphism;
use crate::search::{all_cliques, SearchParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "cliquesearch",
    version,
    about = "Maximum cliques in large sparse graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a maximum clique.
    MaxClique(MaxCliqueArgs),
    /// Stream all cliques of a given size, one per line.
    Enumerate(EnumerateArgs),
    /// Match two point sets by pairwise distances.
    MatchPoints(MatchPointsArgs),
    /// Look for a copy of the pattern graph inside the host graph.
    Iso(IsoArgs),
    /// Run every graph in a manifest and tabulate the results.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Mtx,
    Edges,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Mtx => GraphFormat::Mtx,
            FormatArg::Edges => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputArg {
    Text,
    Records,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 1)]
    pub lower_bound: usize,
    #[arg(long, default_value_t = u32::MAX as usize)]
    pub upper_bound: usize,
    /// Seconds; 0 disables the limit.
    #[arg(long, default_value_t = 1.0)]
    pub time_limit: f64,
    #[arg(long, overrides_with = "no_heuristic")]
    pub heuristic: bool,
    #[arg(long)]
    pub no_heuristic: bool,
    #[arg(long, overrides_with = "no_dfs")]
    pub dfs: bool,
    #[arg(long)]
    pub no_dfs: bool,
}

impl SearchArgs {
    pub fn params(&self) -> SearchParams {
        SearchParams {
            lower_bound: self.lower_bound,
            upper_bound: self.upper_bound,
            time_limit: self.time_limit,
            use_heuristic: self.heuristic && !self.no_heuristic,
            use_dfs: !self.no_dfs,
            continue_search: false,
        }
    }
}

#[derive(Debug, Args)]
pub struct MaxCliqueArgs {
    pub file: PathBuf,
    /// Input format; detected from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    pub output: OutputArg,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Clique size.
    #[arg(long, short = 'k')]
    pub size: usize,
    /// Stop after this many cliques.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct MatchPointsArgs {
    pub file_p: PathBuf,
    pub file_q: PathBuf,
    /// Distance tolerance.
    #[arg(long)]
    pub epsilon: f64,
    /// Candidate lists: line `i` holds Q-indices ranked for P-point `i`.
    #[arg(long, requires = "top_k")]
    pub ranks: Option<PathBuf>,
    /// Keep only pairings among the first `k` ranked candidates.
    #[arg(long, requires = "ranks")]
    pub top_k: Option<usize>,
    /// Seconds; 0 disables the limit.
    #[arg(long, default_value_t = 0.0)]
    pub time_limit: f64,
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    pub output: OutputArg,
}

#[derive(Debug, Args)]
pub struct IsoArgs {
    /// Host graph.
    pub file_p: PathBuf,
    /// Pattern graph.
    pub file_q: PathBuf,
    /// Require an induced copy (non-edges map to non-edges).
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Seconds; 0 disables the limit.
    #[arg(long, default_value_t = 0.0)]
    pub time_limit: f64,
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    pub output: OutputArg,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub manifest: PathBuf,
    /// Seconds per graph for the dfs phase; 0 disables the limit.
    #[arg(long, default_value_t = 0.0)]
    pub time_limit: f64,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_) | Error::Capacity(_) => EXIT_USAGE,
        Error::Format { .. } | Error::Validation(_) => EXIT_PARSE,
        Error::Io(_) => EXIT_FAILURE,
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::MaxClique(args) => cmd_max_clique(&args, out, err),
        Command::Enumerate(args) => cmd_enumerate(&args, out),
        Command::MatchPoints(args) => cmd_match_points(&args, out),
        Command::Iso(args) => cmd_iso(&args, out),
        Command::Bench(args) => cmd_bench(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type CmdResult = Result<i32, Error>;

fn cmd_max_clique(args: &MaxCliqueArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let params = args.search.params();
    let (report, warnings) = run_max_clique(&args.file, args.format.map(Into::into), &params)?;
    for w in &warnings {
        writeln!(err, "warning: {w}")?;
    }
    if report.omega == 0 && report.n_vertices > 0 {
        writeln!(
            err,
            "no clique of at least {} vertices found",
            params.lower_bound
        )?;
    }
    match args.output {
        OutputArg::Text => write!(out, "{}", report.to_text())?,
        OutputArg::Records => write!(out, "{}", report.to_records())?,
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    let loaded = load_graph(&args.file, args.format.map(Into::into))?;
    let stream = all_cliques(&loaded.graph, args.size)?;
    for clique in stream.take(args.limit.unwrap_or(usize::MAX)) {
        let line: Vec<String> = clique.iter().map(|l| l.to_string()).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(EXIT_OK)
}

fn read_ranks(path: &PathBuf) -> Result<Vec<Vec<usize>>, Error> {
    let text = fs::read_to_string(path)?;
    text.lines()
        .enumerate()
        .map(|(idx, line)| {
            line.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::format(idx + 1, format!("invalid Q-index `{t}`")))
                })
                .collect()
        })
        .collect()
}

fn cmd_match_points(args: &MatchPointsArgs, out: &mut dyn Write) -> CmdResult {
    let p = parse_points(BufReader::new(File::open(&args.file_p)?))?;
    let q = parse_points(BufReader::new(File::open(&args.file_q)?))?;
    if p.dim() != q.dim() {
        return Err(Error::Usage(format!(
            "point sets have different dimensions ({} vs {})",
            p.dim(),
            q.dim()
        )));
    }
    let metric = MetricPair {
        d_p: |a, b| p.euclidean(a, b),
        d_q: |a, b| q.euclidean(a, b),
        epsilon: args.epsilon,
    };
    let cg = match (&args.ranks, args.top_k) {
        (Some(path), Some(k)) => {
            let ranks = read_ranks(path)?;
            if ranks.len() != p.len() {
                return Err(Error::Usage(format!(
                    "rank file has {} lines for {} P-points",
                    ranks.len(),
                    p.len()
                )));
            }
            let filter = top_k_filter(|_, _, _, _| true, &ranks, q.len(), k)?;
            build_correspondence_metric_with(p.len(), q.len(), &metric, filter)?
        }
        _ => build_correspondence_metric_with(p.len(), q.len(), &metric, |_, _, _, _| true)?,
    };
    let params = SearchParams {
        time_limit: args.time_limit,
        ..SearchParams::exhaustive()
    };
    let found = max_correspondence(&cg, &params)?;
    match args.output {
        OutputArg::Text => {
            writeln!(out, "omega {}", found.pairs.len())?;
            writeln!(out, "search_done {}", found.search_done)?;
            for (i, j) in &found.pairs {
                writeln!(out, "{i} {j}")?;
            }
        }
        OutputArg::Records => {
            writeln!(out, "omega={}", found.pairs.len())?;
            writeln!(out, "search_done={}", found.search_done)?;
            for (i, j) in &found.pairs {
                writeln!(out, "pair={i},{j}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_iso(args: &IsoArgs, out: &mut dyn Write) -> CmdResult {
    let format = args.format.map(Into::into);
    let host = load_graph(&args.file_p, format)?.graph;
    let pattern = load_graph(&args.file_q, format)?.graph;
    let params = SearchParams {
        time_limit: args.time_limit,
        ..SearchParams::exhaustive()
    };
    let result = find_subgraph_isomorphism(&host, &pattern, &params, args.strict)?;
    match args.output {
        OutputArg::Text => {
            writeln!(out, "is_full {}", result.is_full)?;
            writeln!(out, "search_done {}", result.search_done)?;
            writeln!(out, "mapped {}", result.mapping.len())?;
            for (q, p) in &result.mapping {
                writeln!(out, "{q} {p}")?;
            }
        }
        OutputArg::Records => {
            writeln!(out, "is_full={}", result.is_full)?;
            writeln!(out, "search_done={}", result.search_done)?;
            for (q, p) in &result.mapping {
                writeln!(out, "pair={q},{p}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    let text = fs::read_to_string(&args.manifest)?;
    let base = args
        .manifest
        .parent()
        .map_or_else(|| PathBuf::from("."), PathBuf::from);
    let entries = parse_manifest(&text, &base)?;
    let params = SearchParams {
        time_limit: args.time_limit,
        ..SearchParams::exhaustive()
    };
    let rows = run_bench(&entries, &params);
    write!(out, "{}", render_table(&rows))?;
    let code = if rows.iter().any(|r| r.is_mismatch()) {
        EXIT_MISMATCH
    } else if let Some(e) = rows.iter().find_map(|r| match &r.status {
        RowStatus::Failed(e) => Some(e),
        _ => None,
    }) {
        exit_code(e)
    } else {
        EXIT_OK
    };
    Ok(code)
}
