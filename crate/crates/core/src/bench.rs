//! Timed runs over single graph files and benchmark manifests.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::error::{Error, Result};
use crate::io::{load_graph, GraphFormat, LoadWarning};
use crate::report::RunReport;
use crate::search::{max_clique_search, seed_heuristic, CliqueOutcome, SearchParams, SearchState};

/// Loads `path` and searches it, timing load, heuristic and dfs separately.
///
/// The time limit applies to the dfs phase. A clique smaller than
/// `lower_bound` is reported as `omega = 0` with no members.
pub fn run_max_clique(
    path: &Path,
    format: Option<GraphFormat>,
    params: &SearchParams,
) -> Result<(RunReport, Vec<LoadWarning>)> {
    params.validate()?;
    if !params.use_heuristic && !params.use_dfs {
        return Err(Error::usage(
            "at least one of heuristic and dfs must be enabled",
        ));
    }
    let start = Instant::now();
    let loaded = load_graph(path, format)?;
    let load_seconds = start.elapsed().as_secs_f64();
    let g = &loaded.graph;

    let mut state = SearchState::new();
    let mut heuristic_omega = None;
    let mut heuristic_seconds = 0.0;
    if params.use_heuristic {
        let t = Instant::now();
        heuristic_omega = seed_heuristic(g, params, &mut state)?;
        heuristic_seconds = t.elapsed().as_secs_f64();
    }
    let mut dfs_seconds = 0.0;
    if params.use_dfs {
        let t = Instant::now();
        let resume = SearchParams {
            continue_search: true,
            ..params.clone()
        };
        max_clique_search(g, &resume, &mut state)?;
        dfs_seconds = t.elapsed().as_secs_f64();
    }
    let search_done = state.search_done() || !params.use_dfs;
    let members = match state.outcome(g, params.lower_bound) {
        CliqueOutcome::Found(c) => c,
        CliqueOutcome::NotFound { .. } => Vec::new(),
    };

    let report = RunReport {
        input: path.display().to_string(),
        n_vertices: g.n_vertices(),
        n_edges: g.n_edges(),
        omega: members.len(),
        members,
        heuristic_omega,
        load_seconds,
        heuristic_seconds,
        dfs_seconds,
        search_done,
    };
    Ok((report, loaded.warnings))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub path: PathBuf,
    pub expected_omega: Option<usize>,
}

/// One graph per line: `path [expected_omega]`. Relative paths resolve
/// against `base`. Blank lines and `#` comments are skipped.
pub fn parse_manifest(text: &str, base: &Path) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let path = PathBuf::from(tokens.next().expect("nonempty line has a token"));
        let expected_omega = tokens
            .next()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::format(idx + 1, format!("invalid expected omega `{t}`")))
            })
            .transpose()?;
        if let Some(extra) = tokens.next() {
            return Err(Error::format(
                idx + 1,
                format!("unexpected token `{extra}`"),
            ));
        }
        let path = if path.is_relative() {
            base.join(path)
        } else {
            path
        };
        entries.push(ManifestEntry {
            path,
            expected_omega,
        });
    }
    Ok(entries)
}

#[derive(Debug)]
pub enum RowStatus {
    Ok,
    Mismatch { expected: usize },
    Failed(Error),
}

#[derive(Debug)]
pub struct BenchRow {
    pub name: String,
    pub report: Option<RunReport>,
    pub status: RowStatus,
}

impl BenchRow {
    pub fn is_mismatch(&self) -> bool {
        matches!(self.status, RowStatus::Mismatch { .. })
    }
}

/// Runs every entry in order. Failures are recorded per row and the run continues.
pub fn run_bench(entries: &[ManifestEntry], params: &SearchParams) -> Vec<BenchRow> {
    entries
        .iter()
        .map(|entry| {
            let name = entry.path.file_stem().map_or_else(
                || entry.path.display().to_string(),
                |s| s.to_string_lossy().into_owned(),
            );
            match run_max_clique(&entry.path, None, params) {
                Ok((report, _)) => {
                    let status = match entry.expected_omega {
                        Some(expected) if expected != report.omega => {
                            RowStatus::Mismatch { expected }
                        }
                        _ => RowStatus::Ok,
                    };
                    BenchRow {
                        name,
                        report: Some(report),
                        status,
                    }
                }
                Err(e) => BenchRow {
                    name,
                    report: None,
                    status: RowStatus::Failed(e),
                },
            }
        })
        .collect()
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<24} {:>9} {:>10} {:>6} {:>10} {:>8} {:>10}  status",
        "graph", "|V|", "|E|", "omega", "t_heur", "w_heur", "t_dfs"
    );
    for row in rows {
        let status = match &row.status {
            RowStatus::Ok => "ok".to_string(),
            RowStatus::Mismatch { expected } => format!("MISMATCH (expected {expected})"),
            RowStatus::Failed(e) => format!("FAILED: {e}"),
        };
        match &row.report {
            Some(r) => {
                let heur = r
                    .heuristic_omega
                    .map_or_else(|| "-".to_string(), |h| h.to_string());
                let done = if r.search_done { "" } else { " (incomplete)" };
                let _ = writeln!(
                    out,
                    "{:<24} {:>9} {:>10} {:>6} {:>10.4} {:>8} {:>10.4}  {status}{done}",
                    row.name,
                    r.n_vertices,
                    r.n_edges,
                    r.omega,
                    r.heuristic_seconds,
                    heur,
                    r.dfs_seconds
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "{:<24} {:>9} {:>10} {:>6} {:>10} {:>8} {:>10}  {status}",
                    row.name, "-", "-", "-", "-", "-", "-"
                );
            }
        }
    }
    out
}
