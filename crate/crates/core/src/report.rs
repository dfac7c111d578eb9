//! Per-run summaries in aligned text or `key=value` records.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Label;

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub input: String,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub omega: usize,
    pub members: Vec<Label>,
    /// Size of the heuristic clique, when the heuristic ran.
    pub heuristic_omega: Option<usize>,
    pub load_seconds: f64,
    pub heuristic_seconds: f64,
    pub dfs_seconds: f64,
    pub search_done: bool,
}

impl RunReport {
    pub fn to_text(&self) -> String {
        let members = join(&self.members, " ");
        let heuristic = self
            .heuristic_omega
            .map_or_else(|| "-".to_string(), |h| h.to_string());
        let rows: [(&str, String); 10] = [
            ("input", self.input.clone()),
            ("vertices", self.n_vertices.to_string()),
            ("edges", self.n_edges.to_string()),
            ("omega", self.omega.to_string()),
            ("heuristic omega", heuristic),
            ("search done", self.search_done.to_string()),
            ("load time (s)", format!("{:.6}", self.load_seconds)),
            (
                "heuristic time (s)",
                format!("{:.6}", self.heuristic_seconds),
            ),
            ("dfs time (s)", format!("{:.6}", self.dfs_seconds)),
            ("clique", members),
        ];
        let mut out = String::new();
        for (key, value) in rows {
            let _ = writeln!(out, "{key:<20}{value}");
        }
        out
    }

    /// One `key=value` line per field. Parses back with [`RunReport::from_records`].
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input={}", self.input.replace('\n', " "));
        let _ = writeln!(out, "n_vertices={}", self.n_vertices);
        let _ = writeln!(out, "n_edges={}", self.n_edges);
        let _ = writeln!(out, "omega={}", self.omega);
        let _ = writeln!(out, "members={}", join(&self.members, ","));
        let _ = writeln!(
            out,
            "heuristic_omega={}",
            self.heuristic_omega
                .map_or_else(String::new, |h| h.to_string())
        );
        let _ = writeln!(out, "load_seconds={}", self.load_seconds);
        let _ = writeln!(out, "heuristic_seconds={}", self.heuristic_seconds);
        let _ = writeln!(out, "dfs_seconds={}", self.dfs_seconds);
        let _ = writeln!(out, "search_done={}", self.search_done);
        out
    }

    pub fn from_records(text: &str) -> Result<Self> {
        let mut fields = std::collections::HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::format(idx + 1, "expected key=value"))?;
            fields.insert(key.trim(), (idx + 1, value));
        }
        let get = |key: &str| -> Result<(usize, &str)> {
            fields
                .get(key)
                .copied()
                .ok_or_else(|| Error::format(0, format!("missing field `{key}`")))
        };
        fn num<T: std::str::FromStr>((line, v): (usize, &str), key: &str) -> Result<T> {
            v.trim()
                .parse()
                .map_err(|_| Error::format(line, format!("invalid {key} `{v}`")))
        }

        let (members_line, members) = get("members")?;
        let members = members
            .split(',')
            .filter(|t| !t.is_empty())
            .map(|t| num((members_line, t), "member"))
            .collect::<Result<Vec<Label>>>()?;
        let heuristic = get("heuristic_omega")?;
        let heuristic_omega = if heuristic.1.trim().is_empty() {
            None
        } else {
            Some(num(heuristic, "heuristic_omega")?)
        };
        let report = RunReport {
            input: get("input")?.1.to_string(),
            n_vertices: num(get("n_vertices")?, "n_vertices")?,
            n_edges: num(get("n_edges")?, "n_edges")?,
            omega: num(get("omega")?, "omega")?,
            members,
            heuristic_omega,
            load_seconds: num(get("load_seconds")?, "load_seconds")?,
            heuristic_seconds: num(get("heuristic_seconds")?, "heuristic_seconds")?,
            dfs_seconds: num(get("dfs_seconds")?, "dfs_seconds")?,
            search_done: num(get("search_done")?, "search_done")?,
        };
        if report.omega != report.members.len() {
            return Err(Error::validation("omega does not match the member count"));
        }
        Ok(report)
    }
}

fn join(labels: &[Label], sep: &str) -> String {
    labels
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
