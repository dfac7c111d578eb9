//! Correspondence graphs between two element sets `P` and `Q`.
//!
//! Vertex `(i, j)` pairs element `i` of `P` with element `j` of `Q`. Two
//! vertices `(i1, j1)` and `(i2, j2)` are adjacent when `i1 != i2`,
//! `j1 != j2` and the edge condition accepts the quadruple. A clique is
//! then a set of mutually consistent pairings, and a maximum clique is a
//! largest consistent partial mapping from `P` into `Q`.
//!
//! Elements themselves never pass through the builder. The condition
//! closure receives indices and looks elements up itself, so any storage
//! (arrays, lists, mixed) works the same way.

use std::io::BufRead;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Label, VertexId};
use crate::search::{get_max_clique, is_clique, CliqueOutcome, SearchParams, SearchState};

/// Set sizes plus the edge condition `f(i1, i2, j1, j2)`.
///
/// The builder only calls `f` with `i1 < i2` and `j1 != j2`, once per
/// unordered vertex pair, possibly from several threads at once. If `f`
/// is not symmetric under swapping both pairs, the caller must symmetrize
/// it.
#[derive(Debug, Clone)]
pub struct CorrespondenceSpec<F> {
    pub m: usize,
    pub n: usize,
    pub condition: F,
}

#[derive(Debug, Clone)]
pub struct CorrespondenceGraph {
    graph: Graph,
    m: usize,
    n: usize,
}

impl CorrespondenceGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major vertex ID `i * n + j`. Also used as the vertex label.
    pub fn encode(&self, i: usize, j: usize) -> VertexId {
        debug_assert!(i < self.m && j < self.n);
        (i * self.n + j) as VertexId
    }

    pub fn decode(&self, v: VertexId) -> (usize, usize) {
        let v = v as usize;
        (v / self.n, v % self.n)
    }
}

fn check_capacity(m: usize, n: usize) -> Result<usize> {
    if m == 0 || n == 0 {
        return Err(Error::usage("both element sets must be nonempty"));
    }
    m.checked_mul(n)
        .filter(|&total| total <= VertexId::MAX as usize)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "{m} x {n} correspondence vertices exceed the 32-bit vertex ID range"
            ))
        })
}

/// Builds the correspondence graph with a dense pass over all vertex pairs.
pub fn build_correspondence<F>(spec: &CorrespondenceSpec<F>) -> Result<CorrespondenceGraph>
where
    F: Fn(usize, usize, usize, usize) -> bool + Sync,
{
    let (m, n) = (spec.m, spec.n);
    let total = check_capacity(m, n)?;
    let f = &spec.condition;

    let edges: Vec<(VertexId, VertexId)> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i1| {
            let mut row = Vec::new();
            for j1 in 0..n {
                let a = (i1 * n + j1) as VertexId;
                for i2 in i1 + 1..m {
                    for j2 in (0..n).filter(|&j2| j2 != j1) {
                        if f(i1, i2, j1, j2) {
                            row.push((a, (i2 * n + j2) as VertexId));
                        }
                    }
                }
            }
            row
        })
        .collect();

    let graph = Graph::from_id_edges((0..total as Label).collect(), edges)?;
    Ok(CorrespondenceGraph { graph, m, n })
}

/// Distance functions on `P` and `Q` indices and the tolerance `epsilon`.
#[derive(Debug, Clone)]
pub struct MetricPair<DP, DQ> {
    pub d_p: DP,
    pub d_q: DQ,
    pub epsilon: f64,
}

/// Correspondence graph with edges where `|d_P(i1, i2) - d_Q(j1, j2)| <= epsilon`.
pub fn build_correspondence_metric<DP, DQ>(
    m: usize,
    n: usize,
    metric: &MetricPair<DP, DQ>,
) -> Result<CorrespondenceGraph>
where
    DP: Fn(usize, usize) -> f64 + Sync,
    DQ: Fn(usize, usize) -> f64 + Sync,
{
    build_correspondence_metric_with(m, n, metric, |_, _, _, _| true)
}

/// Metric construction combined with an extra condition that must also hold.
pub fn build_correspondence_metric_with<DP, DQ, F>(
    m: usize,
    n: usize,
    metric: &MetricPair<DP, DQ>,
    extra: F,
) -> Result<CorrespondenceGraph>
where
    DP: Fn(usize, usize) -> f64 + Sync,
    DQ: Fn(usize, usize) -> f64 + Sync,
    F: Fn(usize, usize, usize, usize) -> bool + Sync,
{
    if metric.epsilon.is_nan() || metric.epsilon < 0.0 {
        return Err(Error::usage(format!(
            "epsilon must be nonnegative, got {}",
            metric.epsilon
        )));
    }
    check_capacity(m, n)?;
    let dp = distance_table(m, &metric.d_p);
    let dq = distance_table(n, &metric.d_q);
    let eps = metric.epsilon;
    build_correspondence(&CorrespondenceSpec {
        m,
        n,
        condition: |i1: usize, i2: usize, j1: usize, j2: usize| {
            (dp[i1 * m + i2] - dq[j1 * n + j2]).abs() <= eps && extra(i1, i2, j1, j2)
        },
    })
}

fn distance_table<D: Fn(usize, usize) -> f64 + Sync>(len: usize, d: &D) -> Vec<f64> {
    (0..len * len)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (k / len, k % len);
            if a == b {
                0.0
            } else {
                d(a.min(b), a.max(b))
            }
        })
        .collect()
}

/// Decodes a clique into `(P-index, Q-index)` pairs sorted by P-index.
pub fn extract_correspondence(
    cg: &CorrespondenceGraph,
    clique: &[Label],
) -> Result<Vec<(usize, usize)>> {
    let ids = cg.graph.ids_of(clique)?;
    if !is_clique(&cg.graph, &ids) {
        return Err(Error::validation(
            "vertex set is not a clique of the correspondence graph",
        ));
    }
    let mut pairs: Vec<(usize, usize)> = ids.iter().map(|&v| cg.decode(v)).collect();
    pairs.sort_unstable();
    debug_assert!(pairs.windows(2).all(|w| w[0].0 != w[1].0));
    debug_assert!({
        let mut js: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        js.sort_unstable();
        js.windows(2).all(|w| w[0] != w[1])
    });
    Ok(pairs)
}

/// A mapping found by clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pub pairs: Vec<(usize, usize)>,
    pub search_done: bool,
}

/// Largest consistent mapping found within `params`.
pub fn max_correspondence(
    cg: &CorrespondenceGraph,
    params: &SearchParams,
) -> Result<Correspondence> {
    let mut state = SearchState::new();
    let pairs = match get_max_clique(&cg.graph, params, &mut state)? {
        CliqueOutcome::Found(clique) => extract_correspondence(cg, &clique)?,
        CliqueOutcome::NotFound { .. } => Vec::new(),
    };
    Ok(Correspondence {
        pairs,
        search_done: state.search_done(),
    })
}

/// Restricts `base` to pairings where each `j` is among the first `k`
/// entries of `ranks[i]`, the candidate list of P-element `i`.
pub fn top_k_filter<F>(
    base: F,
    ranks: &[Vec<usize>],
    n: usize,
    k: usize,
) -> Result<impl Fn(usize, usize, usize, usize) -> bool + Sync>
where
    F: Fn(usize, usize, usize, usize) -> bool + Sync,
{
    if k < 1 {
        return Err(Error::usage("top-k filter needs k >= 1"));
    }
    let mut allowed = vec![false; ranks.len() * n];
    for (i, list) in ranks.iter().enumerate() {
        for &j in list.iter().take(k) {
            if j >= n {
                return Err(Error::validation(format!(
                    "rank list of element {i} names Q-index {j}, outside 0..{n}"
                )));
            }
            allowed[i * n + j] = true;
        }
    }
    let ok = move |i: usize, j: usize| allowed.get(i * n + j).copied().unwrap_or(false);
    Ok(move |i1, i2, j1, j2| ok(i1, j1) && ok(i2, j2) && base(i1, i2, j1, j2))
}

/// Points of one fixed dimension, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<f64>,
}

impl PointSet {
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 || !coords.len().is_multiple_of(dim) {
            return Err(Error::usage(format!(
                "{} coordinates do not split into points of dimension {dim}",
                coords.len()
            )));
        }
        Ok(PointSet { dim, coords })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.as_ref().len());
        let mut coords = Vec::with_capacity(dim * rows.len());
        for (i, r) in rows.iter().enumerate() {
            if r.as_ref().len() != dim {
                return Err(Error::usage(format!(
                    "point {i} has dimension {}, expected {dim}",
                    r.as_ref().len()
                )));
            }
            coords.extend_from_slice(r.as_ref());
        }
        PointSet::new(dim, coords)
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn euclidean(&self, a: usize, b: usize) -> f64 {
        self.point(a)
            .iter()
            .zip(self.point(b))
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    }
}

/// Reads one point per line, coordinates separated by commas, semicolons
/// or whitespace. Blank lines and `#` comments are skipped.
pub fn parse_points<R: BufRead>(reader: R) -> Result<PointSet> {
    let mut dim = None;
    let mut coords = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|_| Error::format(line_no, format!("invalid coordinate `{t}`")))
            })
            .collect::<Result<Vec<f64>>>()?;
        match dim {
            None => dim = Some(row.len()),
            Some(d) if d != row.len() => {
                return Err(Error::format(
                    line_no,
                    format!("point has {} coordinates, expected {d}", row.len()),
                ))
            }
            Some(_) => {}
        }
        coords.extend(row);
    }
    match dim {
        Some(d) => PointSet::new(d, coords),
        None => Err(Error::format(1, "no points found")),
    }
}

/// Euclidean correspondence graph between two point sets of equal dimension.
pub fn match_points(p: &PointSet, q: &PointSet, epsilon: f64) -> Result<CorrespondenceGraph> {
    if p.dim() != q.dim() {
        return Err(Error::usage(format!(
            "point sets have different dimensions ({} vs {})",
            p.dim(),
            q.dim()
        )));
    }
    let metric = MetricPair {
        d_p: |a, b| p.euclidean(a, b),
        d_q: |a, b| q.euclidean(a, b),
        epsilon,
    };
    build_correspondence_metric(p.len(), q.len(), &metric)
}
