//! Subgraph isomorphism through the association-graph construction.
//!
//! Pairing `(p, q)` with `(p', q')` is consistent when every edge `q q'` of
//! the pattern lands on an edge `p p'` of the host. A clique covering all
//! pattern vertices is then an edge-preserving injection of the pattern
//! into the host. Strict mode also requires non-edges to map to non-edges,
//! which certifies an induced subgraph.

use crate::correspondence::{
    build_correspondence, extract_correspondence, CorrespondenceGraph, CorrespondenceSpec,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Label, VertexId};
use crate::search::{get_max_clique, CliqueOutcome, SearchParams, SearchState};

/// Outcome of [`find_subgraph_isomorphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    /// `(pattern label, host label)` pairs, sorted by pattern label.
    pub mapping: Vec<(Label, Label)>,
    /// The mapping covers every pattern vertex.
    pub is_full: bool,
    /// The search ran to completion; with `!is_full` this proves no
    /// embedding exists.
    pub search_done: bool,
}

/// Association graph over `host × pattern`.
pub fn build_iso_graph(host: &Graph, pattern: &Graph, strict: bool) -> Result<CorrespondenceGraph> {
    if host.is_empty() || pattern.is_empty() {
        return Err(Error::usage("both graphs must have at least one vertex"));
    }
    let condition = |i1: usize, i2: usize, j1: usize, j2: usize| {
        let host_edge = host.has_edge(i1 as VertexId, i2 as VertexId);
        let pattern_edge = pattern.has_edge(j1 as VertexId, j2 as VertexId);
        if strict {
            host_edge == pattern_edge
        } else {
            !pattern_edge || host_edge
        }
    };
    build_correspondence(&CorrespondenceSpec {
        m: host.n_vertices(),
        n: pattern.n_vertices(),
        condition,
    })
}

/// Searches for an embedding of `pattern` into `host`.
///
/// The search stops as soon as a full mapping is found. A time-limited
/// search can return a partial mapping with `search_done == false`.
pub fn find_subgraph_isomorphism(
    host: &Graph,
    pattern: &Graph,
    params: &SearchParams,
    strict: bool,
) -> Result<IsoResult> {
    let cg = build_iso_graph(host, pattern, strict)?;
    let target = pattern.n_vertices();
    let params = SearchParams {
        upper_bound: params.upper_bound.min(target),
        lower_bound: params.lower_bound.min(target),
        ..params.clone()
    };
    let mut state = SearchState::new();
    let pairs = match get_max_clique(cg.graph(), &params, &mut state)? {
        CliqueOutcome::Found(clique) => extract_correspondence(&cg, &clique)?,
        CliqueOutcome::NotFound { .. } => Vec::new(),
    };
    let mut mapping: Vec<(Label, Label)> = pairs
        .into_iter()
        .map(|(i, j)| (pattern.label(j as VertexId), host.label(i as VertexId)))
        .collect();
    mapping.sort_unstable();
    Ok(IsoResult {
        is_full: mapping.len() == target,
        mapping,
        search_done: state.search_done(),
    })
}
