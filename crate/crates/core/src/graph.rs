//! Immutable undirected simple graphs in compressed sparse row form.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// External vertex identifier as it appears in input files.
pub type Label = u64;

/// Dense internal vertex index, `0..n_vertices`.
pub type VertexId = u32;

/// Undirected simple graph.
///
/// Vertices carry a dense internal ID and the external label they were
/// loaded with. Neighbor lists are sorted ascending by internal ID with no
/// self-loops or duplicates, and adjacency is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    labels: Vec<Label>,
    index: HashMap<Label, VertexId>,
    n_edges: usize,
}

impl Graph {
    /// Graph with no vertices.
    pub fn empty() -> Self {
        Graph {
            offsets: vec![0],
            neighbors: Vec::new(),
            labels: Vec::new(),
            index: HashMap::new(),
            n_edges: 0,
        }
    }

    /// Builds a graph over `labels.len()` vertices from internal-ID edges.
    ///
    /// Self-loops are dropped, duplicates merged and both orientations
    /// added. Labels must be distinct.
    pub fn from_id_edges<I>(labels: Vec<Label>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let n = labels.len();
        if n > VertexId::MAX as usize {
            return Err(Error::Capacity(format!(
                "{n} vertices exceed the 32-bit vertex ID range"
            )));
        }
        let mut index = HashMap::with_capacity(n);
        for (id, &label) in labels.iter().enumerate() {
            if index.insert(label, id as VertexId).is_some() {
                return Err(Error::validation(format!("duplicate vertex label {label}")));
            }
        }

        let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::usage(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u != v {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &arcs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let neighbors: Vec<VertexId> = arcs.into_iter().map(|(_, v)| v).collect();
        let n_edges = neighbors.len() / 2;

        Ok(Graph {
            offsets,
            neighbors,
            labels,
            index,
            n_edges,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of neighbors of `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbor list of `v`. Panics when `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        (u as usize) < self.n_vertices() && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n_vertices() as VertexId)
            .map(|v| self.deg(v))
            .max()
            .unwrap_or(0)
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn id_of(&self, label: Label) -> Option<VertexId> {
        self.index.get(&label).copied()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n_vertices() as VertexId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if (v as usize) < self.n_vertices() {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "vertex {v} out of range (graph has {} vertices)",
                self.n_vertices()
            )))
        }
    }

    /// Internal IDs for a set of labels, failing on the first unknown label.
    pub fn ids_of(&self, labels: &[Label]) -> Result<Vec<VertexId>> {
        labels
            .iter()
            .map(|&l| {
                self.id_of(l)
                    .ok_or_else(|| Error::usage(format!("unknown vertex label {l}")))
            })
            .collect()
    }

    /// Checks the structural invariants: symmetry, sorted duplicate-free
    /// neighbor lists, no self-loops and `sum(degree) == 2 * n_edges`.
    pub fn validate(&self) -> Result<()> {
        let n = self.n_vertices();
        if self.offsets.len() != n + 1 || self.offsets[n] != self.neighbors.len() {
            return Err(Error::validation(
                "offset array does not match neighbor array",
            ));
        }
        if self.neighbors.len() != 2 * self.n_edges {
            return Err(Error::validation("degree sum is not twice the edge count"));
        }
        for u in 0..n as VertexId {
            let nbrs = self.neighbors(u);
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::validation(format!(
                    "neighbors of {u} are not strictly ascending"
                )));
            }
            for &v in nbrs {
                if v == u {
                    return Err(Error::validation(format!("self-loop at {u}")));
                }
                if !self.has_edge(v, u) {
                    return Err(Error::validation(format!(
                        "edge ({u}, {v}) is not symmetric"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::empty()
    }
}

/// Incremental label-based construction. Internal IDs are handed out in
/// first-seen order of labels.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<Label>,
    index: HashMap<Label, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `label` (if new) and returns its internal ID.
    pub fn add_vertex(&mut self, label: Label) -> VertexId {
        if let Some(&id) = self.index.get(&label) {
            return id;
        }
        let id = self.labels.len() as VertexId;
        self.labels.push(label);
        self.index.insert(label, id);
        id
    }

    pub fn add_edge(&mut self, a: Label, b: Label) {
        let u = self.add_vertex(a);
        let v = self.add_vertex(b);
        self.edges.push((u, v));
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn build(self) -> Result<Graph> {
        Graph::from_id_edges(self.labels, self.edges)
    }
}

/// Canonicalizes a list of label pairs into a [`Graph`].
///
/// Self-loops are dropped, duplicates and reversed duplicates merged.
/// An empty list gives the empty graph.
pub fn build_graph<I>(edges: I) -> Result<Graph>
where
    I: IntoIterator<Item = (Label, Label)>,
{
    let mut builder = GraphBuilder::new();
    for (a, b) in edges {
        builder.add_edge(a, b);
    }
    builder.build()
}
