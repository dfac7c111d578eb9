use crate::graph::{Graph, VertexId};

/// Vertices sorted by ascending `(degree, id)`, with the inverse map.
///
/// The pair is a strict total order, so "higher rank" breaks degree ties
/// by internal ID.
#[derive(Debug, Clone)]
pub(crate) struct VertexOrder {
    pub order: Vec<VertexId>,
    pub rank: Vec<u32>,
}

impl VertexOrder {
    pub fn new(g: &Graph) -> Self {
        let mut order: Vec<VertexId> = (0..g.n_vertices() as VertexId).collect();
        order.sort_unstable_by_key(|&v| (g.deg(v), v));
        let mut rank = vec![0u32; order.len()];
        for (r, &v) in order.iter().enumerate() {
            rank[v as usize] = r as u32;
        }
        VertexOrder { order, rank }
    }
}
