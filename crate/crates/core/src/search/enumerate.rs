use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

use super::order::VertexOrder;
use super::walk::{Neighborhood, Walk};

/// Lazy stream of all cliques with exactly `k` vertices.
///
/// Each pull resumes a suspended depth-first walk and stops at the next
/// clique, so cliques are found only as they are requested. A clique is
/// produced once, from its lowest-ranked member in `(degree, id)` order.
/// Items are sorted external labels.
pub struct CliqueStream<'g> {
    graph: &'g Graph,
    k: usize,
    order: VertexOrder,
    cursor: usize,
    current: Option<(Neighborhood, Walk)>,
    slot: Vec<u32>,
}

/// Cliques of size `k >= 1` in `g`. For `k > n_vertices` the stream is
/// empty.
pub fn all_cliques(g: &Graph, k: usize) -> Result<CliqueStream<'_>> {
    if k == 0 {
        return Err(Error::usage("clique size must be at least 1"));
    }
    let (order, slot) = if k > g.n_vertices() {
        (
            VertexOrder {
                order: vec![],
                rank: vec![],
            },
            vec![],
        )
    } else {
        (VertexOrder::new(g), vec![u32::MAX; g.n_vertices()])
    };
    Ok(CliqueStream {
        graph: g,
        k,
        order,
        cursor: 0,
        current: None,
        slot,
    })
}

impl CliqueStream<'_> {
    pub fn size(&self) -> usize {
        self.k
    }
}

impl Iterator for CliqueStream<'_> {
    type Item = Vec<Label>;

    fn next(&mut self) -> Option<Vec<Label>> {
        let g = self.graph;
        loop {
            if let Some((nb, walk)) = &mut self.current {
                if let Some(path) = walk.next_of_size(nb, self.k) {
                    let mut labels: Vec<Label> =
                        nb.clique(&path).into_iter().map(|v| g.label(v)).collect();
                    labels.sort_unstable();
                    return Some(labels);
                }
                self.current = None;
            }

            let &v = self.order.order.get(self.cursor)?;
            self.cursor += 1;
            if self.k == 1 {
                return Some(vec![g.label(v)]);
            }
            if g.deg(v) + 1 < self.k {
                continue;
            }
            let nb = Neighborhood::build(g, &self.order.rank, v, self.k - 1, &mut self.slot);
            let candidates = nb.candidates(self.k - 2);
            if 1 + candidates.len() < self.k {
                continue;
            }
            self.current = Some((nb, Walk::new(candidates)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn triangle_edges_once_each() {
        let g = build_graph([(1, 2), (2, 3), (3, 1)]).unwrap();
        let mut edges: Vec<_> = all_cliques(&g, 2).unwrap().collect();
        edges.sort();
        assert_eq!(edges, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(all_cliques(&g, 3).unwrap().count(), 1);
        assert_eq!(all_cliques(&g, 1).unwrap().count(), 3);
    }

    #[test]
    fn oversized_k_is_empty_and_zero_is_error() {
        let g = build_graph([(1, 2)]).unwrap();
        assert_eq!(all_cliques(&g, 3).unwrap().count(), 0);
        assert!(all_cliques(&g, 0).is_err());
    }

    #[test]
    fn stream_is_lazy() {
        // K5: 10 edges, pull them one at a time
        let edges: Vec<(u64, u64)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let g = build_graph(edges).unwrap();
        let mut stream = all_cliques(&g, 4).unwrap();
        assert!(stream.next().is_some());
        assert_eq!(stream.by_ref().count(), 4);
        assert!(stream.next().is_none());
    }
}
