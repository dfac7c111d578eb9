use crate::graph::{Graph, Label, VertexId};

use super::order::VertexOrder;

/// Greedy clique construction.
///
/// Start vertices are taken in descending `(degree, id)` order. From each
/// one the clique grows by the highest-degree vertex adjacent to every
/// current member, until no such vertex is left. The largest clique seen
/// is returned. Start vertices and candidates whose degree cannot beat the
/// current best are skipped.
pub fn heuristic_clique(g: &Graph) -> Vec<Label> {
    let order = VertexOrder::new(g);
    let mut labels: Vec<Label> = greedy_clique(g, &order)
        .into_iter()
        .map(|v| g.label(v))
        .collect();
    labels.sort_unstable();
    labels
}

pub(crate) fn greedy_clique(g: &Graph, order: &VertexOrder) -> Vec<VertexId> {
    let mut best: Vec<VertexId> = Vec::new();
    let mut candidates: Vec<VertexId> = Vec::new();
    let mut next: Vec<VertexId> = Vec::new();
    let key = |u: VertexId| (g.deg(u), u);

    for &v in order.order.iter().rev() {
        if g.deg(v) < best.len() {
            // descending degree: nothing later can do better
            break;
        }
        candidates.clear();
        candidates.extend(
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| g.deg(u) >= best.len()),
        );
        let mut clique = vec![v];
        while let Some(&u) = candidates.iter().max_by_key(|&&u| key(u)) {
            if clique.len() + candidates.len() <= best.len() {
                break;
            }
            clique.push(u);
            intersect_sorted(&candidates, g.neighbors(u), &mut next);
            std::mem::swap(&mut candidates, &mut next);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// `out = a ∩ b` for ascending slices.
fn intersect_sorted(a: &[VertexId], b: &[VertexId], out: &mut Vec<VertexId>) {
    out.clear();
    if a.len() * 16 < b.len() {
        out.extend(a.iter().copied().filter(|x| b.binary_search(x).is_ok()));
        return;
    }
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}
