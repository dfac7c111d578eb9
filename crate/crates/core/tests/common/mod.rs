//! Brute-force oracles and graph generators shared by the integration tests.
//! Nothing here calls into the search code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use cliquesearch::{Graph, Label, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// G(n, p) with labels equal to internal IDs.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_id_edges((0..n as Label).collect(), edges).unwrap()
}

pub fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n_vertices() <= 24);
    (0..g.n_vertices() as VertexId)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | 1 << v))
        .collect()
}

/// `table[mask]` says whether the vertex subset `mask` is a clique.
pub fn clique_table(g: &Graph) -> Vec<bool> {
    let adj = masks(g);
    let n = g.n_vertices();
    let mut table = vec![false; 1 << n];
    table[0] = true;
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        table[mask] = table[rest] && (adj[low] as usize & rest) == rest;
    }
    table
}

pub fn brute_omega(g: &Graph) -> usize {
    clique_table(g)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(m, _)| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All `k`-cliques as sorted label vectors.
pub fn brute_k_cliques(g: &Graph, k: usize) -> BTreeSet<Vec<Label>> {
    clique_table(g)
        .iter()
        .enumerate()
        .filter(|&(m, &c)| c && m.count_ones() as usize == k)
        .map(|(m, _)| {
            let mut labels: Vec<Label> = (0..g.n_vertices())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| g.label(i as VertexId))
                .collect();
            labels.sort();
            labels
        })
        .collect()
}

pub fn brute_triangles(g: &Graph) -> BTreeSet<Vec<Label>> {
    let n = g.n_vertices() as VertexId;
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    let mut t = vec![g.label(a), g.label(b), g.label(c)];
                    t.sort();
                    out.insert(t);
                }
            }
        }
    }
    out
}

/// Pairwise-adjacency check written directly against the graph.
pub fn labels_form_clique(g: &Graph, labels: &[Label]) -> bool {
    let ids: Vec<VertexId> = labels.iter().map(|&l| g.id_of(l).unwrap()).collect();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if !g.has_edge(ids[i], ids[j]) {
                return false;
            }
        }
    }
    true
}

/// Sparse graph whose only maximum clique is a planted `omega`-clique.
///
/// The planted clique `S` sits on side `A` of a bipartite background
/// `A ∪ B`. `A \ S` and `B` are independent sets and every `B` vertex
/// touches at most `omega - 2` members of `S`, so any clique other than
/// `S` holds at most one `B` vertex plus `omega - 2` members of `S`.
pub fn planted_clique<R: Rng>(rng: &mut R, n: usize, m: usize, omega: usize) -> Graph {
    let clique_edges = omega * (omega - 1) / 2;
    assert!(omega >= 3 && omega < n && m >= clique_edges);
    let mut perm: Vec<VertexId> = (0..n as VertexId).collect();
    perm.shuffle(rng);
    let (s, rest) = perm.split_at(omega);
    let (a_rest, b) = rest.split_at(rest.len() / 2);
    let a: Vec<VertexId> = s.iter().chain(a_rest).copied().collect();
    let in_s: HashSet<VertexId> = s.iter().copied().collect();

    let mut edges: HashSet<(VertexId, VertexId)> = HashSet::new();
    for i in 0..omega {
        for j in i + 1..omega {
            edges.insert((s[i].min(s[j]), s[i].max(s[j])));
        }
    }
    let mut s_hits = vec![0usize; n];
    let mut attempts = 0usize;
    while edges.len() < m && attempts < 50 * m {
        attempts += 1;
        let u = a[rng.gen_range(0..a.len())];
        let v = b[rng.gen_range(0..b.len())];
        if in_s.contains(&u) && s_hits[v as usize] + 2 >= omega {
            continue;
        }
        if edges.insert((u.min(v), u.max(v))) && in_s.contains(&u) {
            s_hits[v as usize] += 1;
        }
    }
    Graph::from_id_edges((1..=n as Label).collect(), edges).unwrap()
}

/// Largest set of index pairs with distinct P-indices, distinct Q-indices
/// and `ok(i1, i2, j1, j2)` (with `i1 < i2`) for every two pairs, by
/// exhaustive search over partial injections.
pub fn largest_pairing<F: Fn(usize, usize, usize, usize) -> bool>(
    m: usize,
    n: usize,
    ok: &F,
) -> usize {
    fn go<F: Fn(usize, usize, usize, usize) -> bool>(
        i: usize,
        m: usize,
        n: usize,
        used: &mut Vec<bool>,
        chosen: &mut Vec<(usize, usize)>,
        ok: &F,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        if i == m || chosen.len() + (m - i) <= *best {
            return;
        }
        // leave P-element i unmatched
        go(i + 1, m, n, used, chosen, ok, best);
        for j in 0..n {
            if used[j] || !chosen.iter().all(|&(pi, pj)| ok(pi, i, pj, j)) {
                continue;
            }
            used[j] = true;
            chosen.push((i, j));
            go(i + 1, m, n, used, chosen, ok, best);
            chosen.pop();
            used[j] = false;
        }
    }
    let mut best = 0;
    go(0, m, n, &mut vec![false; n], &mut Vec::new(), ok, &mut best);
    best
}

/// Whether some injection of `pattern` into `host` maps pattern edges to
/// host edges (and, if `induced`, non-edges to non-edges).
pub fn has_injection(host: &Graph, pattern: &Graph, induced: bool) -> bool {
    fn go(
        host: &Graph,
        pattern: &Graph,
        induced: bool,
        map: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
    ) -> bool {
        let q = map.len();
        if q == pattern.n_vertices() {
            return true;
        }
        for p in 0..host.n_vertices() as VertexId {
            if used[p as usize] {
                continue;
            }
            let consistent = (0..q).all(|prev| {
                let pe = pattern.has_edge(prev as VertexId, q as VertexId);
                let he = host.has_edge(map[prev], p);
                if induced {
                    pe == he
                } else {
                    !pe || he
                }
            });
            if consistent {
                used[p as usize] = true;
                map.push(p);
                if go(host, pattern, induced, map, used) {
                    return true;
                }
                map.pop();
                used[p as usize] = false;
            }
        }
        false
    }
    go(
        host,
        pattern,
        induced,
        &mut Vec::new(),
        &mut vec![false; host.n_vertices()],
    )
}

/// Random condition symmetric under swapping the two pairs.
pub struct RandomCondition {
    m: usize,
    n: usize,
    table: Vec<bool>,
}

impl RandomCondition {
    pub fn new<R: Rng>(rng: &mut R, m: usize, n: usize, p: f64) -> Self {
        let size = m * n;
        let mut table = vec![false; size * size];
        for a in 0..size {
            for b in a + 1..size {
                let v = rng.gen_bool(p);
                table[a * size + b] = v;
                table[b * size + a] = v;
            }
        }
        RandomCondition { m, n, table }
    }

    pub fn ok(&self, i1: usize, i2: usize, j1: usize, j2: usize) -> bool {
        let size = self.m * self.n;
        self.table[(i1 * self.n + j1) * size + i2 * self.n + j2]
    }
}
