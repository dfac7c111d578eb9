//! Local neighborhoods and the explicit-stack depth-first walk shared by
//! maximum-clique search and fixed-size enumeration.

use std::time::Instant;

use crate::bitset::VertexBitset;
use crate::graph::{Graph, VertexId};

/// Higher-ranked neighbors of a start vertex with their induced adjacency
/// as bitsets over local indices.
#[derive(Debug, Clone)]
pub(crate) struct Neighborhood {
    pub root: VertexId,
    pub members: Vec<VertexId>,
    adj: Vec<VertexBitset>,
}

impl Neighborhood {
    /// Members are the neighbors `u` of `root` with `rank[u] > rank[root]`
    /// and `degree(u) >= min_degree`, ordered by descending rank.
    ///
    /// `slot` must have one entry per graph vertex, all `u32::MAX`; it is
    /// restored before returning.
    pub fn build(
        g: &Graph,
        rank: &[u32],
        root: VertexId,
        min_degree: usize,
        slot: &mut [u32],
    ) -> Self {
        let root_rank = rank[root as usize];
        let mut members: Vec<VertexId> = g
            .neighbors(root)
            .iter()
            .copied()
            .filter(|&u| rank[u as usize] > root_rank && g.deg(u) >= min_degree)
            .collect();
        members.sort_unstable_by_key(|&u| std::cmp::Reverse(rank[u as usize]));

        let c = members.len();
        for (i, &u) in members.iter().enumerate() {
            slot[u as usize] = i as u32;
        }
        let probe_cost = c * (usize::BITS - c.leading_zeros()) as usize;
        let adj = members
            .iter()
            .map(|&u| {
                let mut row = VertexBitset::new(c);
                let nbrs = g.neighbors(u);
                if nbrs.len() <= probe_cost {
                    for &w in nbrs {
                        let s = slot[w as usize];
                        if s != u32::MAX {
                            row.insert(s as usize);
                        }
                    }
                } else {
                    for (j, w) in members.iter().enumerate() {
                        if nbrs.binary_search(w).is_ok() {
                            row.insert(j);
                        }
                    }
                }
                row
            })
            .collect();
        for &u in &members {
            slot[u as usize] = u32::MAX;
        }

        Neighborhood { root, members, adj }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Members with at least `min_local_degree` neighbors inside the
    /// neighborhood. Anything outside this set cannot be in a clique of
    /// size `min_local_degree + 2` through the root.
    pub fn candidates(&self, min_local_degree: usize) -> VertexBitset {
        let mut set = VertexBitset::new(self.len());
        for (i, row) in self.adj.iter().enumerate() {
            if row.len() >= min_local_degree {
                set.insert(i);
            }
        }
        set
    }

    /// Root followed by the global IDs of `path`.
    pub fn clique(&self, path: &[usize]) -> Vec<VertexId> {
        std::iter::once(self.root)
            .chain(path.iter().map(|&i| self.members[i]))
            .collect()
    }
}

const CLOCK_STRIDE: u64 = 1 << 16;

/// Wall-clock budget checked every [`CLOCK_STRIDE`] expansions.
#[derive(Debug)]
pub(crate) struct Budget {
    deadline: Option<Instant>,
    ticks: u64,
}

impl Budget {
    pub fn new(deadline: Option<Instant>) -> Self {
        Budget { deadline, ticks: 0 }
    }

    pub fn expired_now(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// Counts one expansion. The clock is read only on stride boundaries,
    /// so at least `CLOCK_STRIDE - 1` expansions happen per budget.
    #[inline]
    fn tick(&mut self) -> bool {
        self.ticks += 1;
        self.ticks.is_multiple_of(CLOCK_STRIDE) && self.expired_now()
    }
}

/// Best clique found so far, and the size a new clique must exceed.
#[derive(Debug, Clone)]
pub(crate) struct Incumbent {
    pub clique: Vec<VertexId>,
    pub threshold: usize,
    pub upper_bound: usize,
}

impl Incumbent {
    pub fn reached_upper(&self) -> bool {
        self.clique.len() >= self.upper_bound
    }

    pub fn offer(&mut self, clique: Vec<VertexId>) {
        if clique.len() > self.threshold {
            self.threshold = clique.len();
            self.clique = clique;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum WalkEnd {
    Exhausted,
    Paused,
    UpperBoundReached,
}

/// Suspended depth-first position inside one neighborhood.
///
/// `frames[0..=depth]` are the live candidate sets; `path` holds the local
/// indices chosen so far, one per level below the top, so
/// `path.len() == depth` between steps.
#[derive(Debug, Clone)]
pub(crate) struct Walk {
    frames: Vec<VertexBitset>,
    path: Vec<usize>,
    depth: usize,
}

impl Walk {
    pub fn new(candidates: VertexBitset) -> Self {
        Walk {
            frames: vec![candidates],
            path: Vec::new(),
            depth: 0,
        }
    }

    fn retreat(&mut self) -> bool {
        if self.depth == 0 {
            return false;
        }
        self.depth -= 1;
        self.path.pop();
        true
    }

    /// Writes `frames[depth] ∩ adj(u)` into the next frame and returns its size.
    fn extend(&mut self, nb: &Neighborhood, u: usize) -> usize {
        let d = self.depth;
        if self.frames.len() == d + 1 {
            self.frames.push(VertexBitset::new(nb.len()));
        }
        let (lo, hi) = self.frames.split_at_mut(d + 1);
        hi[0].assign_intersection(&lo[d], &nb.adj[u]);
        hi[0].len()
    }

    /// Branch-and-bound for a clique larger than `inc.threshold`.
    ///
    /// A branch is dropped once `|current| + |candidates| <= threshold`.
    /// Every improvement is recorded immediately.
    pub fn maximize(
        &mut self,
        nb: &Neighborhood,
        inc: &mut Incumbent,
        budget: &mut Budget,
    ) -> WalkEnd {
        loop {
            if budget.tick() {
                return WalkEnd::Paused;
            }
            let d = self.depth;
            let size_here = 1 + d;
            let top = &mut self.frames[d];
            if size_here + top.len() <= inc.threshold {
                if !self.retreat() {
                    return WalkEnd::Exhausted;
                }
                continue;
            }
            let Some(u) = top.pop_first() else {
                if !self.retreat() {
                    return WalkEnd::Exhausted;
                }
                continue;
            };
            let size = size_here + 1;
            self.path.push(u);
            if size > inc.threshold {
                inc.offer(nb.clique(&self.path));
                if inc.reached_upper() {
                    return WalkEnd::UpperBoundReached;
                }
            }
            let next = self.extend(nb, u);
            if next > 0 && size + next > inc.threshold {
                self.depth += 1;
            } else {
                self.path.pop();
            }
        }
    }

    /// Next clique of exactly `k >= 2` vertices through the root, as local
    /// indices, or `None` when the neighborhood is exhausted.
    pub fn next_of_size(&mut self, nb: &Neighborhood, k: usize) -> Option<Vec<usize>> {
        debug_assert!(k >= 2);
        loop {
            let d = self.depth;
            let size_here = 1 + d;
            let top = &mut self.frames[d];
            if size_here + top.len() < k {
                if !self.retreat() {
                    return None;
                }
                continue;
            }
            let Some(u) = top.pop_first() else {
                if !self.retreat() {
                    return None;
                }
                continue;
            };
            let size = size_here + 1;
            if size == k {
                let mut found = self.path.clone();
                found.push(u);
                return Some(found);
            }
            self.path.push(u);
            let next = self.extend(nb, u);
            if size + next >= k {
                self.depth += 1;
            } else {
                self.path.pop();
            }
        }
    }
}
