//! Maximum-clique search: a greedy heuristic, a resumable branch-and-bound
//! and lazy enumeration of fixed-size cliques.
//!
//! Every search starts from a vertex `v` and only looks at neighbors that
//! rank above `v` in ascending `(degree, id)` order. Each clique is
//! therefore explored exactly once, from its lowest-ranked member.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, Label, VertexId};

mod enumerate;
mod heuristic;
mod order;
mod walk;

pub use enumerate::{all_cliques, CliqueStream};
pub use heuristic::heuristic_clique;

use order::VertexOrder;
use walk::{Budget, Incumbent, Neighborhood, Walk, WalkEnd};

/// Knobs for [`get_max_clique`] and [`max_clique_search`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchParams {
    /// Smallest clique worth reporting.
    pub lower_bound: usize,
    /// The search stops as soon as a clique of this size is found.
    pub upper_bound: usize,
    /// Seconds allowed per call; `0.0` means no limit.
    pub time_limit: f64,
    pub use_heuristic: bool,
    pub use_dfs: bool,
    /// Resume from the given state instead of resetting it.
    pub continue_search: bool,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            lower_bound: 1,
            upper_bound: u32::MAX as usize,
            time_limit: 1.0,
            use_heuristic: false,
            use_dfs: true,
            continue_search: false,
        }
    }
}

impl SearchParams {
    /// Unlimited time, heuristic seeding and full branch-and-bound.
    pub fn exhaustive() -> Self {
        SearchParams {
            time_limit: 0.0,
            use_heuristic: true,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lower_bound < 1 {
            return Err(Error::usage("lower_bound must be at least 1"));
        }
        if self.lower_bound > self.upper_bound {
            return Err(Error::usage(format!(
                "lower_bound {} exceeds upper_bound {}",
                self.lower_bound, self.upper_bound
            )));
        }
        if !self.time_limit.is_finite() || self.time_limit < 0.0 {
            return Err(Error::usage(
                "time_limit must be a nonnegative number of seconds",
            ));
        }
        Ok(())
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        (self.time_limit > 0.0).then(|| start + Duration::from_secs_f64(self.time_limit))
    }
}

#[derive(Debug, Clone)]
struct Suspended {
    neighborhood: Neighborhood,
    walk: Walk,
}

/// Resumable search position.
///
/// `best_clique` is always a clique of the graph the state was used with.
/// A state belongs to one graph; using it with another is a usage error
/// until [`SearchState::reset`] is called.
#[derive(Debug, Clone, Default)]
pub struct SearchState {
    cursor: usize,
    best: Vec<VertexId>,
    search_done: bool,
    elapsed: Duration,
    heuristic_done: bool,
    shape: Option<(usize, usize)>,
    order: Option<VertexOrder>,
    suspended: Option<Suspended>,
    slot: Vec<u32>,
}

impl SearchState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Back to a fresh state: cursor 0, no clique, not done, no elapsed time.
    pub fn reset(&mut self) {
        *self = SearchState::default();
    }

    /// Index into the processing order of the next start vertex.
    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn search_done(&self) -> bool {
        self.search_done
    }

    /// Search time accumulated across calls since the last reset.
    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }

    /// Best clique so far as internal IDs, in discovery order.
    pub fn best_clique(&self) -> &[VertexId] {
        &self.best
    }

    /// Best clique so far as sorted external labels.
    pub fn best_labels(&self, g: &Graph) -> Vec<Label> {
        sorted_labels(g, &self.best)
    }

    fn bind(&mut self, g: &Graph) -> Result<()> {
        let shape = (g.n_vertices(), g.n_edges());
        match self.shape {
            Some(s) if s != shape => Err(Error::usage(
                "search state belongs to a different graph; reset it first",
            )),
            Some(_) => Ok(()),
            None => {
                self.shape = Some(shape);
                Ok(())
            }
        }
    }

    fn order(&mut self, g: &Graph) -> &VertexOrder {
        self.order.get_or_insert_with(|| VertexOrder::new(g))
    }
}

/// Result of [`get_max_clique`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueOutcome {
    /// Sorted labels of the best clique. Empty only for the empty graph.
    Found(Vec<Label>),
    /// No clique of at least `lower_bound` vertices was found so far.
    NotFound {
        best_size: usize,
        lower_bound: usize,
    },
}

impl CliqueOutcome {
    pub fn clique(&self) -> Option<&[Label]> {
        match self {
            CliqueOutcome::Found(c) => Some(c),
            CliqueOutcome::NotFound { .. } => None,
        }
    }

    pub fn size(&self) -> usize {
        self.clique().map_or(0, <[Label]>::len)
    }
}

fn sorted_labels(g: &Graph, ids: &[VertexId]) -> Vec<Label> {
    let mut labels: Vec<Label> = ids.iter().map(|&v| g.label(v)).collect();
    labels.sort_unstable();
    labels
}

/// Branch-and-bound over start vertices in ascending `(degree, id)` order.
///
/// Resets `state` first unless `params.continue_search` is set. Returns
/// early, with `search_done == false`, when the time limit expires; calling
/// again with `continue_search` picks up exactly where it stopped.
pub fn max_clique_search(g: &Graph, params: &SearchParams, state: &mut SearchState) -> Result<()> {
    params.validate()?;
    if !params.continue_search {
        state.reset();
    }
    state.bind(g)?;
    let start = Instant::now();
    run_dfs(g, params, state, Budget::new(params.deadline(start)));
    state.elapsed += start.elapsed();
    Ok(())
}

fn run_dfs(g: &Graph, params: &SearchParams, state: &mut SearchState, mut budget: Budget) {
    if state.search_done {
        return;
    }
    let n = g.n_vertices();
    if state.slot.len() != n {
        state.slot = vec![u32::MAX; n];
    }
    state.order(g);
    let order = state.order.take().expect("order computed above");

    let mut inc = Incumbent {
        threshold: state.best.len().max(params.lower_bound - 1),
        clique: std::mem::take(&mut state.best),
        upper_bound: params.upper_bound,
    };
    let mut first = true;

    let ended = loop {
        if inc.reached_upper() {
            break WalkEnd::UpperBoundReached;
        }
        if !first && budget.expired_now() {
            break WalkEnd::Paused;
        }
        first = false;

        let (nb, mut walk) = match state.suspended.take() {
            Some(s) => (s.neighborhood, s.walk),
            None => {
                let Some(&v) = order.order.get(state.cursor) else {
                    break WalkEnd::Exhausted;
                };
                if g.deg(v) < inc.threshold {
                    state.cursor += 1;
                    continue;
                }
                if inc.threshold == 0 {
                    inc.offer(vec![v]);
                }
                let nb = Neighborhood::build(g, &order.rank, v, inc.threshold, &mut state.slot);
                let candidates = nb.candidates(inc.threshold.saturating_sub(1));
                if candidates.len() < inc.threshold {
                    state.cursor += 1;
                    continue;
                }
                (nb, Walk::new(candidates))
            }
        };

        match walk.maximize(&nb, &mut inc, &mut budget) {
            WalkEnd::Exhausted => state.cursor += 1,
            WalkEnd::Paused => {
                state.suspended = Some(Suspended {
                    neighborhood: nb,
                    walk,
                });
                break WalkEnd::Paused;
            }
            WalkEnd::UpperBoundReached => break WalkEnd::UpperBoundReached,
        }
    };

    state.best = inc.clique;
    state.order = Some(order);
    match ended {
        WalkEnd::Paused => {}
        WalkEnd::Exhausted | WalkEnd::UpperBoundReached => {
            state.search_done = true;
            state.suspended = None;
        }
    }
}

/// Seeds `state` with the greedy heuristic clique unless it already ran
/// since the last reset. Returns the heuristic clique's size (after
/// truncation to `upper_bound`), or `None` if it had already run.
pub fn seed_heuristic(
    g: &Graph,
    params: &SearchParams,
    state: &mut SearchState,
) -> Result<Option<usize>> {
    params.validate()?;
    state.bind(g)?;
    if state.heuristic_done {
        return Ok(None);
    }
    let start = Instant::now();
    let mut found = heuristic::greedy_clique(g, state.order(g));
    found.truncate(params.upper_bound);
    let size = found.len();
    if size > state.best.len() {
        state.best = found;
    }
    state.heuristic_done = true;
    if state.best.len() >= params.upper_bound {
        state.search_done = true;
    }
    state.elapsed += start.elapsed();
    Ok(Some(size))
}

/// Runs the heuristic (if enabled and not yet run for this state) and then
/// the branch-and-bound (if enabled), within `params.time_limit`.
///
/// A heuristic-only run finishes in one call and marks the search done.
pub fn get_max_clique(
    g: &Graph,
    params: &SearchParams,
    state: &mut SearchState,
) -> Result<CliqueOutcome> {
    params.validate()?;
    if !params.use_heuristic && !params.use_dfs {
        return Err(Error::usage(
            "at least one of heuristic and dfs must be enabled",
        ));
    }
    if !params.continue_search {
        state.reset();
    }
    state.bind(g)?;

    let start = Instant::now();
    if params.use_heuristic {
        seed_heuristic(g, params, state)?;
    }
    if params.use_dfs {
        let dfs_start = Instant::now();
        run_dfs(g, params, state, Budget::new(params.deadline(start)));
        state.elapsed += dfs_start.elapsed();
    } else {
        state.search_done = true;
    }
    Ok(state.outcome(g, params.lower_bound))
}

impl SearchState {
    /// The best clique so far, or a not-found marker when it is smaller
    /// than `lower_bound` (the empty graph always yields an empty clique).
    pub fn outcome(&self, g: &Graph, lower_bound: usize) -> CliqueOutcome {
        let best = self.best_labels(g);
        if g.is_empty() || best.len() >= lower_bound {
            CliqueOutcome::Found(best)
        } else {
            CliqueOutcome::NotFound {
                best_size: best.len(),
                lower_bound,
            }
        }
    }
}

/// Whether every pair of the labelled vertices is adjacent.
pub fn verify_clique(g: &Graph, labels: &[Label]) -> Result<bool> {
    let ids = g.ids_of(labels)?;
    Ok(is_clique(g, &ids))
}

pub(crate) fn is_clique(g: &Graph, ids: &[VertexId]) -> bool {
    ids.iter()
        .enumerate()
        .all(|(i, &u)| ids[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn k4_minus_edge() -> Graph {
        build_graph([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    fn run(g: &Graph, params: &SearchParams) -> CliqueOutcome {
        get_max_clique(g, params, &mut SearchState::new()).unwrap()
    }

    #[test]
    fn k4_minus_one_edge_has_omega_3() {
        let g = k4_minus_edge();
        let mut state = SearchState::new();
        max_clique_search(&g, &SearchParams::default(), &mut state).unwrap();
        assert_eq!(state.best_clique().len(), 3);
        assert!(state.search_done());
        assert_eq!(state.cursor(), g.n_vertices());
    }

    #[test]
    fn single_vertex_graph() {
        let g = Graph::from_id_edges(vec![42], []).unwrap();
        assert_eq!(
            run(&g, &SearchParams::default()),
            CliqueOutcome::Found(vec![42])
        );
    }

    #[test]
    fn empty_graph_is_found_empty() {
        let outcome = run(&Graph::empty(), &SearchParams::default());
        assert_eq!(outcome, CliqueOutcome::Found(vec![]));
    }

    #[test]
    fn unreachable_lower_bound_is_not_found() {
        let g = k4_minus_edge();
        let params = SearchParams {
            lower_bound: 4,
            ..SearchParams::exhaustive()
        };
        let outcome = run(&g, &params);
        assert!(matches!(
            outcome,
            CliqueOutcome::NotFound { lower_bound: 4, .. }
        ));
    }

    #[test]
    fn invalid_params_are_usage_errors() {
        let g = k4_minus_edge();
        let mut state = SearchState::new();
        let bad = [
            SearchParams {
                lower_bound: 0,
                ..Default::default()
            },
            SearchParams {
                lower_bound: 5,
                upper_bound: 4,
                ..Default::default()
            },
            SearchParams {
                time_limit: -1.0,
                ..Default::default()
            },
            SearchParams {
                use_dfs: false,
                use_heuristic: false,
                ..Default::default()
            },
        ];
        for params in bad {
            assert!(matches!(
                get_max_clique(&g, &params, &mut state),
                Err(Error::Usage(_))
            ));
        }
    }

    #[test]
    fn upper_bound_stops_search() {
        let edges: Vec<(u64, u64)> = (0..6)
            .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
            .collect();
        let g = build_graph(edges).unwrap();
        for heuristic in [false, true] {
            let params = SearchParams {
                upper_bound: 4,
                use_heuristic: heuristic,
                ..SearchParams::exhaustive()
            };
            let mut state = SearchState::new();
            let outcome = get_max_clique(&g, &params, &mut state).unwrap();
            assert_eq!(outcome.size(), 4);
            assert!(state.search_done());
        }
    }

    #[test]
    fn heuristic_only_completes_in_one_call() {
        let g = k4_minus_edge();
        let params = SearchParams {
            use_heuristic: true,
            use_dfs: false,
            ..Default::default()
        };
        let mut state = SearchState::new();
        let outcome = get_max_clique(&g, &params, &mut state).unwrap();
        assert_eq!(outcome.size(), 3);
        assert!(state.search_done());
    }

    #[test]
    fn reset_fresh_state_is_noop() {
        let mut state = SearchState::new();
        state.reset();
        assert_eq!(state.cursor(), 0);
        assert!(state.best_clique().is_empty());
        assert!(!state.search_done());
        assert_eq!(state.elapsed(), Duration::ZERO);
    }

    #[test]
    fn rerun_after_reset_is_identical() {
        let g = k4_minus_edge();
        let params = SearchParams::exhaustive();
        let mut state = SearchState::new();
        let first = get_max_clique(&g, &params, &mut state).unwrap();
        state.reset();
        let again = get_max_clique(&g, &params, &mut state).unwrap();
        assert_eq!(first, again);
    }

    #[test]
    fn state_bound_to_other_graph_is_rejected() {
        let mut state = SearchState::new();
        let continue_params = SearchParams {
            continue_search: true,
            ..Default::default()
        };
        get_max_clique(&k4_minus_edge(), &continue_params, &mut state).unwrap();
        let other = build_graph([(1, 2)]).unwrap();
        assert!(get_max_clique(&other, &continue_params, &mut state).is_err());
        // without continue_search the state is reset and rebinds
        assert!(get_max_clique(&other, &SearchParams::default(), &mut state).is_ok());
    }

    #[test]
    fn verify_clique_cases() {
        let tri = build_graph([(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(verify_clique(&tri, &[1, 2, 3]).unwrap());
        let path = build_graph([(1, 2), (2, 3)]).unwrap();
        assert!(!verify_clique(&path, &[1, 2, 3]).unwrap());
        assert!(matches!(
            verify_clique(&path, &[1, 9]),
            Err(Error::Usage(_))
        ));
        assert!(!verify_clique(&path, &[1, 1]).unwrap());
    }
}
