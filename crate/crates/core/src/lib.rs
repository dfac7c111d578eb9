//! Maximum-clique search for large sparse undirected graphs, and
//! correspondence-graph construction for matching problems.
//!
//! ```
//! use cliquesearch::{build_graph, get_max_clique, SearchParams, SearchState};
//!
//! let g = build_graph([(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
//! let mut state = SearchState::new();
//! let outcome = get_max_clique(&g, &SearchParams::default(), &mut state).unwrap();
//! assert_eq!(outcome.clique(), Some(&[1, 2, 3][..]));
//! ```

pub mod bench;
pub mod bitset;
pub mod cli;
pub mod correspondence;
pub mod error;
pub mod graph;
pub mod io;
pub mod isomorphism;
pub mod report;
pub mod search;

pub use bitset::VertexBitset;
pub use error::{Error, Result};
pub use graph::{build_graph, Graph, GraphBuilder, Label, VertexId};
pub use search::{
    all_cliques, get_max_clique, heuristic_clique, max_clique_search, seed_heuristic,
    verify_clique, CliqueOutcome, CliqueStream, SearchParams, SearchState,
};
