//! Solver toolkit for the hunters-and-rabbit pursuit game on undirected
//! graphs with optional loops.
//!
//! In each round the hunters shoot at up to `k` vertices while an invisible
//! rabbit sits on some vertex; if it survives the round it must move along an
//! edge. The set of positions the rabbit could occupy — its territory —
//! evolves as `R_1 = S \ W_1`, `R_t = N(R_{t-1}) \ W_t`, and the hunters win
//! once some `R_t` is empty. The hunting number `h(G)` is the least `k` for
//! which a winning shot sequence exists.
//!
//! The crate provides:
//! - [`graph`]: the graph and vertex-set types, degeneracy, and generators
//!   for named families ([`families`]) plus edge-list file I/O ([`format`]);
//! - [`game`]: pure territory dynamics, strategy verification with traces,
//!   and escape-walk witnesses;
//! - [`solver`]: exact hunting numbers (optionally start-restricted or
//!   round-limited) by dominance-pruned territory search, with an independent
//!   brute-force enumeration oracle;
//! - [`poly`]: polynomial special cases and bounds — bipartite matching for
//!   the two-round game, the matching/vertex-cover inequality chain, layered
//!   min-cut approximation, and exhaustive separator oracles;
//! - [`recognize`]: the forbidden-subgraph recognizer for one-hunter-win
//!   graphs with loops, with subgraph witnesses;
//! - [`construct`]: hunting-number-preserving transformations and the
//!   hardness-gadget generators with their explicit proof strategies.

pub mod construct;
pub mod error;
pub mod families;
pub mod format;
pub mod game;
pub mod graph;
pub mod poly;
pub mod recognize;
pub mod solver;
mod vset;

pub use error::{Error, Result};
pub use game::{verify_strategy, EscapeWalk, Strategy, TerritoryTrace, Verdict};
pub use graph::{degeneracy, Graph};
pub use solver::{hunting_number, solve_k, HuntOutcome, SolveOutcome, SolverConfig};
pub use vset::VertexSet;
