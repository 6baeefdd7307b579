//! Exact one-color maximin search by Voronoi-vertex enumeration, the
//! ΔE00-selected variant, and greedy extension to several colors.

mod candidates;
mod solve;

pub use candidates::{enumerate_candidates, plane_pool, CandidateFilter, CandidatePoint};
pub use solve::{greedy_sequence, solve_one_cie76, solve_one_combined, GreedyMode};
