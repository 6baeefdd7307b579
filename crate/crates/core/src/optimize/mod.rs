//! Solvers that place several colors at once: restarted slack-formulation
//! simplex search, Monte-Carlo sampling and ballistic relaxation.

mod ballistic;
mod config;
mod monte_carlo;
pub mod nelder_mead;
mod objective;
mod simplex;

pub use ballistic::{coulomb_energy, solve_ballistic, BallisticOutcome};
pub use config::{BallisticConfig, OptimizerConfig};
pub use monte_carlo::solve_monte_carlo;
pub use objective::maximin_objective;
pub use simplex::{local_search, solve_joint_simplex, JointOutcome, LocalOptimum, SlackPoint};
