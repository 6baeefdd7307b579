//! Joint placement of m colors through the slack formulation
//!
//!   maximize x0  subject to  ‖x_i − p_k‖ ≥ x0,  ‖x_i − x_j‖ ≥ x0,  x_i ∈ Γ
//!
//! solved by restarted downhill-simplex search on a quadratic penalty. Local
//! searches use ΔE76; the reported winner is the local optimum with the
//! largest ΔE00 maximin value.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::color::{delta_e76, DeltaE2000Weights, Lab, Metric, Palette};
use crate::error::{Error, Result};
use crate::geometry::Gamut;
use crate::scalar::{cmp_scalar, Scalar};
use crate::solution::{Method, SolutionSet};

use super::config::OptimizerConfig;
use super::nelder_mead::{minimize, NelderMeadOptions};
use super::objective::maximin_objective;

const MAX_REBUILDS: usize = 20;

/// The slack variable together with the m colors: a point of R^(1+3m).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlackPoint<T> {
    pub x0: T,
    pub xs: Vec<Lab<T>>,
}

impl<T: Scalar> SlackPoint<T> {
    pub fn dimension(&self) -> usize {
        1 + 3 * self.xs.len()
    }

    pub fn to_vec(&self) -> Vec<T> {
        std::iter::once(self.x0).chain(self.xs.iter().flat_map(|x| x.to_array())).collect()
    }

    pub fn from_slice(v: &[T]) -> Self {
        assert_eq!((v.len() - 1) % 3, 0, "slack vector has 1 + 3m entries");
        let xs = v[1..].chunks_exact(3).map(|c| Lab::new(c[0], c[1], c[2])).collect();
        Self { x0: v[0], xs }
    }

    /// Values of all constraints g ≥ 0: distance constraints (to sites,
    /// then pairwise) followed by gamut face slacks.
    pub fn constraints(&self, sites: &[Lab<T>], gamut: &Gamut<T>) -> Vec<T> {
        let mut g = Vec::new();
        for (i, x) in self.xs.iter().enumerate() {
            g.extend(sites.iter().map(|p| delta_e76(x, p) - self.x0));
            g.extend(self.xs[i + 1..].iter().map(|y| delta_e76(x, y) - self.x0));
        }
        for x in &self.xs {
            g.extend(gamut.faces().iter().map(|f| -f.signed_distance(x)));
        }
        g
    }

    /// Largest constraint violation (0 when feasible).
    pub fn violation(&self, sites: &[Lab<T>], gamut: &Gamut<T>) -> T {
        self.constraints(sites, gamut).into_iter().fold(T::zero(), |m, g| m.max(-g))
    }
}

/// Penalized objective to minimize: −x0 + w · Σ max(0, −g)².
fn penalized<T: Scalar>(v: &[T], sites: &[Lab<T>], gamut: &Gamut<T>, weight: T) -> T {
    let x0 = v[0];
    let m = (v.len() - 1) / 3;
    let at = |i: usize| Lab::new(v[1 + 3 * i], v[2 + 3 * i], v[3 + 3 * i]);
    let mut pen = T::zero();
    let mut add = |g: T| {
        if g < T::zero() {
            pen = pen + g * g;
        }
    };
    for i in 0..m {
        let x = at(i);
        for p in sites {
            add(delta_e76(&x, p) - x0);
        }
        for j in i + 1..m {
            add(delta_e76(&x, &at(j)) - x0);
        }
        for f in gamut.faces() {
            add(-f.signed_distance(&x));
        }
    }
    -x0 + weight * pen
}

/// One restart's converged point, repaired onto the gamut and scored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalOptimum<T> {
    pub restart: usize,
    /// Raw search result before repair.
    pub slack: SlackPoint<T>,
    pub violation: T,
    pub converged: bool,
    pub feasible: bool,
    /// Colors after projection onto the gamut.
    pub colors: Vec<Lab<T>>,
    pub min_de76: T,
    pub min_de00: T,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JointOutcome<T> {
    pub solution: SolutionSet<T>,
    pub winner: LocalOptimum<T>,
    pub restarts: usize,
    pub feasible: usize,
    pub converged: usize,
}

/// Deterministic per-restart stream: identical regardless of scheduling.
pub(crate) fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs one restart of the local search.
pub fn local_search<T: Scalar>(
    palette: &Palette<T>,
    gamut: &Gamut<T>,
    m: usize,
    cfg: &OptimizerConfig,
    weights: &DeltaE2000Weights<T>,
    restart: usize,
) -> LocalOptimum<T> {
    let sites = palette.colors();
    let mut rng = stream_rng(cfg.rng_seed, restart as u64);
    let (lo, hi) = cfg.x0_init_range;
    let x0 = if hi > lo { rng.gen_range(lo..=hi) } else { lo };
    let start = SlackPoint { x0: T::lit(x0), xs: (0..m).map(|_| gamut.sample(&mut rng)).collect() };

    let step = T::lit(cfg.simplex_step);
    let mut steps = vec![step; start.dimension()];
    steps[0] = T::one();
    let opts = NelderMeadOptions {
        max_iterations: cfg.max_iterations,
        f_tolerance: T::lit(cfg.tolerance),
        x_tolerance: T::lit(cfg.tolerance.sqrt()),
    };
    let weight = T::lit(cfg.penalty_weight);
    let objective = |v: &[T]| penalized(v, sites, gamut, weight);
    let mut result = minimize(objective, &start.to_vec(), &steps, &opts);
    // A collapsed simplex can report convergence away from a local optimum;
    // rebuilding it around the incumbent until nothing improves fixes that.
    let mut evaluations = result.iterations;
    for _ in 0..MAX_REBUILDS {
        if evaluations >= cfg.max_iterations {
            break;
        }
        let budget = NelderMeadOptions { max_iterations: cfg.max_iterations - evaluations, ..opts };
        let again = minimize(objective, &result.x, &steps, &budget);
        evaluations += again.iterations;
        let gain = result.value - again.value;
        let improved = gain > opts.f_tolerance * (T::one() + result.value.abs());
        if again.value <= result.value {
            result = again;
        }
        if !improved {
            break;
        }
    }

    let slack = SlackPoint::from_slice(&result.x);
    let violation = slack.violation(sites, gamut);
    let colors: Vec<Lab<T>> = slack.xs.iter().map(|x| gamut.project(x)).collect();
    let min_de76 = maximin_objective(&colors, sites, &Metric::Cie76);
    let min_de00 = maximin_objective(&colors, sites, &Metric::Ciede2000(*weights));
    let feasible = violation <= T::lit(cfg.feasibility_tolerance) && min_de76.is_finite();
    LocalOptimum { restart, slack, violation, converged: result.converged, feasible, colors, min_de76, min_de00 }
}

fn better<T: Scalar>(a: &LocalOptimum<T>, b: &LocalOptimum<T>) -> bool {
    let tie = T::tie_eps() * b.min_de00.abs().max(T::one());
    if (a.min_de00 - b.min_de00).abs() > tie {
        return a.min_de00 > b.min_de00;
    }
    let tie76 = T::tie_eps() * b.min_de76.abs().max(T::one());
    if (a.min_de76 - b.min_de76).abs() > tie76 {
        return a.min_de76 > b.min_de76;
    }
    let lex = a
        .colors
        .iter()
        .zip(&b.colors)
        .map(|(x, y)| x.lex_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal);
    lex.is_lt()
}

/// Restarted slack-formulation search for `m` simultaneous colors.
pub fn solve_joint_simplex<T: Scalar>(
    palette: &Palette<T>,
    gamut: &Gamut<T>,
    m: usize,
    cfg: &OptimizerConfig,
    weights: &DeltaE2000Weights<T>,
) -> Result<JointOutcome<T>> {
    cfg.validate()?;
    if m == 0 {
        return Err(Error::Config("m must be at least 1".into()));
    }
    let optima: Vec<LocalOptimum<T>> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| local_search(palette, gamut, m, cfg, weights, r))
        .collect();

    let feasible = optima.iter().filter(|o| o.feasible && o.converged).count();
    let converged = optima.iter().filter(|o| o.converged).count();
    let mut winner: Option<&LocalOptimum<T>> = None;
    for o in optima.iter().filter(|o| o.feasible && o.converged) {
        if winner.is_none_or(|w| better(o, w)) {
            winner = Some(o);
        }
    }
    let Some(winner) = winner.cloned() else {
        let least = optima.iter().map(|o| o.violation).min_by(|a, b| cmp_scalar(*a, *b));
        return Err(Error::Solver(format!(
            "no feasible local optimum in {} restarts (smallest violation {:.3e})",
            cfg.restarts,
            least.map_or(f64::NAN, |v| v.as_f64())
        )));
    };
    let solution = SolutionSet::evaluate(winner.colors.clone(), palette, Method::JointSimplex, weights);
    Ok(JointOutcome { solution, winner, restarts: cfg.restarts, feasible, converged })
}
