use serde::{Deserialize, Serialize};

use crate::color::{DeltaE2000Weights, Lab, Palette};
use crate::error::{Error, Result};
use crate::geometry::Gamut;
use crate::scalar::Scalar;
use crate::solution::{Method, SolutionSet, Step};

use super::candidates::{enumerate_candidates, select_best, CandidateFilter, CandidatePoint};

/// Selection rule over the ΔE76 candidate set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GreedyMode {
    /// Maximize the ΔE76 distance: exact for one color under CIE76.
    Cie76,
    /// Maximize the ΔE00 distance among the same candidates.
    Combined,
}

/// Exact maximin point under ΔE76: the candidate farthest from its nearest site.
pub fn solve_one_cie76<T: Scalar>(
    palette: &Palette<T>,
    gamut: &Gamut<T>,
    weights: &DeltaE2000Weights<T>,
) -> Result<CandidatePoint<T>> {
    solve_one_sites(palette.colors(), gamut, weights, GreedyMode::Cie76)
}

/// Candidate with the largest ΔE00 distance to its nearest site.
///
/// The candidates are generated from ΔE76 bisectors, so this is a heuristic
/// for the ΔE00 problem, not a solution of it.
pub fn solve_one_combined<T: Scalar>(
    palette: &Palette<T>,
    gamut: &Gamut<T>,
    weights: &DeltaE2000Weights<T>,
) -> Result<CandidatePoint<T>> {
    solve_one_sites(palette.colors(), gamut, weights, GreedyMode::Combined)
}

pub(crate) fn solve_one_sites<T: Scalar>(
    sites: &[Lab<T>],
    gamut: &Gamut<T>,
    weights: &DeltaE2000Weights<T>,
    mode: GreedyMode,
) -> Result<CandidatePoint<T>> {
    let candidates = enumerate_candidates(sites, gamut, weights, CandidateFilter::VoronoiVertices);
    let best = match mode {
        GreedyMode::Cie76 => select_best(&candidates, |c| c.min_de76, |c| c.point),
        GreedyMode::Combined => select_best(&candidates, |c| c.min_de00, |c| c.point),
    };
    best.cloned().ok_or_else(|| Error::Solver("no candidate points inside the gamut".into()))
}

/// Adds `count` colors one at a time; each is optimal (under `mode`) against
/// the palette and all colors chosen before it.
pub fn greedy_sequence<T: Scalar>(
    palette: &Palette<T>,
    gamut: &Gamut<T>,
    count: usize,
    mode: GreedyMode,
    weights: &DeltaE2000Weights<T>,
) -> Result<SolutionSet<T>> {
    if count == 0 {
        return Err(Error::Config("count must be at least 1".into()));
    }
    let mut sites = palette.colors().to_vec();
    let mut steps = Vec::with_capacity(count);
    for _ in 0..count {
        let c = solve_one_sites(&sites, gamut, weights, mode)?;
        steps.push(Step { color: c.point, min_de76: c.min_de76, min_de00: c.min_de00 });
        sites.push(c.point);
    }
    let method = match mode {
        GreedyMode::Cie76 => Method::Voronoi76,
        GreedyMode::Combined => Method::Combined,
    };
    let colors = steps.iter().map(|s| s.color).collect();
    let mut sol = SolutionSet::evaluate(colors, palette, method, weights);
    sol.steps = steps;
    Ok(sol)
}
