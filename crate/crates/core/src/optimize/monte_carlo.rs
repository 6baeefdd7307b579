use rayon::prelude::*;

use crate::color::{DeltaE2000Weights, Lab, Metric, Palette};
use crate::error::{Error, Result};
use crate::geometry::Gamut;
use crate::scalar::Scalar;
use crate::solution::{Method, SolutionSet};

use super::config::OptimizerConfig;
use super::objective::maximin_objective;
use super::simplex::stream_rng;

const CHUNK: usize = 1 << 14;
// Keeps Monte-Carlo streams disjoint from the per-restart streams.
const STREAM_BASE: u64 = 1 << 40;

/// Best of `cfg.mc_samples` uniform m-tuples under `metric`.
pub fn solve_monte_carlo<T: Scalar>(
    palette: &Palette<T>,
    gamut: &Gamut<T>,
    m: usize,
    metric: &Metric<T>,
    cfg: &OptimizerConfig,
    weights: &DeltaE2000Weights<T>,
) -> Result<SolutionSet<T>> {
    cfg.validate()?;
    if m == 0 {
        return Err(Error::Config("m must be at least 1".into()));
    }
    let sites = palette.colors();
    let chunks = cfg.mc_samples.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = stream_rng(cfg.rng_seed, STREAM_BASE + c as u64);
            let n = CHUNK.min(cfg.mc_samples - c * CHUNK);
            let mut best: Option<(T, Vec<Lab<T>>)> = None;
            let mut tuple = vec![Lab::zero(); m];
            for _ in 0..n {
                for x in tuple.iter_mut() {
                    *x = gamut.sample(&mut rng);
                }
                let v = maximin_objective(&tuple, sites, metric);
                if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
                    best = Some((v, tuple.clone()));
                }
            }
            best.expect("chunk is non-empty")
        })
        .collect::<Vec<_>>()
        .into_iter()
        .reduce(|a, b| if b.0 > a.0 { b } else { a })
        .expect("at least one sample");
    Ok(SolutionSet::evaluate(best.1, palette, Method::MonteCarlo, weights))
}
