//! Charged-particle relaxation.
//!
//! Sites and movable points carry unit charges; each movable point also feels
//! a small charge sitting at its nearest boundary point. Motion is a heavy
//! ball in a viscous medium: velocity decays by `damping` each step and
//! gains the current force. Forces are measured in units of the gamut
//! diameter, which makes `step_size` independent of the gamut's scale.
//!
//! A step must strictly lower the Coulomb energy of the movable configuration
//! (boundary charges excluded). Otherwise it is retried along the site-only
//! force with halving step size; when that fails too the state is stationary.

use serde::{Deserialize, Serialize};

use crate::color::{DeltaE2000Weights, Lab, Palette};
use crate::error::{Error, Result};
use crate::geometry::Gamut;
use crate::scalar::Scalar;
use crate::solution::{Method, SolutionSet};

use super::config::OptimizerConfig;
use super::simplex::stream_rng;

const STREAM: u64 = 1 << 41;
const BACKTRACKS: usize = 30;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BallisticOutcome<T> {
    pub solution: SolutionSet<T>,
    pub converged: bool,
    pub steps: usize,
    /// Energy after each accepted step, starting with the initial state.
    pub energies: Vec<T>,
}

/// Coulomb energy of the movable points: against the sites and each other.
pub fn coulomb_energy<T: Scalar>(xs: &[Lab<T>], sites: &[Lab<T>]) -> T {
    let mut e = T::zero();
    for (i, x) in xs.iter().enumerate() {
        for p in sites.iter().chain(&xs[i + 1..]) {
            e = e + T::one() / (*x - *p).norm();
        }
    }
    e
}

fn coulomb<T: Scalar>(x: &Lab<T>, from: &Lab<T>, charge: T) -> Lab<T> {
    let d = *x - *from;
    let r = d.norm();
    d * (charge / (r * r * r))
}

fn site_forces<T: Scalar>(xs: &[Lab<T>], sites: &[Lab<T>]) -> Vec<Lab<T>> {
    xs.iter()
        .enumerate()
        .map(|(i, x)| {
            let mut f = Lab::zero();
            for p in sites {
                f += coulomb(x, p, T::one());
            }
            for (j, y) in xs.iter().enumerate() {
                if j != i {
                    f += coulomb(x, y, T::one());
                }
            }
            f
        })
        .collect()
}

pub fn solve_ballistic<T: Scalar>(
    palette: &Palette<T>,
    gamut: &Gamut<T>,
    m: usize,
    cfg: &OptimizerConfig,
    weights: &DeltaE2000Weights<T>,
) -> Result<BallisticOutcome<T>> {
    cfg.validate()?;
    if m == 0 {
        return Err(Error::Config("m must be at least 1".into()));
    }
    let b = &cfg.ballistic;
    let sites = palette.colors();
    let mut rng = stream_rng(cfg.rng_seed, STREAM);
    let mut xs: Vec<Lab<T>> = (0..m).map(|_| gamut.sample(&mut rng)).collect();
    let mut vel = vec![Lab::zero(); m];
    let q_b = T::lit(b.boundary_charge);
    let h = T::lit(b.step_size);
    let damping = T::lit(b.damping);
    let tol = T::lit(b.tolerance);
    let scale = gamut.diameter();
    // Bounds the boundary force for points sitting on a face.
    let floor = scale * T::lit(1e-3);

    let mut energy = coulomb_energy(&xs, sites);
    let mut energies = vec![energy];
    let mut converged = false;
    let mut steps = 0;
    while steps < b.max_steps {
        steps += 1;
        let fs: Vec<Lab<T>> = site_forces(&xs, sites).into_iter().map(|f| f * scale).collect();
        for (i, x) in xs.iter().enumerate() {
            let d = *x - gamut.nearest_boundary_point(x);
            let dn = d.norm();
            let inward = if dn > T::zero() { d * (T::one() / dn) } else { -gamut.faces()[gamut.min_slack(x).1].normal };
            let r = dn.max(floor);
            vel[i] = vel[i] * damping + fs[i] + inward * (q_b * scale / (r * r));
        }
        let mut next: Vec<Lab<T>> = xs.iter().zip(&vel).map(|(x, v)| gamut.project(&(*x + *v * h))).collect();
        let mut next_energy = coulomb_energy(&next, sites);
        if !(next_energy < energy) {
            vel.iter_mut().for_each(|v| *v = Lab::zero());
            let mut t = h;
            let mut accepted = false;
            for _ in 0..BACKTRACKS {
                next = xs.iter().zip(&fs).map(|(x, f)| gamut.project(&(*x + *f * t))).collect();
                next_energy = coulomb_energy(&next, sites);
                if next_energy < energy {
                    accepted = true;
                    break;
                }
                t = t * T::lit(0.5);
            }
            if !accepted {
                converged = true;
                break;
            }
        }
        let moved = xs.iter().zip(&next).map(|(a, b)| (*a - *b).norm()).fold(T::zero(), T::max);
        xs = next;
        energy = next_energy;
        energies.push(energy);
        if moved < tol {
            converged = true;
            break;
        }
    }
    let solution = SolutionSet::evaluate(xs, palette, Method::Ballistic { converged }, weights);
    Ok(BallisticOutcome { solution, converged, steps, energies })
}
