use serde::{Deserialize, Serialize};

use crate::color::{DeltaE2000Weights, Lab, Metric, Palette};
use crate::optimize::maximin_objective;
use crate::scalar::Scalar;

/// Which solver produced a [`SolutionSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Voronoi76,
    Combined,
    JointSimplex,
    MonteCarlo,
    Ballistic { converged: bool },
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Voronoi76 => "voronoi76",
            Method::Combined => "combined",
            Method::JointSimplex => "joint-simplex",
            Method::MonteCarlo => "mc",
            Method::Ballistic { .. } => "ballistic",
        }
    }
}

/// One greedy step: the color added and its distances to everything before it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Step<T> {
    pub color: Lab<T>,
    pub min_de76: T,
    pub min_de00: T,
}

/// New colors with the maximin objective they achieve against the palette
/// and each other.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionSet<T> {
    pub colors: Vec<Lab<T>>,
    pub method: Method,
    pub achieved_min_de76: T,
    pub achieved_min_de00: T,
    /// Per-step record for sequential methods, empty otherwise.
    pub steps: Vec<Step<T>>,
}

impl<T: Scalar> SolutionSet<T> {
    pub fn evaluate(colors: Vec<Lab<T>>, palette: &Palette<T>, method: Method, weights: &DeltaE2000Weights<T>) -> Self {
        let achieved_min_de76 = maximin_objective(&colors, palette.colors(), &Metric::Cie76);
        let achieved_min_de00 = maximin_objective(&colors, palette.colors(), &Metric::Ciede2000(*weights));
        Self { colors, method, achieved_min_de76, achieved_min_de00, steps: Vec::new() }
    }
}
