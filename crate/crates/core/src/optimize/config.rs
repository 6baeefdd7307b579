use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallisticConfig {
    /// Charge placed at each movable point's nearest boundary point.
    pub boundary_charge: f64,
    pub step_size: f64,
    /// Fraction of velocity kept from one step to the next.
    pub damping: f64,
    pub max_steps: usize,
    /// Stop once no point moves farther than this in one step (Lab units).
    pub tolerance: f64,
}

impl Default for BallisticConfig {
    fn default() -> Self {
        Self { boundary_charge: 1e-3, step_size: 0.5, damping: 0.9, max_steps: 10_000, tolerance: 1e-4 }
    }
}

/// Knobs for the stochastic solvers. Every field has a default and can be
/// overridden from a `key = value` file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub restarts: usize,
    /// Range the slack variable x0 is drawn from at each restart.
    pub x0_init_range: (f64, f64),
    pub rng_seed: u64,
    /// Iteration cap per local search.
    pub max_iterations: usize,
    pub tolerance: f64,
    pub penalty_weight: f64,
    /// Initial simplex edge for the color coordinates (Lab units).
    pub simplex_step: f64,
    /// Largest constraint violation a local optimum may have to count as feasible.
    pub feasibility_tolerance: f64,
    pub mc_samples: usize,
    pub ballistic: BallisticConfig,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            restarts: 10_000,
            x0_init_range: (0.0, 20.0),
            rng_seed: 0,
            max_iterations: 4_000,
            tolerance: 1e-7,
            penalty_weight: 1e3,
            simplex_step: 5.0,
            feasibility_tolerance: 1e-2,
            mc_samples: 1_000_000,
            ballistic: BallisticConfig::default(),
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.into()));
        let counts = [
            ("restarts", self.restarts),
            ("max_iterations", self.max_iterations),
            ("mc_samples", self.mc_samples),
            ("ballistic.max_steps", self.ballistic.max_steps),
        ];
        if let Some((name, _)) = counts.iter().find(|(_, v)| *v == 0) {
            return bad(&format!("{name} must be at least 1"));
        }
        let positive = [
            ("tolerance", self.tolerance),
            ("penalty_weight", self.penalty_weight),
            ("simplex_step", self.simplex_step),
            ("feasibility_tolerance", self.feasibility_tolerance),
            ("ballistic.boundary_charge", self.ballistic.boundary_charge),
            ("ballistic.step_size", self.ballistic.step_size),
            ("ballistic.tolerance", self.ballistic.tolerance),
        ];
        if let Some((name, _)) = positive.iter().find(|(_, v)| !(*v > 0.0 && v.is_finite())) {
            return bad(&format!("{name} must be positive"));
        }
        if !(0.0..1.0).contains(&self.ballistic.damping) {
            return bad("ballistic.damping must be in [0, 1)");
        }
        let (lo, hi) = self.x0_init_range;
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return bad("x0_init_range must be an ordered finite interval");
        }
        Ok(())
    }

    /// Applies one `key = value` override.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<V: std::str::FromStr>(key: &str, v: &str) -> Result<V> {
            v.parse().map_err(|_| Error::Config(format!("bad value for {key}: `{v}`")))
        }
        match key {
            "restarts" => self.restarts = num(key, value)?,
            "seed" | "rng_seed" => self.rng_seed = num(key, value)?,
            "max_iterations" => self.max_iterations = num(key, value)?,
            "tolerance" => self.tolerance = num(key, value)?,
            "penalty_weight" => self.penalty_weight = num(key, value)?,
            "simplex_step" => self.simplex_step = num(key, value)?,
            "feasibility_tolerance" => self.feasibility_tolerance = num(key, value)?,
            "mc_samples" | "samples" => self.mc_samples = num(key, value)?,
            "x0_min" => self.x0_init_range.0 = num(key, value)?,
            "x0_max" => self.x0_init_range.1 = num(key, value)?,
            "x0_init_range" => {
                let (lo, hi) = value
                    .split_once(',')
                    .ok_or_else(|| Error::Config("x0_init_range expects `lo,hi`".into()))?;
                self.x0_init_range = (num(key, lo.trim())?, num(key, hi.trim())?);
            }
            "ballistic.boundary_charge" => self.ballistic.boundary_charge = num(key, value)?,
            "ballistic.step_size" => self.ballistic.step_size = num(key, value)?,
            "ballistic.damping" => self.ballistic.damping = num(key, value)?,
            "ballistic.max_steps" => self.ballistic.max_steps = num(key, value)?,
            "ballistic.tolerance" => self.ballistic.tolerance = num(key, value)?,
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    /// Defaults overridden by a `key = value` file (`#` comments allowed).
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse { line: i + 1, message: "expected `key = value`".into() })?;
            cfg.set(k.trim(), v.trim()).map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_text(&self) -> String {
        let b = &self.ballistic;
        format!(
            "restarts = {}\nx0_init_range = {},{}\nseed = {}\nmax_iterations = {}\ntolerance = {}\n\
             penalty_weight = {}\nsimplex_step = {}\nfeasibility_tolerance = {}\nmc_samples = {}\n\
             ballistic.boundary_charge = {}\nballistic.step_size = {}\nballistic.damping = {}\n\
             ballistic.max_steps = {}\nballistic.tolerance = {}\n",
            self.restarts,
            self.x0_init_range.0,
            self.x0_init_range.1,
            self.rng_seed,
            self.max_iterations,
            self.tolerance,
            self.penalty_weight,
            self.simplex_step,
            self.feasibility_tolerance,
            self.mc_samples,
            b.boundary_charge,
            b.step_size,
            b.damping,
            b.max_steps,
            b.tolerance
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid_and_round_trip() {
        let cfg = OptimizerConfig::default();
        cfg.validate().unwrap();
        assert_eq!(OptimizerConfig::parse(&cfg.to_text()).unwrap(), cfg);
    }

    #[test]
    fn overrides_and_errors() {
        let cfg = OptimizerConfig::parse("restarts = 7 # few\nx0_init_range = 1, 5\nballistic.damping=0.5\n").unwrap();
        assert_eq!(cfg.restarts, 7);
        assert_eq!(cfg.x0_init_range, (1.0, 5.0));
        assert_eq!(cfg.ballistic.damping, 0.5);
        assert!(matches!(OptimizerConfig::parse("restarts = 0"), Err(Error::Config(_))));
        assert!(matches!(OptimizerConfig::parse("bogus = 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(OptimizerConfig::parse("restarts"), Err(Error::Parse { .. })));
        let c = OptimizerConfig { mc_samples: 0, ..Default::default() };
        assert!(c.validate().is_err());
    }
}
