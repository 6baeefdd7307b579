use std::fmt::Write as _;
use std::time::Duration;

use palext::color::{hex, rgb_from_lab, RgbSpace};
use palext::optimize::OptimizerConfig;
use palext::{DeltaE2000Weights, Gamut, SolutionSet};
use serde::{Deserialize, Serialize};

fn round6(x: f64) -> f64 {
    if x.is_finite() {
        (x * 1e6).round() / 1e6
    } else {
        x
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Swatch {
    #[serde(rename = "L")]
    pub l: f64,
    pub a: f64,
    pub b: f64,
    /// Adobe RGB (1998) hex after clamping to the display range.
    pub hex: String,
    pub clipped: bool,
}

impl Swatch {
    fn new(c: &palext::LabColor) -> Self {
        let (rgb, clipped) = rgb_from_lab(c, &RgbSpace::adobe_1998());
        Self { l: round6(c.l), a: round6(c.a), b: round6(c.b), hex: hex(rgb), clipped }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepReport {
    #[serde(rename = "L")]
    pub l: f64,
    pub a: f64,
    pub b: f64,
    pub min_de76: f64,
    pub min_de00: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub optimizer: OptimizerConfig,
    pub weights: DeltaE2000Weights,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub palette: String,
    pub gamut: String,
    pub method: String,
    /// Only for the ballistic method.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub converged: Option<bool>,
    pub config: ConfigEcho,
    pub solution: Vec<Swatch>,
    pub min_de76: f64,
    pub min_de00: f64,
    pub steps: Vec<StepReport>,
    pub seed: u64,
    pub duration_ms: Option<f64>,
}

impl RunReport {
    pub fn new(
        palette_id: &str,
        gamut: &Gamut,
        sol: &SolutionSet,
        converged: Option<bool>,
        cfg: &OptimizerConfig,
        weights: &DeltaE2000Weights,
        elapsed: Option<Duration>,
    ) -> Self {
        Self {
            palette: palette_id.to_string(),
            gamut: gamut.name().to_string(),
            method: sol.method.tag().to_string(),
            converged,
            config: ConfigEcho { optimizer: cfg.clone(), weights: *weights },
            solution: sol.colors.iter().map(Swatch::new).collect(),
            min_de76: round6(sol.achieved_min_de76),
            min_de00: round6(sol.achieved_min_de00),
            steps: sol
                .steps
                .iter()
                .map(|s| StepReport {
                    l: round6(s.color.l),
                    a: round6(s.color.a),
                    b: round6(s.color.b),
                    min_de76: round6(s.min_de76),
                    min_de00: round6(s.min_de00),
                })
                .collect(),
            seed: cfg.rng_seed,
            duration_ms: elapsed.map(|d| round6(d.as_secs_f64() * 1e3)),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "palette {}, gamut {}, method {}", self.palette, self.gamut, self.method);
        if let Some(c) = self.converged {
            let _ = writeln!(s, "converged: {}", if c { "yes" } else { "no (step limit reached)" });
        }
        let per_step = !self.steps.is_empty();
        let _ = write!(s, "{:>3} {:>7} {:>7} {:>7}  {:<8}", "#", "L", "a", "b", "hex");
        if per_step {
            let _ = write!(s, " {:>9} {:>9}", "min ΔE76", "min ΔE00");
        }
        s.push('\n');
        for (i, c) in self.solution.iter().enumerate() {
            let mark = if c.clipped { "*" } else { " " };
            let _ = write!(s, "{:>3} {:>7.1} {:>7.1} {:>7.1}  {}{}", i + 1, c.l, c.a, c.b, c.hex, mark);
            if let Some(st) = self.steps.get(i) {
                let _ = write!(s, " {:>9.1} {:>9.1}", st.min_de76, st.min_de00);
            }
            s.push('\n');
        }
        let _ = writeln!(s, "achieved min ΔE76 {:.1}, min ΔE00 {:.1}", self.min_de76, self.min_de00);
        if self.solution.iter().any(|c| c.clipped) {
            let _ = writeln!(s, "* outside the display gamut; hex is clipped");
        }
        let _ = write!(s, "seed {}", self.seed);
        if let Some(ms) = self.duration_ms {
            let _ = write!(s, ", {ms:.0} ms");
        }
        s.push('\n');
        s
    }
}
