use std::path::Path;

use palext::color::builtin;
use palext::optimize::OptimizerConfig;
use palext::{Gamut, LabColor, Palette};

use crate::Failure;

/// `L,a,b` with `.` as decimal separator.
pub fn parse_triple(s: &str) -> Result<LabColor, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected L,a,b but got `{s}`"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p.parse::<f64>().map_err(|_| format!("`{p}` is not a number"))?;
        if !slot.is_finite() {
            return Err(format!("`{p}` is not finite"));
        }
    }
    Ok(LabColor::from_array(v))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

/// A built-in palette name or the path of a palette file.
pub fn load_palette(spec: &str) -> Result<Palette, Failure> {
    if let Some(p) = builtin(spec) {
        return Ok(p);
    }
    let text = read(Path::new(spec))?;
    Palette::parse(&text).map_err(|e| Failure::Usage(format!("{spec}: {e}")))
}

pub fn load_gamut(path: Option<&Path>) -> Result<Gamut, Failure> {
    let Some(path) = path else {
        return Ok(Gamut::adobe_1998());
    };
    let text = read(path)?;
    let name = path.file_stem().map_or("custom".into(), |s| s.to_string_lossy().into_owned());
    Gamut::parse(name, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn load_config(path: &Path) -> Result<OptimizerConfig, Failure> {
    OptimizerConfig::parse(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}
