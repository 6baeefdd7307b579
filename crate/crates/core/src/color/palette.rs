use serde::{Deserialize, Serialize};

use super::lab::Lab;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Ordered, named set of existing colors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Palette<T> {
    names: Vec<String>,
    colors: Vec<Lab<T>>,
}

impl<T: Scalar> Palette<T> {
    /// Validates that entries are non-empty, distinct and have L in [0, 100].
    pub fn new(entries: Vec<(String, Lab<T>)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyPalette);
        }
        let (names, colors): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        for c in &colors {
            if !(c.l >= T::zero() && c.l <= T::lit(100.0)) || !c.is_finite() {
                return Err(Error::LightnessOutOfRange(c.l.as_f64()));
            }
        }
        for i in 0..colors.len() {
            for j in i + 1..colors.len() {
                if colors[i] == colors[j] {
                    return Err(Error::DuplicateColor(i, j));
                }
            }
        }
        Ok(Self { names, colors })
    }

    pub fn from_colors(colors: impl IntoIterator<Item = Lab<T>>) -> Result<Self> {
        Self::new(colors.into_iter().enumerate().map(|(i, c)| (format!("p{}", i + 1), c)).collect())
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[Lab<T>] {
        &self.colors
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Lab<T>)> {
        self.names.iter().map(String::as_str).zip(&self.colors)
    }

    /// Appends a color; fails on an exact duplicate.
    pub fn push(&mut self, name: impl Into<String>, color: Lab<T>) -> Result<()> {
        if let Some(i) = self.colors.iter().position(|c| *c == color) {
            return Err(Error::DuplicateColor(i, self.colors.len()));
        }
        self.names.push(name.into());
        self.colors.push(color);
        Ok(())
    }

    pub fn cast<U: Scalar>(&self) -> Palette<U> {
        Palette { names: self.names.clone(), colors: self.colors.iter().map(|c| c.cast()).collect() }
    }

    /// Parses `name;L;a;b` lines. `#` starts a comment line; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let entries = parse_entries(text)?;
        if entries.is_empty() {
            return Err(Error::EmptyPalette);
        }
        Self::new(entries)
    }

    pub fn to_text(&self) -> String {
        self.iter().map(|(n, c)| format!("{n};{};{};{}\n", c.l, c.a, c.b)).collect()
    }
}

/// Shared line parser for palette and gamut-corner files.
pub fn parse_entries<T: Scalar>(text: &str) -> Result<Vec<(String, Lab<T>)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: idx + 1, message };
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(err(format!("expected `name;L;a;b`, got {} fields", fields.len())));
        }
        let mut v = [T::zero(); 3];
        for (k, f) in fields[1..].iter().enumerate() {
            let x: f64 = f.parse().map_err(|_| err(format!("not a number: `{f}`")))?;
            if !x.is_finite() {
                return Err(err(format!("not finite: `{f}`")));
            }
            v[k] = T::lit(x);
        }
        out.push((fields[0].to_string(), Lab::from_array(v)));
    }
    Ok(out)
}

const MOSCOW_2014: &str = include_str!("../data/moscow-2014.txt");

/// Names of the palettes compiled into the library.
pub const BUILTIN_PALETTES: &[&str] = &["moscow-2014"];

/// A palette compiled into the library, by name.
pub fn builtin<T: Scalar>(name: &str) -> Option<Palette<T>> {
    match name {
        "moscow-2014" => Some(Palette::parse(MOSCOW_2014).expect("embedded palette parses")),
        _ => None,
    }
}

/// The 14 colors of the 2014 Moscow metro map.
pub fn moscow_2014<T: Scalar>() -> Palette<T> {
    builtin("moscow-2014").unwrap()
}
