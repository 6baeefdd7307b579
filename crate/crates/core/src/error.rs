use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty palette")]
    EmptyPalette,

    #[error("duplicate palette color at entries {0} and {1}")]
    DuplicateColor(usize, usize),

    #[error("lightness {0} outside [0, 100]")]
    LightnessOutOfRange(f64),

    #[error("rgb component {0} outside [0, 1]")]
    RgbOutOfRange(f64),

    #[error("invalid weights: kL, kC, kH must be strictly positive")]
    InvalidWeights,

    #[error("degenerate sites: bisector of identical points")]
    DegenerateSites,

    #[error("gamut construction failed: {0}")]
    GamutConstruction(String),

    #[error("solver error: {0}")]
    Solver(String),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
