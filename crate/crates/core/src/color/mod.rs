//! Color representation, RGB conversion and color-difference metrics.

mod delta;
mod lab;
mod palette;
mod rgb;

pub use delta::{delta_e2000, delta_e76, min_distance, DeltaE2000Weights, Metric};
pub use lab::Lab;
pub use palette::{builtin, moscow_2014, parse_entries, Palette, BUILTIN_PALETTES};
pub use rgb::{cube_corners, hex, lab_from_rgb, lab_from_xyz, rgb_from_lab, xyz_from_lab, RgbSpace, TransferFunction};
