//! RGB <-> CIELAB through XYZ, relative to the RGB space's own white point
//! (no chromatic adaptation).

use serde::{Deserialize, Serialize};

use super::lab::Lab;
use crate::error::{Error, Result};
use crate::linalg::Mat3;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum TransferFunction {
    /// Pure power law: linear = encoded^gamma.
    Gamma(f64),
    /// IEC 61966-2-1 piecewise curve.
    Srgb,
}

impl TransferFunction {
    fn decode<T: Scalar>(&self, v: T) -> T {
        match *self {
            TransferFunction::Gamma(g) => v.powf(T::lit(g)),
            TransferFunction::Srgb => {
                if v <= T::lit(0.04045) {
                    v / T::lit(12.92)
                } else {
                    ((v + T::lit(0.055)) / T::lit(1.055)).powf(T::lit(2.4))
                }
            }
        }
    }

    fn encode<T: Scalar>(&self, v: T) -> T {
        match *self {
            TransferFunction::Gamma(g) => v.powf(T::lit(1.0 / g)),
            TransferFunction::Srgb => {
                if v <= T::lit(0.003_130_8) {
                    v * T::lit(12.92)
                } else {
                    T::lit(1.055) * v.powf(T::lit(1.0 / 2.4)) - T::lit(0.055)
                }
            }
        }
    }
}

/// An additive RGB space: chromaticities of the primaries and the white point
/// (CIE 1931 2° xy) plus the transfer curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RgbSpace {
    pub name: String,
    pub red: [f64; 2],
    pub green: [f64; 2],
    pub blue: [f64; 2],
    pub white: [f64; 2],
    pub transfer: TransferFunction,
}

const D65: [f64; 2] = [0.3127, 0.3290];

impl RgbSpace {
    /// Adobe RGB (1998): gamma 563/256, D65.
    pub fn adobe_1998() -> Self {
        Self {
            name: "adobe-rgb-1998".into(),
            red: [0.64, 0.33],
            green: [0.21, 0.71],
            blue: [0.15, 0.06],
            white: D65,
            transfer: TransferFunction::Gamma(563.0 / 256.0),
        }
    }

    pub fn srgb() -> Self {
        Self {
            name: "srgb".into(),
            red: [0.64, 0.33],
            green: [0.30, 0.60],
            blue: [0.15, 0.06],
            white: D65,
            transfer: TransferFunction::Srgb,
        }
    }

    fn xyz_of<T: Scalar>(xy: [f64; 2]) -> Lab<T> {
        let [x, y] = xy;
        Lab::from_f64(x / y, 1.0, (1.0 - x - y) / y)
    }

    pub fn white_xyz<T: Scalar>(&self) -> Lab<T> {
        Self::xyz_of(self.white)
    }

    /// Linear RGB -> XYZ matrix, normalized so RGB white maps to Y = 1.
    pub fn rgb_to_xyz<T: Scalar>(&self) -> Mat3<T> {
        let p = Mat3::from_cols(Self::xyz_of(self.red), Self::xyz_of(self.green), Self::xyz_of(self.blue));
        let s = p
            .solve(&self.white_xyz(), T::lit(1e-12))
            .expect("primaries are linearly independent");
        p.scale_cols(&s)
    }
}

impl Default for RgbSpace {
    fn default() -> Self {
        Self::adobe_1998()
    }
}

const LAB_DELTA: f64 = 6.0 / 29.0;

fn lab_f<T: Scalar>(t: T) -> T {
    let d = T::lit(LAB_DELTA);
    if t > d * d * d {
        t.cbrt()
    } else {
        t / (T::lit(3.0) * d * d) + T::lit(4.0 / 29.0)
    }
}

fn lab_f_inv<T: Scalar>(t: T) -> T {
    let d = T::lit(LAB_DELTA);
    if t > d {
        t * t * t
    } else {
        T::lit(3.0) * d * d * (t - T::lit(4.0 / 29.0))
    }
}

pub fn lab_from_xyz<T: Scalar>(xyz: &Lab<T>, white: &Lab<T>) -> Lab<T> {
    let fx = lab_f(xyz.l / white.l);
    let fy = lab_f(xyz.a / white.a);
    let fz = lab_f(xyz.b / white.b);
    Lab::new(T::lit(116.0) * fy - T::lit(16.0), T::lit(500.0) * (fx - fy), T::lit(200.0) * (fy - fz))
}

pub fn xyz_from_lab<T: Scalar>(c: &Lab<T>, white: &Lab<T>) -> Lab<T> {
    let fy = (c.l + T::lit(16.0)) / T::lit(116.0);
    let fx = fy + c.a / T::lit(500.0);
    let fz = fy - c.b / T::lit(200.0);
    Lab::new(white.l * lab_f_inv(fx), white.a * lab_f_inv(fy), white.b * lab_f_inv(fz))
}

/// Encoded RGB in [0,1]³ to CIELAB.
pub fn lab_from_rgb<T: Scalar>(rgb: [T; 3], space: &RgbSpace) -> Result<Lab<T>> {
    if let Some(bad) = rgb.iter().find(|v| !(**v >= T::zero() && **v <= T::one())) {
        return Err(Error::RgbOutOfRange(bad.as_f64()));
    }
    let linear = Lab::from_array(rgb.map(|v| space.transfer.decode(v)));
    let xyz = space.rgb_to_xyz().mul_vec(&linear);
    Ok(lab_from_xyz(&xyz, &space.white_xyz()))
}

/// CIELAB to encoded RGB; components outside [0,1] are clamped and flagged.
pub fn rgb_from_lab<T: Scalar>(c: &Lab<T>, space: &RgbSpace) -> ([T; 3], bool) {
    let xyz = xyz_from_lab(c, &space.white_xyz());
    let to_rgb = space
        .rgb_to_xyz::<T>()
        .inverse(T::lit(1e-12))
        .expect("invertible primaries");
    let linear = to_rgb.mul_vec(&xyz).to_array();
    // tolerate round-off at the cube faces
    let slack = T::lit(1e-9);
    let mut clipped = false;
    let encoded = linear.map(|v| {
        if v < -slack || v > T::one() + slack || v.is_nan() {
            clipped = true;
        }
        let v = if v.is_nan() { T::zero() } else { v.max(T::zero()).min(T::one()) };
        space.transfer.encode(v)
    });
    (encoded, clipped)
}

/// `#rrggbb` of encoded RGB components (clamped).
pub fn hex<T: Scalar>(rgb: [T; 3]) -> String {
    let byte = |v: T| (v.as_f64().clamp(0.0, 1.0) * 255.0).round() as u8;
    format!("#{:02x}{:02x}{:02x}", byte(rgb[0]), byte(rgb[1]), byte(rgb[2]))
}

/// The eight RGB cube corners in the order black, blue, green, cyan, red,
/// magenta, yellow, white (binary counting over r, g, b).
pub fn cube_corners<T: Scalar>(space: &RgbSpace) -> Vec<(&'static str, Lab<T>)> {
    const NAMES: [&str; 8] = ["black", "blue", "green", "cyan", "red", "magenta", "yellow", "white"];
    (0..8u8)
        .map(|i| {
            let bit = |k: u8| if i & (1 << k) != 0 { T::one() } else { T::zero() };
            let lab = lab_from_rgb([bit(2), bit(1), bit(0)], space).expect("corner in range");
            (NAMES[i as usize], lab)
        })
        .collect()
}
