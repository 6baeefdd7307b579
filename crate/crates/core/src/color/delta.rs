//! Color-difference formulas.
//!
//! CIEDE2000 follows the standard published definition, including the
//! chroma compensation term G, the rotation term R_T and the special cases
//! for the mean hue when one of the colors is achromatic.

use serde::{Deserialize, Serialize};

use super::lab::{hue_degrees, Lab};
use crate::error::{Error, Result};
use crate::scalar::{cmp_scalar, Scalar};

/// CIE76: Euclidean distance in Lab.
pub fn delta_e76<T: Scalar>(c1: &Lab<T>, c2: &Lab<T>) -> T {
    (*c1 - *c2).norm()
}

/// Parametric weights of CIEDE2000. Every term is divided by its weight, so
/// a larger `kl` makes lightness differences count less.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaE2000Weights<T> {
    pub kl: T,
    pub kc: T,
    pub kh: T,
}

impl<T: Scalar> DeltaE2000Weights<T> {
    pub fn new(kl: T, kc: T, kh: T) -> Result<Self> {
        let positive = |k: T| k > T::zero() && k.is_finite();
        if positive(kl) && positive(kc) && positive(kh) {
            Ok(Self { kl, kc, kh })
        } else {
            Err(Error::InvalidWeights)
        }
    }

    /// kL = kC = kH = 1, the reference conditions.
    pub fn unit() -> Self {
        Self { kl: T::one(), kc: T::one(), kh: T::one() }
    }

    /// kL = 2, kC = kH = 1: chroma and hue differences weigh twice as much
    /// as lightness differences. Used for all map-palette work.
    pub fn map_palette() -> Self {
        Self { kl: T::lit(2.0), kc: T::one(), kh: T::one() }
    }
}

impl<T: Scalar> Default for DeltaE2000Weights<T> {
    fn default() -> Self {
        Self::map_palette()
    }
}

/// CIEDE2000 color difference.
pub fn delta_e2000<T: Scalar>(c1: &Lab<T>, c2: &Lab<T>, w: &DeltaE2000Weights<T>) -> T {
    // Evaluate in a canonical argument order so symmetry is bit-exact.
    let key = |c: &Lab<T>| (c.l, c.a, c.b);
    let (c1, c2) = if key(c1).partial_cmp(&key(c2)) == Some(std::cmp::Ordering::Greater) {
        (c2, c1)
    } else {
        (c1, c2)
    };
    let lit = T::lit;
    let zero = T::zero();
    let one = T::one();
    let half = lit(0.5);
    let pow7_25 = lit(6_103_515_625.0); // 25^7

    let chroma1 = c1.chroma();
    let chroma2 = c2.chroma();
    let mean_c7 = ((chroma1 + chroma2) * half).powi(7);
    let g = half * (one - (mean_c7 / (mean_c7 + pow7_25)).sqrt());

    let a1p = (one + g) * c1.a;
    let a2p = (one + g) * c2.a;
    let c1p = a1p.hypot(c1.b);
    let c2p = a2p.hypot(c2.b);
    let h1p = hue_degrees(a1p, c1.b);
    let h2p = hue_degrees(a2p, c2.b);

    let d_lp = c2.l - c1.l;
    let d_cp = c2p - c1p;

    let c_product = c1p * c2p;
    let d_hp = if c_product == zero {
        zero
    } else {
        let d = h2p - h1p;
        if d > lit(180.0) {
            d - lit(360.0)
        } else if d < lit(-180.0) {
            d + lit(360.0)
        } else {
            d
        }
    };
    let d_big_hp = lit(2.0) * c_product.sqrt() * (d_hp.to_radians() * half).sin();

    let mean_lp = (c1.l + c2.l) * half;
    let mean_cp = (c1p + c2p) * half;
    let mean_hp = if c_product == zero {
        h1p + h2p
    } else if (h1p - h2p).abs() <= lit(180.0) {
        (h1p + h2p) * half
    } else if h1p + h2p < lit(360.0) {
        (h1p + h2p + lit(360.0)) * half
    } else {
        (h1p + h2p - lit(360.0)) * half
    };

    let cos_deg = |deg: T| deg.to_radians().cos();
    let t = one - lit(0.17) * cos_deg(mean_hp - lit(30.0))
        + lit(0.24) * cos_deg(lit(2.0) * mean_hp)
        + lit(0.32) * cos_deg(lit(3.0) * mean_hp + lit(6.0))
        - lit(0.20) * cos_deg(lit(4.0) * mean_hp - lit(63.0));

    let d_theta = lit(30.0) * (-((mean_hp - lit(275.0)) / lit(25.0)).powi(2)).exp();
    let mean_cp7 = mean_cp.powi(7);
    let r_c = lit(2.0) * (mean_cp7 / (mean_cp7 + pow7_25)).sqrt();
    let l50 = (mean_lp - lit(50.0)).powi(2);
    let s_l = one + lit(0.015) * l50 / (lit(20.0) + l50).sqrt();
    let s_c = one + lit(0.045) * mean_cp;
    let s_h = one + lit(0.015) * mean_cp * t;
    let r_t = -(lit(2.0) * d_theta).to_radians().sin() * r_c;

    let tl = d_lp / (w.kl * s_l);
    let tc = d_cp / (w.kc * s_c);
    let th = d_big_hp / (w.kh * s_h);
    (tl * tl + tc * tc + th * th + r_t * tc * th).max(zero).sqrt()
}

/// Which color difference a solver or query measures with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Metric<T> {
    Cie76,
    Ciede2000(DeltaE2000Weights<T>),
}

impl<T: Scalar> Metric<T> {
    pub fn de2000_default() -> Self {
        Metric::Ciede2000(DeltaE2000Weights::default())
    }

    pub fn distance(&self, c1: &Lab<T>, c2: &Lab<T>) -> T {
        match self {
            Metric::Cie76 => delta_e76(c1, c2),
            Metric::Ciede2000(w) => delta_e2000(c1, c2, w),
        }
    }
}

/// Smallest distance from `c` to any of `sites`, with the index attaining it.
/// Ties go to the lowest index.
pub fn min_distance<T: Scalar>(c: &Lab<T>, sites: &[Lab<T>], metric: &Metric<T>) -> Result<(T, usize)> {
    let mut best: Option<(T, usize)> = None;
    for (i, s) in sites.iter().enumerate() {
        let d = metric.distance(c, s);
        match best {
            Some((bd, _)) if cmp_scalar(d, bd) != std::cmp::Ordering::Less => {}
            _ => best = Some((d, i)),
        }
    }
    best.ok_or(Error::EmptyPalette)
}
