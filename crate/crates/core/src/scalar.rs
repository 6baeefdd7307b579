//! Floating-point abstraction shared by every module.
//!
//! All geometry and color math is written against [`Scalar`], implemented for
//! `f32` and `f64`. Tolerances are per-type: the f64 values are the ones the
//! solvers are specified against, the f32 values are scaled to what single
//! precision can actually resolve at Lab magnitudes (~100).

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use rand::distributions::uniform::SampleUniform;

pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + SampleUniform
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// |det| below this (after row normalization) marks a 3x3 system singular.
    const SINGULAR_DET: f64;
    /// Slack allowed when testing gamut containment, in Lab units.
    const CONTAINMENT_EPS: f64;
    /// Candidates closer than this are the same vertex.
    const DEDUP_EPS: f64;
    /// Objective values closer than this are tied.
    const TIE_EPS: f64;
    /// Two face normals closer than this describe the same plane.
    const COPLANAR_EPS: f64;

    /// Lossless-enough conversion from an f64 literal.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }

    fn singular_det() -> Self {
        Self::lit(Self::SINGULAR_DET)
    }

    fn containment_eps() -> Self {
        Self::lit(Self::CONTAINMENT_EPS)
    }

    fn dedup_eps() -> Self {
        Self::lit(Self::DEDUP_EPS)
    }

    fn tie_eps() -> Self {
        Self::lit(Self::TIE_EPS)
    }

    fn coplanar_eps() -> Self {
        Self::lit(Self::COPLANAR_EPS)
    }
}

impl Scalar for f64 {
    const SINGULAR_DET: f64 = 1e-9;
    const CONTAINMENT_EPS: f64 = 1e-6;
    const DEDUP_EPS: f64 = 1e-6;
    const TIE_EPS: f64 = 1e-9;
    const COPLANAR_EPS: f64 = 1e-7;
}

impl Scalar for f32 {
    const SINGULAR_DET: f64 = 1e-5;
    const CONTAINMENT_EPS: f64 = 1e-3;
    const DEDUP_EPS: f64 = 1e-3;
    const TIE_EPS: f64 = 1e-4;
    const COPLANAR_EPS: f64 = 1e-4;
}

/// Total order on scalars for max/min selection; NaN sorts low.
pub(crate) fn cmp_scalar<T: Scalar>(a: T, b: T) -> std::cmp::Ordering {
    a.partial_cmp(&b).unwrap_or_else(|| {
        if a.is_nan() && b.is_nan() {
            std::cmp::Ordering::Equal
        } else if a.is_nan() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    })
}
