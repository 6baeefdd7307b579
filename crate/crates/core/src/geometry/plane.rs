use serde::{Deserialize, Serialize};

use crate::color::Lab;
use crate::error::{Error, Result};
use crate::linalg::Mat3;
use crate::scalar::Scalar;

/// Where a plane came from: the perpendicular bisector of sites `i < j`, or
/// face `f` of the gamut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PlaneKind {
    Bisector(usize, usize),
    GamutFace(usize),
}

/// `{x : normal · x = offset}` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Plane<T> {
    pub normal: Lab<T>,
    pub offset: T,
    pub kind: PlaneKind,
}

impl<T: Scalar> Plane<T> {
    /// Normalizes `normal`; `None` for a zero normal.
    pub fn new(normal: Lab<T>, offset: T, kind: PlaneKind) -> Option<Self> {
        let n = normal.norm();
        if !(n > T::zero()) || !n.is_finite() {
            return None;
        }
        Some(Self { normal: normal * (T::one() / n), offset: offset / n, kind })
    }

    /// Positive on the side the normal points to.
    pub fn signed_distance(&self, x: &Lab<T>) -> T {
        self.normal.dot(x) - self.offset
    }

    pub fn project(&self, x: &Lab<T>) -> Lab<T> {
        *x - self.normal * self.signed_distance(x)
    }

    pub fn flipped(&self) -> Self {
        Self { normal: -self.normal, offset: -self.offset, kind: self.kind }
    }

    pub fn translated(&self, v: &Lab<T>) -> Self {
        Self { offset: self.offset + self.normal.dot(v), ..*self }
    }

    /// Same point set (either orientation) within `eps`.
    pub fn same_set(&self, o: &Self, eps: T) -> bool {
        let close = |a: &Self, b: &Self| (a.normal - b.normal).norm() <= eps && (a.offset - b.offset).abs() <= eps;
        close(self, o) || close(self, &o.flipped())
    }
}

/// Perpendicular bisector of `p` and `q`, normal pointing from `p` towards `q`.
pub fn bisector_plane<T: Scalar>(p: &Lab<T>, q: &Lab<T>) -> Result<Plane<T>> {
    bisector_of_sites(p, q, 0, 1)
}

pub(crate) fn bisector_of_sites<T: Scalar>(p: &Lab<T>, q: &Lab<T>, i: usize, j: usize) -> Result<Plane<T>> {
    if p == q {
        return Err(Error::DegenerateSites);
    }
    let d = *q - *p;
    Plane::new(d, d.dot(&p.midpoint(q)), PlaneKind::Bisector(i, j)).ok_or(Error::DegenerateSites)
}

/// Unique common point of three planes, or `None` when the system is singular.
pub fn intersect_three_planes<T: Scalar>(a: &Plane<T>, b: &Plane<T>, c: &Plane<T>) -> Option<Lab<T>> {
    let m = Mat3::from_rows(a.normal, b.normal, c.normal);
    let x = m.solve(&Lab::new(a.offset, b.offset, c.offset), T::singular_det())?;
    x.is_finite().then_some(x)
}
