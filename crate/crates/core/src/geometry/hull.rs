//! Convex hull of a small point set by exhaustive face search.
//!
//! Gamut corner sets are small (8 for an RGB cube, rarely more than a few
//! dozen), so every point triple is tested as a supporting plane: O(n⁴) but
//! exact and free of the orientation bookkeeping incremental hulls need.

use crate::color::Lab;
use crate::error::{Error, Result};
use crate::scalar::{cmp_scalar, Scalar};

use super::plane::{Plane, PlaneKind};

pub(crate) struct Hull<T> {
    /// Outward faces, coplanar triangles merged.
    pub faces: Vec<Plane<T>>,
    /// Extreme points, sorted lexicographically.
    pub vertices: Vec<Lab<T>>,
}

pub(crate) fn convex_hull<T: Scalar>(points: &[Lab<T>]) -> Result<Hull<T>> {
    if points.len() < 4 {
        return Err(Error::GamutConstruction(format!("need at least 4 corners, got {}", points.len())));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::GamutConstruction("non-finite corner".into()));
    }
    let mut pts: Vec<Lab<T>> = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup_by(|a, b| (*a - *b).norm() <= T::dedup_eps());

    let scale = pts.iter().map(|p| (*p - pts[0]).norm()).fold(T::zero(), T::max);
    if !(scale > T::zero()) {
        return Err(Error::GamutConstruction("all corners coincide".into()));
    }
    let eps = T::containment_eps() * scale.max(T::one()) * T::lit(1e-2);
    let area_floor = scale * scale * T::lit(1e-12);

    let mut faces: Vec<Plane<T>> = Vec::new();
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let raw = (pts[j] - pts[i]).cross(&(pts[k] - pts[i]));
                if raw.norm() <= area_floor {
                    continue;
                }
                let Some(plane) = Plane::new(raw, raw.dot(&pts[i]), PlaneKind::GamutFace(0)) else {
                    continue;
                };
                let (mut below, mut above) = (true, true);
                for p in &pts {
                    let d = plane.signed_distance(p);
                    below &= d <= eps;
                    above &= d >= -eps;
                }
                let outward = match (below, above) {
                    (true, true) => {
                        return Err(Error::GamutConstruction("corners are coplanar".into()));
                    }
                    (true, false) => plane,
                    (false, true) => plane.flipped(),
                    (false, false) => continue,
                };
                let dup = faces.iter().any(|f| {
                    (f.normal - outward.normal).norm() <= T::coplanar_eps() && (f.offset - outward.offset).abs() <= eps
                });
                if !dup {
                    faces.push(outward);
                }
            }
        }
    }
    if faces.len() < 4 {
        return Err(Error::GamutConstruction("corners are coplanar".into()));
    }
    faces.sort_by(|a, b| {
        a.normal
            .lex_cmp(&b.normal)
            .then_with(|| cmp_scalar(a.offset, b.offset))
    });
    for (idx, f) in faces.iter_mut().enumerate() {
        f.kind = PlaneKind::GamutFace(idx);
    }

    let vertices = pts
        .iter()
        .copied()
        .filter(|p| {
            let incident: Vec<&Plane<T>> = faces.iter().filter(|f| f.signed_distance(p).abs() <= eps).collect();
            spans_space(&incident)
        })
        .collect();
    Ok(Hull { faces, vertices })
}

fn spans_space<T: Scalar>(planes: &[&Plane<T>]) -> bool {
    let tol = T::lit(1e-6);
    for i in 0..planes.len() {
        for j in i + 1..planes.len() {
            let c = planes[i].normal.cross(&planes[j].normal);
            if c.norm() <= tol {
                continue;
            }
            if planes[j + 1..].iter().any(|k| c.dot(&k.normal).abs() > tol) {
                return true;
            }
        }
    }
    false
}

/// Vertices of `face` that lie on it, in counter-clockwise order seen from
/// outside.
pub(crate) fn face_polygon<T: Scalar>(face: &Plane<T>, vertices: &[Lab<T>], eps: T) -> Vec<Lab<T>> {
    let mut on: Vec<Lab<T>> = vertices.iter().copied().filter(|v| face.signed_distance(v).abs() <= eps).collect();
    if on.len() < 3 {
        return on;
    }
    let centroid = on.iter().fold(Lab::zero(), |acc, v| acc + *v) * (T::one() / T::lit(on.len() as f64));
    let u = {
        let d = on[0] - centroid;
        d * (T::one() / d.norm())
    };
    let w = face.normal.cross(&u);
    let angle = |v: &Lab<T>| {
        let d = *v - centroid;
        d.dot(&w).atan2(d.dot(&u))
    };
    on.sort_by(|a, b| cmp_scalar(angle(a), angle(b)));
    on
}
