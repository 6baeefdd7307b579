use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::color::{cube_corners, parse_entries, Lab, RgbSpace};
use crate::error::Result;
use crate::linalg::Mat3;
use crate::scalar::{cmp_scalar, Scalar};

use super::hull::{convex_hull, face_polygon};
use super::plane::Plane;

/// Convex polyhedral gamut: outward face planes plus hull vertices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gamut<T> {
    name: String,
    faces: Vec<Plane<T>>,
    vertices: Vec<Lab<T>>,
    corner_source: Vec<Lab<T>>,
}

impl<T: Scalar> Gamut<T> {
    /// Convex hull of `corners`.
    pub fn build(name: impl Into<String>, corners: &[Lab<T>]) -> Result<Self> {
        let hull = convex_hull(corners)?;
        Ok(Self { name: name.into(), faces: hull.faces, vertices: hull.vertices, corner_source: corners.to_vec() })
    }

    /// Hull of the Lab images of the eight RGB cube corners of `space`.
    pub fn from_rgb_space(space: &RgbSpace) -> Self {
        let corners: Vec<Lab<T>> = cube_corners(space).into_iter().map(|(_, c)| c).collect();
        Self::build(space.name.clone(), &corners).expect("an RGB cube image is a solid")
    }

    /// Adobe RGB (1998) cube corners.
    pub fn adobe_1998() -> Self {
        Self::from_rgb_space(&RgbSpace::adobe_1998())
    }

    /// Parses a corner file in the palette format (`name;L;a;b`).
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self> {
        let corners: Vec<Lab<T>> = parse_entries(text)?.into_iter().map(|(_, c)| c).collect();
        Self::build(name, &corners)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn faces(&self) -> &[Plane<T>] {
        &self.faces
    }

    pub fn vertices(&self) -> &[Lab<T>] {
        &self.vertices
    }

    pub fn corner_source(&self) -> &[Lab<T>] {
        &self.corner_source
    }

    pub fn contains(&self, x: &Lab<T>, eps: T) -> bool {
        self.faces.iter().all(|f| f.signed_distance(x) <= eps)
    }

    /// Smallest distance from `x` to a face plane, negative when outside,
    /// with the index of that face.
    pub fn min_slack(&self, x: &Lab<T>) -> (T, usize) {
        self.faces
            .iter()
            .enumerate()
            .map(|(i, f)| (-f.signed_distance(x), i))
            .min_by(|a, b| cmp_scalar(a.0, b.0))
            .expect("gamut has faces")
    }

    pub fn centroid(&self) -> Lab<T> {
        let sum = self.vertices.iter().fold(Lab::zero(), |acc, v| acc + *v);
        sum * (T::one() / T::lit(self.vertices.len() as f64))
    }

    /// Axis-aligned box of the vertices: (min, max).
    pub fn bounding_box(&self) -> (Lab<T>, Lab<T>) {
        let mut lo = self.vertices[0].to_array();
        let mut hi = lo;
        for v in &self.vertices {
            for (k, x) in v.to_array().into_iter().enumerate() {
                lo[k] = lo[k].min(x);
                hi[k] = hi[k].max(x);
            }
        }
        (Lab::from_array(lo), Lab::from_array(hi))
    }

    pub fn diameter(&self) -> T {
        let (lo, hi) = self.bounding_box();
        (hi - lo).norm()
    }

    /// Vertices lying on face `i`, ordered around it.
    pub fn face_polygon(&self, i: usize) -> Vec<Lab<T>> {
        face_polygon(&self.faces[i], &self.vertices, self.on_face_eps())
    }

    fn on_face_eps(&self) -> T {
        T::containment_eps() * self.diameter().max(T::one()) * T::lit(1e-2)
    }

    /// Enclosed volume (divergence theorem over the face polygons).
    pub fn volume(&self) -> T {
        let mut vol = T::zero();
        for (i, f) in self.faces.iter().enumerate() {
            let poly = self.face_polygon(i);
            if poly.len() < 3 {
                continue;
            }
            let mut twice_area = T::zero();
            for k in 1..poly.len() - 1 {
                twice_area = twice_area + f.normal.dot(&(poly[k] - poly[0]).cross(&(poly[k + 1] - poly[0])));
            }
            vol = vol + f.offset * twice_area * T::lit(0.5);
        }
        vol / T::lit(3.0)
    }

    /// Closest point of the boundary to an interior point; for exterior
    /// points this is the projection onto the gamut.
    pub fn nearest_boundary_point(&self, x: &Lab<T>) -> Lab<T> {
        if self.contains(x, T::zero()) {
            let (_, i) = self.min_slack(x);
            self.faces[i].project(x)
        } else {
            self.project(x)
        }
    }

    /// Euclidean projection onto the gamut (identity inside).
    ///
    /// Exact: the nearest point lies on the relative interior of a face,
    /// an edge or at a vertex, so every active set of one, two or three face
    /// planes is tried and the closest feasible candidate kept.
    pub fn project(&self, x: &Lab<T>) -> Lab<T> {
        if self.contains(x, T::zero()) {
            return *x;
        }
        // Round-off only: a looser test lets a face projection just outside a
        // neighbouring face beat the true edge or vertex point.
        let scale = self.vertices.iter().fold(T::one(), |m, v| m.max(v.l.abs()).max(v.a.abs()).max(v.b.abs()));
        let eps = T::epsilon() * T::lit(1e3) * scale;
        let mut best: Option<(T, Lab<T>)> = None;
        let mut consider = |y: Lab<T>| {
            if y.is_finite() && self.contains(&y, eps) {
                let d = (y - *x).norm_squared();
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, y));
                }
            }
        };
        let f = &self.faces;
        for a in f {
            consider(a.project(x));
        }
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                if let Some(y) = project_onto_line(&f[i], &f[j], x) {
                    consider(y);
                }
            }
        }
        for v in &self.vertices {
            consider(*v);
        }
        let (_, mut y) = best.expect("vertices are always feasible");
        // Pull strictly onto the closed set against round-off.
        for _ in 0..4 {
            let (slack, i) = self.min_slack(&y);
            if slack >= T::zero() {
                break;
            }
            y += self.faces[i].normal * slack;
        }
        y
    }

    /// Uniform point by rejection from the bounding box.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Lab<T> {
        let (lo, hi) = self.bounding_box();
        loop {
            let p = Lab::new(
                rng.gen_range(lo.l..=hi.l),
                rng.gen_range(lo.a..=hi.a),
                rng.gen_range(lo.b..=hi.b),
            );
            if self.contains(&p, T::zero()) {
                return p;
            }
        }
    }

    pub fn translated(&self, v: &Lab<T>) -> Result<Self> {
        let corners: Vec<Lab<T>> = self.corner_source.iter().map(|c| *c + *v).collect();
        Self::build(self.name.clone(), &corners)
    }

    pub fn cast<U: Scalar>(&self) -> Gamut<U> {
        let corners: Vec<Lab<U>> = self.corner_source.iter().map(|c| c.cast()).collect();
        Gamut::build(self.name.clone(), &corners).expect("cast of a valid gamut")
    }
}

/// Nearest point to `x` on the line where planes `a` and `b` meet.
fn project_onto_line<T: Scalar>(a: &Plane<T>, b: &Plane<T>, x: &Lab<T>) -> Option<Lab<T>> {
    let dir = a.normal.cross(&b.normal);
    if dir.norm() <= T::lit(1e-9) {
        return None;
    }
    let dir = dir * (T::one() / dir.norm());
    let m = Mat3::from_rows(a.normal, b.normal, dir);
    m.solve(&Lab::new(a.offset, b.offset, dir.dot(x)), T::singular_det())
}

impl<T: Scalar> Default for Gamut<T> {
    fn default() -> Self {
        Self::adobe_1998()
    }
}
