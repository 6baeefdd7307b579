//! 3x3 dense helpers; rows are [`Lab`] vectors.

use crate::color::Lab;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3<T> {
    pub rows: [Lab<T>; 3],
}

impl<T: Scalar> Mat3<T> {
    pub fn from_rows(r0: Lab<T>, r1: Lab<T>, r2: Lab<T>) -> Self {
        Self { rows: [r0, r1, r2] }
    }

    pub fn from_cols(c0: Lab<T>, c1: Lab<T>, c2: Lab<T>) -> Self {
        Self::from_rows(
            Lab::new(c0.l, c1.l, c2.l),
            Lab::new(c0.a, c1.a, c2.a),
            Lab::new(c0.b, c1.b, c2.b),
        )
    }

    pub fn det(&self) -> T {
        let [r0, r1, r2] = &self.rows;
        r0.dot(&r1.cross(r2))
    }

    pub fn mul_vec(&self, v: &Lab<T>) -> Lab<T> {
        Lab::new(self.rows[0].dot(v), self.rows[1].dot(v), self.rows[2].dot(v))
    }

    pub fn scale_cols(&self, s: &Lab<T>) -> Self {
        let f = |r: &Lab<T>| Lab::new(r.l * s.l, r.a * s.a, r.b * s.b);
        Self::from_rows(f(&self.rows[0]), f(&self.rows[1]), f(&self.rows[2]))
    }

    /// Inverse via the adjugate; `None` if |det| is below `tol`.
    pub fn inverse(&self, tol: T) -> Option<Self> {
        let [r0, r1, r2] = &self.rows;
        let det = self.det();
        if !(det.abs() >= tol) {
            return None;
        }
        let inv = T::one() / det;
        // columns of the inverse are the cross products of row pairs
        Some(Self::from_cols(r1.cross(r2) * inv, r2.cross(r0) * inv, r0.cross(r1) * inv))
    }

    /// Solves `self * x = rhs`; `None` when singular.
    pub fn solve(&self, rhs: &Lab<T>, tol: T) -> Option<Lab<T>> {
        self.inverse(tol).map(|m| m.mul_vec(rhs))
    }
}
