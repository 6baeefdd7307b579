use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A point in CIELAB. Doubles as the 3-vector type for all geometry.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Lab<T> {
    #[serde(rename = "L")]
    pub l: T,
    pub a: T,
    pub b: T,
}

impl<T: Scalar> Lab<T> {
    pub const fn new(l: T, a: T, b: T) -> Self {
        Self { l, a, b }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn from_f64(l: f64, a: f64, b: f64) -> Self {
        Self::new(T::lit(l), T::lit(a), T::lit(b))
    }

    pub fn to_array(self) -> [T; 3] {
        [self.l, self.a, self.b]
    }

    pub fn from_array([l, a, b]: [T; 3]) -> Self {
        Self::new(l, a, b)
    }

    /// sqrt(a² + b²)
    pub fn chroma(&self) -> T {
        self.a.hypot(self.b)
    }

    /// Hue angle in degrees, [0, 360), with h = 0 for achromatic colors.
    pub fn hue_degrees(&self) -> T {
        hue_degrees(self.a, self.b)
    }

    pub fn dot(&self, o: &Self) -> T {
        self.l * o.l + self.a * o.a + self.b * o.b
    }

    pub fn norm_squared(&self) -> T {
        self.dot(self)
    }

    pub fn norm(&self) -> T {
        self.norm_squared().sqrt()
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(
            self.a * o.b - self.b * o.a,
            self.b * o.l - self.l * o.b,
            self.l * o.a - self.a * o.l,
        )
    }

    pub fn midpoint(&self, o: &Self) -> Self {
        (*self + *o) * T::lit(0.5)
    }

    pub fn is_finite(&self) -> bool {
        self.l.is_finite() && self.a.is_finite() && self.b.is_finite()
    }

    /// Lexicographic (L, a, b) comparison after rounding to the tie tolerance.
    pub fn lex_cmp(&self, o: &Self) -> std::cmp::Ordering {
        let q = |v: T| (v / T::tie_eps()).round();
        let (x, y) = (self.to_array(), o.to_array());
        for i in 0..3 {
            let c = crate::scalar::cmp_scalar(q(x[i]), q(y[i]));
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }

    pub fn cast<U: Scalar>(self) -> Lab<U> {
        Lab::new(
            U::lit(self.l.as_f64()),
            U::lit(self.a.as_f64()),
            U::lit(self.b.as_f64()),
        )
    }
}

pub(crate) fn hue_degrees<T: Scalar>(a: T, b: T) -> T {
    if a == T::zero() && b == T::zero() {
        return T::zero();
    }
    let h = b.atan2(a).to_degrees();
    if h < T::zero() {
        h + T::lit(360.0)
    } else {
        h
    }
}

impl<T: Scalar> Add for Lab<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.l + o.l, self.a + o.a, self.b + o.b)
    }
}

impl<T: Scalar> Sub for Lab<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.l - o.l, self.a - o.a, self.b - o.b)
    }
}

impl<T: Scalar> Mul<T> for Lab<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Self::new(self.l * s, self.a * s, self.b * s)
    }
}

impl<T: Scalar> Neg for Lab<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.l, -self.a, -self.b)
    }
}

impl<T: Scalar> AddAssign for Lab<T> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Scalar> SubAssign for Lab<T> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<T: Scalar> std::fmt::Display for Lab<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p = f.precision().unwrap_or(1);
        write!(f, "({:.p$}, {:.p$}, {:.p$})", self.l, self.a, self.b, p = p)
    }
}
