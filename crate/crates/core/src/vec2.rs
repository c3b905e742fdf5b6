//! Plane points/vectors and rigid motions.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{Serialize, SerializeTuple, Serializer};
use serde::Deserialize;

use crate::scalar::Real;

/// A point or vector in the plane. Serialized as the two-element array
/// `[x, y]` used throughout the JSON interchange format.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Vec2<T> {
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        Vec2 { x, y }
    }

    #[inline]
    pub fn zero() -> Self {
        Vec2 {
            x: T::zero(),
            y: T::zero(),
        }
    }

    #[inline]
    pub fn dot(self, rhs: Self) -> T {
        self.x * rhs.x + self.y * rhs.y
    }

    /// z-component of the 3D cross product; twice the signed area of the
    /// triangle (0, self, rhs).
    #[inline]
    pub fn cross(self, rhs: Self) -> T {
        self.x * rhs.y - self.y * rhs.x
    }

    #[inline]
    pub fn norm2(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> T {
        self.norm2().sqrt()
    }

    #[inline]
    pub fn dist(self, rhs: Self) -> T {
        (rhs - self).norm()
    }

    /// Counterclockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Self {
        Vec2 {
            x: -self.y,
            y: self.x,
        }
    }

    #[inline]
    pub fn normalized(self) -> Self {
        let n = self.norm();
        if n == T::zero() {
            self
        } else {
            self / n
        }
    }

    #[inline]
    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn from_angle(a: T) -> Self {
        Vec2 {
            x: a.cos(),
            y: a.sin(),
        }
    }

    #[inline]
    pub fn lerp(self, rhs: Self, t: T) -> Self {
        self + (rhs - self) * t
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<T: Real> Add for Vec2<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Real> Sub for Vec2<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> Mul<T> for Vec2<T> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: T) -> Self {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl<T: Real> Div<T> for Vec2<T> {
    type Output = Self;
    #[inline]
    fn div(self, rhs: T) -> Self {
        Vec2::new(self.x / rhs, self.y / rhs)
    }
}

impl<T: Real> Neg for Vec2<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Vec2::new(-self.x, -self.y)
    }
}

impl<T: Real> AddAssign for Vec2<T> {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Real> SubAssign for Vec2<T> {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<T: Serialize> Serialize for Vec2<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(2)?;
        tup.serialize_element(&self.x)?;
        tup.serialize_element(&self.y)?;
        tup.end()
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Vec2<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V<T>(std::marker::PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = Vec2<T>;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a two-element array [x, y]")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec2<T>, A::Error> {
                let x = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let y = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<serde::de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Ok(Vec2 { x, y })
            }
        }
        deserializer.deserialize_tuple(2, V(std::marker::PhantomData))
    }
}

/// A rigid motion of the plane: optional reflection across the x-axis,
/// followed by a rotation, followed by a translation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Motion<T> {
    pub rotation: T,
    pub translation: Vec2<T>,
    pub reflect: bool,
}

impl<T: Real> Motion<T> {
    pub fn identity() -> Self {
        Motion {
            rotation: T::zero(),
            translation: Vec2::zero(),
            reflect: false,
        }
    }

    pub fn rotation_about(angle: T, center: Vec2<T>) -> Self {
        // p -> center + R(angle) (p - center)
        let r = Motion {
            rotation: angle,
            translation: Vec2::zero(),
            reflect: false,
        };
        Motion {
            rotation: angle,
            translation: center - r.apply(center),
            reflect: false,
        }
    }

    pub fn translation(v: Vec2<T>) -> Self {
        Motion {
            rotation: T::zero(),
            translation: v,
            reflect: false,
        }
    }

    #[inline]
    pub fn apply(&self, p: Vec2<T>) -> Vec2<T> {
        let p = if self.reflect {
            Vec2::new(p.x, -p.y)
        } else {
            p
        };
        let (s, c) = self.rotation.sin_cos();
        Vec2::new(c * p.x - s * p.y, s * p.x + c * p.y) + self.translation
    }

    /// Apply only the linear part (useful for direction vectors).
    #[inline]
    pub fn apply_vector(&self, v: Vec2<T>) -> Vec2<T> {
        let v = if self.reflect {
            Vec2::new(v.x, -v.y)
        } else {
            v
        };
        let (s, c) = self.rotation.sin_cos();
        Vec2::new(c * v.x - s * v.y, s * v.x + c * v.y)
    }

    /// Composition: `self` after `rhs`.
    pub fn compose(&self, rhs: &Motion<T>) -> Motion<T> {
        // No reflection composition needed beyond what the callers use: the
        // library only ever composes reflection-free motions.
        debug_assert!(!rhs.reflect || !self.reflect);
        let rotation = if rhs.reflect {
            self.rotation - rhs.rotation
        } else {
            self.rotation + rhs.rotation
        };
        Motion {
            rotation,
            translation: self.apply(rhs.translation)
                - self.apply(Vec2::zero())
                + self.apply(Vec2::zero()),
            reflect: self.reflect != rhs.reflect,
        }
        // The translation expression above is just self.apply(rhs.translation);
        // kept explicit to make the derivation obvious.
    }
}

/// Wrap an angle into (-pi, pi].
#[inline]
pub fn wrap_angle<T: Real>(a: T) -> T {
    let two_pi = T::PI() + T::PI();
    let mut a = a % two_pi;
    if a <= -T::PI() {
        a = a + two_pi;
    } else if a > T::PI() {
        a = a - two_pi;
    }
    a
}

/// Squared distance from `p` to the segment `[a, b]`.
pub fn dist_point_segment<T: Real>(p: Vec2<T>, a: Vec2<T>, b: Vec2<T>) -> T {
    let ab = b - a;
    let len2 = ab.norm2();
    if len2 == T::zero() {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len2).max(T::zero()).min(T::one());
    p.dist(a + ab * t)
}

/// Proper/improper intersection classification for two closed segments.
///
/// Returns `true` when the segments cross at a single interior point of both
/// (a "proper" crossing). Touching at an endpoint or collinear overlap does
/// not count.
pub fn segments_cross_properly<T: Real>(
    a: Vec2<T>,
    b: Vec2<T>,
    c: Vec2<T>,
    d: Vec2<T>,
) -> bool {
    let d1 = (b - a).cross(c - a);
    let d2 = (b - a).cross(d - a);
    let d3 = (d - c).cross(a - c);
    let d4 = (d - c).cross(b - c);
    ((d1 > T::zero() && d2 < T::zero()) || (d1 < T::zero() && d2 > T::zero()))
        && ((d3 > T::zero() && d4 < T::zero()) || (d3 < T::zero() && d4 > T::zero()))
}

/// Intersection parameter(s) of segment `[a,b]` with segment `[c,d]`,
/// expressed along `[a,b]` (0 at `a`, 1 at `b`). Collinear overlaps return
/// the overlap endpoints.
pub fn segment_intersection_params<T: Real>(
    a: Vec2<T>,
    b: Vec2<T>,
    c: Vec2<T>,
    d: Vec2<T>,
    eps: T,
) -> Vec<T> {
    let r = b - a;
    let s = d - c;
    let denom = r.cross(s);
    let qp = c - a;
    if denom.abs() > eps {
        let t = qp.cross(s) / denom;
        let u = qp.cross(r) / denom;
        if t >= -eps && t <= T::one() + eps && u >= -eps && u <= T::one() + eps {
            return vec![t.max(T::zero()).min(T::one())];
        }
        return Vec::new();
    }
    // Parallel. Overlap only if collinear.
    if qp.cross(r).abs() > eps * r.norm().max(T::one()) {
        return Vec::new();
    }
    let len2 = r.norm2();
    if len2 == T::zero() {
        return Vec::new();
    }
    let t0 = (c - a).dot(r) / len2;
    let t1 = (d - a).dot(r) / len2;
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let lo = lo.max(T::zero());
    let hi = hi.min(T::one());
    if lo > hi {
        Vec::new()
    } else {
        vec![lo, hi]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_and_perp() {
        let a = Vec2::new(1.0, 0.0);
        let b = Vec2::new(0.0, 1.0);
        assert_eq!(a.cross(b), 1.0);
        assert_eq!(a.perp(), b);
    }

    #[test]
    fn motion_rotation_about_center() {
        let m = Motion::rotation_about(std::f64::consts::FRAC_PI_2, Vec2::new(1.0, 1.0));
        let p = m.apply(Vec2::new(2.0, 1.0));
        assert!((p.x - 1.0).abs() < 1e-12 && (p.y - 2.0).abs() < 1e-12);
    }

    #[test]
    fn motion_reflection() {
        let m = Motion {
            rotation: 0.0,
            translation: Vec2::new(0.0, 0.0),
            reflect: true,
        };
        assert_eq!(m.apply(Vec2::new(1.0, 2.0)), Vec2::new(1.0, -2.0));
    }

    #[test]
    fn proper_crossing() {
        let o = Vec2::new(0.0, 0.0);
        assert!(segments_cross_properly(
            o,
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(1.0, 0.0)
        ));
        // Touching at an endpoint is not a proper crossing.
        assert!(!segments_cross_properly(
            o,
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(2.0, 0.0)
        ));
    }

    #[test]
    fn vec2_serde_roundtrip() {
        let v = Vec2::new(1.5f64, -2.25);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[1.5,-2.25]");
        let back: Vec2<f64> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
