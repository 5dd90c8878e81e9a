//! The group `Aff₊(ℝ)` of maps `a ↦ y·a + x` with `y > 0`.
//!
//! Points are stored as `(x, y)` in the upper half-plane. The product is
//! composition, `(x₂, y₂)·(x₁, y₁) = (x₂ + y₂x₁, y₂y₁)`, with identity
//! `(0, 1)`. Tangent vectors are written in the left-invariant frame
//! `X₁ = y∂/∂x`, `X₂ = y∂/∂y`, which satisfies `[X₂, X₁] = X₁`.

use std::fmt;

use crate::error::{Error, Result};

/// Below this value of `|u₂t|` the one-parameter subgroup is evaluated by its
/// Taylor expansion in `u₂`.
const SERIES_THRESHOLD: f64 = 1e-6;

/// An element of `Aff₊(ℝ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupPoint {
    x: f64,
    y: f64,
}

impl GroupPoint {
    pub const IDENTITY: GroupPoint = GroupPoint { x: 0.0, y: 1.0 };

    /// Builds a point, rejecting `y ≤ 0` and non-finite coordinates.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && y > 0.0 {
            Ok(GroupPoint { x, y })
        } else {
            Err(Error::InvalidPoint { x, y })
        }
    }

    /// Builds a point from coordinates already known to be valid.
    ///
    /// # Panics
    /// Panics when `y ≤ 0` or a coordinate is not finite.
    pub fn from_coords(x: f64, y: f64) -> Self {
        Self::new(x, y).expect("invalid group point")
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn coords(&self) -> (f64, f64) {
        (self.x, self.y)
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0.0 && self.y == 1.0
    }

    pub fn mul(&self, rhs: &GroupPoint) -> GroupPoint {
        GroupPoint {
            x: self.x + self.y * rhs.x,
            y: self.y * rhs.y,
        }
    }

    pub fn inverse(&self) -> GroupPoint {
        GroupPoint {
            x: -self.x / self.y,
            y: 1.0 / self.y,
        }
    }
}

impl fmt::Display for GroupPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl std::ops::Mul for GroupPoint {
    type Output = GroupPoint;

    fn mul(self, rhs: GroupPoint) -> GroupPoint {
        GroupPoint::mul(&self, &rhs)
    }
}

/// Coefficients `(u₁, u₂)` of `u₁X₁ + u₂X₂` in the left-invariant frame.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TangentVector {
    pub u1: f64,
    pub u2: f64,
}

impl TangentVector {
    pub const fn new(u1: f64, u2: f64) -> Self {
        TangentVector { u1, u2 }
    }

    pub fn scale(&self, s: f64) -> TangentVector {
        TangentVector::new(self.u1 * s, self.u2 * s)
    }
}

pub fn group_mul(p: &GroupPoint, q: &GroupPoint) -> GroupPoint {
    p.mul(q)
}

pub fn group_inv(p: &GroupPoint) -> GroupPoint {
    p.inverse()
}

/// Left translation `L_g(q) = g·q`.
pub fn left_translate(g: &GroupPoint, q: &GroupPoint) -> GroupPoint {
    g.mul(q)
}

/// Point at time `t` on the one-parameter subgroup generated by `v`.
///
/// For `u₂ ≠ 0` this is `(u₁/u₂·(e^{u₂t} − 1), e^{u₂t})`, and `(u₁t, 1)`
/// for `u₂ = 0`. Small `|u₂t|` switches to the cubic expansion of
/// `(e^{u₂t} − 1)/u₂` so the map stays continuous across `u₂ = 0`.
pub fn lie_exp(v: &TangentVector, t: f64) -> GroupPoint {
    let s = v.u2 * t;
    let x = if s.abs() < SERIES_THRESHOLD {
        v.u1 * t * (1.0 + s / 2.0 + s * s / 6.0)
    } else {
        v.u1 / v.u2 * s.exp_m1()
    };
    GroupPoint { x, y: s.exp() }
}

/// Inverse of `lie_exp(·, 1)`: the algebra element whose subgroup passes
/// through `q` at time 1.
///
/// Every point of the group lies on exactly one one-parameter subgroup, so
/// the logarithm is global.
pub fn lie_log(q: &GroupPoint) -> TangentVector {
    let h = q.y - 1.0;
    let u2 = h.ln_1p();
    // ln(1 + h)/h, finite through h = 0
    let ratio = if h.abs() < 1e-8 {
        1.0 - h / 2.0 + h * h / 3.0
    } else {
        u2 / h
    };
    TangentVector::new(q.x * ratio, u2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pt(x: f64, y: f64) -> GroupPoint {
        GroupPoint::from_coords(x, y)
    }

    #[test]
    fn product_examples() {
        assert_eq!(group_mul(&pt(0.0, 1.0), &pt(3.0, 2.0)), pt(3.0, 2.0));
        assert_eq!(group_mul(&pt(1.0, 2.0), &pt(3.0, 4.0)), pt(7.0, 8.0));
        // solve (1,2)·q = (7,8) by left-multiplying with the inverse
        let q = group_mul(&group_inv(&pt(1.0, 2.0)), &pt(7.0, 8.0));
        assert_eq!(q, pt(3.0, 4.0));
        assert_eq!(group_mul(&pt(1.0, 2.0), &q), pt(7.0, 8.0));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(group_inv(&pt(0.0, 1.0)), pt(0.0, 1.0));
        assert_eq!(group_inv(&pt(1.0, 2.0)), pt(-0.5, 0.5));
        assert_eq!(group_mul(&pt(1.0, 2.0), &pt(-0.5, 0.5)), GroupPoint::IDENTITY);
        assert_eq!(group_inv(&pt(-3.0, 0.25)), pt(12.0, 4.0));
        assert_eq!(group_mul(&pt(-3.0, 0.25), &pt(12.0, 4.0)), GroupPoint::IDENTITY);
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!(GroupPoint::new(0.0, 0.0).is_err());
        assert!(GroupPoint::new(1.0, -2.0).is_err());
        assert!(GroupPoint::new(f64::NAN, 1.0).is_err());
        assert!(GroupPoint::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn exp_examples() {
        assert_eq!(lie_exp(&TangentVector::new(1.0, 0.0), 5.0), pt(5.0, 1.0));
        let p = lie_exp(&TangentVector::new(0.0, 1.0), 2f64.ln());
        assert_eq!(p.x(), 0.0);
        assert_relative_eq!(p.y(), 2.0, epsilon = 1e-15);
        let p = lie_exp(&TangentVector::new(1.0, 1.0), 1.0);
        let e = std::f64::consts::E;
        assert_relative_eq!(p.x(), e - 1.0, epsilon = 1e-15);
        assert_relative_eq!(p.y(), e, epsilon = 1e-15);
    }

    #[test]
    fn exp_is_continuous_across_u2_zero() {
        let v0 = lie_exp(&TangentVector::new(2.0, 0.0), 1.5);
        for u2 in [1e-12, -1e-9, 5e-7, -9.9e-7, 1.1e-6] {
            let v = lie_exp(&TangentVector::new(2.0, u2), 1.5);
            assert!((v.x() - v0.x()).abs() < 1e-5, "u2 = {u2}");
            let exact = 2.0 / u2 * (u2 * 1.5f64).exp_m1();
            assert_relative_eq!(v.x(), exact, max_relative = 1e-14);
        }
    }

    #[test]
    fn left_translation_examples() {
        assert_eq!(left_translate(&GroupPoint::IDENTITY, &pt(2.0, 3.0)), pt(2.0, 3.0));
        assert_eq!(left_translate(&pt(1.0, 2.0), &GroupPoint::IDENTITY), pt(1.0, 2.0));
        assert_eq!(left_translate(&group_inv(&pt(1.0, 2.0)), &pt(1.0, 2.0)), GroupPoint::IDENTITY);
    }

    #[test]
    fn log_inverts_exp() {
        for (u1, u2) in [(1.0, 0.0), (0.3, -2.0), (-1.5, 1e-10), (4.0, 0.7)] {
            let v = TangentVector::new(u1, u2);
            let w = lie_log(&lie_exp(&v, 1.0));
            assert_relative_eq!(w.u1, u1, epsilon = 1e-12, max_relative = 1e-12);
            assert_relative_eq!(w.u2, u2, epsilon = 1e-12, max_relative = 1e-12);
        }
    }
}
