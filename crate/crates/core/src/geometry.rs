//! Planar geometry shared by every stage of the simulator.
//!
//! All lengths are meters in `f64`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The golden ratio, (1 + √5) / 2.
pub const PHI: f64 = 1.618_033_988_749_895;

/// The golden angle in radians, 2π(1 − 1/φ) ≈ 137.508°.
pub const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("coordinate is not finite: ({x}, {y})")]
    NonFinite { x: f64, y: f64 },
    #[error("field dimensions must be finite and positive, got {width} x {height}")]
    BadField { width: f64, height: f64 },
}

/// A point in the deployment plane. Both coordinates are always finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point2D {
    x: f64,
    y: f64,
}

impl Point2D {
    /// Panics on a non-finite coordinate; use [`Point2D::try_new`] for
    /// untrusted input.
    pub fn new(x: f64, y: f64) -> Self {
        match Self::try_new(x, y) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(GeometryError::NonFinite { x, y })
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: &Point2D) -> f64 {
        distance(self, other)
    }

    /// Displace by a vector of `length` at `heading` radians from the +x axis.
    pub fn offset_polar(&self, length: f64, heading: f64) -> Point2D {
        Point2D::new(
            self.x + length * heading.cos(),
            self.y + length * heading.sin(),
        )
    }
}

impl fmt::Display for Point2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.3}, {:.3})", self.x, self.y)
    }
}

/// Euclidean distance between two points.
pub fn distance(a: &Point2D, b: &Point2D) -> f64 {
    (a.x - b.x).hypot(a.y - b.y)
}

/// Rectangular deployment field `[0, width] × [0, height]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub width: f64,
    pub height: f64,
}

impl FieldSpec {
    pub fn new(width: f64, height: f64) -> Result<Self, GeometryError> {
        let field = Self { width, height };
        field.validate()?;
        Ok(field)
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if ok(self.width) && ok(self.height) {
            Ok(())
        } else {
            Err(GeometryError::BadField {
                width: self.width,
                height: self.height,
            })
        }
    }

    pub fn center(&self) -> Point2D {
        Point2D::new(self.width / 2.0, self.height / 2.0)
    }

    pub fn diagonal(&self) -> f64 {
        self.width.hypot(self.height)
    }

    pub fn contains(&self, p: &Point2D) -> bool {
        (0.0..=self.width).contains(&p.x) && (0.0..=self.height).contains(&p.y)
    }

    /// Componentwise clamp into the field.
    pub fn clamp(&self, p: Point2D) -> Point2D {
        Point2D::new(p.x.clamp(0.0, self.width), p.y.clamp(0.0, self.height))
    }

    /// True when `p` touches the field border.
    pub fn on_boundary(&self, p: &Point2D) -> bool {
        p.x == 0.0 || p.y == 0.0 || p.x == self.width || p.y == self.height
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self {
            width: 100.0,
            height: 100.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_identities() {
        assert!((PHI - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!(((PHI * PHI - (PHI + 1.0)) / (PHI * PHI)).abs() < 1e-12);
        assert!((1.0 / PHI - (PHI - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn golden_angle_matches_definition() {
        let expected = 2.0 * std::f64::consts::PI * (1.0 - 1.0 / PHI);
        assert!((GOLDEN_ANGLE - expected).abs() < 1e-14);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&Point2D::new(0.0, 0.0), &Point2D::new(3.0, 4.0)), 5.0);
        let p = Point2D::new(12.5, -3.0);
        assert_eq!(distance(&p, &p), 0.0);

        // forward-constructed: (50,50) + 2·(cos γ, sin γ)
        let q = Point2D::new(50.0 + 2.0 * 2.39996f64.cos(), 50.0 + 2.0 * 2.39996f64.sin());
        assert!((q.x() - 48.5253).abs() < 1e-4 && (q.y() - 51.3510).abs() < 1e-4);
        let d = distance(&Point2D::new(50.0, 50.0), &Point2D::new(48.5253, 51.3510));
        assert!((d - 2.0).abs() < 1e-3);
    }

    #[test]
    fn non_finite_rejected() {
        assert!(Point2D::try_new(f64::NAN, 0.0).is_err());
        assert!(Point2D::try_new(0.0, f64::INFINITY).is_err());
        assert!(FieldSpec::new(0.0, 10.0).is_err());
        assert!(FieldSpec::new(10.0, -1.0).is_err());
        assert!(FieldSpec::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn clamp_and_boundary() {
        let f = FieldSpec::default();
        let c = f.clamp(Point2D::new(-4.0, 130.0));
        assert_eq!(c, Point2D::new(0.0, 100.0));
        assert!(f.on_boundary(&c));
        assert!(!f.on_boundary(&f.center()));
    }

    fn coord() -> impl Strategy<Value = f64> {
        -1.0e3..1.0e3
    }

    proptest! {
        #[test]
        fn triangle_inequality(ax in coord(), ay in coord(), bx in coord(), by in coord(), cx in coord(), cy in coord()) {
            let (a, b, c) = (Point2D::new(ax, ay), Point2D::new(bx, by), Point2D::new(cx, cy));
            prop_assert!(distance(&a, &c) <= distance(&a, &b) + distance(&b, &c) + 1e-9);
        }

        #[test]
        fn distance_symmetric_nonnegative(ax in coord(), ay in coord(), bx in coord(), by in coord()) {
            let (a, b) = (Point2D::new(ax, ay), Point2D::new(bx, by));
            prop_assert_eq!(distance(&a, &b), distance(&b, &a));
            prop_assert!(distance(&a, &b) >= 0.0);
            prop_assert_eq!(distance(&a, &b) == 0.0, a == b);
        }
    }
}
