//! Node placement: uniform unknown nodes and the four anchor layouts.
//!
//! The two spiral layouts start at the field center and step by the golden
//! angle. `PhiChainSpiral` grows each chord by φ (`d_{k+1} = φ·d_k`), which
//! escapes any finite field after a handful of anchors, so every point is
//! clamped into the field after the unclamped chain has been built. The chord
//! ratio is therefore exact only on the unclamped prefix.
//! `GoldenAngleSunflower` is the Vogel spiral `ρ_i = c·√i`, `θ_i = i·γ`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{FieldSpec, Point2D, GOLDEN_ANGLE, PHI};
use crate::rng::RngStream;

pub const DEFAULT_PHI_CHAIN_D1: f64 = 2.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DeploymentError {
    #[error("a deployment needs at least one anchor")]
    NoAnchors,
    #[error("position {0} lies outside the field")]
    OutOfField(Point2D),
}

/// How anchors are placed for one algorithm.
///
/// JSON form: `{"kind": "phi_chain_spiral", "d1": 2.0}`. A parameter is only
/// accepted alongside its own kind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", try_from = "RawLayout")]
pub enum AnchorLayout {
    Random,
    Grid,
    PhiChainSpiral {
        d1: f64,
    },
    GoldenAngleSunflower {
        /// `None` selects [`default_sunflower_scale`].
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scale_c: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
enum LayoutKind {
    Random,
    Grid,
    PhiChainSpiral,
    GoldenAngleSunflower,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLayout {
    kind: LayoutKind,
    d1: Option<f64>,
    scale_c: Option<f64>,
}

impl TryFrom<RawLayout> for AnchorLayout {
    type Error = String;

    fn try_from(raw: RawLayout) -> Result<Self, Self::Error> {
        let stray = |name: &str| Err(format!("`{name}` does not apply to layout {:?}", raw.kind));
        match raw.kind {
            LayoutKind::Random | LayoutKind::Grid | LayoutKind::GoldenAngleSunflower
                if raw.d1.is_some() =>
            {
                stray("d1")
            }
            LayoutKind::Random | LayoutKind::Grid | LayoutKind::PhiChainSpiral
                if raw.scale_c.is_some() =>
            {
                stray("scale_c")
            }
            LayoutKind::Random => Ok(AnchorLayout::Random),
            LayoutKind::Grid => Ok(AnchorLayout::Grid),
            LayoutKind::PhiChainSpiral => Ok(AnchorLayout::PhiChainSpiral {
                d1: raw.d1.unwrap_or(DEFAULT_PHI_CHAIN_D1),
            }),
            LayoutKind::GoldenAngleSunflower => Ok(AnchorLayout::GoldenAngleSunflower {
                scale_c: raw.scale_c,
            }),
        }
    }
}

impl AnchorLayout {
    pub fn phi_chain() -> Self {
        AnchorLayout::PhiChainSpiral { d1: DEFAULT_PHI_CHAIN_D1 }
    }

    pub fn sunflower() -> Self {
        AnchorLayout::GoldenAngleSunflower { scale_c: None }
    }

    /// Whether this layout consumes random draws.
    pub fn is_random(&self) -> bool {
        matches!(self, AnchorLayout::Random)
    }

    /// Layout parameter that must be positive, if any, with its name.
    pub fn parameter(&self) -> Option<(&'static str, f64)> {
        match *self {
            AnchorLayout::PhiChainSpiral { d1 } => Some(("d1", d1)),
            AnchorLayout::GoldenAngleSunflower { scale_c: Some(c) } => Some(("scale_c", c)),
            _ => None,
        }
    }

    pub fn place(&self, field: &FieldSpec, count: usize, rng: &mut RngStream) -> Vec<Point2D> {
        match *self {
            AnchorLayout::Random => deploy_anchors_random(field, count, rng),
            AnchorLayout::Grid => deploy_anchors_grid(field, count),
            AnchorLayout::PhiChainSpiral { d1 } => deploy_anchors_phi_chain(field, count, d1),
            AnchorLayout::GoldenAngleSunflower { scale_c } => {
                let c = scale_c.unwrap_or_else(|| default_sunflower_scale(field, count));
                deploy_anchors_sunflower(field, count, c)
            }
        }
    }
}

/// Sunflower scale that spreads `count` anchors over the field:
/// `0.5 · min(width, height) / √count`.
pub fn default_sunflower_scale(field: &FieldSpec, count: usize) -> f64 {
    0.5 * field.width.min(field.height) / (count.max(1) as f64).sqrt()
}

/// Anchors and unknown nodes of one network instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Deployment {
    field: FieldSpec,
    anchors: Vec<Point2D>,
    unknowns: Vec<Point2D>,
}

impl Deployment {
    pub fn new(
        field: FieldSpec,
        anchors: Vec<Point2D>,
        unknowns: Vec<Point2D>,
    ) -> Result<Self, DeploymentError> {
        if anchors.is_empty() {
            return Err(DeploymentError::NoAnchors);
        }
        if let Some(p) = anchors.iter().chain(&unknowns).find(|p| !field.contains(p)) {
            return Err(DeploymentError::OutOfField(*p));
        }
        Ok(Self {
            field,
            anchors,
            unknowns,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn anchors(&self) -> &[Point2D] {
        &self.anchors
    }

    pub fn unknowns(&self) -> &[Point2D] {
        &self.unknowns
    }

    pub fn anchor_count(&self) -> usize {
        self.anchors.len()
    }

    pub fn node_count(&self) -> usize {
        self.anchors.len() + self.unknowns.len()
    }

    /// Graph index of unknown `i`. Anchors occupy indices `0..anchor_count()`.
    pub fn unknown_index(&self, i: usize) -> usize {
        self.anchors.len() + i
    }

    /// All positions in graph-index order: anchors, then unknowns.
    pub fn positions(&self) -> impl Iterator<Item = &Point2D> + '_ {
        self.anchors.iter().chain(&self.unknowns)
    }
}

/// `count` points drawn i.i.d. uniform over the field, x before y.
pub fn deploy_unknowns_uniform(
    field: &FieldSpec,
    count: usize,
    rng: &mut RngStream,
) -> Vec<Point2D> {
    uniform_points(field, count, rng)
}

pub fn deploy_anchors_random(field: &FieldSpec, count: usize, rng: &mut RngStream) -> Vec<Point2D> {
    uniform_points(field, count, rng)
}

fn uniform_points(field: &FieldSpec, count: usize, rng: &mut RngStream) -> Vec<Point2D> {
    (0..count)
        .map(|_| {
            let x = rng.uniform(0.0, field.width);
            let y = rng.uniform(0.0, field.height);
            Point2D::new(x, y)
        })
        .collect()
}

/// Cell-centered grid, `cols = ⌈√count⌉`, `rows = ⌈count / cols⌉`, filled
/// row-major from the bottom-left cell.
pub fn deploy_anchors_grid(field: &FieldSpec, count: usize) -> Vec<Point2D> {
    if count == 0 {
        return Vec::new();
    }
    let cols = (count as f64).sqrt().ceil() as usize;
    let rows = count.div_ceil(cols);
    let (dx, dy) = (field.width / cols as f64, field.height / rows as f64);
    (0..count)
        .map(|k| {
            let (r, c) = (k / cols, k % cols);
            Point2D::new((c as f64 + 0.5) * dx, (r as f64 + 0.5) * dy)
        })
        .collect()
}

/// The unclamped φ-chain: point 0 at the field center, chord `k` (from point
/// `k−1` to point `k`) of length `d1·φ^(k−1)` at heading `k·γ`.
pub fn phi_chain_unclamped(field: &FieldSpec, count: usize, d1: f64) -> Vec<Point2D> {
    let mut points = Vec::with_capacity(count);
    if count == 0 {
        return points;
    }
    let mut current = field.center();
    points.push(current);
    let mut chord = d1;
    for k in 1..count {
        current = current.offset_polar(chord, k as f64 * GOLDEN_ANGLE);
        points.push(current);
        chord *= PHI;
    }
    points
}

pub fn deploy_anchors_phi_chain(field: &FieldSpec, count: usize, d1: f64) -> Vec<Point2D> {
    phi_chain_unclamped(field, count, d1)
        .into_iter()
        .map(|p| field.clamp(p))
        .collect()
}

/// Vogel spiral around the field center, clamped into the field.
pub fn deploy_anchors_sunflower(field: &FieldSpec, count: usize, scale_c: f64) -> Vec<Point2D> {
    let center = field.center();
    (0..count)
        .map(|i| {
            let radius = scale_c * (i as f64).sqrt();
            field.clamp(center.offset_polar(radius, i as f64 * GOLDEN_ANGLE))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::distance;

    fn square() -> FieldSpec {
        FieldSpec::default()
    }

    #[test]
    fn uniform_bounds_and_determinism() {
        let f = square();
        let a = deploy_unknowns_uniform(&f, 100, &mut RngStream::from_seed(5));
        let b = deploy_unknowns_uniform(&f, 100, &mut RngStream::from_seed(5));
        assert_eq!(a.len(), 100);
        assert!(a.iter().all(|p| f.contains(p)));
        assert_eq!(a, b);
    }

    #[test]
    fn uniform_quadrant_balance() {
        let f = square();
        let pts = deploy_unknowns_uniform(&f, 10_000, &mut RngStream::from_seed(17));
        let mut quad = [0usize; 4];
        for p in &pts {
            let q = usize::from(p.x() >= 50.0) + 2 * usize::from(p.y() >= 50.0);
            quad[q] += 1;
        }
        for n in quad {
            assert!((2300..=2700).contains(&n), "quadrant count {n}");
        }
    }

    #[test]
    fn phi_chain_base_case() {
        assert_eq!(deploy_anchors_phi_chain(&square(), 1, 2.0), vec![Point2D::new(50.0, 50.0)]);
    }

    #[test]
    fn phi_chain_chord_ratio() {
        let pts = deploy_anchors_phi_chain(&square(), 3, 2.0);
        let c1 = distance(&pts[0], &pts[1]);
        let c2 = distance(&pts[1], &pts[2]);
        assert!((c1 - 2.0).abs() < 1e-12);
        assert!((c2 - 2.0 * PHI).abs() < 1e-9);
        assert!((c2 / c1 - PHI).abs() < 1e-9);
    }

    #[test]
    fn phi_chain_clamping_onset() {
        let f = square();
        // golden-angle headings fold the chain back on itself: ten anchors
        // fit unclamped, the eleventh overshoots the bottom edge
        let ten = deploy_anchors_phi_chain(&f, 10, 2.0);
        assert_eq!(ten, phi_chain_unclamped(&f, 10, 2.0));
        assert!(ten.iter().all(|p| f.contains(p) && !f.on_boundary(p)));
        assert!((ten[9].x() - 0.615).abs() < 1e-3 && (ten[9].y() - 88.79).abs() < 1e-2);

        let more = deploy_anchors_phi_chain(&f, 14, 2.0);
        assert!(more.iter().all(|p| f.contains(p)));
        assert_eq!(more[10].y(), 0.0);
        assert!(more[10..].iter().all(|p| f.on_boundary(p)));
    }

    #[test]
    fn phi_chain_unclamped_prefix_ratio() {
        let f = square();
        let pts = deploy_anchors_phi_chain(&f, 10, 2.0);
        for w in pts.windows(3) {
            let r = distance(&w[1], &w[2]) / distance(&w[0], &w[1]);
            assert!((r - PHI).abs() < 1e-9, "ratio {r}");
        }
    }

    #[test]
    fn sunflower_examples() {
        let f = square();
        assert_eq!(deploy_anchors_sunflower(&f, 1, 10.0), vec![f.center()]);
        let two = deploy_anchors_sunflower(&f, 2, 10.0);
        assert!((distance(&two[1], &f.center()) - 10.0).abs() < 1e-9);
    }

    #[test]
    fn sunflower_ten_min_spacing() {
        let pts = deploy_anchors_sunflower(&square(), 10, 14.0);
        let mut min = f64::INFINITY;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                min = min.min(distance(&pts[i], &pts[j]));
            }
        }
        assert!(min > 8.0, "min spacing {min}");
    }

    #[test]
    fn sunflower_golden_angle_increments() {
        let f = square();
        let c = f.center();
        let pts = deploy_anchors_sunflower(&f, 12, 5.0);
        for i in 1..pts.len() - 1 {
            let a0 = (pts[i].y() - c.y()).atan2(pts[i].x() - c.x());
            let a1 = (pts[i + 1].y() - c.y()).atan2(pts[i + 1].x() - c.x());
            let step = (a1 - a0).rem_euclid(std::f64::consts::TAU);
            assert!((step - GOLDEN_ANGLE).abs() < 1e-12, "step {step}");
        }
    }

    #[test]
    fn default_scale_fills_field() {
        let c = default_sunflower_scale(&square(), 10);
        assert!((c - 50.0 / 10f64.sqrt()).abs() < 1e-12);
        let pts = deploy_anchors_sunflower(&square(), 10, c);
        let r_max = c * 3.0;
        assert!(pts.iter().all(|p| distance(p, &square().center()) <= r_max + 1e-9));
    }

    #[test]
    fn grid_examples() {
        let f = square();
        assert_eq!(
            deploy_anchors_grid(&f, 4),
            vec![
                Point2D::new(25.0, 25.0),
                Point2D::new(75.0, 25.0),
                Point2D::new(25.0, 75.0),
                Point2D::new(75.0, 75.0)
            ]
        );
        assert_eq!(deploy_anchors_grid(&f, 1), vec![f.center()]);
        let ten = deploy_anchors_grid(&f, 10);
        assert_eq!(ten.len(), 10);
        assert!(ten.iter().all(|p| f.contains(p)));
    }

    #[test]
    fn grid_square_count_rotation_symmetric() {
        let f = square();
        for count in [4usize, 9, 16] {
            let pts = deploy_anchors_grid(&f, count);
            // rotate 90° about the center: (x, y) -> (100 - y, x)
            for p in &pts {
                let r = Point2D::new(100.0 - p.y(), p.x());
                assert!(pts.iter().any(|q| distance(q, &r) < 1e-9));
            }
        }
    }

    #[test]
    fn random_anchors_deterministic() {
        let f = square();
        let a = deploy_anchors_random(&f, 10, &mut RngStream::from_seed(3));
        let b = deploy_anchors_random(&f, 10, &mut RngStream::from_seed(3));
        assert_eq!(a, b);
    }

    #[test]
    fn every_layout_returns_count_in_field() {
        let f = FieldSpec::new(80.0, 40.0).unwrap();
        let layouts = [
            AnchorLayout::Random,
            AnchorLayout::Grid,
            AnchorLayout::phi_chain(),
            AnchorLayout::sunflower(),
        ];
        for layout in layouts {
            for count in [1usize, 3, 10, 25] {
                let pts = layout.place(&f, count, &mut RngStream::from_seed(1));
                assert_eq!(pts.len(), count);
                assert!(pts.iter().all(|p| f.contains(p)), "{layout:?}");
            }
        }
    }

    #[test]
    fn deployment_validates() {
        let f = square();
        assert_eq!(
            Deployment::new(f, vec![], vec![]).unwrap_err(),
            DeploymentError::NoAnchors
        );
        assert!(Deployment::new(f, vec![Point2D::new(101.0, 0.0)], vec![]).is_err());
        let d = Deployment::new(f, vec![f.center()], vec![Point2D::new(1.0, 1.0)]).unwrap();
        assert_eq!(d.node_count(), 2);
        assert_eq!(d.unknown_index(0), 1);
    }

    #[test]
    fn layout_json_forms() {
        let l: AnchorLayout = serde_json::from_str(r#"{"kind":"phi_chain_spiral"}"#).unwrap();
        assert_eq!(l, AnchorLayout::PhiChainSpiral { d1: 2.0 });
        let l: AnchorLayout =
            serde_json::from_str(r#"{"kind":"golden_angle_sunflower","scale_c":14}"#).unwrap();
        assert_eq!(l, AnchorLayout::GoldenAngleSunflower { scale_c: Some(14.0) });
        assert!(serde_json::from_str::<AnchorLayout>(r#"{"kind":"grid","d1":3}"#).is_err());
        assert!(serde_json::from_str::<AnchorLayout>(
            r#"{"kind":"phi_chain_spiral","scale_c":3}"#
        )
        .is_err());
        assert!(serde_json::from_str::<AnchorLayout>(r#"{"kind":"random","extra":1}"#).is_err());
        assert!(serde_json::from_str::<AnchorLayout>(r#"{"kind":"spiral"}"#).is_err());
        for layout in [AnchorLayout::Random, AnchorLayout::phi_chain(), AnchorLayout::sunflower()] {
            let json = serde_json::to_string(&layout).unwrap();
            assert_eq!(serde_json::from_str::<AnchorLayout>(&json).unwrap(), layout);
        }
    }
}
