use super::{Estimate, Unlocalizable};
use crate::geometry::Point2D;
use crate::network::Topology;

/// Unweighted mean of the in-range anchors.
pub fn centroid_estimate(in_range: &[Point2D]) -> Result<Estimate, Unlocalizable> {
    if in_range.is_empty() {
        return Err(Unlocalizable::NoAnchorInRange);
    }
    let n = in_range.len() as f64;
    let (sx, sy) = in_range
        .iter()
        .fold((0.0, 0.0), |(sx, sy), p| (sx + p.x(), sy + p.y()));
    Ok(Estimate {
        position: Point2D::new(sx / n, sy / n),
        anchors_used: in_range.len(),
        mean_hops: 1.0,
    })
}

/// Centroid over the anchors one hop from `node`.
pub fn centroid_localize(topology: &Topology, node: usize) -> Result<Estimate, Unlocalizable> {
    let anchors = topology.deployment().anchors();
    let in_range: Vec<Point2D> = topology
        .hops()
        .reachable(node)
        .filter(|&(_, h)| h == 1)
        .map(|(a, _)| anchors[a])
        .collect();
    centroid_estimate(&in_range)
}
