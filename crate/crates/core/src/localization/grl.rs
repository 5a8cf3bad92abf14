use super::{mean_hops, Estimate, Unlocalizable};
use crate::geometry::{Point2D, PHI};
use crate::network::Topology;

/// Anchor weights `w_i = φ^(−h_i)`, unnormalized.
pub fn grl_weights(hop_counts: &[u32]) -> Vec<f64> {
    hop_counts.iter().map(|&h| phi_pow_neg(h)).collect()
}

fn phi_pow_neg(h: u32) -> f64 {
    PHI.powi(-(h as i32))
}

/// φ-weighted centroid over `(anchor, hops)` pairs.
///
/// Weights are evaluated relative to the smallest hop count. The common
/// factor cancels in the ratio, and large hop counts cannot underflow.
pub fn grl_estimate(reachable: &[(Point2D, u32)]) -> Result<Estimate, Unlocalizable> {
    let min_hops = reachable
        .iter()
        .map(|&(_, h)| h)
        .min()
        .ok_or(Unlocalizable::NoReachableAnchor)?;
    let (mut sw, mut sx, mut sy) = (0.0, 0.0, 0.0);
    for &(p, h) in reachable {
        let w = phi_pow_neg(h - min_hops);
        sw += w;
        sx += w * p.x();
        sy += w * p.y();
    }
    Ok(Estimate {
        position: Point2D::new(sx / sw, sy / sw),
        anchors_used: reachable.len(),
        mean_hops: mean_hops(reachable.iter().map(|&(_, h)| h)),
    })
}

/// φ-weighted centroid over every anchor reachable from `node`.
pub fn grl_localize(topology: &Topology, node: usize) -> Result<Estimate, Unlocalizable> {
    let anchors = topology.deployment().anchors();
    let reachable: Vec<(Point2D, u32)> = topology
        .hops()
        .reachable(node)
        .map(|(a, h)| (anchors[a], h))
        .collect();
    grl_estimate(&reachable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localization::centroid_estimate;

    fn p(x: f64, y: f64) -> Point2D {
        Point2D::new(x, y)
    }

    #[test]
    fn weight_values() {
        assert_eq!(grl_weights(&[0]), vec![1.0]);
        assert!((grl_weights(&[1])[0] - 0.618_033_988_7).abs() < 1e-10);
        let w = grl_weights(&[1, 2]);
        assert!((w[0] + w[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_anchor_weighted_mean() {
        let e = grl_estimate(&[(p(0.0, 0.0), 1), (p(10.0, 0.0), 2)]).unwrap();
        assert!((e.position.x() - 3.819_66).abs() < 1e-4);
        assert_eq!(e.position.y(), 0.0);
        assert_eq!(e.anchors_used, 2);
        assert_eq!(e.mean_hops, 1.5);
    }

    #[test]
    fn equal_hops_is_centroid() {
        let anchors = [p(1.0, 2.0), p(30.0, 4.0), p(12.0, 40.0), p(7.5, 9.25)];
        let g = grl_estimate(&anchors.iter().map(|&a| (a, 3)).collect::<Vec<_>>()).unwrap();
        let c = centroid_estimate(&anchors).unwrap();
        assert!((g.position.x() - c.position.x()).abs() < 1e-12);
        assert!((g.position.y() - c.position.y()).abs() < 1e-12);
    }

    #[test]
    fn single_anchor() {
        let e = grl_estimate(&[(p(42.0, 17.0), 4)]).unwrap();
        assert_eq!(e.position, p(42.0, 17.0));
        assert_eq!(e.mean_hops, 4.0);
    }

    #[test]
    fn none_reachable() {
        assert_eq!(grl_estimate(&[]), Err(Unlocalizable::NoReachableAnchor));
    }

    #[test]
    fn huge_hop_counts_stay_finite() {
        let e = grl_estimate(&[(p(0.0, 0.0), 5000), (p(10.0, 0.0), 5001)]).unwrap();
        assert!((e.position.x() - 3.819_66).abs() < 1e-4);
    }
}
