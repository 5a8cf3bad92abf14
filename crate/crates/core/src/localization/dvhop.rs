use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{mean_hops, multilaterate, Estimate, SolverError, Unlocalizable};
use crate::geometry::{distance, Point2D};
use crate::network::{HopTable, Topology};

/// Average physical distance covered by one hop.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AvgHopSize(f64);

impl AvgHopSize {
    pub fn new(meters_per_hop: f64) -> Option<Self> {
        (meters_per_hop.is_finite() && meters_per_hop > 0.0).then_some(Self(meters_per_hop))
    }

    pub fn meters_per_hop(&self) -> f64 {
        self.0
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopSizeError {
    #[error("hop size needs at least 2 anchors, got {0}")]
    TooFewAnchors(usize),
    #[error("anchors {0} and {1} cannot reach each other")]
    DisconnectedAnchors(usize, usize),
    #[error("anchor hop counts do not define a positive hop size")]
    DegenerateHops,
    #[error("no reachable anchor has a defined hop size")]
    Undefined,
}

/// Which hop size an unknown node multiplies its hop counts by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HopSizeMode {
    /// One network-wide ratio over all anchor pairs.
    #[default]
    Global,
    /// Each anchor's own ratio; a node uses its fewest-hop anchor, ties to
    /// the lowest anchor index, skipping anchors without a defined ratio.
    PerAnchorNearest,
}

/// `Σ_{i≠j} dist(i, j) / Σ_{i≠j} h_ij` over every ordered anchor pair.
///
/// Anchor `i` is column `i` of `hops` and sits at graph node
/// `hops.anchor_ids()[i]`.
pub fn dvhop_avg_hop_size(anchors: &[Point2D], hops: &HopTable) -> Result<AvgHopSize, HopSizeError> {
    let k = anchors.len();
    if k < 2 {
        return Err(HopSizeError::TooFewAnchors(k));
    }
    let ids = hops.anchor_ids();
    let (mut dist_sum, mut hop_sum) = (0.0, 0u64);
    for i in 0..k {
        for j in (0..k).filter(|&j| j != i) {
            let h = hops
                .get(ids[i], j)
                .ok_or(HopSizeError::DisconnectedAnchors(i, j))?;
            dist_sum += distance(&anchors[i], &anchors[j]);
            hop_sum += u64::from(h);
        }
    }
    if hop_sum == 0 {
        return Err(HopSizeError::DegenerateHops);
    }
    AvgHopSize::new(dist_sum / hop_sum as f64).ok_or(HopSizeError::DegenerateHops)
}

/// Each anchor's ratio over the other anchors it can reach; `None` when it
/// reaches none (or only at zero hops).
pub fn per_anchor_hop_sizes(anchors: &[Point2D], hops: &HopTable) -> Vec<Option<AvgHopSize>> {
    let ids = hops.anchor_ids();
    (0..anchors.len())
        .map(|i| {
            let (dist_sum, hop_sum) = hops
                .reachable(ids[i])
                .filter(|&(j, _)| j != i)
                .fold((0.0, 0u64), |(d, s), (j, h)| {
                    (d + distance(&anchors[i], &anchors[j]), s + u64::from(h))
                });
            if hop_sum == 0 {
                None
            } else {
                AvgHopSize::new(dist_sum / hop_sum as f64)
            }
        })
        .collect()
}

/// Multilaterate from hop-derived distances `h_i · hop_size`.
pub fn dvhop_estimate(
    reachable: &[(Point2D, u32)],
    hop_size: AvgHopSize,
    scale_length: f64,
) -> Result<Estimate, Unlocalizable> {
    if reachable.len() < 3 {
        return Err(Unlocalizable::TooFewAnchors {
            reachable: reachable.len(),
        });
    }
    let positions: Vec<Point2D> = reachable.iter().map(|&(p, _)| p).collect();
    let distances: Vec<f64> = reachable
        .iter()
        .map(|&(_, h)| f64::from(h) * hop_size.meters_per_hop())
        .collect();
    let position = multilaterate(&positions, &distances, scale_length).map_err(|e| match e {
        SolverError::Arity(n) => Unlocalizable::TooFewAnchors { reachable: n },
        _ => Unlocalizable::CollinearAnchors,
    })?;
    Ok(Estimate {
        position,
        anchors_used: reachable.len(),
        mean_hops: mean_hops(reachable.iter().map(|&(_, h)| h)),
    })
}

#[derive(Debug, Clone)]
enum HopSizes {
    Global(Result<AvgHopSize, HopSizeError>),
    PerAnchor(Vec<Option<AvgHopSize>>),
}

/// DV-Hop over one topology. Hop sizes are computed once at construction.
#[derive(Debug, Clone)]
pub struct DvHop<'a> {
    topology: &'a Topology,
    hop_sizes: HopSizes,
}

impl<'a> DvHop<'a> {
    pub fn new(topology: &'a Topology, mode: HopSizeMode) -> Self {
        let anchors = topology.deployment().anchors();
        let hop_sizes = match mode {
            HopSizeMode::Global => HopSizes::Global(dvhop_avg_hop_size(anchors, topology.hops())),
            HopSizeMode::PerAnchorNearest => {
                HopSizes::PerAnchor(per_anchor_hop_sizes(anchors, topology.hops()))
            }
        };
        Self {
            topology,
            hop_sizes,
        }
    }

    /// The hop size `node` would use.
    pub fn hop_size_for(&self, node: usize) -> Result<AvgHopSize, HopSizeError> {
        match &self.hop_sizes {
            HopSizes::Global(r) => r.clone(),
            HopSizes::PerAnchor(sizes) => {
                let mut candidates: Vec<(u32, usize)> = self
                    .topology
                    .hops()
                    .reachable(node)
                    .map(|(a, h)| (h, a))
                    .collect();
                candidates.sort_unstable();
                candidates
                    .into_iter()
                    .find_map(|(_, a)| sizes[a])
                    .ok_or(HopSizeError::Undefined)
            }
        }
    }

    pub fn localize(&self, node: usize) -> Result<Estimate, Unlocalizable> {
        let anchors = self.topology.deployment().anchors();
        let reachable: Vec<(Point2D, u32)> = self
            .topology
            .hops()
            .reachable(node)
            .map(|(a, h)| (anchors[a], h))
            .collect();
        if reachable.len() < 3 {
            return Err(Unlocalizable::TooFewAnchors {
                reachable: reachable.len(),
            });
        }
        let hop_size = self.hop_size_for(node)?;
        dvhop_estimate(
            &reachable,
            hop_size,
            self.topology.deployment().field().diagonal(),
        )
    }
}

/// One-shot DV-Hop for a single node. Prefer [`DvHop`] for many nodes.
pub fn dvhop_localize(
    topology: &Topology,
    node: usize,
    mode: HopSizeMode,
) -> Result<Estimate, Unlocalizable> {
    DvHop::new(topology, mode).localize(node)
}
