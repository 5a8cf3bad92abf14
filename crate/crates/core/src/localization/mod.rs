//! Position estimators.
//!
//! Each estimator has a low-level form that works on explicit
//! `(anchor position, hop count)` lists and a topology-level form that looks
//! a node up in a [`Topology`](crate::network::Topology). Nothing here draws
//! random numbers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Point2D;

mod centroid;
mod dvhop;
mod grl;
mod multilateration;

pub use centroid::{centroid_estimate, centroid_localize};
pub use dvhop::{
    dvhop_avg_hop_size, dvhop_estimate, dvhop_localize, per_anchor_hop_sizes, AvgHopSize, DvHop,
    HopSizeError, HopSizeMode,
};
pub use grl::{grl_estimate, grl_localize, grl_weights};
pub use multilateration::{multilaterate, SolverError, COLLINEARITY_TOLERANCE};

/// The three localization algorithms, in canonical output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Grl,
    DvHop,
    Centroid,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Grl, Algorithm::DvHop, Algorithm::Centroid];

    pub fn id(&self) -> &'static str {
        match self {
            Algorithm::Grl => "grl",
            Algorithm::DvHop => "dvhop",
            Algorithm::Centroid => "centroid",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

/// A position estimate for one unknown node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub position: Point2D,
    /// Number of anchors that contributed to the estimate.
    pub anchors_used: usize,
    /// Mean hop count to the contributing anchors.
    pub mean_hops: f64,
}

/// Why a node got no estimate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Unlocalizable {
    #[error("no anchor within direct communication range")]
    NoAnchorInRange,
    #[error("no anchor reachable")]
    NoReachableAnchor,
    #[error("only {reachable} reachable anchors, need at least 3")]
    TooFewAnchors { reachable: usize },
    #[error("reachable anchors are collinear")]
    CollinearAnchors,
    #[error("hop size unavailable: {0}")]
    HopSize(#[from] HopSizeError),
}

fn mean_hops(hops: impl ExactSizeIterator<Item = u32>) -> f64 {
    let n = hops.len();
    hops.map(f64::from).sum::<f64>() / n as f64
}
