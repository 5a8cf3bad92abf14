//! Per-node results and per-trial aggregates.

use thiserror::Error;

use crate::geometry::{distance, Point2D};
use crate::localization::{Algorithm, Estimate};

/// Outcome for one unknown node. `node_id` is the index among the unknowns.
///
/// Unlocalized nodes carry no estimate or error and report zero hops,
/// anchors and energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeMetrics {
    pub node_id: usize,
    pub true_position: Point2D,
    pub estimate: Option<Point2D>,
    pub error: Option<f64>,
    pub hops: f64,
    pub anchors_used: usize,
    pub energy: f64,
}

impl NodeMetrics {
    pub fn localized(node_id: usize, true_position: Point2D, estimate: &Estimate, energy: f64) -> Self {
        Self {
            node_id,
            true_position,
            estimate: Some(estimate.position),
            error: Some(distance(&true_position, &estimate.position)),
            hops: estimate.mean_hops,
            anchors_used: estimate.anchors_used,
            energy,
        }
    }

    pub fn unlocalized(node_id: usize, true_position: Point2D) -> Self {
        Self {
            node_id,
            true_position,
            estimate: None,
            error: None,
            hops: 0.0,
            anchors_used: 0,
            energy: 0.0,
        }
    }

    pub fn is_localized(&self) -> bool {
        self.error.is_some()
    }
}

/// Aggregates for one (trial, algorithm). Means are over localized nodes
/// only and are `None` when no node was localized. The spread is the
/// population standard deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialSummary {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub trial_index: u64,
    pub mean_error: Option<f64>,
    pub error_std: Option<f64>,
    pub coverage: f64,
    pub mean_hops: Option<f64>,
    pub mean_energy: Option<f64>,
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("trial {} ({}): no node was localized", .summary.trial_index, .summary.algorithm)]
pub struct EmptyTrial {
    /// Coverage-zero summary with every mean absent.
    pub summary: TrialSummary,
}

/// Streaming mean and variance (Welford). The mean of identical samples is
/// exactly that sample.
#[derive(Debug, Default, Clone, Copy)]
struct Running {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Running {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn mean(&self) -> Option<f64> {
        (self.n > 0).then_some(self.mean)
    }

    fn population_std(&self) -> Option<f64> {
        (self.n > 0).then(|| (self.m2 / self.n as f64).max(0.0).sqrt())
    }
}

pub fn summarize_trial(
    metrics: &[NodeMetrics],
    algorithm: Algorithm,
    seed: u64,
    trial_index: u64,
) -> Result<TrialSummary, EmptyTrial> {
    let (mut error, mut hops, mut energy) = (Running::default(), Running::default(), Running::default());
    for m in metrics {
        if let Some(e) = m.error {
            error.push(e);
            hops.push(m.hops);
            energy.push(m.energy);
        }
    }
    let coverage = if metrics.is_empty() {
        0.0
    } else {
        error.n as f64 / metrics.len() as f64
    };
    let summary = TrialSummary {
        algorithm,
        seed,
        trial_index,
        mean_error: error.mean(),
        error_std: error.population_std(),
        coverage,
        mean_hops: hops.mean(),
        mean_energy: energy.mean(),
    };
    if error.n == 0 {
        Err(EmptyTrial { summary })
    } else {
        Ok(summary)
    }
}
