//! Monte Carlo trial loop.
//!
//! Each trial owns the stream `derive_trial_stream(master_seed, t)` and draws
//! from it in a fixed order: the shared unknown positions, then GRL anchors,
//! DV-Hop anchors and Centroid anchors. All three anchor sets are drawn even
//! when an algorithm is not selected, so the algorithm list never shifts the
//! draws of another.

use rayon::prelude::*;

use super::config::{ConfigError, ExperimentConfig};
use crate::deployment::{deploy_unknowns_uniform, Deployment};
use crate::energy::{localization_energy, EnergyParams};
use crate::geometry::Point2D;
use crate::localization::{
    centroid_localize, grl_localize, Algorithm, DvHop, Estimate, HopSizeMode, Unlocalizable,
};
use crate::metrics::{summarize_trial, NodeMetrics, TrialSummary};
use crate::network::Topology;
use crate::rng::derive_trial_stream;

/// Everything one algorithm produced in one trial.
#[derive(Debug, Clone)]
pub struct TrialDetail {
    pub trial_index: u64,
    pub algorithm: Algorithm,
    pub deployment: Deployment,
    pub comm_range: f64,
    pub nodes: Vec<NodeMetrics>,
}

impl TrialDetail {
    pub fn localized_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_localized()).count()
    }
}

/// Results of a run, ordered by trial then canonical algorithm order.
#[derive(Debug, Clone)]
pub struct ResultsBundle {
    pub config: ExperimentConfig,
    pub summaries: Vec<TrialSummary>,
    pub details: Vec<TrialDetail>,
}

/// Trial-averaged figures for one algorithm. Each mean is taken over the
/// trials that localized at least one node.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub algorithm: Algorithm,
    pub mean_error: Option<f64>,
    pub mean_hops: Option<f64>,
    pub mean_energy: Option<f64>,
    pub mean_coverage: f64,
    pub trials_with_estimates: usize,
}

fn mean_of(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (n, sum) = values.fold((0usize, 0.0), |(n, s), v| (n + 1, s + v));
    (n > 0).then(|| sum / n as f64)
}

impl ResultsBundle {
    pub fn summaries_for(&self, algorithm: Algorithm) -> impl Iterator<Item = &TrialSummary> + '_ {
        self.summaries.iter().filter(move |s| s.algorithm == algorithm)
    }

    pub fn detail(&self, trial_index: u64, algorithm: Algorithm) -> Option<&TrialDetail> {
        self.details
            .iter()
            .find(|d| d.trial_index == trial_index && d.algorithm == algorithm)
    }

    pub fn aggregate(&self, algorithm: Algorithm) -> Aggregate {
        let rows: Vec<&TrialSummary> = self.summaries_for(algorithm).collect();
        Aggregate {
            algorithm,
            mean_error: mean_of(rows.iter().filter_map(|s| s.mean_error)),
            mean_hops: mean_of(rows.iter().filter_map(|s| s.mean_hops)),
            mean_energy: mean_of(rows.iter().filter_map(|s| s.mean_energy)),
            mean_coverage: mean_of(rows.iter().map(|s| s.coverage)).unwrap_or(0.0),
            trials_with_estimates: rows.iter().filter(|s| s.mean_error.is_some()).count(),
        }
    }
}

/// Localize every unknown of `topology` with `algorithm`.
pub fn localize_unknowns(
    topology: &Topology,
    algorithm: Algorithm,
    hop_size_mode: HopSizeMode,
    energy: &EnergyParams,
) -> Vec<NodeMetrics> {
    let deployment = topology.deployment();
    let dvhop = (algorithm == Algorithm::DvHop).then(|| DvHop::new(topology, hop_size_mode));
    let estimate = |node: usize| -> Result<Estimate, Unlocalizable> {
        match algorithm {
            Algorithm::Grl => grl_localize(topology, node),
            Algorithm::Centroid => centroid_localize(topology, node),
            Algorithm::DvHop => dvhop.as_ref().expect("built above").localize(node),
        }
    };
    deployment
        .unknowns()
        .iter()
        .enumerate()
        .map(|(i, &truth)| match estimate(deployment.unknown_index(i)) {
            Ok(est) => {
                let e = localization_energy(energy, algorithm, est.mean_hops, est.anchors_used);
                NodeMetrics::localized(i, truth, &est, e)
            }
            Err(_) => NodeMetrics::unlocalized(i, truth),
        })
        .collect()
}

/// Run trial `trial_index` for every selected algorithm.
pub fn run_trial(config: &ExperimentConfig, trial_index: u64) -> Vec<(TrialSummary, TrialDetail)> {
    let field = config.field;
    let mut rng = derive_trial_stream(config.master_seed, trial_index);
    let unknowns = deploy_unknowns_uniform(&field, config.n_unknowns, &mut rng);
    let anchor_sets: Vec<Vec<Point2D>> = Algorithm::ALL
        .iter()
        .map(|&alg| {
            config
                .anchor_layout
                .get(alg)
                .place(&field, config.n_anchors, &mut rng)
        })
        .collect();

    config
        .selected_algorithms()
        .into_iter()
        .map(|algorithm| {
            let anchors = anchor_sets[algorithm as usize].clone();
            let deployment = Deployment::new(field, anchors, unknowns.clone())
                .expect("layouts place at least one in-field anchor");
            let comm_range = config.comm_range(algorithm);
            let topology = Topology::build(deployment, comm_range);
            let nodes =
                localize_unknowns(&topology, algorithm, config.dvhop_hop_size, &config.energy);
            let summary = summarize_trial(&nodes, algorithm, config.master_seed, trial_index)
                .unwrap_or_else(|empty| empty.summary);
            let detail = TrialDetail {
                trial_index,
                algorithm,
                deployment: topology.deployment().clone(),
                comm_range,
                nodes,
            };
            (summary, detail)
        })
        .collect()
}

fn assemble(config: &ExperimentConfig, per_trial: Vec<Vec<(TrialSummary, TrialDetail)>>) -> ResultsBundle {
    let (summaries, details) = per_trial.into_iter().flatten().unzip();
    ResultsBundle {
        config: config.clone(),
        summaries,
        details,
    }
}

/// Run all trials, in parallel across trials. Output is identical to
/// [`run_experiment_sequential`].
pub fn run_experiment(config: &ExperimentConfig) -> Result<ResultsBundle, ConfigError> {
    config.validate()?;
    let per_trial: Vec<_> = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect();
    Ok(assemble(config, per_trial))
}

/// Run all trials on the calling thread.
pub fn run_experiment_sequential(config: &ExperimentConfig) -> Result<ResultsBundle, ConfigError> {
    config.validate()?;
    let per_trial: Vec<_> = (0..config.trials as u64)
        .map(|t| run_trial(config, t))
        .collect();
    Ok(assemble(config, per_trial))
}
