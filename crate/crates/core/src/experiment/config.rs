use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::deployment::AnchorLayout;
use crate::energy::EnergyParams;
use crate::geometry::FieldSpec;
use crate::localization::{Algorithm, HopSizeMode};
use crate::network::scaled_range;

pub const DEFAULT_MASTER_SEED: u64 = 42;

/// Range used by the DV-Hop and Centroid baselines. GRL always uses `φ·r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaselineRange {
    #[default]
    PhiScaled,
    BaseR,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AnchorLayouts {
    pub grl: AnchorLayout,
    pub dvhop: AnchorLayout,
    pub centroid: AnchorLayout,
}

impl Default for AnchorLayouts {
    fn default() -> Self {
        Self {
            grl: AnchorLayout::sunflower(),
            dvhop: AnchorLayout::Random,
            centroid: AnchorLayout::Random,
        }
    }
}

impl AnchorLayouts {
    pub fn get(&self, algorithm: Algorithm) -> &AnchorLayout {
        match algorithm {
            Algorithm::Grl => &self.grl,
            Algorithm::DvHop => &self.dvhop,
            Algorithm::Centroid => &self.centroid,
        }
    }
}

/// Full parameterization of a Monte Carlo run. Every field is optional in
/// JSON; absent fields take the defaults below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub field: FieldSpec,
    pub n_unknowns: usize,
    pub n_anchors: usize,
    /// Base sensing range `r` in meters.
    pub base_range_r: f64,
    pub anchor_layout: AnchorLayouts,
    pub baseline_range: BaselineRange,
    pub dvhop_hop_size: HopSizeMode,
    pub energy: EnergyParams,
    pub trials: usize,
    pub master_seed: u64,
    /// Algorithms to evaluate. Anchor draws for all three happen regardless.
    pub algorithms: Vec<Algorithm>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            field: FieldSpec::default(),
            n_unknowns: 90,
            n_anchors: 10,
            base_range_r: 10.0,
            anchor_layout: AnchorLayouts::default(),
            baseline_range: BaselineRange::default(),
            dvhop_hop_size: HopSizeMode::default(),
            energy: EnergyParams::default(),
            trials: 50,
            master_seed: DEFAULT_MASTER_SEED,
            algorithms: Algorithm::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldProblem {
    pub field: String,
    pub message: String,
}

impl fmt::Display for FieldProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid config: {}", join_problems(.0))]
    Validation(Vec<FieldProblem>),
}

fn join_problems(problems: &[FieldProblem]) -> String {
    problems
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl ConfigError {
    pub fn problems(&self) -> &[FieldProblem] {
        match self {
            ConfigError::Validation(p) => p,
            _ => &[],
        }
    }
}

impl ExperimentConfig {
    pub fn from_json_str(s: &str) -> Result<Self, ConfigError> {
        let config: Self = serde_json::from_str(s)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let mut problems = Vec::new();
        let mut push = |field: &str, message: String| {
            problems.push(FieldProblem {
                field: field.to_string(),
                message,
            })
        };
        let positive = |v: f64| v.is_finite() && v > 0.0;

        if !positive(self.field.width) {
            push("field.width", format!("must be a positive number, got {}", self.field.width));
        }
        if !positive(self.field.height) {
            push("field.height", format!("must be a positive number, got {}", self.field.height));
        }
        if self.n_unknowns < 1 {
            push("n_unknowns", "must be at least 1".into());
        }
        if self.n_anchors < 3 {
            push(
                "n_anchors",
                format!("must be at least 3 for multilateration, got {}", self.n_anchors),
            );
        }
        if !positive(self.base_range_r) {
            push("base_range_r", format!("must be a positive number, got {}", self.base_range_r));
        }
        for alg in Algorithm::ALL {
            if let Some((name, v)) = self.anchor_layout.get(alg).parameter() {
                if !positive(v) {
                    push(
                        &format!("anchor_layout.{alg}.{name}"),
                        format!("must be a positive number, got {v}"),
                    );
                }
            }
        }
        for (field, message) in self.energy.problems() {
            push(&field, message);
        }
        if self.trials < 1 {
            push("trials", "must be at least 1".into());
        }
        if self.algorithms.is_empty() {
            push("algorithms", "must name at least one algorithm".into());
        }
        let mut sorted = self.algorithms.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != self.algorithms.len() {
            push("algorithms", "contains duplicates".into());
        }

        if problems.is_empty() {
            Ok(())
        } else {
            Err(ConfigError::Validation(problems))
        }
    }

    /// Global communication range `R` for `algorithm`.
    pub fn comm_range(&self, algorithm: Algorithm) -> f64 {
        match (algorithm, self.baseline_range) {
            (Algorithm::Grl, _) | (_, BaselineRange::PhiScaled) => scaled_range(self.base_range_r),
            (_, BaselineRange::BaseR) => self.base_range_r,
        }
    }

    /// Selected algorithms in canonical order.
    pub fn selected_algorithms(&self) -> Vec<Algorithm> {
        let mut algs = self.algorithms.clone();
        algs.sort();
        algs.dedup();
        algs
    }
}

/// Read, parse and validate a JSON config file.
pub fn load_config(path: impl AsRef<Path>) -> Result<ExperimentConfig, ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ExperimentConfig::from_json_str(&text)
}
