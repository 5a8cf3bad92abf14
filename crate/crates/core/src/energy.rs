//! Per-localization energy, `E = m_tx·E_tx·h + m_rx·E_rx·n`.
//!
//! `h` is the node's mean hop count to the anchors it used and `n` the number
//! of those anchors. The per-algorithm multipliers default to GRL sending at
//! 0.75 of the base transmit cost and Centroid paying 1.2 of the base receive
//! cost. Units are model microjoules.

use serde::{Deserialize, Serialize};

use crate::localization::Algorithm;

/// One value per algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmFactors {
    pub grl: f64,
    pub dvhop: f64,
    pub centroid: f64,
}

impl AlgorithmFactors {
    pub const fn uniform(v: f64) -> Self {
        Self {
            grl: v,
            dvhop: v,
            centroid: v,
        }
    }

    pub fn get(&self, algorithm: Algorithm) -> f64 {
        match algorithm {
            Algorithm::Grl => self.grl,
            Algorithm::DvHop => self.dvhop,
            Algorithm::Centroid => self.centroid,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EnergyParams {
    /// µJ per transmitted message.
    pub e_tx: f64,
    /// µJ per received message.
    pub e_rx: f64,
    pub tx_multiplier: AlgorithmFactors,
    pub rx_multiplier: AlgorithmFactors,
}

impl Default for EnergyParams {
    fn default() -> Self {
        Self {
            e_tx: 50.0,
            e_rx: 50.0,
            tx_multiplier: AlgorithmFactors {
                grl: 0.75,
                dvhop: 1.0,
                centroid: 1.0,
            },
            rx_multiplier: AlgorithmFactors {
                grl: 1.0,
                dvhop: 1.0,
                centroid: 1.2,
            },
        }
    }
}

impl EnergyParams {
    /// `(field path, problem)` for every non-positive or non-finite value.
    pub fn problems(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut check = |name: String, v: f64| {
            if !(v.is_finite() && v > 0.0) {
                out.push((name, format!("must be a positive number, got {v}")));
            }
        };
        check("energy.e_tx".into(), self.e_tx);
        check("energy.e_rx".into(), self.e_rx);
        for alg in Algorithm::ALL {
            check(format!("energy.tx_multiplier.{alg}"), self.tx_multiplier.get(alg));
            check(format!("energy.rx_multiplier.{alg}"), self.rx_multiplier.get(alg));
        }
        out
    }
}

/// Energy of one localization attempt with mean hop count `h` over `n` anchors.
pub fn localization_energy(params: &EnergyParams, algorithm: Algorithm, h: f64, n: usize) -> f64 {
    debug_assert!(h >= 0.0, "negative hop count {h}");
    params.tx_multiplier.get(algorithm) * params.e_tx * h
        + params.rx_multiplier.get(algorithm) * params.e_rx * n as f64
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub algorithm: Algorithm,
    pub h: f64,
    pub energy: f64,
}

/// Energy over a grid of hop counts at fixed `n`, algorithm-major.
pub fn energy_hop_sweep(
    params: &EnergyParams,
    algorithms: &[Algorithm],
    h_values: &[f64],
    n: usize,
) -> Vec<SweepPoint> {
    algorithms
        .iter()
        .flat_map(|&algorithm| {
            h_values.iter().map(move |&h| SweepPoint {
                algorithm,
                h,
                energy: localization_energy(params, algorithm, h, n),
            })
        })
        .collect()
}
