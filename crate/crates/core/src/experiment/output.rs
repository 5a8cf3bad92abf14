//! CSV emitters. Reals are written with six decimals; absent values are
//! empty cells. Row order follows (trial, algorithm, node).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::runner::TrialDetail;
use crate::energy::{energy_hop_sweep, EnergyParams};
use crate::localization::Algorithm;
use crate::metrics::TrialSummary;

pub const SUMMARY_HEADER: [&str; 8] = [
    "trial",
    "algorithm",
    "seed",
    "mean_error_m",
    "error_std_m",
    "coverage",
    "mean_hops",
    "mean_energy_uJ",
];

pub const PERNODE_HEADER: [&str; 11] = [
    "trial",
    "algorithm",
    "node_id",
    "true_x",
    "true_y",
    "est_x",
    "est_y",
    "error_m",
    "hops",
    "anchors_used",
    "energy_uJ",
];

pub const SWEEP_HEADER: [&str; 3] = ["algorithm", "h", "energy_uJ"];

#[derive(Debug, Error)]
pub enum OutputError {
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", .path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{}: record {record}: {message}", .path.display())]
    Malformed {
        path: PathBuf,
        record: usize,
        message: String,
    },
}

fn real(v: f64) -> String {
    format!("{v:.6}")
}

fn opt(v: Option<f64>) -> String {
    v.map(real).unwrap_or_default()
}

fn with_file<F>(path: &Path, body: F) -> Result<(), OutputError>
where
    F: FnOnce(&mut csv::Writer<BufWriter<File>>) -> csv::Result<()>,
{
    let file = File::create(path).map_err(|source| OutputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut writer = csv::Writer::from_writer(BufWriter::new(file));
    let csv_err = |source| OutputError::Csv {
        path: path.to_path_buf(),
        source,
    };
    body(&mut writer).map_err(csv_err)?;
    writer.flush().map_err(|source| OutputError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_summary<W: Write>(summaries: &[TrialSummary], out: &mut csv::Writer<W>) -> csv::Result<()> {
    out.write_record(SUMMARY_HEADER)?;
    let mut rows: Vec<&TrialSummary> = summaries.iter().collect();
    rows.sort_by_key(|s| (s.trial_index, s.algorithm));
    for s in rows {
        out.write_record([
            s.trial_index.to_string(),
            s.algorithm.id().to_string(),
            s.seed.to_string(),
            opt(s.mean_error),
            opt(s.error_std),
            real(s.coverage),
            opt(s.mean_hops),
            opt(s.mean_energy),
        ])?;
    }
    Ok(())
}

pub fn write_summary_csv(summaries: &[TrialSummary], path: impl AsRef<Path>) -> Result<(), OutputError> {
    with_file(path.as_ref(), |w| write_summary(summaries, w))
}

pub fn write_pernode<W: Write>(details: &[TrialDetail], out: &mut csv::Writer<W>) -> csv::Result<()> {
    out.write_record(PERNODE_HEADER)?;
    let mut sorted: Vec<&TrialDetail> = details.iter().collect();
    sorted.sort_by_key(|d| (d.trial_index, d.algorithm));
    for d in sorted {
        let mut nodes: Vec<_> = d.nodes.iter().collect();
        nodes.sort_by_key(|n| n.node_id);
        for n in nodes {
            out.write_record([
                d.trial_index.to_string(),
                d.algorithm.id().to_string(),
                n.node_id.to_string(),
                real(n.true_position.x()),
                real(n.true_position.y()),
                opt(n.estimate.map(|p| p.x())),
                opt(n.estimate.map(|p| p.y())),
                opt(n.error),
                real(n.hops),
                n.anchors_used.to_string(),
                real(n.energy),
            ])?;
        }
    }
    Ok(())
}

pub fn write_pernode_csv(details: &[TrialDetail], path: impl AsRef<Path>) -> Result<(), OutputError> {
    with_file(path.as_ref(), |w| write_pernode(details, w))
}

/// Hop counts 1..=6 used for the energy-versus-hops curves.
pub fn default_sweep_hops() -> Vec<f64> {
    (1..=6).map(f64::from).collect()
}

pub fn write_energy_sweep<W: Write>(
    params: &EnergyParams,
    h_values: &[f64],
    n: usize,
    out: &mut csv::Writer<W>,
) -> csv::Result<()> {
    out.write_record(SWEEP_HEADER)?;
    for p in energy_hop_sweep(params, &Algorithm::ALL, h_values, n) {
        out.write_record([p.algorithm.id().to_string(), real(p.h), real(p.energy)])?;
    }
    Ok(())
}

pub fn write_energy_sweep_csv(
    params: &EnergyParams,
    h_values: &[f64],
    n: usize,
    path: impl AsRef<Path>,
) -> Result<(), OutputError> {
    with_file(path.as_ref(), |w| write_energy_sweep(params, h_values, n, w))
}

/// Parse a summary CSV written by [`write_summary_csv`].
pub fn read_summary_csv(path: impl AsRef<Path>) -> Result<Vec<TrialSummary>, OutputError> {
    let path = path.as_ref();
    let mut reader = csv::Reader::from_path(path).map_err(|source| OutputError::Csv {
        path: path.to_path_buf(),
        source,
    })?;
    let malformed = |record: usize, message: String| OutputError::Malformed {
        path: path.to_path_buf(),
        record,
        message,
    };

    let header = reader
        .headers()
        .map_err(|source| OutputError::Csv {
            path: path.to_path_buf(),
            source,
        })?
        .clone();
    if header.iter().ne(SUMMARY_HEADER) {
        return Err(malformed(0, format!("unexpected header {header:?}")));
    }

    let mut out = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|source| OutputError::Csv {
            path: path.to_path_buf(),
            source,
        })?;
        let row = i + 1;
        let int = |col: usize| -> Result<u64, OutputError> {
            record[col]
                .parse()
                .map_err(|e| malformed(row, format!("{}: {e}", SUMMARY_HEADER[col])))
        };
        let opt_real = |col: usize| -> Result<Option<f64>, OutputError> {
            match &record[col] {
                "" => Ok(None),
                s => s
                    .parse()
                    .map(Some)
                    .map_err(|e| malformed(row, format!("{}: {e}", SUMMARY_HEADER[col]))),
            }
        };
        out.push(TrialSummary {
            trial_index: int(0)?,
            algorithm: record[1].parse().map_err(|e| malformed(row, e))?,
            seed: int(2)?,
            mean_error: opt_real(3)?,
            error_std: opt_real(4)?,
            coverage: opt_real(5)?.ok_or_else(|| malformed(row, "coverage is empty".into()))?,
            mean_hops: opt_real(6)?,
            mean_energy: opt_real(7)?,
        });
    }
    Ok(out)
}
