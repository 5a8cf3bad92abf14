use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use grl_sim::experiment::{
    default_sweep_hops, load_config, run_experiment, write_energy_sweep_csv, write_field_svg,
    write_pernode_csv, write_summary_csv, ConfigError, ExperimentConfig, OutputError,
};

#[derive(Parser)]
#[command(name = "grl", version, about = "Range-free WSN localization simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the Monte Carlo comparison and write summary.csv.
    Run {
        /// JSON config; defaults are used when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Override master_seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the number of trials.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value = "results")]
        out_dir: PathBuf,
        /// Write a field plot of trial 0 for each algorithm.
        #[arg(long)]
        plot: bool,
        /// Also write per_node.csv.
        #[arg(long)]
        per_node: bool,
    },
    /// Write energy-versus-hop-count curves for h = 1..6.
    Sweep {
        /// JSON config supplying energy parameters.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Anchors involved per localization.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, default_value = "energy_sweep.csv")]
        out: PathBuf,
    },
    /// Check a config file without running anything.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

enum Failure {
    Invalid(String),
    Io(String),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::Io { .. } => Failure::Io(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<OutputError> for Failure {
    fn from(e: OutputError) -> Self {
        Failure::Io(e.to_string())
    }
}

fn config_or_default(path: Option<&Path>) -> Result<ExperimentConfig, ConfigError> {
    match path {
        Some(p) => load_config(p),
        None => Ok(ExperimentConfig::default()),
    }
}

fn fmt_opt(v: Option<f64>, decimals: usize) -> String {
    v.map(|v| format!("{v:.decimals$}")).unwrap_or_else(|| "-".into())
}

fn run(
    config: Option<&Path>,
    seed: Option<u64>,
    trials: Option<usize>,
    out_dir: &Path,
    plot: bool,
    per_node: bool,
) -> Result<(), Failure> {
    let mut config = config_or_default(config)?;
    if let Some(seed) = seed {
        config.master_seed = seed;
    }
    if let Some(trials) = trials {
        config.trials = trials;
    }
    let bundle = run_experiment(&config)?;

    std::fs::create_dir_all(out_dir)
        .map_err(|e| Failure::Io(format!("{}: {e}", out_dir.display())))?;
    write_summary_csv(&bundle.summaries, out_dir.join("summary.csv"))?;
    if per_node {
        write_pernode_csv(&bundle.details, out_dir.join("per_node.csv"))?;
    }
    if plot {
        for alg in config.selected_algorithms() {
            if let Some(detail) = bundle.detail(0, alg) {
                write_field_svg(detail, out_dir.join(format!("field_{alg}_trial0.svg")))?;
            }
        }
    }

    println!(
        "{} trials, seed {}, {} unknowns + {} anchors",
        config.trials, config.master_seed, config.n_unknowns, config.n_anchors
    );
    println!(
        "{:<10} {:>10} {:>10} {:>12} {:>9}",
        "algorithm", "error_m", "hops", "energy_uJ", "coverage"
    );
    for alg in config.selected_algorithms() {
        let agg = bundle.aggregate(alg);
        println!(
            "{:<10} {:>10} {:>10} {:>12} {:>9.3}",
            alg.id(),
            fmt_opt(agg.mean_error, 3),
            fmt_opt(agg.mean_hops, 3),
            fmt_opt(agg.mean_energy, 2),
            agg.mean_coverage
        );
    }
    println!("wrote {}", out_dir.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run {
            config,
            seed,
            trials,
            out_dir,
            plot,
            per_node,
        } => run(config.as_deref(), seed, trials, &out_dir, plot, per_node),
        Command::Sweep { config, n, out } => config_or_default(config.as_deref())
            .map_err(Failure::from)
            .and_then(|c| {
                write_energy_sweep_csv(&c.energy, &default_sweep_hops(), n as usize, &out)?;
                println!("wrote {}", out.display());
                Ok(())
            }),
        Command::Validate { config } => load_config(&config).map_err(Failure::from).map(|_| {
            println!("{}: ok", config.display());
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
