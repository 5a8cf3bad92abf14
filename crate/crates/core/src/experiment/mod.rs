//! Experiment configuration, the trial runner and result emitters.

mod config;
mod output;
mod runner;
mod svg;

pub use config::{
    load_config, AnchorLayouts, BaselineRange, ConfigError, ExperimentConfig, FieldProblem,
    DEFAULT_MASTER_SEED,
};
pub use output::{
    default_sweep_hops, read_summary_csv, write_energy_sweep, write_energy_sweep_csv,
    write_pernode, write_pernode_csv, write_summary, write_summary_csv, OutputError,
    PERNODE_HEADER, SUMMARY_HEADER, SWEEP_HEADER,
};
pub use runner::{
    localize_unknowns, run_experiment, run_experiment_sequential, run_trial, Aggregate,
    ResultsBundle, TrialDetail,
};
pub use svg::{render_field_svg, write_field_svg, UNITS_PER_METER};
