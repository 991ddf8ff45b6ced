//! File formats, experiment sweeps and reporting on top of `netcover-core`.

pub mod config;
pub mod edgelist;
pub mod experiment;
pub mod plot;
pub mod report;

pub use config::ExperimentConfig;
pub use edgelist::{load_edge_list, write_edge_list};
pub use experiment::{aggregate, gap_percent, run_sweep, RunRecord, SummaryRow};
