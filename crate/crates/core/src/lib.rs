//! Heuristics for the maximum coverage and maximum connected coverage
//! problems on undirected graphs, run under explicitly enforced levels of
//! topology knowledge.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, experiment
//! sweeps and the command line live in the `netcover` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algorithms;
pub mod generators;
pub mod graph;
pub mod knowledge;
pub mod nodeset;
pub mod oracle;
pub mod rng;

pub use algorithms::{
    run, run_observed, Algorithm, PolicyConfig, RunError, RunResult, SimState, StepOutcome,
    Termination, Zeta,
};
pub use generators::{default_er_probability, gen_barabasi_albert, gen_erdos_renyi, GenSpec, Model};
pub use graph::{Graph, GraphError, NodeId};
pub use knowledge::{AccessEvent, AuditMode, AuditSummary, KnowledgeLevel, KnowledgeView, QueryKind};
pub use nodeset::NodeSet;
pub use oracle::{MinCover, OracleError, OracleResult};
