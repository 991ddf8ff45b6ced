//! Monte-Carlo sweeps over graph sizes, instances, initial nodes and
//! policies.
//!
//! Seed tree, all derived with [`derive_seed`]:
//!
//! ```text
//! instance = derive_seed(master,   [n, j])
//! graph    = derive_seed(instance, [0])
//! initials = derive_seed(instance, [1])
//! run      = derive_seed(instance, [2, algorithm_index, initial_index])
//! ```

use std::time::Instant;

use netcover_core::rng::{derive_seed, rng_from_seed};
use netcover_core::{run, AuditMode, AuditSummary, GenSpec, Graph, NodeId, RunError, Termination};
use rand::seq::index::sample;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{ConfigError, ExperimentConfig, InitialAssignment};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("graph generation failed: {0}")]
    Generator(#[from] netcover_core::generators::GenError),
    #[error("run {graph_id}/{algorithm} failed: {source}")]
    Run {
        graph_id: String,
        algorithm: String,
        source: RunError,
    },
    #[error("cannot build a worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// One policy run inside a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub graph_id: String,
    pub n: usize,
    pub instance: usize,
    pub algorithm_index: usize,
    pub algorithm: String,
    pub initial_index: usize,
    pub initial_node: Option<NodeId>,
    pub seed: u64,
    pub cover_sizes: Vec<usize>,
    pub final_recruits: usize,
    pub termination: Termination,
    pub audit: AuditSummary,
    /// Seconds; excluded from every CSV so that output stays reproducible.
    pub wall_time: f64,
}

impl RunRecord {
    fn sort_key(&self) -> (usize, usize, usize, usize) {
        (self.n, self.instance, self.algorithm_index, self.initial_index)
    }
}

/// Aggregate over all runs of one policy at one graph size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub algorithm: String,
    pub mean_recruits: f64,
    pub sd_recruits: f64,
    /// All runs, exhausted ones included.
    pub runs: usize,
    pub exhausted_runs: usize,
}

struct Instance {
    n: usize,
    index: usize,
    seed: u64,
    graph: Graph,
    initials: Vec<(usize, NodeId)>,
}

fn build_instance(cfg: &ExperimentConfig, n: usize, index: usize) -> Result<Instance, SweepError> {
    let seed = derive_seed(cfg.master_seed, &[n as u64, index as u64]);
    let spec = GenSpec {
        model: cfg.generator.model_for(n)?,
        n,
        seed: derive_seed(seed, &[0]),
    };
    let graph = spec.generate()?;
    let k = cfg.initial_nodes_per_graph.min(n);
    let mut rng = rng_from_seed(derive_seed(seed, &[1]));
    let drawn: Vec<NodeId> = sample(&mut rng, n, k).into_vec();
    let initials = match cfg.initial_assignment {
        InitialAssignment::EveryInstance => drawn.into_iter().enumerate().collect(),
        InitialAssignment::SplitInstances => {
            let slot = index % k;
            vec![(slot, drawn[slot])]
        }
    };
    Ok(Instance {
        n,
        index,
        seed,
        graph,
        initials,
    })
}

fn run_instance(cfg: &ExperimentConfig, inst: &Instance) -> Result<Vec<RunRecord>, SweepError> {
    let graph_id = format!("n{}-i{}", inst.n, inst.index);
    let mut out = Vec::with_capacity(cfg.algorithms.len() * inst.initials.len());
    for (ai, algo) in cfg.algorithms.iter().enumerate() {
        for &(ii, initial) in &inst.initials {
            let seed = derive_seed(inst.seed, &[2, ai as u64, ii as u64]);
            let policy = algo.policy(Some(initial), seed);
            let start = Instant::now();
            let result = run(&inst.graph, &policy, algo.level(), cfg.budget, AuditMode::Advisory)
                .map_err(|source| SweepError::Run {
                    graph_id: graph_id.clone(),
                    algorithm: algo.label().to_string(),
                    source,
                })?;
            out.push(RunRecord {
                graph_id: graph_id.clone(),
                n: inst.n,
                instance: inst.index,
                algorithm_index: ai,
                algorithm: algo.label().to_string(),
                initial_index: ii,
                initial_node: Some(initial),
                seed,
                final_recruits: result.recruits(),
                cover_sizes: result.cover_sizes,
                termination: result.termination,
                audit: result.audit,
                wall_time: start.elapsed().as_secs_f64(),
            });
        }
    }
    Ok(out)
}

/// Runs every configured policy on every (instance, initial node) pair.
///
/// `workers` of `None` uses rayon's default pool. Output is sorted by
/// (size, instance, algorithm, initial node) whatever the scheduling.
pub fn run_sweep(cfg: &ExperimentConfig, workers: Option<usize>) -> Result<Vec<RunRecord>, SweepError> {
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = cfg
        .sizes
        .iter()
        .flat_map(|&n| (0..cfg.instances_per_size).map(move |j| (n, j)))
        .collect();
    let work = || -> Result<Vec<RunRecord>, SweepError> {
        let batches: Vec<Vec<RunRecord>> = jobs
            .par_iter()
            .map(|&(n, j)| run_instance(cfg, &build_instance(cfg, n, j)?))
            .collect::<Result<_, _>>()?;
        let mut records: Vec<RunRecord> = batches.into_iter().flatten().collect();
        records.sort_by_key(RunRecord::sort_key);
        Ok(records)
    };
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new().num_threads(w).build()?.install(work),
        None => work(),
    }
}

/// Mean and sample standard deviation of recruit counts per (size,
/// algorithm). Exhausted runs are counted but left out of the statistics.
pub fn aggregate(records: &[RunRecord]) -> Vec<SummaryRow> {
    let mut sorted: Vec<&RunRecord> = records.iter().collect();
    sorted.sort_by(|a, b| {
        (a.n, a.algorithm_index, &a.algorithm, a.final_recruits)
            .cmp(&(b.n, b.algorithm_index, &b.algorithm, b.final_recruits))
    });
    sorted
        .chunk_by(|a, b| (a.n, a.algorithm_index, &a.algorithm) == (b.n, b.algorithm_index, &b.algorithm))
        .map(|group| {
            let values: Vec<f64> = group
                .iter()
                .filter(|r| r.termination != Termination::Exhausted)
                .map(|r| r.final_recruits as f64)
                .collect();
            let (mean, sd) = mean_sd(&values);
            SummaryRow {
                n: group[0].n,
                algorithm: group[0].algorithm.clone(),
                mean_recruits: mean,
                sd_recruits: sd,
                runs: group.len(),
                exhausted_runs: group.len() - values.len(),
            }
        })
        .collect()
}

/// Arithmetic mean and sample standard deviation; the deviation is 0 for
/// fewer than two values and both are NaN for none.
pub fn mean_sd(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let k = values.len() as f64;
    let mean = values.iter().sum::<f64>() / k;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
    (mean, (ss / (k - 1.0)).sqrt())
}

/// `(a - b) / b * 100`: how much worse `a` is than `b`, in percent.
pub fn gap_percent(a: f64, b: f64) -> f64 {
    (a - b) / b * 100.0
}

/// Looks up the summary row for `(n, algorithm)`.
pub fn find_row<'a>(rows: &'a [SummaryRow], n: usize, algorithm: &str) -> Option<&'a SummaryRow> {
    rows.iter().find(|r| r.n == n && r.algorithm == algorithm)
}

/// Mean recruits of `algorithm` pooled over every size, weighted by the
/// number of contributing runs.
pub fn pooled_mean(rows: &[SummaryRow], algorithm: &str) -> Option<f64> {
    let (sum, count) = rows
        .iter()
        .filter(|r| r.algorithm == algorithm)
        .map(|r| {
            let k = (r.runs - r.exhausted_runs) as f64;
            (r.mean_recruits * k, k)
        })
        .filter(|(_, k)| *k > 0.0)
        .fold((0.0, 0.0), |(s, c), (x, k)| (s + x, c + k));
    (count > 0.0).then(|| sum / count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{AlgorithmConfig, GeneratorConfig};
    use netcover_core::Algorithm;

    fn small(algos: &[Algorithm]) -> ExperimentConfig {
        let mut c = ExperimentConfig::reference_protocol(GeneratorConfig::erdos_renyi(), 3);
        c.sizes = vec![30];
        c.instances_per_size = 1;
        c.initial_nodes_per_graph = 1;
        c.algorithms = algos.iter().copied().map(AlgorithmConfig::new).collect();
        c
    }

    fn record(n: usize, algorithm: &str, recruits: usize, termination: Termination) -> RunRecord {
        RunRecord {
            graph_id: format!("n{n}"),
            n,
            instance: 0,
            algorithm_index: 0,
            algorithm: algorithm.into(),
            initial_index: 0,
            initial_node: None,
            seed: 0,
            cover_sizes: vec![],
            final_recruits: recruits,
            termination,
            audit: netcover_core::KnowledgeView::new(
                &Graph::empty(1),
                netcover_core::KnowledgeLevel::Full,
                None,
                AuditMode::Advisory,
                None,
            )
            .audit_report(),
            wall_time: 0.0,
        }
    }

    #[test]
    fn one_record_per_algorithm_and_pair() {
        let recs = run_sweep(&small(&[Algorithm::Scp1, Algorithm::Scp4]), Some(1)).unwrap();
        assert_eq!(recs.len(), 2);
    }

    #[test]
    fn reference_protocol_run_count() {
        let c = ExperimentConfig::reference_protocol(GeneratorConfig::erdos_renyi(), 1);
        let per_algorithm = c.sizes.len() * c.instances_per_size * c.initial_nodes_per_graph;
        assert_eq!(per_algorithm, 450);
    }

    #[test]
    fn split_assignment_gives_one_run_per_instance() {
        let mut c = small(&[Algorithm::Mcc2]);
        c.instances_per_size = 6;
        c.initial_nodes_per_graph = 3;
        c.initial_assignment = InitialAssignment::SplitInstances;
        let recs = run_sweep(&c, Some(2)).unwrap();
        assert_eq!(recs.len(), 6);
        let slots: Vec<usize> = recs.iter().map(|r| r.initial_index).collect();
        assert_eq!(slots, vec![0, 1, 2, 0, 1, 2]);
    }

    #[test]
    fn aggregate_examples() {
        let rows = aggregate(&[record(5, "a", 7, Termination::FullCover)]);
        assert_eq!((rows[0].mean_recruits, rows[0].sd_recruits), (7.0, 0.0));
        let rows = aggregate(&[
            record(5, "a", 4, Termination::FullCover),
            record(5, "a", 6, Termination::FullCover),
            record(5, "a", 1, Termination::Exhausted),
        ]);
        assert_eq!(rows[0].mean_recruits, 5.0);
        assert!((rows[0].sd_recruits - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!((rows[0].runs, rows[0].exhausted_runs), (3, 1));
    }

    #[test]
    fn gap_formula() {
        assert!((gap_percent(15.6, 10.0) - 56.0).abs() < 1e-9);
        assert!(gap_percent(9.0, 10.0) < 0.0);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let mut c = small(&Algorithm::ALL);
        c.instances_per_size = 4;
        c.initial_nodes_per_graph = 2;
        let strip = |mut v: Vec<RunRecord>| {
            v.iter_mut().for_each(|r| r.wall_time = 0.0);
            v
        };
        assert_eq!(strip(run_sweep(&c, Some(1)).unwrap()), strip(run_sweep(&c, Some(4)).unwrap()));
    }
}
