//! Sweep configuration, read from TOML.
//!
//! ```toml
//! master_seed = 2012
//! sizes = [50, 100, 150, 200, 250]
//! instances_per_size = 30
//! initial_nodes_per_graph = 3
//! initial_assignment = "every-instance"   # or "split-instances"
//! budget = 10                             # omit for unlimited
//!
//! [generator]
//! model = "erdos-renyi"                   # or "barabasi-albert"
//! # p = 0.1                               # default min(1, 2 ln n / n)
//! # edges_per_vertex = 2                  # barabasi-albert only
//!
//! [[algorithms]]
//! algorithm = "scp3"
//! alpha = 0.5
//! zeta = "uniform"
//! # level = "node-list-plus-two-hop"      # default: the policy's own level
//! # label = "scp3-a05"                    # default: the algorithm id
//!
//! [output]
//! summary_csv = "summary.csv"
//! detail_csv = "detail.csv"
//! plot = "recruits.svg"
//! ```
//!
//! Unknown keys are rejected.

use std::path::Path;

use netcover_core::{default_er_probability, Algorithm, KnowledgeLevel, Model, PolicyConfig, Zeta};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum InitialAssignment {
    /// Every algorithm runs from every initial node on every instance.
    #[default]
    EveryInstance,
    /// Each instance gets a single initial node, so the instances are split
    /// evenly across the initial-node slots.
    SplitInstances,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    ErdosRenyi,
    BarabasiAlbert,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub model: ModelKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default = "default_edges_per_vertex")]
    pub edges_per_vertex: usize,
}

fn default_edges_per_vertex() -> usize {
    2
}

impl GeneratorConfig {
    pub fn erdos_renyi() -> Self {
        GeneratorConfig {
            model: ModelKind::ErdosRenyi,
            p: None,
            edges_per_vertex: default_edges_per_vertex(),
        }
    }

    pub fn barabasi_albert(edges_per_vertex: usize) -> Self {
        GeneratorConfig {
            model: ModelKind::BarabasiAlbert,
            p: None,
            edges_per_vertex,
        }
    }

    pub fn model_for(&self, n: usize) -> Result<Model, ConfigError> {
        Ok(match self.model {
            ModelKind::ErdosRenyi => Model::ErdosRenyi {
                p: match self.p {
                    Some(p) => p,
                    None => default_er_probability(n)
                        .map_err(|e| ConfigError::Invalid(e.to_string()))?,
                },
            },
            ModelKind::BarabasiAlbert => Model::BarabasiAlbert {
                edges_per_vertex: self.edges_per_vertex,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmConfig {
    pub algorithm: Algorithm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<KnowledgeLevel>,
    #[serde(default)]
    pub zeta: Zeta,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
}

fn default_alpha() -> f64 {
    PolicyConfig::DEFAULT_ALPHA
}

impl AlgorithmConfig {
    pub fn new(algorithm: Algorithm) -> Self {
        AlgorithmConfig {
            algorithm,
            label: None,
            level: None,
            zeta: Zeta::Uniform,
            alpha: default_alpha(),
        }
    }

    pub fn label(&self) -> &str {
        self.label.as_deref().unwrap_or(self.algorithm.id())
    }

    pub fn level(&self) -> KnowledgeLevel {
        self.level.unwrap_or(self.algorithm.native_level())
    }

    pub fn policy(&self, initial: Option<usize>, seed: u64) -> PolicyConfig {
        PolicyConfig {
            algorithm: self.algorithm,
            zeta: self.zeta,
            alpha: self.alpha,
            initial_node: initial,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default = "default_summary")]
    pub summary_csv: String,
    #[serde(default = "default_detail")]
    pub detail_csv: String,
    #[serde(default = "default_plot")]
    pub plot: String,
}

fn default_summary() -> String {
    "summary.csv".into()
}
fn default_detail() -> String {
    "detail.csv".into()
}
fn default_plot() -> String {
    "recruits.svg".into()
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            summary_csv: default_summary(),
            detail_csv: default_detail(),
            plot: default_plot(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub master_seed: u64,
    pub sizes: Vec<usize>,
    #[serde(default = "default_instances")]
    pub instances_per_size: usize,
    #[serde(default = "default_initials")]
    pub initial_nodes_per_graph: usize,
    #[serde(default)]
    pub initial_assignment: InitialAssignment,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    pub generator: GeneratorConfig,
    pub algorithms: Vec<AlgorithmConfig>,
    #[serde(default)]
    pub output: OutputConfig,
}

fn default_instances() -> usize {
    30
}
fn default_initials() -> usize {
    3
}

impl ExperimentConfig {
    /// Five sizes from 50 to 250, 30 instances, three initial nodes, all
    /// six policies at their own levels with uniform sampling and
    /// `alpha = 0.5`, unlimited budget.
    pub fn reference_protocol(generator: GeneratorConfig, master_seed: u64) -> Self {
        ExperimentConfig {
            master_seed,
            sizes: vec![50, 100, 150, 200, 250],
            instances_per_size: default_instances(),
            initial_nodes_per_graph: default_initials(),
            initial_assignment: InitialAssignment::EveryInstance,
            budget: None,
            generator,
            algorithms: Algorithm::ALL.into_iter().map(AlgorithmConfig::new).collect(),
            output: OutputConfig::default(),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let cfg: ExperimentConfig = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: String| Err(ConfigError::Invalid(m));
        if self.sizes.is_empty() {
            return bad("sizes must not be empty".into());
        }
        if let Some(&n) = self.sizes.iter().find(|&&n| n < 1) {
            return bad(format!("graph size {n} must be at least 1"));
        }
        if self.instances_per_size < 1 {
            return bad("instances_per_size must be at least 1".into());
        }
        if self.initial_nodes_per_graph < 1 {
            return bad("initial_nodes_per_graph must be at least 1".into());
        }
        if self.budget == Some(0) {
            return bad("budget must be at least 1; omit it for unlimited".into());
        }
        if self.algorithms.is_empty() {
            return bad("at least one algorithm is required".into());
        }
        for a in &self.algorithms {
            if !(0.0..=1.0).contains(&a.alpha) {
                return bad(format!("alpha {} of {} is outside [0, 1]", a.alpha, a.label()));
            }
        }
        let mut labels: Vec<&str> = self.algorithms.iter().map(|a| a.label()).collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return bad(format!("duplicate algorithm label {:?}", w[0]));
        }
        match self.generator.model {
            ModelKind::ErdosRenyi => {
                if let Some(p) = self.generator.p.filter(|p| !(0.0..=1.0).contains(p)) {
                    return bad(format!("edge probability {p} is outside [0, 1]"));
                }
                if self.generator.p.is_none() && self.sizes.contains(&1) {
                    return bad("the default edge probability needs n >= 2".into());
                }
            }
            ModelKind::BarabasiAlbert => {
                if self.generator.edges_per_vertex < 1 {
                    return bad("edges_per_vertex must be at least 1".into());
                }
                if self.generator.p.is_some() {
                    return bad("p only applies to erdos-renyi".into());
                }
            }
        }
        Ok(())
    }
}
