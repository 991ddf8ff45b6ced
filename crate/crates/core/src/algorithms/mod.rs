//! The six recruiting policies and the loop that drives them.

mod policies;
mod sampling;
mod state;

use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, NodeId};
use crate::knowledge::{AuditMode, AuditSummary, AuditViolation, KnowledgeLevel, KnowledgeView};
use crate::rng::rng_from_seed;

pub use policies::{mcc1_step, mcc2_step, scp1_step, scp2_step, scp3_step, scp4_step};
pub use sampling::sample_zeta;
pub use state::SimState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Algorithm {
    /// Random recruit among uncovered nodes.
    Scp1,
    /// Two-hop greedy.
    Scp2,
    /// Random / two-hop greedy mixture.
    Scp3,
    /// Global greedy.
    Scp4,
    /// Random neighbor of the recruited set.
    Mcc1,
    /// Online myopic connected greedy.
    Mcc2,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Scp1,
        Algorithm::Scp2,
        Algorithm::Scp3,
        Algorithm::Scp4,
        Algorithm::Mcc1,
        Algorithm::Mcc2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Scp1 => "scp1",
            Algorithm::Scp2 => "scp2",
            Algorithm::Scp3 => "scp3",
            Algorithm::Scp4 => "scp4",
            Algorithm::Mcc1 => "mcc1",
            Algorithm::Mcc2 => "mcc2",
        }
    }

    pub fn from_id(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.id() == s)
    }

    /// The information level each policy is designed for.
    pub fn native_level(self) -> KnowledgeLevel {
        match self {
            Algorithm::Scp1 => KnowledgeLevel::NodeList,
            Algorithm::Scp2 => KnowledgeLevel::TwoHop,
            Algorithm::Scp3 => KnowledgeLevel::NodeListPlusTwoHop,
            Algorithm::Scp4 => KnowledgeLevel::Full,
            Algorithm::Mcc1 | Algorithm::Mcc2 => KnowledgeLevel::OneHop,
        }
    }

    /// Whether the policy keeps the recruited set connected.
    pub fn is_connected(self) -> bool {
        matches!(self, Algorithm::Mcc1 | Algorithm::Mcc2)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Sampling distribution for random recruits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Zeta {
    #[default]
    Uniform,
    /// Proportional to degree within the candidate set.
    Degree,
}

impl Zeta {
    pub fn name(self) -> &'static str {
        match self {
            Zeta::Uniform => "uniform",
            Zeta::Degree => "degree",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PolicyConfig {
    pub algorithm: Algorithm,
    pub zeta: Zeta,
    /// Probability of the random branch of the mixture policy.
    pub alpha: f64,
    pub initial_node: Option<NodeId>,
    pub seed: u64,
}

impl PolicyConfig {
    pub const DEFAULT_ALPHA: f64 = 0.5;

    pub fn new(algorithm: Algorithm) -> Self {
        PolicyConfig {
            algorithm,
            zeta: Zeta::Uniform,
            alpha: Self::DEFAULT_ALPHA,
            initial_node: None,
            seed: 0,
        }
    }

    pub fn with_initial(mut self, node: NodeId) -> Self {
        self.initial_node = Some(node);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_zeta(mut self, zeta: Zeta) -> Self {
        self.zeta = zeta;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Termination {
    Budget,
    FullCover,
    /// Uncovered nodes remain but no legal candidate exists.
    Exhausted,
}

impl Termination {
    pub fn name(self) -> &'static str {
        match self {
            Termination::Budget => "budget",
            Termination::FullCover => "full-cover",
            Termination::Exhausted => "exhausted",
        }
    }
}

/// Which branch produced a recruit. Only the mixture policy falls through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Branch {
    Random,
    Greedy,
    RandomFallthrough,
    GreedyFallthrough,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    /// `None` when the step found no candidate.
    pub recruited: Option<NodeId>,
    pub newly_covered: Vec<NodeId>,
    pub termination: Option<Termination>,
    pub branch: Option<Branch>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RunError {
    #[error(transparent)]
    Audit(#[from] AuditViolation),
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("alpha {0} is outside [0, 1]")]
    BadAlpha(f64),
    #[error("initial node {node} is not in a graph with {n} nodes")]
    InvalidInitial { node: NodeId, n: usize },
    #[error("cannot sample from an empty candidate set")]
    EmptyCandidates,
}

/// Trajectory and metrics of one run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub level: KnowledgeLevel,
    pub initial_node: Option<NodeId>,
    pub node_count: usize,
    /// Recruits in order.
    pub recruited: Vec<NodeId>,
    /// `|C|` after each recruit.
    pub cover_sizes: Vec<usize>,
    pub termination: Termination,
    pub audit: AuditSummary,
}

impl RunResult {
    pub fn recruits(&self) -> usize {
        self.recruited.len()
    }

    pub fn final_cover(&self) -> usize {
        self.cover_sizes.last().copied().unwrap_or(0)
    }
}

/// Runs `policy` on `graph` at `level` until full cover, budget or
/// exhaustion. `budget` of `None` means unlimited.
pub fn run(
    graph: &Graph,
    policy: &PolicyConfig,
    level: KnowledgeLevel,
    budget: Option<usize>,
    mode: AuditMode,
) -> Result<RunResult, RunError> {
    run_observed(graph, policy, level, budget, mode, |_, _| {})
}

/// [`run`] with a callback invoked after every step with the view and the
/// step's outcome.
pub fn run_observed<F>(
    graph: &Graph,
    policy: &PolicyConfig,
    level: KnowledgeLevel,
    budget: Option<usize>,
    mode: AuditMode,
    mut observe: F,
) -> Result<RunResult, RunError>
where
    F: FnMut(&KnowledgeView<'_>, &StepOutcome),
{
    if budget == Some(0) {
        return Err(RunError::ZeroBudget);
    }
    if !(0.0..=1.0).contains(&policy.alpha) {
        return Err(RunError::BadAlpha(policy.alpha));
    }
    let n = graph.node_count();
    if let Some(node) = policy.initial_node.filter(|&s| s >= n) {
        return Err(RunError::InvalidInitial { node, n });
    }

    let mut rng = rng_from_seed(policy.seed);
    let mut view = KnowledgeView::new(graph, level, policy.initial_node, mode, budget);
    let mut cover_sizes = Vec::new();

    let termination = loop {
        if view.state().uncovered().is_empty() {
            break Termination::FullCover;
        }
        if view.state().budget_exhausted() {
            break Termination::Budget;
        }
        let outcome = step(policy, &mut view, &mut rng)?;
        observe(&view, &outcome);
        if outcome.recruited.is_none() {
            break Termination::Exhausted;
        }
        cover_sizes.push(view.state().covered().len());
    };

    Ok(RunResult {
        algorithm: policy.algorithm,
        level,
        initial_node: policy.initial_node,
        node_count: n,
        recruited: view.state().order().to_vec(),
        cover_sizes,
        termination,
        audit: view.audit_report(),
    })
}

/// Dispatches one step of `policy.algorithm`.
pub fn step<R: Rng + ?Sized>(
    policy: &PolicyConfig,
    view: &mut KnowledgeView<'_>,
    rng: &mut R,
) -> Result<StepOutcome, RunError> {
    match policy.algorithm {
        Algorithm::Scp1 => scp1_step(view, policy, rng),
        Algorithm::Scp2 => scp2_step(view, policy, rng),
        Algorithm::Scp3 => scp3_step(view, policy, rng),
        Algorithm::Scp4 => scp4_step(view, policy, rng),
        Algorithm::Mcc1 => mcc1_step(view, policy, rng),
        Algorithm::Mcc2 => mcc2_step(view, policy, rng),
    }
}
