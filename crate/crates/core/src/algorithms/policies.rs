//! One step of each recruiting policy.
//!
//! A step chooses a node through the [`KnowledgeView`], recruits it, and
//! reports what changed. Every argmax breaks ties toward the smallest id.

use rand::Rng;

use super::sampling::{sample_zeta, uniform};
use super::{Branch, PolicyConfig, RunError, StepOutcome, Termination};
use crate::graph::NodeId;
use crate::knowledge::KnowledgeView;
use crate::nodeset::NodeSet;

fn recruit(view: &mut KnowledgeView<'_>, i: NodeId, branch: Option<Branch>) -> Result<StepOutcome, RunError> {
    let newly_covered = view.recruit(i)?;
    let state = view.state();
    let termination = if state.uncovered().is_empty() {
        Some(Termination::FullCover)
    } else if state.budget_exhausted() {
        Some(Termination::Budget)
    } else {
        None
    };
    Ok(StepOutcome {
        recruited: Some(i),
        newly_covered,
        termination,
        branch,
    })
}

fn exhausted() -> StepOutcome {
    StepOutcome {
        recruited: None,
        newly_covered: alloc::vec::Vec::new(),
        termination: Some(Termination::Exhausted),
        branch: None,
    }
}

/// Candidate with the largest excess degree, smallest id on ties.
fn argmax_excess(view: &mut KnowledgeView<'_>, candidates: &NodeSet) -> Result<Option<NodeId>, RunError> {
    let mut best: Option<(NodeId, usize)> = None;
    for i in candidates {
        let e = view.excess_degree(i)?;
        if best.is_none_or(|(_, b)| e > b) {
            best = Some((i, e));
        }
    }
    Ok(best.map(|(i, _)| i))
}

/// Random recruit from the uncovered set.
fn random_uncovered<R: Rng + ?Sized>(
    view: &mut KnowledgeView<'_>,
    cfg: &PolicyConfig,
    rng: &mut R,
) -> Result<Option<NodeId>, RunError> {
    let u = view.uncovered()?;
    if u.is_empty() {
        return Ok(None);
    }
    sample_zeta(&u, cfg.zeta, view, rng).map(Some)
}

/// Two-hop greedy choice. With nothing recruited yet this is the
/// configured initial node, if any.
fn two_hop_greedy(view: &mut KnowledgeView<'_>) -> Result<Option<NodeId>, RunError> {
    if view.state().recruited().is_empty() {
        return Ok(view.initial());
    }
    let frontier = view.two_hop_frontier()?;
    argmax_excess(view, &frontier)
}

/// First recruit of the connected policies: the initial node, else a
/// `zeta` draw over the uncovered set.
fn connected_seed<R: Rng + ?Sized>(
    view: &mut KnowledgeView<'_>,
    cfg: &PolicyConfig,
    rng: &mut R,
) -> Result<StepOutcome, RunError> {
    match view.initial() {
        Some(s) => recruit(view, s, None),
        None => match random_uncovered(view, cfg, rng)? {
            Some(i) => recruit(view, i, None),
            None => Ok(exhausted()),
        },
    }
}

/// Random: a `zeta` draw over the uncovered nodes.
pub fn scp1_step<R: Rng + ?Sized>(
    view: &mut KnowledgeView<'_>,
    cfg: &PolicyConfig,
    rng: &mut R,
) -> Result<StepOutcome, RunError> {
    match random_uncovered(view, cfg, rng)? {
        Some(i) => recruit(view, i, Some(Branch::Random)),
        None => Ok(exhausted()),
    }
}

/// Two-hop greedy: the uncovered node within distance two of the recruited
/// set with the most uncovered neighbors.
pub fn scp2_step<R: Rng + ?Sized>(
    view: &mut KnowledgeView<'_>,
    cfg: &PolicyConfig,
    rng: &mut R,
) -> Result<StepOutcome, RunError> {
    if let Some(i) = two_hop_greedy(view)? {
        return recruit(view, i, Some(Branch::Greedy));
    }
    if view.state().recruited().is_empty() {
        if let Some(i) = random_uncovered(view, cfg, rng)? {
            return recruit(view, i, Some(Branch::Random));
        }
    }
    Ok(exhausted())
}

/// Mixture: with probability `alpha` a random recruit, otherwise the
/// two-hop greedy one. A branch with no candidate hands over to the other.
pub fn scp3_step<R: Rng + ?Sized>(
    view: &mut KnowledgeView<'_>,
    cfg: &PolicyConfig,
    rng: &mut R,
) -> Result<StepOutcome, RunError> {
    let random_first = rng.gen_bool(cfg.alpha);
    if random_first {
        if let Some(i) = random_uncovered(view, cfg, rng)? {
            return recruit(view, i, Some(Branch::Random));
        }
        if let Some(i) = two_hop_greedy(view)? {
            return recruit(view, i, Some(Branch::GreedyFallthrough));
        }
    } else {
        if let Some(i) = two_hop_greedy(view)? {
            return recruit(view, i, Some(Branch::Greedy));
        }
        if let Some(i) = random_uncovered(view, cfg, rng)? {
            return recruit(view, i, Some(Branch::RandomFallthrough));
        }
    }
    Ok(exhausted())
}

/// Global greedy over all uncovered nodes.
pub fn scp4_step<R: Rng + ?Sized>(
    view: &mut KnowledgeView<'_>,
    _cfg: &PolicyConfig,
    _rng: &mut R,
) -> Result<StepOutcome, RunError> {
    let u = view.uncovered()?;
    match argmax_excess(view, &u)? {
        Some(i) => recruit(view, i, Some(Branch::Greedy)),
        None => Ok(exhausted()),
    }
}

/// Random neighbor: a uniform draw from `P = N(R) \ R`.
pub fn mcc1_step<R: Rng + ?Sized>(
    view: &mut KnowledgeView<'_>,
    cfg: &PolicyConfig,
    rng: &mut R,
) -> Result<StepOutcome, RunError> {
    if view.state().recruited().is_empty() {
        return connected_seed(view, cfg, rng);
    }
    let p = view.frontier()?;
    if p.is_empty() {
        return Ok(exhausted());
    }
    let j = uniform(&p, rng);
    recruit(view, j, Some(Branch::Random))
}

/// Online myopic: the node of `P = N(R) \ R` with the largest excess degree.
pub fn mcc2_step<R: Rng + ?Sized>(
    view: &mut KnowledgeView<'_>,
    cfg: &PolicyConfig,
    rng: &mut R,
) -> Result<StepOutcome, RunError> {
    if view.state().recruited().is_empty() {
        return connected_seed(view, cfg, rng);
    }
    let p = view.frontier()?;
    match argmax_excess(view, &p)? {
        Some(j) => recruit(view, j, Some(Branch::Greedy)),
        None => Ok(exhausted()),
    }
}
