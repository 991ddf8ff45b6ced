use alloc::vec::Vec;

use crate::graph::{Graph, NodeId};
use crate::nodeset::NodeSet;

/// Mutable state of one run.
///
/// `covered` is always `recruited ∪ N(recruited)`, `uncovered` its
/// complement, and `frontier` is `N(recruited) \ recruited`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimState {
    pub(crate) recruited: NodeSet,
    pub(crate) covered: NodeSet,
    pub(crate) uncovered: NodeSet,
    pub(crate) frontier: NodeSet,
    pub(crate) order: Vec<NodeId>,
    pub(crate) budget: Option<usize>,
}

impl SimState {
    pub fn new(n: usize, budget: Option<usize>) -> Self {
        SimState {
            recruited: NodeSet::new(n),
            covered: NodeSet::new(n),
            uncovered: NodeSet::full(n),
            frontier: NodeSet::new(n),
            order: Vec::new(),
            budget,
        }
    }

    pub fn recruited(&self) -> &NodeSet {
        &self.recruited
    }

    pub fn covered(&self) -> &NodeSet {
        &self.covered
    }

    pub fn uncovered(&self) -> &NodeSet {
        &self.uncovered
    }

    pub fn frontier(&self) -> &NodeSet {
        &self.frontier
    }

    /// Recruits in the order they were made.
    pub fn order(&self) -> &[NodeId] {
        &self.order
    }

    /// Step counter `t`, equal to the number of recruits so far.
    pub fn step(&self) -> usize {
        self.order.len()
    }

    pub fn budget(&self) -> Option<usize> {
        self.budget
    }

    pub fn budget_exhausted(&self) -> bool {
        self.budget.is_some_and(|k| self.step() >= k)
    }

    /// Adds `i` to the recruited set and returns the nodes it newly covers.
    pub(crate) fn apply_recruit(&mut self, graph: &Graph, i: NodeId) -> Vec<NodeId> {
        debug_assert!(!self.recruited.contains(i), "node {i} recruited twice");
        self.recruited.insert(i);
        self.order.push(i);
        self.frontier.remove(i);
        let mut newly = Vec::new();
        if self.covered.insert(i) {
            self.uncovered.remove(i);
            newly.push(i);
        }
        for &j in graph.adj(i) {
            if self.covered.insert(j) {
                self.uncovered.remove(j);
                newly.push(j);
            }
            if !self.recruited.contains(j) {
                self.frontier.insert(j);
            }
        }
        newly.sort_unstable();
        newly
    }
}
