//! Information levels and the audited view a recruiting policy observes the
//! graph through.
//!
//! Each level fixes two node sets, both recomputed after every recruit:
//!
//! * *nameable* nodes, the ones a policy may recruit (the `revealed` set);
//! * *local* nodes, whose adjacency, degree, observed degree and excess
//!   degree may be read.
//!
//! | level                   | nameable                  | local                     |
//! |-------------------------|---------------------------|---------------------------|
//! | `NodeList`              | `V`                       | `R`                       |
//! | `OneHop`                | `R ∪ N(R) ∪ {s}`          | `R ∪ N(R) ∪ {s}`          |
//! | `TwoHop`                | `R ∪ N(R) ∪ N(N(R)) ∪ {s}`| same as nameable          |
//! | `NodeListPlusTwoHop`    | `V`                       | `R ∪ N(R) ∪ N(N(R)) ∪ {s}`|
//! | `Full`                  | `V`                       | `V`                       |
//!
//! where `s` is the configured initial node. Set-valued queries are legal
//! as follows: the frontier `N(R) \ R` at every level, the uncovered list
//! at `NodeList`, `NodeListPlusTwoHop` and `Full`, the two-hop frontier at
//! `TwoHop`, `NodeListPlusTwoHop` and `Full`. Degree-weighted sampling
//! needs every candidate's degree and is only legal at `Full`; at other
//! levels it is logged as a relaxation.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::algorithms::SimState;
use crate::graph::{Graph, NodeId};
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum KnowledgeLevel {
    NodeList,
    OneHop,
    TwoHop,
    NodeListPlusTwoHop,
    Full,
}

impl KnowledgeLevel {
    pub const ALL: [KnowledgeLevel; 5] = [
        KnowledgeLevel::NodeList,
        KnowledgeLevel::OneHop,
        KnowledgeLevel::TwoHop,
        KnowledgeLevel::NodeListPlusTwoHop,
        KnowledgeLevel::Full,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KnowledgeLevel::NodeList => "node-list",
            KnowledgeLevel::OneHop => "one-hop",
            KnowledgeLevel::TwoHop => "two-hop",
            KnowledgeLevel::NodeListPlusTwoHop => "node-list-plus-two-hop",
            KnowledgeLevel::Full => "full",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == s)
    }

    fn knows_node_list(self) -> bool {
        matches!(
            self,
            KnowledgeLevel::NodeList | KnowledgeLevel::NodeListPlusTwoHop | KnowledgeLevel::Full
        )
    }

    fn sees_two_hops(self) -> bool {
        matches!(
            self,
            KnowledgeLevel::TwoHop | KnowledgeLevel::NodeListPlusTwoHop | KnowledgeLevel::Full
        )
    }
}

impl fmt::Display for KnowledgeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum QueryKind {
    Recruit,
    UncoveredList,
    Frontier,
    TwoHopFrontier,
    Neighbors,
    Degree,
    ObservedDegree,
    ExcessDegree,
    DegreeWeightedSample,
}

impl QueryKind {
    pub const ALL: [QueryKind; 9] = [
        QueryKind::Recruit,
        QueryKind::UncoveredList,
        QueryKind::Frontier,
        QueryKind::TwoHopFrontier,
        QueryKind::Neighbors,
        QueryKind::Degree,
        QueryKind::ObservedDegree,
        QueryKind::ExcessDegree,
        QueryKind::DegreeWeightedSample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QueryKind::Recruit => "recruit",
            QueryKind::UncoveredList => "uncovered-list",
            QueryKind::Frontier => "frontier",
            QueryKind::TwoHopFrontier => "two-hop-frontier",
            QueryKind::Neighbors => "neighbors",
            QueryKind::Degree => "degree",
            QueryKind::ObservedDegree => "observed-degree",
            QueryKind::ExcessDegree => "excess-degree",
            QueryKind::DegreeWeightedSample => "degree-weighted-sample",
        }
    }
}

/// One observation made by a policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AccessEvent {
    pub step: usize,
    pub kind: QueryKind,
    pub node: Option<NodeId>,
    pub legal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum AuditMode {
    /// Record violations and keep going.
    #[default]
    Advisory,
    /// Fail the first illegal query.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("illegal {} query{} at step {} under level {level}", .event.kind.name(), NodeSuffix(.event.node), .event.step)]
pub struct AuditViolation {
    pub level: KnowledgeLevel,
    pub event: AccessEvent,
}

struct NodeSuffix(Option<NodeId>);

impl fmt::Display for NodeSuffix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(i) => write!(f, " on node {i}"),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KindCounts {
    pub legal: usize,
    pub illegal: usize,
}

/// Per-kind tallies of an audit log.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AuditSummary {
    pub level: KnowledgeLevel,
    /// Indexed like [`QueryKind::ALL`].
    pub counts: [KindCounts; 9],
    /// Illegal degree-weighted draws, reported separately because they are
    /// an accepted relaxation rather than a policy bug.
    pub relaxations: usize,
    pub first_violation: Option<AccessEvent>,
}

impl AuditSummary {
    pub fn of(&self, kind: QueryKind) -> KindCounts {
        self.counts[kind as usize]
    }

    pub fn illegal(&self) -> usize {
        self.counts.iter().map(|c| c.illegal).sum()
    }

    pub fn legal(&self) -> usize {
        self.counts.iter().map(|c| c.legal).sum()
    }

    /// A run is level-clean iff it made no illegal query.
    pub fn is_level_clean(&self) -> bool {
        self.illegal() == 0
    }
}

/// Everything a recruiting policy may learn about the graph, with every
/// access logged.
#[derive(Debug, Clone)]
pub struct KnowledgeView<'g> {
    graph: &'g Graph,
    level: KnowledgeLevel,
    mode: AuditMode,
    initial: Option<NodeId>,
    state: SimState,
    nameable: NodeSet,
    local: NodeSet,
    audit: Vec<AccessEvent>,
}

impl<'g> KnowledgeView<'g> {
    /// Fresh view with nothing recruited. `initial`, when given, is
    /// revealed up front; it must be a valid node id.
    pub fn new(
        graph: &'g Graph,
        level: KnowledgeLevel,
        initial: Option<NodeId>,
        mode: AuditMode,
        budget: Option<usize>,
    ) -> Self {
        let n = graph.node_count();
        if let Some(s) = initial {
            assert!(s < n, "initial node {s} outside graph of {n} nodes");
        }
        let mut nameable = if level.knows_node_list() {
            NodeSet::full(n)
        } else {
            NodeSet::new(n)
        };
        let mut local = if level == KnowledgeLevel::Full {
            NodeSet::full(n)
        } else {
            NodeSet::new(n)
        };
        if let Some(s) = initial {
            nameable.insert(s);
            local.insert(s);
        }
        KnowledgeView {
            graph,
            level,
            mode,
            initial,
            state: SimState::new(n, budget),
            nameable,
            local,
            audit: Vec::new(),
        }
    }

    pub fn level(&self) -> KnowledgeLevel {
        self.level
    }

    pub fn mode(&self) -> AuditMode {
        self.mode
    }

    pub fn initial(&self) -> Option<NodeId> {
        self.initial
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    /// The simulator's ground-truth state. Policies read the graph through
    /// the audited accessors instead.
    pub fn state(&self) -> &SimState {
        &self.state
    }

    /// Nodes the policy may currently name.
    pub fn revealed(&self) -> &NodeSet {
        &self.nameable
    }

    /// Nodes whose neighborhood the policy may currently inspect.
    pub fn local(&self) -> &NodeSet {
        &self.local
    }

    pub fn events(&self) -> &[AccessEvent] {
        &self.audit
    }

    fn log(&mut self, kind: QueryKind, node: Option<NodeId>, legal: bool) -> Result<(), AuditViolation> {
        let event = AccessEvent {
            step: self.state.step(),
            kind,
            node,
            legal,
        };
        self.audit.push(event);
        if !legal && self.mode == AuditMode::Strict {
            Err(AuditViolation {
                level: self.level,
                event,
            })
        } else {
            Ok(())
        }
    }

    fn log_local(&mut self, kind: QueryKind, i: NodeId) -> Result<(), AuditViolation> {
        assert!(i < self.node_count(), "node {i} outside graph");
        let legal = self.local.contains(i);
        self.log(kind, Some(i), legal)
    }

    /// Recruits `i` and returns the nodes that became covered.
    pub fn recruit(&mut self, i: NodeId) -> Result<Vec<NodeId>, AuditViolation> {
        assert!(i < self.node_count(), "node {i} outside graph");
        let legal = self.nameable.contains(i);
        self.log(QueryKind::Recruit, Some(i), legal)?;
        let newly = self.state.apply_recruit(self.graph, i);
        self.reveal_around(i);
        Ok(newly)
    }

    fn reveal_around(&mut self, i: NodeId) {
        let g = self.graph;
        let mut ball: Vec<NodeId> = Vec::with_capacity(1 + g.adj(i).len());
        ball.push(i);
        ball.extend_from_slice(g.adj(i));
        if self.level.sees_two_hops() {
            for &j in g.adj(i) {
                ball.extend_from_slice(g.adj(j));
            }
        }
        match self.level {
            KnowledgeLevel::NodeList => {
                self.local.insert(i);
            }
            KnowledgeLevel::OneHop | KnowledgeLevel::TwoHop => {
                for &k in &ball {
                    self.nameable.insert(k);
                    self.local.insert(k);
                }
            }
            KnowledgeLevel::NodeListPlusTwoHop => {
                for &k in &ball {
                    self.local.insert(k);
                }
            }
            KnowledgeLevel::Full => {}
        }
    }

    /// Uncovered nodes `U = V \ (R ∪ N(R))`.
    pub fn uncovered(&mut self) -> Result<NodeSet, AuditViolation> {
        let legal = self.level.knows_node_list();
        self.log(QueryKind::UncoveredList, None, legal)?;
        Ok(self.state.uncovered.clone())
    }

    /// `P = N(R) \ R`.
    pub fn frontier(&mut self) -> Result<NodeSet, AuditViolation> {
        self.log(QueryKind::Frontier, None, true)?;
        Ok(self.state.frontier.clone())
    }

    /// `U ∩ [N(R) ∪ N(N(R))]`, empty while nothing is recruited.
    pub fn two_hop_frontier(&mut self) -> Result<NodeSet, AuditViolation> {
        let legal = self.level.sees_two_hops();
        self.log(QueryKind::TwoHopFrontier, None, legal)?;
        let n = self.node_count();
        let mut out = NodeSet::new(n);
        // N(R) is covered, so only N(N(R)) can contribute uncovered nodes.
        for j in &self.state.frontier {
            for &k in self.graph.adj(j) {
                if self.state.uncovered.contains(k) {
                    out.insert(k);
                }
            }
        }
        Ok(out)
    }

    pub fn neighbors(&mut self, i: NodeId) -> Result<&'g [NodeId], AuditViolation> {
        self.log_local(QueryKind::Neighbors, i)?;
        Ok(self.graph.adj(i))
    }

    pub fn degree(&mut self, i: NodeId) -> Result<usize, AuditViolation> {
        self.log_local(QueryKind::Degree, i)?;
        Ok(self.graph.adj(i).len())
    }

    /// Neighbors of `i` lying in `R ∪ N(R)`.
    pub fn observed_degree(&mut self, i: NodeId) -> Result<usize, AuditViolation> {
        self.log_local(QueryKind::ObservedDegree, i)?;
        Ok(self.count_covered_neighbors(i))
    }

    /// `d(i) - d_obs(i, t)`: neighbors of `i` not yet covered.
    pub fn excess_degree(&mut self, i: NodeId) -> Result<usize, AuditViolation> {
        self.log_local(QueryKind::ExcessDegree, i)?;
        Ok(self.graph.adj(i).len() - self.count_covered_neighbors(i))
    }

    fn count_covered_neighbors(&self, i: NodeId) -> usize {
        self.graph
            .adj(i)
            .iter()
            .filter(|&&j| self.state.covered.contains(j))
            .count()
    }

    /// Degrees of `candidates` in ascending id order, for degree-weighted
    /// sampling. Logged as a single event.
    pub fn degree_weights(&mut self, candidates: &NodeSet) -> Result<Vec<usize>, AuditViolation> {
        let legal = self.level == KnowledgeLevel::Full;
        self.log(QueryKind::DegreeWeightedSample, None, legal)?;
        Ok(candidates.iter().map(|i| self.graph.adj(i).len()).collect())
    }

    pub fn audit_report(&self) -> AuditSummary {
        let mut counts = [KindCounts::default(); 9];
        let mut first_violation = None;
        for e in &self.audit {
            let c = &mut counts[e.kind as usize];
            if e.legal {
                c.legal += 1;
            } else {
                c.illegal += 1;
                first_violation.get_or_insert(*e);
            }
        }
        AuditSummary {
            level: self.level,
            relaxations: counts[QueryKind::DegreeWeightedSample as usize].illegal,
            counts,
            first_violation,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn view(g: &Graph, level: KnowledgeLevel, initial: Option<NodeId>) -> KnowledgeView<'_> {
        KnowledgeView::new(g, level, initial, AuditMode::Strict, None)
    }

    #[test]
    fn reveal_on_recruit_examples() {
        let path = Graph::path(4);
        let mut v = view(&path, KnowledgeLevel::OneHop, Some(0));
        assert_eq!(v.revealed().to_vec(), vec![0]);
        v.recruit(0).unwrap();
        assert_eq!(v.revealed().to_vec(), vec![0, 1]);

        let mut v = view(&path, KnowledgeLevel::TwoHop, Some(0));
        v.recruit(0).unwrap();
        assert_eq!(v.revealed().to_vec(), vec![0, 1, 2]);

        let mut v = view(&path, KnowledgeLevel::Full, None);
        v.recruit(2).unwrap();
        assert_eq!(v.revealed().len(), 4);
    }

    #[test]
    fn recruiting_unrevealed_node_is_a_violation() {
        let path = Graph::path(4);
        let mut v = view(&path, KnowledgeLevel::OneHop, Some(0));
        let err = v.recruit(3).unwrap_err();
        assert_eq!(err.event.kind, QueryKind::Recruit);
        assert_eq!(err.event.node, Some(3));
        assert!(!v.audit_report().is_level_clean());

        let mut v = KnowledgeView::new(&path, KnowledgeLevel::OneHop, Some(0), AuditMode::Advisory, None);
        assert!(v.recruit(3).is_ok());
        assert_eq!(v.audit_report().of(QueryKind::Recruit).illegal, 1);
    }

    #[test]
    fn observed_and_excess_degree_examples() {
        let path = Graph::path(4);
        let mut v = view(&path, KnowledgeLevel::Full, None);
        v.recruit(1).unwrap();
        assert_eq!(v.observed_degree(2).unwrap(), 1);
        assert_eq!(v.observed_degree(0).unwrap(), 1);
        assert_eq!(v.excess_degree(2).unwrap(), 1);
        for i in [0, 2, 3] {
            v.recruit(i).unwrap();
        }
        for i in 0..4 {
            assert_eq!(v.observed_degree(i).unwrap(), path.degree(i).unwrap());
            assert_eq!(v.excess_degree(i).unwrap(), 0);
        }
    }

    #[test]
    fn excess_of_initial_node_before_any_recruit() {
        let star = Graph::star(4);
        let mut v = view(&star, KnowledgeLevel::OneHop, Some(0));
        assert_eq!(v.excess_degree(0).unwrap(), 4);
        assert!(v.excess_degree(1).is_err());
    }

    #[test]
    fn frontier_examples() {
        let path = Graph::path(4);
        let mut v = view(&path, KnowledgeLevel::OneHop, Some(1));
        assert!(v.frontier().unwrap().is_empty());
        v.recruit(1).unwrap();
        assert_eq!(v.frontier().unwrap().to_vec(), vec![0, 2]);

        let k4 = Graph::complete(4);
        let mut v = view(&k4, KnowledgeLevel::OneHop, Some(0));
        v.recruit(0).unwrap();
        assert_eq!(v.frontier().unwrap().to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn two_hop_frontier_examples() {
        let path = Graph::path(5);
        let mut v = view(&path, KnowledgeLevel::TwoHop, Some(0));
        assert!(v.two_hop_frontier().unwrap().is_empty());
        v.recruit(0).unwrap();
        assert_eq!(v.two_hop_frontier().unwrap().to_vec(), vec![2]);

        let k4 = Graph::complete(4);
        let mut v = view(&k4, KnowledgeLevel::TwoHop, Some(0));
        v.recruit(0).unwrap();
        assert!(v.two_hop_frontier().unwrap().is_empty());
    }

    #[test]
    fn two_hop_queries_are_illegal_at_one_hop() {
        let path = Graph::path(5);
        let mut v = view(&path, KnowledgeLevel::OneHop, Some(0));
        v.recruit(0).unwrap();
        let err = v.two_hop_frontier().unwrap_err();
        assert_eq!(err.event.kind, QueryKind::TwoHopFrontier);
        assert_eq!(err.event.step, 1);
    }

    #[test]
    fn degree_weights_only_clean_under_full() {
        let star = Graph::star(3);
        let all = NodeSet::full(4);
        let mut v = KnowledgeView::new(&star, KnowledgeLevel::NodeList, None, AuditMode::Advisory, None);
        assert_eq!(v.degree_weights(&all).unwrap(), vec![3, 1, 1, 1]);
        let report = v.audit_report();
        assert_eq!(report.relaxations, 1);
        assert!(!report.is_level_clean());

        let mut v = view(&star, KnowledgeLevel::Full, None);
        v.degree_weights(&all).unwrap();
        assert!(v.audit_report().is_level_clean());
    }

    #[test]
    fn node_list_local_knowledge_is_recruited_only() {
        let path = Graph::path(4);
        let mut v = view(&path, KnowledgeLevel::NodeList, None);
        v.uncovered().unwrap();
        v.recruit(1).unwrap();
        assert_eq!(v.neighbors(1).unwrap(), &[0, 2]);
        assert!(v.degree(2).is_err());
    }

    #[test]
    fn full_level_is_always_legal() {
        let g = Graph::cycle(6);
        let mut v = view(&g, KnowledgeLevel::Full, None);
        v.uncovered().unwrap();
        v.two_hop_frontier().unwrap();
        for i in 0..6 {
            v.excess_degree(i).unwrap();
            v.neighbors(i).unwrap();
        }
        v.recruit(4).unwrap();
        assert!(v.audit_report().is_level_clean());
        assert_eq!(v.audit_report().legal(), v.events().len());
    }
}
