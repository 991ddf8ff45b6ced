//! Immutable undirected simple graphs over dense node ids.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use thiserror::Error;

use crate::nodeset::NodeSet;

/// Dense node index in `0..n`.
pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node {node} is not in a graph with {n} nodes")]
    InvalidNode { node: NodeId, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(NodeId, NodeId),
    #[error("operation requires a non-empty node set")]
    EmptySet,
}

/// Undirected graph without self-loops or parallel edges.
///
/// Neighbor lists are sorted ascending and symmetric. The graph cannot be
/// mutated once built, so it can be shared freely between runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: alloc::vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; repeating an edge is an error.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut adjacency = alloc::vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(GraphError::InvalidNode { node, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle on `n >= 3` nodes.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three nodes");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    fn check(&self, i: NodeId) -> Result<(), GraphError> {
        if i < self.node_count() {
            Ok(())
        } else {
            Err(GraphError::InvalidNode {
                node: i,
                n: self.node_count(),
            })
        }
    }

    /// Sorted neighbors of `i`.
    pub fn neighbors(&self, i: NodeId) -> Result<&[NodeId], GraphError> {
        self.check(i)?;
        Ok(&self.adjacency[i])
    }

    /// Unchecked variant of [`Graph::neighbors`] for hot loops; panics on a
    /// bad id.
    #[inline]
    pub fn adj(&self, i: NodeId) -> &[NodeId] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: NodeId) -> Result<usize, GraphError> {
        self.check(i).map(|_| self.adjacency[i].len())
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Neighbors of the set `a` that are not themselves in `a`.
    pub fn neighbors_of_set(&self, a: &NodeSet) -> Result<NodeSet, GraphError> {
        let mut out = NodeSet::new(self.node_count());
        for i in a {
            self.check(i)?;
            for &j in &self.adjacency[i] {
                if !a.contains(j) {
                    out.insert(j);
                }
            }
        }
        Ok(out)
    }

    /// `a` together with all of its neighbors.
    pub fn closed_neighborhood(&self, a: &NodeSet) -> Result<NodeSet, GraphError> {
        let mut out = self.neighbors_of_set(a)?;
        out.union_with(a);
        Ok(out)
    }

    /// Whether the subgraph induced by `s` is connected.
    pub fn is_connected_subset(&self, s: &NodeSet) -> Result<bool, GraphError> {
        let start = s.first().ok_or(GraphError::EmptySet)?;
        for i in s {
            self.check(i)?;
        }
        let mut seen = NodeSet::new(self.node_count());
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if s.contains(v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        Ok(seen.len() == s.len())
    }

    /// Whether the whole graph is connected. The empty graph counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        n == 0 || self.is_connected_subset(&NodeSet::full(n)).unwrap_or(false)
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(n: usize, ids: &[NodeId]) -> NodeSet {
        NodeSet::from_ids(n, ids.iter().copied())
    }

    #[test]
    fn neighbors_examples() {
        let tri = Graph::complete(3);
        assert_eq!(tri.neighbors(1).unwrap(), &[0, 2]);
        let path = Graph::path(4);
        assert_eq!(path.neighbors(0).unwrap(), &[1]);
        let iso = Graph::empty(2);
        assert!(iso.neighbors(0).unwrap().is_empty());
        assert_eq!(
            path.neighbors(4),
            Err(GraphError::InvalidNode { node: 4, n: 4 })
        );
    }

    #[test]
    fn neighbors_of_set_examples() {
        let path = Graph::path(4);
        assert_eq!(path.neighbors_of_set(&set(4, &[1])).unwrap().to_vec(), vec![0, 2]);
        assert!(path.neighbors_of_set(&NodeSet::full(4)).unwrap().is_empty());
        let star = Graph::star(4);
        assert_eq!(star.neighbors_of_set(&set(5, &[1])).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn degree_examples() {
        let star = Graph::star(4);
        assert_eq!(star.degree(0).unwrap(), 4);
        assert_eq!(star.degree(3).unwrap(), 1);
        let tri = Graph::complete(3);
        assert!((0..3).all(|i| tri.degree(i).unwrap() == 2));
        assert!(star.degree(5).is_err());
    }

    #[test]
    fn connected_subset_examples() {
        let path = Graph::path(4);
        assert!(path.is_connected_subset(&set(4, &[0, 1])).unwrap());
        assert!(!path.is_connected_subset(&set(4, &[0, 3])).unwrap());
        assert!(path.is_connected_subset(&set(4, &[2])).unwrap());
        assert_eq!(
            path.is_connected_subset(&NodeSet::new(4)),
            Err(GraphError::EmptySet)
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::InvalidNode { node: 2, n: 2 })
        );
    }

    #[test]
    fn canonical_edges() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
    }
}
