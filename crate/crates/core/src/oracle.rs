//! Exact brute-force coverage solvers for small graphs.
//!
//! Subsets are bitmasks over `u32`, enumerated size by size in colex order
//! (Gosper's hack). Among maximizers the lexicographically smallest sorted
//! node list wins.

use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, NodeId};

/// Largest graph the subset enumerators accept.
pub const MAX_ORACLE_NODES: usize = 24;
/// Largest graph [`min_recruits_full_cover`] accepts.
pub const MAX_MIN_COVER_NODES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} nodes, the brute-force limit is {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OracleResult {
    /// Sorted node ids.
    pub best_set: Vec<NodeId>,
    /// `|S ∪ N(S)|` for `best_set`.
    pub cover_size: usize,
    /// Set when the enumeration was exhaustive.
    pub optimal: bool,
    /// Number of subsets scored.
    pub explored: u64,
}

/// Result of the minimum full-cover search.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum MinCover {
    Found(OracleResult),
    /// No (connected) recruited set covers every node.
    Infeasible { explored: u64 },
}

struct Masks {
    closed: Vec<u32>,
    open: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph, limit: usize) -> Result<Self, OracleError> {
        let n = g.node_count();
        if n > limit {
            return Err(OracleError::TooLarge { n, limit });
        }
        let open: Vec<u32> = (0..n)
            .map(|i| g.adj(i).iter().fold(0u32, |m, &j| m | 1 << j))
            .collect();
        let closed = open.iter().enumerate().map(|(i, m)| m | 1 << i).collect();
        Ok(Masks { closed, open })
    }

    fn cover(&self, mut set: u32) -> u32 {
        let mut c = 0;
        while set != 0 {
            c |= self.closed[set.trailing_zeros() as usize];
            set &= set - 1;
        }
        c
    }

    fn is_connected(&self, set: u32) -> bool {
        if set == 0 {
            return true;
        }
        let mut reached = set & set.wrapping_neg();
        loop {
            let mut grown = reached;
            let mut r = reached;
            while r != 0 {
                grown |= self.open[r.trailing_zeros() as usize] & set;
                r &= r - 1;
            }
            if grown == reached {
                return reached == set;
            }
            reached = grown;
        }
    }
}

fn to_ids(set: u32) -> Vec<NodeId> {
    (0..32).filter(|&i| set & (1 << i) != 0).collect()
}

/// Lexicographic comparison of the sorted member lists.
fn lex_less(a: u32, b: u32) -> bool {
    to_ids(a) < to_ids(b)
}

/// Subsets of `0..n` with exactly `k` members in colex order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0u64 } else { (1u64 << k) - 1 };
    let mut next = if k <= n { Some(first) } else { None };
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < limit).then_some(succ)
        };
        Some(cur as u32)
    })
}

fn best_over(masks: &Masks, n: usize, budget: usize, connected: bool) -> OracleResult {
    let mut best: Option<(u32, u32)> = None;
    let mut explored = 0u64;
    for k in 0..=budget.min(n) {
        for set in combinations(n, k) {
            if connected && !masks.is_connected(set) {
                continue;
            }
            explored += 1;
            let size = masks.cover(set).count_ones();
            let better = match best {
                None => true,
                Some((b, bs)) => size > bs || (size == bs && lex_less(set, b)),
            };
            if better {
                best = Some((set, size));
            }
        }
    }
    let (set, size) = best.unwrap_or((0, 0));
    OracleResult {
        best_set: to_ids(set),
        cover_size: size as usize,
        optimal: true,
        explored,
    }
}

/// Maximum of `|S ∪ N(S)|` over all `S` with `|S| <= budget`.
pub fn brute_force_max_coverage(g: &Graph, budget: usize) -> Result<OracleResult, OracleError> {
    let masks = Masks::new(g, MAX_ORACLE_NODES)?;
    Ok(best_over(&masks, g.node_count(), budget, false))
}

/// As [`brute_force_max_coverage`], restricted to sets inducing a connected
/// subgraph. The empty set counts as connected.
pub fn brute_force_max_connected_cover(g: &Graph, budget: usize) -> Result<OracleResult, OracleError> {
    let masks = Masks::new(g, MAX_ORACLE_NODES)?;
    Ok(best_over(&masks, g.node_count(), budget, true))
}

/// Smallest number of recruits whose cover is the whole graph.
pub fn min_recruits_full_cover(g: &Graph, connected: bool) -> Result<MinCover, OracleError> {
    let masks = Masks::new(g, MAX_MIN_COVER_NODES)?;
    let n = g.node_count();
    let everyone = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut explored = 0u64;
    for k in 0..=n {
        for set in combinations(n, k) {
            if connected && !masks.is_connected(set) {
                continue;
            }
            explored += 1;
            if masks.cover(set) == everyone {
                return Ok(MinCover::Found(OracleResult {
                    best_set: to_ids(set),
                    cover_size: n,
                    optimal: true,
                    explored,
                }));
            }
        }
    }
    Ok(MinCover::Infeasible { explored })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn combinations_count_and_order() {
        let all: Vec<u32> = combinations(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[..3], [0b00011, 0b00101, 0b00110]);
        assert_eq!(combinations(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(combinations(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(combinations(3, 4).count(), 0);
        assert_eq!(combinations(24, 3).count(), 2024);
    }

    #[test]
    fn max_coverage_examples() {
        let p4 = Graph::path(4);
        let r = brute_force_max_coverage(&p4, 1).unwrap();
        assert_eq!((r.cover_size, r.best_set.clone()), (3, vec![1]));
        assert_eq!(brute_force_max_coverage(&p4, 2).unwrap().cover_size, 4);
        assert_eq!(brute_force_max_coverage(&p4, 9).unwrap().cover_size, 4);
        assert!(r.optimal);
    }

    #[test]
    fn lexicographic_tie_break() {
        // {0,2}, {0,3}, {1,2}, {1,3} all cover P4; {0,2} is smallest.
        let r = brute_force_max_coverage(&Graph::path(4), 2).unwrap();
        assert_eq!(r.best_set, vec![0, 2]);
    }

    #[test]
    fn connected_cover_examples() {
        let r = brute_force_max_connected_cover(&Graph::path(4), 2).unwrap();
        assert_eq!(r.cover_size, 4);
        assert_eq!(r.best_set, vec![1, 2]);
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(brute_force_max_connected_cover(&two_edges, 2).unwrap().cover_size, 2);
        let g = Graph::cycle(7);
        assert_eq!(
            brute_force_max_connected_cover(&g, 1).unwrap(),
            brute_force_max_coverage(&g, 1).unwrap()
        );
    }

    #[test]
    fn min_recruits_examples() {
        let found = |m: MinCover| match m {
            MinCover::Found(r) => r.best_set.len(),
            MinCover::Infeasible { .. } => panic!("expected a cover"),
        };
        assert_eq!(found(min_recruits_full_cover(&Graph::star(4), false).unwrap()), 1);
        let p6 = min_recruits_full_cover(&Graph::path(6), false).unwrap();
        assert_eq!(found(p6.clone()), 2);
        if let MinCover::Found(r) = p6 {
            assert_eq!(r.best_set, vec![1, 4]);
        }
        // An arc of k cycle nodes covers k + 2 of them, so C6 needs 4.
        assert_eq!(found(min_recruits_full_cover(&Graph::cycle(6), true).unwrap()), 4);
        assert_eq!(found(min_recruits_full_cover(&Graph::cycle(6), false).unwrap()), 2);
    }

    #[test]
    fn disconnected_graph_has_no_connected_cover() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            min_recruits_full_cover(&g, true).unwrap(),
            MinCover::Infeasible { .. }
        ));
        assert!(matches!(min_recruits_full_cover(&g, false).unwrap(), MinCover::Found(_)));
    }

    #[test]
    fn size_guards() {
        let big = Graph::empty(25);
        assert_eq!(
            brute_force_max_coverage(&big, 1),
            Err(OracleError::TooLarge { n: 25, limit: 24 })
        );
        assert!(min_recruits_full_cover(&Graph::empty(21), false).is_err());
    }

    #[test]
    fn empty_graph() {
        let r = brute_force_max_coverage(&Graph::empty(0), 3).unwrap();
        assert_eq!(r.cover_size, 0);
        assert!(r.best_set.is_empty());
        assert!(matches!(
            min_recruits_full_cover(&Graph::empty(0), true).unwrap(),
            MinCover::Found(_)
        ));
    }
}
