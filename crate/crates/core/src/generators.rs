//! Seeded Erdős–Rényi and Barabási–Albert generators.

use alloc::vec::Vec;

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, NodeId};
use crate::nodeset::NodeSet;
use crate::rng::rng_from_seed;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("graph needs at least {min} nodes, got {n}")]
    TooFewNodes { n: usize, min: usize },
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("edges per vertex must be at least 1")]
    ZeroEdgesPerVertex,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Model {
    ErdosRenyi { p: f64 },
    BarabasiAlbert { edges_per_vertex: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        if self.n < 1 {
            return Err(GenError::TooFewNodes { n: self.n, min: 1 });
        }
        match self.model {
            Model::ErdosRenyi { p } if !(0.0..=1.0).contains(&p) => Err(GenError::BadProbability(p)),
            Model::BarabasiAlbert { edges_per_vertex: 0 } => Err(GenError::ZeroEdgesPerVertex),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph, GenError> {
        self.validate()?;
        Ok(match self.model {
            Model::ErdosRenyi { p } => gen_erdos_renyi(self.n, p, self.seed),
            Model::BarabasiAlbert { edges_per_vertex } => {
                gen_barabasi_albert(self.n, edges_per_vertex, self.seed)
            }
        })
    }
}

/// `min(1, 2 ln(n) / n)`, the edge probability that puts G(n, p) in the
/// connected regime.
pub fn default_er_probability(n: usize) -> Result<f64, GenError> {
    if n < 2 {
        return Err(GenError::TooFewNodes { n, min: 2 });
    }
    let n = n as f64;
    Ok((2.0 * libm::log(n) / n).min(1.0))
}

/// G(n, p). Pairs are visited in the order `(0,1), (0,2), ..., (0,n-1),
/// (1,2), ...` and each consumes exactly one Bernoulli draw from the stream
/// seeded with `seed`.
///
/// Panics if `p` is outside `[0, 1]`; use [`GenSpec::generate`] for a
/// checked call.
pub fn gen_erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pair enumeration yields a simple graph")
}

/// Preferential attachment grown from a single vertex.
///
/// Vertex `v` attaches to `min(v, edges_per_vertex)` distinct earlier
/// vertices. When it has no more than `edges_per_vertex` predecessors it
/// connects to all of them; otherwise targets are drawn one at a time with
/// probability proportional to current degree, among those not yet chosen
/// for `v`. Should every predecessor have degree zero the draw is uniform.
pub fn gen_barabasi_albert(n: usize, edges_per_vertex: usize, seed: u64) -> Graph {
    assert!(edges_per_vertex >= 1, "edges_per_vertex must be positive");
    let mut rng = rng_from_seed(seed);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    // One entry per edge endpoint, so a uniform index is a degree-weighted node.
    let mut endpoints: Vec<NodeId> = Vec::new();
    let mut chosen = NodeSet::new(n);
    let mut picks: Vec<NodeId> = Vec::with_capacity(edges_per_vertex);

    for v in 1..n {
        picks.clear();
        if v <= edges_per_vertex {
            picks.extend(0..v);
        } else {
            while picks.len() < edges_per_vertex {
                let target = if endpoints.is_empty() {
                    rng.gen_range(0..v)
                } else {
                    endpoints[rng.gen_range(0..endpoints.len())]
                };
                if chosen.insert(target) {
                    picks.push(target);
                }
            }
            for &t in &picks {
                chosen.remove(t);
            }
        }
        for &t in &picks {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Graph::from_edges(n, edges).expect("distinct targets yield a simple graph")
}
