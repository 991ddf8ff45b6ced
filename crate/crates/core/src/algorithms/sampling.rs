use rand::Rng;

use super::{RunError, Zeta};
use crate::graph::NodeId;
use crate::knowledge::KnowledgeView;
use crate::nodeset::NodeSet;

/// Draws one node of `candidates` according to `zeta`.
///
/// `Zeta::Degree` weights each candidate by its degree, normalised over the
/// candidate set. If every candidate has degree zero the draw is uniform.
pub fn sample_zeta<R: Rng + ?Sized>(
    candidates: &NodeSet,
    zeta: Zeta,
    view: &mut KnowledgeView<'_>,
    rng: &mut R,
) -> Result<NodeId, RunError> {
    if candidates.is_empty() {
        return Err(RunError::EmptyCandidates);
    }
    if zeta == Zeta::Degree {
        let weights = view.degree_weights(candidates)?;
        let total: usize = weights.iter().sum();
        if total > 0 {
            let mut r = rng.gen_range(0..total);
            for (i, w) in candidates.iter().zip(weights) {
                if r < w {
                    return Ok(i);
                }
                r -= w;
            }
            unreachable!("weighted draw below total always lands");
        }
    }
    Ok(uniform(candidates, rng))
}

pub(crate) fn uniform<R: Rng + ?Sized>(candidates: &NodeSet, rng: &mut R) -> NodeId {
    let k = rng.gen_range(0..candidates.len());
    candidates.iter().nth(k).expect("index below set length")
}
