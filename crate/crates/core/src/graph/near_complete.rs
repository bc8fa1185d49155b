//! Largest `r` such that `K_r` minus one edge is a (not necessarily induced)
//! subgraph. Two vertices with no edge count as `K_2` minus one edge, so the
//! answer is at least 2 on any graph with two or more vertices.

use std::collections::BTreeSet;

use super::Graph;
use crate::chordal::maximum_clique;
use crate::error::{domain, Error, Result};

/// Vertex limit for the exhaustive oracle.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 20;

/// A concrete copy of `K_r` minus one edge inside a graph: the two `ends`
/// need not be adjacent, every other pair among `ends ∪ core` is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearCompleteEmbedding {
    pub ends: [usize; 2],
    pub core: Vec<usize>,
}

impl NearCompleteEmbedding {
    pub fn order(&self) -> usize {
        self.core.len() + 2
    }
}

/// Exhaustive subset search; an oracle for small graphs.
///
/// Edge counts of all `2^n` vertex subsets are tabulated incrementally and
/// `r` is the largest subset size whose span misses at most one edge.
pub fn max_near_complete_order(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return domain("near-complete order needs at least 2 vertices");
    }
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::Resource(format!(
            "exhaustive search supports at most {BRUTE_FORCE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut count = vec![0u16; 1 << n];
    let mut best = vec![false; n + 1];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        count[mask] = count[rest] + (adj[low] & rest as u32).count_ones() as u16;
        let k = mask.count_ones() as usize;
        if k >= 2 && count[mask] as usize + 1 >= k * (k - 1) / 2 {
            best[k] = true;
        }
    }
    Ok((2..=n).rev().find(|&k| best[k]).unwrap_or(2))
}

/// Same value as [`max_near_complete_order`], computed as
/// `max(ω(G), 2 + max ω(G[N(u) ∩ N(v)]))` over non-adjacent pairs `{u, v}`.
pub fn max_near_complete_order_fast(g: &Graph) -> Result<usize> {
    near_complete_embedding(g).map(|e| e.order())
}

/// Locates a largest copy of `K_r` minus one edge.
pub fn near_complete_embedding(g: &Graph) -> Result<NearCompleteEmbedding> {
    let n = g.n();
    if n < 2 {
        return domain("near-complete order needs at least 2 vertices");
    }
    let omega = maximum_clique(g);
    let mut best = if omega.len() >= 2 {
        NearCompleteEmbedding {
            ends: [omega[0], omega[1]],
            core: omega[2..].to_vec(),
        }
    } else {
        NearCompleteEmbedding {
            ends: [0, 1],
            core: Vec::new(),
        }
    };
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let common: Vec<usize> = g
                .neighbors(u)
                .intersection(g.neighbors(v))
                .copied()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            if common.len() + 2 <= best.order() {
                continue;
            }
            let (sub, map) = g.induced_subgraph(&common)?;
            let core: Vec<usize> = maximum_clique(&sub).into_iter().map(|k| map[k]).collect();
            if core.len() + 2 > best.order() {
                best = NearCompleteEmbedding { ends: [u, v], core };
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn both(g: &Graph) -> (usize, usize) {
        (
            max_near_complete_order(g).unwrap(),
            max_near_complete_order_fast(g).unwrap(),
        )
    }

    #[test]
    fn complete_graphs() {
        for n in 2..9 {
            let g = GraphFamily::Complete { n }.generate().unwrap();
            assert_eq!(both(&g), (n, n));
        }
    }

    #[test]
    fn trees_give_three() {
        for seed in 0..20 {
            let g = GraphFamily::Tree { n: 7, seed }.generate().unwrap();
            assert_eq!(both(&g), (3, 3));
        }
    }

    #[test]
    fn two_isolated_vertices() {
        assert_eq!(both(&Graph::empty(2)), (2, 2));
        assert_eq!(both(&Graph::empty(5)), (2, 2));
    }

    #[test]
    fn small_non_chordal_examples() {
        let c4 = GraphFamily::Cycle { n: 4 }.generate().unwrap();
        assert_eq!(both(&c4), (3, 3));
        let k23 = GraphFamily::CompleteBipartite { a: 2, b: 3 }.generate().unwrap();
        assert_eq!(both(&k23), (3, 3));
        let nc6 = GraphFamily::NearComplete { n: 6 }.generate().unwrap();
        assert_eq!(both(&nc6), (6, 6));
    }

    #[test]
    fn embedding_is_valid() {
        let g = GraphFamily::Band { n: 8, d: 3 }.generate().unwrap();
        let e = near_complete_embedding(&g).unwrap();
        assert_eq!(e.order(), 5);
        assert!(g.is_clique(&e.core));
        for end in e.ends {
            assert!(e.core.iter().all(|&c| g.has_edge(end, c)));
        }
    }

    #[test]
    fn rejects_tiny_graphs() {
        assert!(matches!(
            max_near_complete_order(&Graph::empty(1)),
            Err(Error::Domain(_))
        ));
        assert!(max_near_complete_order_fast(&Graph::empty(0)).is_err());
        assert!(matches!(
            max_near_complete_order(&Graph::empty(21)),
            Err(Error::Resource(_))
        ));
    }
}
