use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::perfect_ordering;
use crate::error::{domain, param, Result};
use crate::graph::Graph;

/// A triple `(A, C, B)` of disjoint vertex sets where `C` is a clique that
/// separates `A` from `B`. Sets are sorted and 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub a: Vec<usize>,
    pub c: Vec<usize>,
    pub b: Vec<usize>,
}

impl Decomposition {
    pub fn new(mut a: Vec<usize>, mut c: Vec<usize>, mut b: Vec<usize>) -> Self {
        a.sort_unstable();
        c.sort_unstable();
        b.sort_unstable();
        Decomposition { a, c, b }
    }

    /// Vertices in `A`, then `C`, then `B`.
    pub fn block_order(&self) -> Vec<usize> {
        self.a
            .iter()
            .chain(&self.c)
            .chain(&self.b)
            .copied()
            .collect()
    }
}

/// `(H_{k-1} \ S_k, S_k, R_k)` from the perfect ordering of the maximal
/// cliques. `None` when the graph is complete.
pub fn decompose(g: &Graph) -> Result<Option<Decomposition>> {
    let ordering = perfect_ordering(g)?;
    if !g.is_connected() {
        return domain("decompose needs a connected graph");
    }
    let k = ordering.len();
    if k < 2 {
        return Ok(None);
    }
    let sep = ordering.separators()[k - 1].clone();
    let a: Vec<usize> = ordering.histories()[k - 2]
        .iter()
        .copied()
        .filter(|v| sep.binary_search(v).is_err())
        .collect();
    let b = ordering.residuals()[k - 1].clone();
    Ok(Some(Decomposition::new(a, sep, b)))
}

/// True iff `C` induces a complete subgraph and every path from `A` to `B`
/// meets `C`. `A` and `B` must be nonempty.
pub fn check_decomposition(g: &Graph, d: &Decomposition) -> Result<bool> {
    let n = g.n();
    let mut tag = vec![0u8; n];
    for (set, t) in [(&d.a, 1u8), (&d.c, 2), (&d.b, 3)] {
        for &v in set.iter() {
            if v >= n {
                return param(format!("vertex {} out of range", v + 1));
            }
            if tag[v] != 0 {
                return param(format!("vertex {} appears in two parts", v + 1));
            }
            tag[v] = t;
        }
    }
    if d.a.is_empty() || d.b.is_empty() {
        return Ok(false);
    }
    if !g.is_clique(&d.c) {
        return Ok(false);
    }
    // BFS from A in g minus C.
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = d.a.iter().copied().collect();
    for &v in &d.a {
        seen[v] = true;
    }
    while let Some(x) = queue.pop_front() {
        if tag[x] == 3 {
            return Ok(false);
        }
        for &y in g.neighbors(x) {
            if !seen[y] && tag[y] != 2 {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    Ok(true)
}
