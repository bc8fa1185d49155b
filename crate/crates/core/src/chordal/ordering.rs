use serde::{Deserialize, Serialize};

use super::{cliques_from_peo, is_subset, ranks, require_chordal};
use crate::error::Result;
use crate::graph::Graph;

/// An ordered sequence of vertex sets `C_1, ..., C_k` with histories
/// `H_j = C_1 ∪ ... ∪ C_j`, residuals `R_j = C_j \ H_{j-1}` and separators
/// `S_j = H_{j-1} ∩ C_j`. All sets are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "OrderingRepr", try_from = "OrderingRepr")]
pub struct CliqueOrdering {
    cliques: Vec<Vec<usize>>,
    histories: Vec<Vec<usize>>,
    residuals: Vec<Vec<usize>>,
    separators: Vec<Vec<usize>>,
}

impl CliqueOrdering {
    pub fn from_sets(sets: Vec<Vec<usize>>) -> Self {
        let mut cliques = sets;
        for c in &mut cliques {
            c.sort_unstable();
            c.dedup();
        }
        let mut histories = Vec::with_capacity(cliques.len());
        let mut residuals = Vec::with_capacity(cliques.len());
        let mut separators = Vec::with_capacity(cliques.len());
        let mut history: Vec<usize> = Vec::new();
        for c in &cliques {
            let (sep, res): (Vec<usize>, Vec<usize>) =
                c.iter().partition(|v| history.binary_search(v).is_ok());
            history.extend(&res);
            history.sort_unstable();
            separators.push(sep);
            residuals.push(res);
            histories.push(history.clone());
        }
        CliqueOrdering {
            cliques,
            histories,
            residuals,
            separators,
        }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn histories(&self) -> &[Vec<usize>] {
        &self.histories
    }

    pub fn residuals(&self) -> &[Vec<usize>] {
        &self.residuals
    }

    pub fn separators(&self) -> &[Vec<usize>] {
        &self.separators
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ordering serialization cannot fail")
    }
}

/// A perfect ordering of the maximal cliques of a chordal graph.
///
/// Cliques are keyed by the elimination rank of their first-eliminated
/// vertex and listed latest first. The result is checked; if the check ever
/// fails, a maximum-weight clique tree built with Prim's algorithm supplies
/// the order instead.
pub fn perfect_ordering(g: &Graph) -> Result<CliqueOrdering> {
    let order = require_chordal(g)?;
    let rank = ranks(&order);
    let mut cliques = cliques_from_peo(g, &order);
    cliques.sort_by_key(|c| std::cmp::Reverse(c.iter().map(|&v| rank[v]).min().unwrap()));
    let ordering = CliqueOrdering::from_sets(cliques);
    if check_perfect_ordering(g, &ordering) {
        return Ok(ordering);
    }
    Ok(clique_tree_ordering(ordering.cliques))
}

/// Prim's algorithm on clique-intersection sizes; the visit order of a
/// maximum-weight spanning tree satisfies the running intersection property.
pub(crate) fn clique_tree_ordering(cliques: Vec<Vec<usize>>) -> CliqueOrdering {
    let k = cliques.len();
    if k == 0 {
        return CliqueOrdering::from_sets(cliques);
    }
    let overlap = |a: &[usize], b: &[usize]| a.iter().filter(|v| b.binary_search(v).is_ok()).count();
    let mut in_tree = vec![false; k];
    let mut best: Vec<(usize, usize)> = vec![(0, 0); k];
    let mut visit = Vec::with_capacity(k);
    in_tree[0] = true;
    visit.push(0);
    for j in 1..k {
        best[j] = (overlap(&cliques[0], &cliques[j]), 0);
    }
    for _ in 1..k {
        let next = (0..k)
            .filter(|&j| !in_tree[j])
            .max_by(|&a, &b| best[a].0.cmp(&best[b].0).then(b.cmp(&a)))
            .unwrap();
        in_tree[next] = true;
        visit.push(next);
        for j in 0..k {
            if !in_tree[j] {
                let w = overlap(&cliques[next], &cliques[j]);
                if w > best[j].0 {
                    best[j] = (w, next);
                }
            }
        }
    }
    CliqueOrdering::from_sets(visit.into_iter().map(|i| cliques[i].clone()).collect())
}

/// Independent check of both perfect-ordering conditions, recomputing the
/// separators directly from the clique list: every `S_i` (`i > 1`) lies in
/// some earlier clique, and every `S_i` induces a complete subgraph. Each
/// listed set must also be a clique of `g`.
pub fn check_perfect_ordering(g: &Graph, ordering: &CliqueOrdering) -> bool {
    let cliques = &ordering.cliques;
    for (i, c) in cliques.iter().enumerate() {
        if c.iter().any(|&v| v >= g.n()) || !g.is_clique(c) {
            return false;
        }
        let sep: Vec<usize> = c
            .iter()
            .copied()
            .filter(|v| cliques[..i].iter().any(|d| d.contains(v)))
            .collect();
        if sep != ordering.separators[i] {
            return false;
        }
        if !g.is_clique(&sep) {
            return false;
        }
        if i > 0 && !cliques[..i].iter().any(|d| is_subset(&sep, d)) {
            return false;
        }
    }
    true
}

#[derive(Serialize, Deserialize)]
struct OrderingRepr {
    cliques: Vec<Vec<usize>>,
    separators: Vec<Vec<usize>>,
    residuals: Vec<Vec<usize>>,
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter()
        .map(|s| s.iter().map(|v| v + 1).collect())
        .collect()
}

impl From<CliqueOrdering> for OrderingRepr {
    fn from(o: CliqueOrdering) -> Self {
        OrderingRepr {
            cliques: one_based(&o.cliques),
            separators: one_based(&o.separators),
            residuals: one_based(&o.residuals),
        }
    }
}

impl TryFrom<OrderingRepr> for CliqueOrdering {
    type Error = String;

    fn try_from(r: OrderingRepr) -> std::result::Result<Self, String> {
        if r.cliques.iter().flatten().any(|&v| v == 0) {
            return Err("vertex labels are 1-based".into());
        }
        let o = CliqueOrdering::from_sets(
            r.cliques
                .iter()
                .map(|c| c.iter().map(|v| v - 1).collect())
                .collect(),
        );
        if one_based(&o.separators) != r.separators || one_based(&o.residuals) != r.residuals {
            return Err("separators or residuals inconsistent with cliques".into());
        }
        Ok(o)
    }
}
