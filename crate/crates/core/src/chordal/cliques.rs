use std::collections::BTreeSet;

use super::{cliques_from_peo, is_perfect_elimination_ordering, mcs_order};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex limit for [`maximal_cliques_general`].
pub const DEFAULT_CLIQUE_BOUND: usize = 20;

/// All maximal cliques of an arbitrary graph (Bron–Kerbosch with Tomita
/// pivoting), sorted canonically. Refuses graphs above
/// [`DEFAULT_CLIQUE_BOUND`] vertices.
pub fn maximal_cliques_general(g: &Graph) -> Result<Vec<Vec<usize>>> {
    maximal_cliques_general_bounded(g, DEFAULT_CLIQUE_BOUND)
}

pub fn maximal_cliques_general_bounded(g: &Graph, bound: usize) -> Result<Vec<Vec<usize>>> {
    if g.n() > bound {
        return Err(Error::Resource(format!(
            "maximal clique enumeration limited to {bound} vertices, got {}",
            g.n()
        )));
    }
    Ok(bron_kerbosch(g))
}

/// Maximal cliques by the cheapest available route: elimination ordering
/// for chordal graphs, Bron–Kerbosch otherwise. No size bound.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let order = mcs_order(g);
    if is_perfect_elimination_ordering(g, &order) {
        cliques_from_peo(g, &order)
    } else {
        bron_kerbosch(g)
    }
}

/// A largest clique; ties resolve to the canonically smallest one. Empty
/// for the graph with no vertices.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for c in maximal_cliques(g) {
        if c.len() > best.len() {
            best = c;
        }
    }
    best
}

fn bron_kerbosch(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let p: BTreeSet<usize> = (0..g.n()).collect();
    expand(g, &mut Vec::new(), p, BTreeSet::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (p.intersection(g.neighbors(u)).count(), std::cmp::Reverse(u)))
        .unwrap();
    let candidates: Vec<usize> = p.difference(g.neighbors(pivot)).copied().collect();
    for v in candidates {
        let nb = g.neighbors(v);
        r.push(v);
        expand(
            g,
            r,
            p.intersection(nb).copied().collect(),
            x.intersection(nb).copied().collect(),
            out,
        );
        r.pop();
        p.remove(&v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    #[test]
    fn general_examples() {
        let c4 = GraphFamily::Cycle { n: 4 }.generate().unwrap();
        assert_eq!(
            maximal_cliques_general(&c4).unwrap(),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        let k5 = GraphFamily::Complete { n: 5 }.generate().unwrap();
        assert_eq!(maximal_cliques_general(&k5).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        let k22 = GraphFamily::CompleteBipartite { a: 2, b: 2 }.generate().unwrap();
        assert_eq!(maximal_cliques_general(&k22).unwrap().len(), 4);
    }

    #[test]
    fn bound_is_enforced() {
        let g = Graph::empty(21);
        assert!(matches!(maximal_cliques_general(&g), Err(Error::Resource(_))));
        assert_eq!(maximal_cliques_general_bounded(&g, 30).unwrap().len(), 21);
    }

    #[test]
    fn maximum_clique_of_band() {
        let g = GraphFamily::Band { n: 9, d: 3 }.generate().unwrap();
        assert_eq!(maximum_clique(&g), vec![0, 1, 2, 3]);
        assert!(maximum_clique(&Graph::empty(0)).is_empty());
        assert_eq!(maximum_clique(&Graph::empty(3)), vec![0]);
    }
}
