//! Chordality: elimination orderings, maximal cliques, perfect clique
//! orderings and clique-separator decompositions.

mod cliques;
mod decomposition;
mod ordering;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use cliques::{
    maximal_cliques, maximal_cliques_general, maximal_cliques_general_bounded, maximum_clique,
    DEFAULT_CLIQUE_BOUND,
};
pub use decomposition::{check_decomposition, decompose, Decomposition};
pub use ordering::{check_perfect_ordering, perfect_ordering, CliqueOrdering};

/// Maximum cardinality search. Returns an elimination ordering: the reverse
/// of the visit order. Ties go to the smallest label.
///
/// The result is a perfect elimination ordering iff `g` is chordal.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Position of each vertex in `order`.
pub(crate) fn ranks(order: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    rank
}

/// Neighbours of `v` that come after it in `order`, sorted by label.
pub(crate) fn later_neighbors(g: &Graph, rank: &[usize], v: usize) -> Vec<usize> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&w| rank[w] > rank[v])
        .collect()
}

/// True if every vertex's later neighbours form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let rank = ranks(order);
    order.iter().all(|&v| {
        let later = later_neighbors(g, &rank, v);
        // The earliest later neighbour must see all the others.
        match later.iter().min_by_key(|&&w| rank[w]) {
            None => true,
            Some(&parent) => later
                .iter()
                .all(|&w| w == parent || g.has_edge(parent, w)),
        }
    })
}

pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination_ordering(g, &mcs_order(g))
}

/// Returns `Err(NotChordal)` with a chordless cycle when `g` is not chordal.
pub fn require_chordal(g: &Graph) -> Result<Vec<usize>> {
    let order = mcs_order(g);
    if is_perfect_elimination_ordering(g, &order) {
        Ok(order)
    } else {
        Err(Error::NotChordal {
            cycle: chordless_cycle(g).expect("non-chordal graph has a chordless cycle"),
        })
    }
}

/// A chordless cycle of length at least 4, if one exists.
///
/// Any such cycle passes through some vertex `v` with cycle neighbours `a`,
/// `b`; the rest of the cycle is then an `a`-`b` path avoiding the other
/// neighbours of `v`. A shortest such path is induced.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).iter().copied().collect();
        for (k, &a) in nb.iter().enumerate() {
            for &b in &nb[k + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let blocked = |w: usize| w == v || (w != a && w != b && g.has_edge(v, w));
                if let Some(path) = shortest_path(g, a, b, blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(
    g: &Graph,
    from: usize,
    to: usize,
    blocked: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if prev[y] == usize::MAX && !blocked(y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Maximal cliques of a chordal graph: each vertex together with its later
/// neighbours in a perfect elimination ordering, keeping only the maximal
/// candidates. Cliques are sorted internally and listed in canonical order.
pub fn maximal_cliques_chordal(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let order = require_chordal(g)?;
    Ok(cliques_from_peo(g, &order))
}

pub(crate) fn cliques_from_peo(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let rank = ranks(order);
    let candidates: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            let mut c = later_neighbors(g, &rank, v);
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    // Quadratic containment filter.
    let mut out: Vec<Vec<usize>> = candidates
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            !candidates
                .iter()
                .enumerate()
                .any(|(j, d)| j != *i && d.len() > c.len() && is_subset(c, d))
        })
        .map(|(_, c)| c.clone())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Sorted-slice subset test.
pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}
