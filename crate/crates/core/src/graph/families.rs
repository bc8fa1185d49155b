use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{param, Result};

/// Parameterised graph families. Vertex `k` in the docs below is 1-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum GraphFamily {
    Complete { n: usize },
    /// `K_n` with the edge `{n-1, n}` removed.
    NearComplete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    /// Uniform labelled tree drawn from a random Prüfer sequence.
    Tree { n: usize, seed: u64 },
    /// Left part `1..=a`, right part `a+1..=a+b`.
    CompleteBipartite { a: usize, b: usize },
    /// Edge `{i, j}` iff `0 < |i - j| <= d`.
    Band { n: usize, d: usize },
    /// Clique on `1..=clique_size`; each of the `independent_size` remaining
    /// vertices is joined to a uniform random set of clique vertices whose
    /// size is uniform in `0..=max_degree`. `max_degree < clique_size` keeps
    /// the clique part a maximal clique.
    Split {
        clique_size: usize,
        independent_size: usize,
        max_degree: usize,
        seed: u64,
    },
    /// Triangle grown by repeatedly stacking a vertex into a random face.
    Apollonian { n: usize, seed: u64 },
    /// Fan triangulation of the `n`-gon: vertex 1 joined to all others plus
    /// the path `2 - 3 - ... - n`.
    MaxOuterplanar { n: usize },
    /// Vertices are inserted one at a time, each joined to a subset of a
    /// uniformly chosen maximal clique of the graph so far; every clique
    /// member is kept with probability `density` (at least one is kept).
    RandomChordal { n: usize, density: f64, seed: u64 },
}

impl GraphFamily {
    /// Short name used on the command line and in reports.
    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Complete { .. } => "complete",
            GraphFamily::NearComplete { .. } => "near-complete",
            GraphFamily::Cycle { .. } => "cycle",
            GraphFamily::Path { .. } => "path",
            GraphFamily::Tree { .. } => "tree",
            GraphFamily::CompleteBipartite { .. } => "complete-bipartite",
            GraphFamily::Band { .. } => "band",
            GraphFamily::Split { .. } => "split",
            GraphFamily::Apollonian { .. } => "apollonian",
            GraphFamily::MaxOuterplanar { .. } => "max-outerplanar",
            GraphFamily::RandomChordal { .. } => "random-chordal",
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GraphFamily::Complete { n } => {
                need(n >= 1, "complete graph needs n >= 1")?;
                Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            }
            GraphFamily::NearComplete { n } => {
                need(n >= 2, "near-complete graph needs n >= 2")?;
                let mut g = GraphFamily::Complete { n }.generate()?;
                g.remove_edge(n - 2, n - 1);
                Ok(g)
            }
            GraphFamily::Cycle { n } => {
                need(n >= 3, "cycle needs n >= 3")?;
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            GraphFamily::Path { n } => {
                need(n >= 1, "path needs n >= 1")?;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            GraphFamily::Tree { n, seed } => {
                need(n >= 1, "tree needs n >= 1")?;
                Ok(prufer_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)))
            }
            GraphFamily::CompleteBipartite { a, b } => {
                need(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1")?;
                Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            }
            GraphFamily::Band { n, d } => {
                need(n >= 1, "band graph needs n >= 1")?;
                need(d <= n, "band graph needs d <= n")?;
                Graph::from_edges(
                    n,
                    (0..n).flat_map(|i| (i + 1..n.min(i + d + 1)).map(move |j| (i, j))),
                )
            }
            GraphFamily::Split {
                clique_size,
                independent_size,
                max_degree,
                seed,
            } => {
                need(clique_size >= 1, "split graph needs a nonempty clique")?;
                need(
                    max_degree < clique_size,
                    "split graph needs max_degree < clique_size",
                )?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut g = Graph::empty(clique_size + independent_size);
                for i in 0..clique_size {
                    for j in i + 1..clique_size {
                        g.add_edge(i, j)?;
                    }
                }
                let clique: Vec<usize> = (0..clique_size).collect();
                for w in clique_size..clique_size + independent_size {
                    let deg = rng.random_range(0..=max_degree);
                    for &c in clique.choose_multiple(&mut rng, deg) {
                        g.add_edge(w, c)?;
                    }
                }
                Ok(g)
            }
            GraphFamily::Apollonian { n, seed } => {
                need(n >= 3, "Apollonian graph needs n >= 3")?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut g = Graph::from_edges(n, [(0, 1), (0, 2), (1, 2)])?;
                // Both sides of the initial triangle are faces.
                let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 2]];
                for v in 3..n {
                    let k = rng.random_range(0..faces.len());
                    let [a, b, c] = faces.swap_remove(k);
                    for u in [a, b, c] {
                        g.add_edge(v, u)?;
                    }
                    faces.extend([[a, b, v], [a, c, v], [b, c, v]]);
                }
                Ok(g)
            }
            GraphFamily::MaxOuterplanar { n } => {
                need(n >= 3, "maximal outerplanar graph needs n >= 3")?;
                Graph::from_edges(n, (1..n).map(|i| (0, i)).chain((2..n).map(|i| (i - 1, i))))
            }
            GraphFamily::RandomChordal { n, density, seed } => {
                need(n >= 1, "random chordal graph needs n >= 1")?;
                need(
                    density > 0.0 && density <= 1.0,
                    "random chordal density must lie in (0, 1]",
                )?;
                Ok(random_chordal(n, density, &mut ChaCha8Rng::seed_from_u64(seed)))
            }
        }
    }
}

fn need(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        param(msg)
    }
}

fn prufer_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    if n == 2 {
        g.add_edge(0, 1).unwrap();
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &s in &seq {
        let leaf = leaves.pop_first().unwrap();
        g.add_edge(leaf, s).unwrap();
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    g.add_edge(last[0], last[1]).unwrap();
    g
}

fn random_chordal(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    for v in 1..n {
        let k = rng.random_range(0..cliques.len());
        let host = cliques[k].clone();
        let mut keep: Vec<usize> = host
            .iter()
            .copied()
            .filter(|_| rng.random_bool(density))
            .collect();
        if keep.is_empty() {
            keep.push(*host.choose(rng).unwrap());
        }
        for &u in &keep {
            g.add_edge(v, u).unwrap();
        }
        if keep.len() == host.len() {
            cliques[k].push(v);
        } else {
            keep.push(v);
            cliques.push(keep);
        }
    }
    g
}
