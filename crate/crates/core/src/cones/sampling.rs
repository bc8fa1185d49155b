//! Random matrices in the cone of PSD matrices with a given zero pattern.

use rand::Rng;
use rand::SeedableRng;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::SymMatrix;
use crate::chordal::maximal_cliques;
use crate::graph::Graph;

/// Sums of random Gram terms `x x^T`, each supported on one maximal clique.
#[derive(Debug, Clone)]
pub struct CliqueSumSampler {
    n: usize,
    cliques: Vec<Vec<usize>>,
    pub rank_per_clique: usize,
    /// Draw `|x|` instead of `x`, giving entrywise nonnegative samples.
    pub nonnegative: bool,
    /// Adds `identity_boost * I` to every sample.
    pub identity_boost: f64,
}

impl CliqueSumSampler {
    pub fn new(g: &Graph, rank_per_clique: usize) -> Self {
        CliqueSumSampler {
            n: g.n(),
            cliques: maximal_cliques(g),
            rank_per_clique: rank_per_clique.max(1),
            nonnegative: false,
            identity_boost: 0.0,
        }
    }

    pub fn nonnegative(mut self, yes: bool) -> Self {
        self.nonnegative = yes;
        self
    }

    pub fn identity_boost(mut self, eps: f64) -> Self {
        self.identity_boost = eps;
        self
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.n);
        let mut x = Vec::new();
        for clique in &self.cliques {
            for _ in 0..self.rank_per_clique {
                x.clear();
                x.extend(clique.iter().map(|_| {
                    let z: f64 = rng.sample(StandardNormal);
                    if self.nonnegative { z.abs() } else { z }
                }));
                for (a, &i) in clique.iter().enumerate() {
                    for (b, &j) in clique.iter().enumerate().take(a + 1) {
                        m.set(i, j, m.get(i, j) + x[a] * x[b]);
                    }
                }
            }
        }
        if self.identity_boost != 0.0 {
            for i in 0..self.n {
                m.set(i, i, m.get(i, i) + self.identity_boost);
            }
        }
        m
    }
}

/// One clique-sum sample with standard normal Gram vectors.
pub fn random_psd_for_graph(g: &Graph, rank_per_clique: usize, seed: u64) -> SymMatrix {
    CliqueSumSampler::new(g, rank_per_clique).sample(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Gram matrices of vectors `x_1, ..., x_n` in `R^dim` with `x_i ⊥ x_j` for
/// every non-edge. Vertices are processed in a random order; each new
/// vector is a normal draw projected off the span of its earlier
/// non-neighbours, and with probability `drop_probability` it is zero.
///
/// Unlike clique sums these reach matrices of non-chordal patterns that are
/// not sums of clique-supported terms. Off-pattern entries are set to
/// exactly zero after rounding.
#[derive(Debug, Clone)]
pub struct OrthogonalGramSampler {
    g: Graph,
    pub dim: usize,
    pub drop_probability: f64,
}

impl OrthogonalGramSampler {
    pub fn new(g: &Graph, dim: usize, drop_probability: f64) -> Self {
        OrthogonalGramSampler {
            g: g.clone(),
            dim: dim.max(1),
            drop_probability,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> SymMatrix {
        let n = self.g.n();
        let d = self.dim;
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut vecs: Vec<Option<Vec<f64>>> = vec![None; n];
        for (k, &v) in order.iter().enumerate() {
            if rng.random_bool(self.drop_probability) {
                vecs[v] = Some(vec![0.0; d]);
                continue;
            }
            // Orthonormal basis of the earlier non-neighbours' span.
            let mut basis: Vec<Vec<f64>> = Vec::new();
            for &w in &order[..k] {
                if self.g.has_edge(v, w) {
                    continue;
                }
                let mut b = vecs[w].clone().unwrap();
                for q in &basis {
                    let dot = dotp(&b, q);
                    b.iter_mut().zip(q).for_each(|(x, y)| *x -= dot * y);
                }
                let norm = dotp(&b, &b).sqrt();
                if norm > 1e-12 {
                    b.iter_mut().for_each(|x| *x /= norm);
                    basis.push(b);
                }
            }
            let mut x: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
            for _ in 0..2 {
                for q in &basis {
                    let dot = dotp(&x, q);
                    x.iter_mut().zip(q).for_each(|(a, b)| *a -= dot * b);
                }
            }
            if basis.len() >= d {
                x.iter_mut().for_each(|a| *a = 0.0);
            }
            vecs[v] = Some(x);
        }
        let vecs: Vec<Vec<f64>> = vecs.into_iter().map(Option::unwrap).collect();
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                if i == j || self.g.has_edge(i, j) {
                    m.set(i, j, dotp(&vecs[i], &vecs[j]));
                }
            }
        }
        m
    }
}

fn dotp(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{is_psd, DEFAULT_TOL_SCALE};
    use crate::graph::GraphFamily;

    #[test]
    fn single_vertex_and_edgeless() {
        let m = random_psd_for_graph(&Graph::empty(1), 1, 3);
        assert!(m.get(0, 0) >= 0.0);
        let m = random_psd_for_graph(&Graph::empty(4), 2, 3);
        for i in 0..4 {
            assert!(m.get(i, i) >= 0.0);
            for j in 0..i {
                assert_eq!(m.get(i, j), 0.0);
            }
        }
    }

    #[test]
    fn samples_are_psd_and_conform() {
        let g = GraphFamily::Band { n: 7, d: 2 }.generate().unwrap();
        let sampler = CliqueSumSampler::new(&g, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let m = sampler.sample(&mut rng);
            assert!(m.conforms_to_pattern(&g).unwrap());
            assert!(is_psd(&m, DEFAULT_TOL_SCALE).unwrap().is_psd);
        }
    }

    #[test]
    fn nonnegative_option() {
        let g = GraphFamily::Cycle { n: 5 }.generate().unwrap();
        let sampler = CliqueSumSampler::new(&g, 2).nonnegative(true).identity_boost(0.5);
        let m = sampler.sample(&mut ChaCha8Rng::seed_from_u64(2));
        assert!(m.min_entry() >= 0.0);
        assert!((0..5).all(|i| m.get(i, i) >= 0.5));
    }

    #[test]
    fn seeded_reproducibility() {
        let g = GraphFamily::Complete { n: 4 }.generate().unwrap();
        assert_eq!(random_psd_for_graph(&g, 1, 5), random_psd_for_graph(&g, 1, 5));
        assert_ne!(random_psd_for_graph(&g, 1, 5), random_psd_for_graph(&g, 1, 6));
    }

    #[test]
    fn gram_samples_conform() {
        let g = GraphFamily::CompleteBipartite { a: 2, b: 3 }.generate().unwrap();
        let sampler = OrthogonalGramSampler::new(&g, 2, 0.2);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let m = sampler.sample(&mut rng);
            assert!(m.conforms_to_pattern(&g).unwrap());
            assert!(is_psd(&m, DEFAULT_TOL_SCALE).unwrap().is_psd);
        }
    }
}
