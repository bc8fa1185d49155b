use argmin::core::{CostFunction, Error as ArgminError, Executor, State};
use argmin::solver::neldermead::NelderMead;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::cones::{
    bordered_matrix, entrywise_power, is_psd, CliqueSumSampler, OrthogonalGramSampler,
    PowerFamily, PsdVerdict, SymMatrix, DEFAULT_TOL_SCALE, DEFAULT_WITNESS_THRESHOLD,
};
use crate::error::{param, Error, Result};
use crate::graph::{near_complete_embedding, Graph};

/// How a witness matrix was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    RankOneBordered,
    RandomSample,
    OrthogonalGram,
}

/// A PSD matrix supported on `graph` whose power image is certified not PSD.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub graph: Graph,
    pub alpha: f64,
    pub family: PowerFamily,
    pub matrix: SymMatrix,
    pub image_min_eigenvalue: f64,
    /// `max(1, spectral radius)` of the image.
    pub image_scale: f64,
    pub threshold: f64,
    pub construction: Construction,
}

/// Result of re-checking a witness from scratch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub matrix_psd: bool,
    pub conforms: bool,
    pub image_certified_negative: bool,
    pub matrix: PsdVerdict,
    pub image: PsdVerdict,
}

impl WitnessCheck {
    pub fn valid(&self) -> bool {
        self.matrix_psd && self.conforms && self.image_certified_negative
    }
}

impl WitnessReport {
    /// Recomputes every claim: the matrix is PSD within `tol_scale`, has the
    /// graph's zero pattern, and its image has `λmin < -threshold * scale`.
    pub fn verify(&self, tol_scale: f64, threshold: f64) -> Result<WitnessCheck> {
        let matrix = is_psd(&self.matrix, tol_scale)?;
        let conforms = self.matrix.conforms_to_pattern(&self.graph)?;
        let image = is_psd(&entrywise_power(&self.matrix, self.alpha, self.family)?, tol_scale)?;
        Ok(WitnessCheck {
            matrix_psd: matrix.is_psd,
            conforms,
            image_certified_negative: image.certified_negative(threshold),
            matrix,
            image,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<WitnessReport> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

/// Per-strategy draw counts and local refinement effort.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Random `(u, v)` draws for the bordered construction.
    pub bordered: usize,
    /// Clique-sum samples.
    pub random: usize,
    /// Orthogonal Gram samples (odd and even families only).
    pub gram: usize,
    /// Best bordered draws handed to Nelder–Mead.
    pub refine_starts: usize,
    pub refine_iters: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            bordered: 200,
            random: 500,
            gram: 500,
            refine_starts: 4,
            refine_iters: 600,
        }
    }
}

impl SearchBudget {
    /// Every strategy gets `draws` attempts.
    pub fn uniform(draws: usize) -> Self {
        SearchBudget {
            bordered: draws,
            random: draws,
            gram: draws,
            ..SearchBudget::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub budget: SearchBudget,
    pub tol_scale: f64,
    pub threshold: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: SearchBudget::default(),
            tol_scale: DEFAULT_TOL_SCALE,
            threshold: DEFAULT_WITNESS_THRESHOLD,
        }
    }
}

/// Searches for a PSD matrix in the cone of `g` whose `alpha` power image is
/// certified not PSD. Strategies run in order: bordered rank-two witnesses
/// on a largest `K_{s+2}` minus an edge, clique-sum samples, then Gram
/// samples with forced orthogonality on non-edges. `None` means the budget
/// ran out, which is evidence of membership, not proof.
pub fn find_counterexample(
    g: &Graph,
    alpha: f64,
    family: PowerFamily,
    config: &SearchConfig,
    seed: u64,
) -> Result<Option<WitnessReport>> {
    if !alpha.is_finite() {
        return param(format!("exponent must be finite, got {alpha}"));
    }
    if !(config.threshold > 0.0 && config.tol_scale > 0.0) {
        return param("tolerances must be positive");
    }
    if g.n() < 2 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let search = Search { g, alpha, family, config };
    if let Some(w) = search.bordered(&mut rng)? {
        return Ok(Some(w));
    }
    if let Some(w) = search.random(&mut rng)? {
        return Ok(Some(w));
    }
    search.gram(&mut rng)
}

struct Search<'a> {
    g: &'a Graph,
    alpha: f64,
    family: PowerFamily,
    config: &'a SearchConfig,
}

/// Clamp on the log corner scales of bordered witnesses.
const LOG_SCALE_LIMIT: f64 = 8.0;

impl Search<'_> {
    fn report(&self, matrix: SymMatrix, construction: Construction) -> Result<Option<WitnessReport>> {
        let check = WitnessReport {
            graph: self.g.clone(),
            alpha: self.alpha,
            family: self.family,
            matrix,
            image_min_eigenvalue: 0.0,
            image_scale: 1.0,
            threshold: self.config.threshold,
            construction,
        };
        let v = check.verify(self.config.tol_scale, self.config.threshold)?;
        if !v.valid() {
            return Ok(None);
        }
        Ok(Some(WitnessReport {
            image_min_eigenvalue: v.image.min_eigenvalue,
            image_scale: v.image.scale,
            ..check
        }))
    }

    /// Relative minimum eigenvalue of the image, or `None` if the power is
    /// undefined on the matrix.
    fn image_score(&self, m: &SymMatrix) -> Option<f64> {
        let image = entrywise_power(m, self.alpha, self.family).ok()?;
        is_psd(&image, self.config.tol_scale).ok().map(|v| v.relative_min())
    }

    fn bordered<R: Rng>(&self, rng: &mut R) -> Result<Option<WitnessReport>> {
        let emb = near_complete_embedding(self.g)?;
        let s = emb.core.len();
        // Rank-one pairs of size s are super-additive for α ≥ s.
        if s == 0 || self.alpha >= s as f64 || self.config.budget.bordered == 0 {
            return Ok(None);
        }
        let mut index = vec![emb.ends[0]];
        index.extend(&emb.core);
        index.push(emb.ends[1]);
        let local = BorderedProblem {
            s,
            nonnegative: self.family == PowerFamily::Plain,
            search: self,
        };

        let mut scored: Vec<(f64, Vec<f64>)> = Vec::with_capacity(self.config.budget.bordered);
        for _ in 0..self.config.budget.bordered {
            let x: Vec<f64> = (0..2 * s + 2)
                .map(|k| {
                    let z: f64 = rng.sample(StandardNormal);
                    if k >= 2 * s { z.clamp(-3.0, 3.0) } else { z }
                })
                .collect();
            let score = local.score(&x);
            if score < -self.config.threshold {
                if let Some(w) = self.embed(&local, &x, &index)? {
                    return Ok(Some(w));
                }
            }
            scored.push((score, x));
        }
        scored.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (_, start) in scored.into_iter().take(self.config.budget.refine_starts) {
            let best = local.refine(start, self.config.budget.refine_iters);
            if local.score(&best) < -self.config.threshold {
                if let Some(w) = self.embed(&local, &best, &index)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn embed(
        &self,
        local: &BorderedProblem,
        x: &[f64],
        index: &[usize],
    ) -> Result<Option<WitnessReport>> {
        let w = local.matrix(x)?;
        let mut m = SymMatrix::zeros(self.g.n());
        for (a, &i) in index.iter().enumerate() {
            for (b, &j) in index.iter().enumerate().take(a + 1) {
                m.set(i, j, w.get(a, b));
            }
        }
        self.report(m, Construction::RankOneBordered)
    }

    fn random<R: Rng>(&self, rng: &mut R) -> Result<Option<WitnessReport>> {
        let sampler = CliqueSumSampler::new(self.g, 1).nonnegative(self.family == PowerFamily::Plain);
        for _ in 0..self.config.budget.random {
            let m = sampler.sample(rng);
            if self.image_score(&m).is_some_and(|s| s < -self.config.threshold) {
                if let Some(w) = self.report(m, Construction::RandomSample)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn gram<R: Rng>(&self, rng: &mut R) -> Result<Option<WitnessReport>> {
        if self.family == PowerFamily::Plain {
            return Ok(None);
        }
        for k in 0..self.config.budget.gram {
            let sampler = OrthogonalGramSampler::new(self.g, 2 + k % 2, 0.15);
            let m = sampler.sample(rng);
            if self.image_score(&m).is_some_and(|s| s < -self.config.threshold) {
                if let Some(w) = self.report(m, Construction::OrthogonalGram)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }
}

/// Bordered Gram matrix of `√a e_1`, `(u_i/√a, v_i/√b)` and `√b e_2`:
///
/// ```text
/// | a   u^T               0   |
/// | u   uu^T/a + vv^T/b   v   |
/// | 0   v^T               b   |
/// ```
///
/// PSD of rank at most two for every parameter vector
/// `x = (u, v, ln a, ln b)`.
struct BorderedProblem<'a> {
    s: usize,
    nonnegative: bool,
    search: &'a Search<'a>,
}

impl BorderedProblem<'_> {
    fn matrix(&self, x: &[f64]) -> Result<SymMatrix> {
        let s = self.s;
        let fix = |z: f64| if self.nonnegative { z.abs() } else { z };
        let u: Vec<f64> = x[..s].iter().map(|&z| fix(z)).collect();
        let v: Vec<f64> = x[s..2 * s].iter().map(|&z| fix(z)).collect();
        let a = x[2 * s].clamp(-LOG_SCALE_LIMIT, LOG_SCALE_LIMIT).exp();
        let b = x[2 * s + 1].clamp(-LOG_SCALE_LIMIT, LOG_SCALE_LIMIT).exp();
        let mut mid = SymMatrix::zeros(s);
        for i in 0..s {
            for j in 0..=i {
                mid.set(i, j, u[i] * u[j] / a + v[i] * v[j] / b);
            }
        }
        bordered_matrix(&u, &v, &mid, a, b)
    }

    fn score(&self, x: &[f64]) -> f64 {
        self.matrix(x)
            .ok()
            .and_then(|m| self.search.image_score(&m))
            .unwrap_or(1.0)
    }

    fn refine(&self, start: Vec<f64>, iters: u64) -> Vec<f64> {
        let mut simplex = vec![start.clone()];
        for k in 0..start.len() {
            let mut p = start.clone();
            p[k] += if p[k].abs() > 0.5 { 0.25 * p[k] } else { 0.25 };
            simplex.push(p);
        }
        let Ok(solver) = NelderMead::new(simplex).with_sd_tolerance(1e-14) else {
            return start;
        };
        let target = -1.25 * self.search.config.threshold;
        let run = Executor::new(self, solver)
            .configure(|st| st.max_iters(iters).target_cost(target))
            .run();
        match run {
            Ok(res) => res.state().get_best_param().cloned().unwrap_or(start),
            Err(_) => start,
        }
    }
}

impl CostFunction for &BorderedProblem<'_> {
    type Param = Vec<f64>;
    type Output = f64;

    fn cost(&self, x: &Vec<f64>) -> std::result::Result<f64, ArgminError> {
        Ok(self.score(x))
    }
}
