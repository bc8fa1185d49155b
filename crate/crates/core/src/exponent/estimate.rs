use serde::{Deserialize, Serialize};

use super::hset::Lattice;
use super::search::{find_counterexample, SearchConfig, WitnessReport};
use crate::cones::PowerFamily;
use crate::error::{domain, param, Result};
use crate::graph::Graph;

/// Default spacing of the exponent grid.
pub const DEFAULT_GRID_STEP: f64 = 1.0 / 16.0;

/// Numeric bracket `[lower, upper]` for a critical exponent.
///
/// `lower` is backed by a verified witness (or is 0 when none was found) and
/// is a lower bound whenever that witness verifies. `upper` is heuristic:
/// it rests on failing to find witnesses above it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericBracket {
    pub lower: f64,
    pub upper: f64,
    pub upper_is_heuristic: bool,
    pub grid_points_tested: usize,
    pub witness_alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

impl NumericBracket {
    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

/// Seed for one grid point, so each `(seed, α)` pair is an independent
/// reproducible stream.
pub fn point_seed(seed: u64, alpha: f64) -> u64 {
    let mut z = seed ^ alpha.to_bits().rotate_left(17) ^ 0x9E37_79B9_7F4A_7C15;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Grid `k * step` in `(0, n-2]`, skipping integers and the family's lattice.
pub fn exponent_grid(n: usize, family: PowerFamily, step: f64) -> Vec<f64> {
    let top = n.saturating_sub(2) as f64;
    let lattice = Lattice::for_family(family);
    (1..)
        .map(|k| k as f64 * step)
        .take_while(|&a| a <= top + 1e-12)
        .filter(|&a| a.fract() != 0.0 && !lattice.contains(a))
        .collect()
}

/// Scans the grid from the top down and stops at the first witness. Every
/// grid point above the returned `lower` was tested without success, and
/// `upper` is the smallest of them (`n - 2` when there is none, which is a
/// proven upper bound).
pub fn estimate_ce_numeric(
    g: &Graph,
    family: PowerFamily,
    grid_step: f64,
    config: &SearchConfig,
    seed: u64,
) -> Result<NumericBracket> {
    if g.n() < 2 {
        return domain(format!("graph needs at least 2 vertices, got {}", g.n()));
    }
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return param(format!("grid step must be positive, got {grid_step}"));
    }
    let top = (g.n() - 2) as f64;
    let grid = exponent_grid(g.n(), family, grid_step);
    let mut upper = top;
    let mut tested = 0;
    for &alpha in grid.iter().rev() {
        tested += 1;
        if let Some(w) = find_counterexample(g, alpha, family, config, point_seed(seed, alpha))? {
            return Ok(NumericBracket {
                lower: alpha,
                upper,
                upper_is_heuristic: upper < top,
                grid_points_tested: tested,
                witness_alpha: Some(alpha),
                witness: Some(w),
            });
        }
        upper = alpha;
    }
    Ok(NumericBracket {
        lower: 0.0,
        upper: if grid.is_empty() { top } else { upper },
        upper_is_heuristic: !grid.is_empty(),
        grid_points_tested: tested,
        witness_alpha: None,
        witness: None,
    })
}
