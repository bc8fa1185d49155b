use serde::{Deserialize, Serialize};

use super::SymMatrix;
use crate::error::{param, Result};

/// Default relative tolerance for PSD tests.
pub const DEFAULT_TOL_SCALE: f64 = 1e-9;

/// Default relative threshold below which a negative eigenvalue counts as a
/// certified failure of positivity.
pub const DEFAULT_WITNESS_THRESHOLD: f64 = 1e-6;

/// Outcome of a PSD test. `is_psd` iff `min_eigenvalue >= -tolerance_used`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsdVerdict {
    pub is_psd: bool,
    pub min_eigenvalue: f64,
    pub tolerance_used: f64,
    /// `max(1, spectral radius)`, the unit the tolerance is measured in.
    pub scale: f64,
}

impl PsdVerdict {
    /// `min_eigenvalue < -threshold * scale`.
    pub fn certified_negative(&self, threshold: f64) -> bool {
        self.min_eigenvalue < -threshold * self.scale
    }

    /// `min_eigenvalue / scale`.
    pub fn relative_min(&self) -> f64 {
        self.min_eigenvalue / self.scale
    }
}

/// Extreme eigenvalues `(min, max |λ|)` of a symmetric matrix.
pub fn eigen_extremes(m: &SymMatrix) -> (f64, f64) {
    if m.n() == 0 {
        return (0.0, 0.0);
    }
    let eigenvalues = m.to_dmatrix().symmetric_eigenvalues();
    let min = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    let radius = eigenvalues.iter().fold(0.0f64, |r, &l| r.max(l.abs()));
    (min, radius)
}

/// Full symmetric eigendecomposition test with tolerance
/// `tol_scale * max(1, spectral radius)`.
pub fn is_psd(m: &SymMatrix, tol_scale: f64) -> Result<PsdVerdict> {
    if !(tol_scale > 0.0 && tol_scale.is_finite()) {
        return param(format!("tolerance scale must be positive, got {tol_scale}"));
    }
    let (min, radius) = eigen_extremes(m);
    let scale = radius.max(1.0);
    let tolerance_used = tol_scale * scale;
    Ok(PsdVerdict {
        is_psd: min >= -tolerance_used,
        min_eigenvalue: min,
        tolerance_used,
        scale,
    })
}
