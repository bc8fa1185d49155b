use super::{entrywise_power, is_psd, PowerFamily, PsdVerdict, SymMatrix, DEFAULT_TOL_SCALE};
use crate::error::{param, Result};

/// The bordered matrix
///
/// ```text
/// | 1   u^T  0 |
/// | u   mid  v |
/// | 0   v^T  1 |
/// ```
///
/// of size `m + 2`, with `u`, `v` of length `m`.
pub fn witness_matrix(u: &[f64], v: &[f64], mid: &SymMatrix) -> Result<SymMatrix> {
    bordered_matrix(u, v, mid, 1.0, 1.0)
}

/// [`witness_matrix`] with corner entries `first` and `last`.
pub fn bordered_matrix(
    u: &[f64],
    v: &[f64],
    mid: &SymMatrix,
    first: f64,
    last: f64,
) -> Result<SymMatrix> {
    let m = mid.n();
    if u.len() != m || v.len() != m {
        return param(format!(
            "border vectors have lengths {} and {} but the middle block is {m}x{m}",
            u.len(),
            v.len()
        ));
    }
    let mut w = SymMatrix::zeros(m + 2);
    w.set(0, 0, first);
    w.set(m + 1, m + 1, last);
    for i in 0..m {
        w.set(0, i + 1, u[i]);
        w.set(m + 1, i + 1, v[i]);
        for j in 0..=i {
            w.set(i + 1, j + 1, mid.get(i, j));
        }
    }
    Ok(w)
}

/// `u u^T + v v^T`.
pub fn rank_two(u: &[f64], v: &[f64]) -> Result<SymMatrix> {
    if u.len() != v.len() {
        return param("vectors must have equal length");
    }
    let mut m = SymMatrix::zeros(u.len());
    for i in 0..u.len() {
        for j in 0..=i {
            m.set(i, j, u[i] * u[j] + v[i] * v[j]);
        }
    }
    Ok(m)
}

/// PSD verdict on `f[A + B] - f[A] - f[B]`.
pub fn superadditive_defect(
    a: &SymMatrix,
    b: &SymMatrix,
    alpha: f64,
    family: PowerFamily,
) -> Result<PsdVerdict> {
    let sum = a.add(b)?;
    let defect = entrywise_power(&sum, alpha, family)?
        .sub(&entrywise_power(a, alpha, family)?)?
        .sub(&entrywise_power(b, alpha, family)?)?;
    is_psd(&defect, DEFAULT_TOL_SCALE)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_examples() {
        let w = witness_matrix(&[1.0], &[1.0], &SymMatrix::from_rows(&[vec![2.0]]).unwrap()).unwrap();
        assert_eq!(
            w.rows(),
            vec![vec![1.0, 1.0, 0.0], vec![1.0, 2.0, 1.0], vec![0.0, 1.0, 1.0]]
        );
        let w = witness_matrix(&[0.0, 0.0], &[0.0, 0.0], &SymMatrix::zeros(2)).unwrap();
        assert_eq!(w.get(0, 0), 1.0);
        assert_eq!(w.get(3, 3), 1.0);
        assert_eq!(w.frobenius_norm(), 2.0f64.sqrt());
        assert!(is_psd(&w, DEFAULT_TOL_SCALE).unwrap().is_psd);
        assert!(witness_matrix(&[1.0], &[1.0, 2.0], &SymMatrix::zeros(1)).is_err());
    }

    #[test]
    fn rank_two_border_is_psd() {
        let u = [0.3, -1.2, 2.0];
        let v = [1.5, 0.1, -0.7];
        let w = witness_matrix(&u, &v, &rank_two(&u, &v).unwrap()).unwrap();
        assert!(is_psd(&w, DEFAULT_TOL_SCALE).unwrap().is_psd);
    }

    #[test]
    fn defect_examples() {
        let a = SymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        let b = SymMatrix::from_rows(&[vec![1.0, -0.5], vec![-0.5, 1.0]]).unwrap();
        let d = superadditive_defect(&a, &b, 1.0, PowerFamily::Odd).unwrap();
        assert!(d.is_psd);
        assert!(d.min_eigenvalue.abs() < 1e-15);

        let one = SymMatrix::from_rows(&[vec![1.0]]).unwrap();
        let d = superadditive_defect(&one, &one, 0.5, PowerFamily::Plain).unwrap();
        assert!(!d.is_psd);
        assert!((d.min_eigenvalue - (2f64.sqrt() - 2.0)).abs() < 1e-15);
    }
}
