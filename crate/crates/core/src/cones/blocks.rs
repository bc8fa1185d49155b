//! Schur complements and the block splitting of matrices that respect a
//! clique-separator decomposition.

use nalgebra::{DMatrix, SymmetricEigen};

use super::SymMatrix;
use crate::chordal::Decomposition;
use crate::error::{param, Error, Result};

/// Blocks whose eigenvalue condition number exceeds this are treated as
/// singular.
pub const CONDITION_LIMIT: f64 = 1e12;

/// Condition number `max |λ| / min |λ|` of a symmetric block.
pub fn condition_number(m: &SymMatrix) -> f64 {
    if m.n() == 0 {
        return 1.0;
    }
    let eig = SymmetricEigen::new(m.to_dmatrix());
    let (lo, hi) = eig
        .eigenvalues
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &l| (lo.min(l.abs()), hi.max(l.abs())));
    if lo == 0.0 {
        f64::INFINITY
    } else {
        hi / lo
    }
}

fn checked_inverse(m: &SymMatrix, what: &str) -> Result<DMatrix<f64>> {
    let cond = condition_number(m);
    if !(cond <= CONDITION_LIMIT) {
        return Err(Error::Numeric {
            message: format!("{what} is singular to working precision (condition {cond:.3e})"),
            condition: Some(cond),
        });
    }
    m.to_dmatrix().try_inverse().ok_or_else(|| Error::Numeric {
        message: format!("{what} could not be inverted"),
        condition: Some(cond),
    })
}

fn complement(n: usize, idx: &[usize]) -> Result<Vec<usize>> {
    let mut mark = vec![false; n];
    for &i in idx {
        if i >= n {
            return param(format!("index {} out of range", i + 1));
        }
        if mark[i] {
            return param(format!("index {} listed twice", i + 1));
        }
        mark[i] = true;
    }
    Ok((0..n).filter(|&i| !mark[i]).collect())
}

/// Schur complement of the complementary principal block:
/// `m[keep, keep] - m[keep, rest] m[rest, rest]^{-1} m[rest, keep]`.
pub fn schur_complement(m: &SymMatrix, keep: &[usize]) -> Result<SymMatrix> {
    let rest = complement(m.n(), keep)?;
    let top = m.principal(keep);
    if rest.is_empty() {
        return Ok(top);
    }
    let inv = checked_inverse(&m.principal(&rest), "complementary block")?;
    let cross = m.block(keep, &rest);
    let correction = &cross * inv * cross.transpose();
    SymMatrix::from_dmatrix(&(top.to_dmatrix() - correction))
}

/// Checks that `d` partitions all vertices and that `m` has a zero `A`-`B`
/// block.
fn check_blocks(m: &SymMatrix, d: &Decomposition) -> Result<()> {
    let all = d.block_order();
    let rest = complement(m.n(), &all)?;
    if !rest.is_empty() {
        return param("decomposition must cover every row of the matrix");
    }
    if d.a.is_empty() || d.b.is_empty() {
        return param("decomposition needs nonempty A and B");
    }
    for &i in &d.a {
        for &j in &d.b {
            if m.get(i, j) != 0.0 {
                return param(format!(
                    "entry ({}, {}) couples A and B; the matrix does not respect the decomposition",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    Ok(())
}

/// Splits `m = m1 + m2` with `m1` supported on `A ∪ C` and `m2` on `C ∪ B`.
///
/// `m1` carries `M_AA`, `M_AC` and `M_AC^T M_AA^{-1} M_AC` in the `C` block;
/// `m2` carries the rest. Only `M_AA` has to be invertible here, although the
/// positivity statement this mirrors also assumes `M_BB` invertible.
pub fn split_by_decomposition(m: &SymMatrix, d: &Decomposition) -> Result<(SymMatrix, SymMatrix)> {
    check_blocks(m, d)?;
    let inv_aa = checked_inverse(&m.principal(&d.a), "block M_AA")?;
    let ac = m.block(&d.a, &d.c);
    let carried = ac.transpose() * inv_aa * &ac;

    let n = m.n();
    let mut m1 = SymMatrix::zeros(n);
    let mut m2 = SymMatrix::zeros(n);
    for (x, &i) in d.a.iter().enumerate() {
        for &j in &d.a[..=x] {
            m1.set(i, j, m.get(i, j));
        }
        for &j in &d.c {
            m1.set(i, j, m.get(i, j));
        }
    }
    for (x, &i) in d.c.iter().enumerate() {
        for (y, &j) in d.c.iter().enumerate().take(x + 1) {
            let c = 0.5 * (carried[(x, y)] + carried[(y, x)]);
            m1.set(i, j, c);
            m2.set(i, j, m.get(i, j) - c);
        }
        for &j in &d.b {
            m2.set(i, j, m.get(i, j));
        }
    }
    for (x, &i) in d.b.iter().enumerate() {
        for &j in &d.b[..=x] {
            m2.set(i, j, m.get(i, j));
        }
    }
    Ok((m1, m2))
}

/// `m = L · diag(M_AA^{-1}, S, M_BB^{-1}) · L^T` in the `(A, C, B)` block
/// order, with `S = M_CC - M_AC^T M_AA^{-1} M_AC - M_CB M_BB^{-1} M_CB^T`.
#[derive(Debug, Clone)]
pub struct ThreeFactorForm {
    /// Original indices in block order `A, C, B`.
    pub order: Vec<usize>,
    pub left: DMatrix<f64>,
    pub middle: SymMatrix,
    pub schur: SymMatrix,
}

impl ThreeFactorForm {
    /// `L · middle · L^T`, mapped back to the original indexing.
    pub fn reconstruct(&self) -> Result<SymMatrix> {
        let prod = &self.left * self.middle.to_dmatrix() * self.left.transpose();
        let n = self.order.len();
        let mut out = DMatrix::zeros(n, n);
        for (x, &i) in self.order.iter().enumerate() {
            for (y, &j) in self.order.iter().enumerate() {
                out[(i, j)] = prod[(x, y)];
            }
        }
        SymMatrix::from_dmatrix(&out)
    }
}

pub fn three_factor_form(m: &SymMatrix, d: &Decomposition) -> Result<ThreeFactorForm> {
    check_blocks(m, d)?;
    let (na, nc, nb) = (d.a.len(), d.c.len(), d.b.len());
    let aa = m.principal(&d.a);
    let bb = m.principal(&d.b);
    let inv_aa = checked_inverse(&aa, "block M_AA")?;
    let inv_bb = checked_inverse(&bb, "block M_BB")?;
    let ac = m.block(&d.a, &d.c);
    let cb = m.block(&d.c, &d.b);
    let schur_dense = m.principal(&d.c).to_dmatrix()
        - ac.transpose() * &inv_aa * &ac
        - &cb * &inv_bb * cb.transpose();
    let schur = SymMatrix::from_dmatrix(&schur_dense)?;

    let n = na + nc + nb;
    let mut left = DMatrix::zeros(n, n);
    left.view_mut((0, 0), (na, na)).copy_from(&aa.to_dmatrix());
    left.view_mut((na, 0), (nc, na)).copy_from(&ac.transpose());
    left.view_mut((na, na), (nc, nc)).fill_with_identity();
    left.view_mut((na, na + nc), (nc, nb)).copy_from(&cb);
    left.view_mut((na + nc, na + nc), (nb, nb)).copy_from(&bb.to_dmatrix());

    let mut mid = DMatrix::zeros(n, n);
    mid.view_mut((0, 0), (na, na)).copy_from(&inv_aa);
    mid.view_mut((na, na), (nc, nc)).copy_from(&schur_dense);
    mid.view_mut((na + nc, na + nc), (nb, nb)).copy_from(&inv_bb);

    Ok(ThreeFactorForm {
        order: d.block_order(),
        left,
        middle: SymMatrix::from_dmatrix(&mid)?,
        schur,
    })
}

/// `‖x - y‖_F / ‖y‖_F`, or the absolute error when `y` is zero.
pub fn relative_frobenius_error(x: &SymMatrix, y: &SymMatrix) -> Result<f64> {
    let diff = x.sub(y)?.frobenius_norm();
    let base = y.frobenius_norm();
    Ok(if base == 0.0 { diff } else { diff / base })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{is_psd, DEFAULT_TOL_SCALE};

    fn mat(rows: &[&[f64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn path_decomposition() -> Decomposition {
        Decomposition::new(vec![0], vec![1], vec![2])
    }

    #[test]
    fn schur_examples() {
        let m = mat(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let s = schur_complement(&m, &[0]).unwrap();
        assert!((s.get(0, 0) - 1.5).abs() < 1e-15);

        let bd = mat(&[&[2.0, 1.0, 0.0], &[1.0, 3.0, 0.0], &[0.0, 0.0, 5.0]]);
        assert_eq!(schur_complement(&bd, &[0, 1]).unwrap(), bd.principal(&[0, 1]));
        assert_eq!(schur_complement(&bd, &[0, 1, 2]).unwrap(), bd);
    }

    #[test]
    fn schur_singular_block() {
        let m = mat(&[&[1.0, 1.0, 1.0], &[1.0, 1.0, 1.0], &[1.0, 1.0, 1.0]]);
        match schur_complement(&m, &[0]) {
            Err(Error::Numeric { condition, .. }) => assert!(condition.unwrap() > 1e12),
            other => panic!("{other:?}"),
        }
        assert!(schur_complement(&m, &[3]).is_err());
    }

    #[test]
    fn split_example() {
        let m = mat(&[&[1.0, 1.0, 0.0], &[1.0, 2.0, 1.0], &[0.0, 1.0, 1.0]]);
        let (m1, m2) = split_by_decomposition(&m, &path_decomposition()).unwrap();
        assert_eq!(m1, mat(&[&[1.0, 1.0, 0.0], &[1.0, 1.0, 0.0], &[0.0, 0.0, 0.0]]));
        assert_eq!(m2, mat(&[&[0.0, 0.0, 0.0], &[0.0, 1.0, 1.0], &[0.0, 1.0, 1.0]]));
        assert!(is_psd(&m1, DEFAULT_TOL_SCALE).unwrap().is_psd);
        assert!(is_psd(&m2, DEFAULT_TOL_SCALE).unwrap().is_psd);
    }

    #[test]
    fn split_decoupled_c_block() {
        let m = mat(&[&[2.0, 0.0, 0.0], &[0.0, 3.0, 1.0], &[0.0, 1.0, 4.0]]);
        let (m1, m2) = split_by_decomposition(&m, &path_decomposition()).unwrap();
        assert_eq!(m1.get(1, 1), 0.0);
        assert_eq!(m2.get(1, 1), 3.0);
    }

    #[test]
    fn split_rejects_bad_input() {
        let coupled = mat(&[&[1.0, 0.0, 0.5], &[0.0, 1.0, 0.0], &[0.5, 0.0, 1.0]]);
        assert!(matches!(
            split_by_decomposition(&coupled, &path_decomposition()),
            Err(Error::Parameter(_))
        ));
        let singular_a = mat(&[&[0.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        assert!(matches!(
            split_by_decomposition(&singular_a, &path_decomposition()),
            Err(Error::Numeric { .. })
        ));
        let partial = Decomposition::new(vec![0], vec![1], vec![]);
        assert!(split_by_decomposition(&SymMatrix::identity(3), &partial).is_err());
    }

    #[test]
    fn three_factor_examples() {
        let id = SymMatrix::identity(3);
        let f = three_factor_form(&id, &path_decomposition()).unwrap();
        assert_eq!(f.schur, SymMatrix::identity(1));
        assert_eq!(f.reconstruct().unwrap(), id);

        let m = mat(&[&[1.0, 1.0, 0.0], &[1.0, 2.0, 1.0], &[0.0, 1.0, 1.0]]);
        let f = three_factor_form(&m, &path_decomposition()).unwrap();
        assert_eq!(f.schur.get(0, 0), 0.0);
        assert!(relative_frobenius_error(&f.reconstruct().unwrap(), &m).unwrap() < 1e-15);
    }

    #[test]
    fn three_factor_needs_invertible_corners() {
        let m = mat(&[&[1.0, 1.0, 0.0], &[1.0, 2.0, 0.0], &[0.0, 0.0, 0.0]]);
        assert!(three_factor_form(&m, &path_decomposition()).is_err());
    }
}
