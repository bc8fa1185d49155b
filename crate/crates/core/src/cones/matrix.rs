use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::graph::Graph;

/// Dense real symmetric matrix with finite entries.
///
/// Only the lower triangle is stored, so `get(i, j) == get(j, i)` holds
/// bit for bit.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "MatrixRepr", try_from = "MatrixRepr")]
pub struct SymMatrix {
    n: usize,
    packed: Vec<f64>,
}

#[inline]
fn slot(i: usize, j: usize) -> usize {
    let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
    hi * (hi + 1) / 2 + lo
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            packed: vec![0.0; n * (n + 1) / 2],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds from full rows; the rows must be exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return param("matrix rows must form a square array");
        }
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let (a, b) = (rows[i][j], rows[j][i]);
                if !a.is_finite() || !b.is_finite() {
                    return param(format!("non-finite entry at ({}, {})", i + 1, j + 1));
                }
                if a != b {
                    return param(format!(
                        "matrix not symmetric at ({}, {}): {a} vs {b}",
                        i + 1,
                        j + 1
                    ));
                }
                m.set(i, j, a);
            }
        }
        Ok(m)
    }

    /// Symmetrises `(x + x^T) / 2`. Fails on non-finite entries.
    pub fn from_dmatrix(x: &DMatrix<f64>) -> Result<Self> {
        if x.nrows() != x.ncols() {
            return param("matrix must be square");
        }
        let n = x.nrows();
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v = if i == j {
                    x[(i, i)]
                } else {
                    0.5 * (x[(i, j)] + x[(j, i)])
                };
                if !v.is_finite() {
                    return Err(Error::Numeric {
                        message: format!("non-finite entry at ({}, {})", i + 1, j + 1),
                        condition: None,
                    });
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.packed[slot(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.packed[slot(i, j)] = value;
    }

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j))
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Applies `f` to every entry. Non-finite results are an error.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        let packed: Vec<f64> = self.packed.iter().map(|&x| f(x)).collect();
        if let Some(k) = packed.iter().position(|x| !x.is_finite()) {
            return Err(Error::Numeric {
                message: format!("entrywise map produced {} from {}", packed[k], self.packed[k]),
                condition: None,
            });
        }
        Ok(SymMatrix { n: self.n, packed })
    }

    fn zip(&self, other: &SymMatrix, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.n != other.n {
            return param(format!("dimension mismatch: {} vs {}", self.n, other.n));
        }
        Ok(SymMatrix {
            n: self.n,
            packed: self
                .packed
                .iter()
                .zip(&other.packed)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &SymMatrix) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, other: &SymMatrix) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                s += self.get(i, j).powi(2);
            }
        }
        s.sqrt()
    }

    pub fn min_entry(&self) -> f64 {
        self.packed.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Principal submatrix on `idx`, in the given order.
    pub fn principal(&self, idx: &[usize]) -> SymMatrix {
        let mut m = SymMatrix::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().take(a + 1) {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    /// Rectangular block with rows `ri` and columns `ci`.
    pub fn block(&self, ri: &[usize], ci: &[usize]) -> DMatrix<f64> {
        DMatrix::from_fn(ri.len(), ci.len(), |a, b| self.get(ri[a], ci[b]))
    }

    /// True iff every off-diagonal entry outside the edge set is exactly 0.
    pub fn conforms_to_pattern(&self, g: &Graph) -> Result<bool> {
        if self.n != g.n() {
            return param(format!(
                "matrix is {}x{} but graph has {} vertices",
                self.n,
                self.n,
                g.n()
            ));
        }
        for i in 0..self.n {
            for j in 0..i {
                if self.get(i, j) != 0.0 && !g.has_edge(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization cannot fail")
    }

    /// One row per line, comma separated, full precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:?}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymMatrix")
            .field("n", &self.n)
            .field("rows", &self.rows())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    rows: Vec<Vec<f64>>,
}

impl From<SymMatrix> for MatrixRepr {
    fn from(m: SymMatrix) -> Self {
        MatrixRepr {
            n: m.n,
            rows: m.rows(),
        }
    }
}

impl TryFrom<MatrixRepr> for SymMatrix {
    type Error = Error;

    fn try_from(r: MatrixRepr) -> Result<Self> {
        if r.rows.len() != r.n {
            return param(format!("declared n = {} but {} rows", r.n, r.rows.len()));
        }
        SymMatrix::from_rows(&r.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    #[test]
    fn symmetric_storage() {
        let mut m = SymMatrix::zeros(3);
        m.set(0, 2, 5.0);
        assert_eq!(m.get(2, 0), 5.0);
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.5, 1.0]]).is_err());
        assert!(SymMatrix::from_rows(&[vec![f64::NAN]]).is_err());
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn pattern_examples() {
        let c4 = GraphFamily::Cycle { n: 4 }.generate().unwrap();
        assert!(SymMatrix::identity(4).conforms_to_pattern(&c4).unwrap());
        let ones = SymMatrix::from_rows(&vec![vec![1.0; 4]; 4]).unwrap();
        assert!(!ones.conforms_to_pattern(&c4).unwrap());
        // Zeros at (1,3) and (2,4), everything else free.
        let fig = SymMatrix::from_rows(&[
            vec![2.0, 1.0, 0.0, -1.0],
            vec![1.0, 3.0, 0.5, 0.0],
            vec![0.0, 0.5, 2.0, 0.7],
            vec![-1.0, 0.0, 0.7, 4.0],
        ])
        .unwrap();
        assert!(fig.conforms_to_pattern(&c4).unwrap());
        assert!(fig.conforms_to_pattern(&Graph::empty(3)).is_err());
    }

    #[test]
    fn json_and_csv() {
        let m = SymMatrix::from_rows(&[vec![1.0, 0.5], vec![0.5, 2.0]]).unwrap();
        assert_eq!(m.to_json(), r#"{"n":2,"rows":[[1.0,0.5],[0.5,2.0]]}"#);
        let back: SymMatrix = serde_json::from_str(&m.to_json()).unwrap();
        assert_eq!(back, m);
        assert_eq!(m.to_csv(), "1.0,0.5\n0.5,2.0\n");
        assert!(serde_json::from_str::<SymMatrix>(r#"{"n":3,"rows":[[1.0]]}"#).is_err());
    }
}
