//! Dense matrices and vectors over the max-times semifield.
//!
//! Matrix operations follow the usual definitions with `max` in place of
//! addition; everything is computed on the log representation, so a matrix
//! product is a max of sums. Decision problems are small, so the storage is
//! a plain row-major `Vec` with no sparsity.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::TropScalar;
use crate::ExecMode;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Row-major dense matrix of tropical scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<TropScalar>,
}

/// Column vector of tropical scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropVector {
    data: Vec<TropScalar>,
}

/// Matrices at least this large go through the parallel product path
/// when the `parallel` feature is enabled and the mode is `Auto`
/// (crossover measured in benches/parallel_vs_seq.rs).
const PAR_MIN_ROWS: usize = 128;

impl TropMatrix {
    pub fn zeros(rows: usize, cols: usize) -> TropMatrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        TropMatrix {
            rows,
            cols,
            data: vec![TropScalar::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> TropMatrix {
        let mut m = TropMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, TropScalar::ONE);
        }
        m
    }

    /// Builds a matrix from rows of scalars; rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<TropMatrix> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                left_rows: r,
                left_cols: c,
                right_rows: r,
                right_cols: rows.iter().map(|row| row.len()).max().unwrap_or(0),
            });
        }
        Ok(TropMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from rows of linear-scale values.
    pub fn from_values(rows: &[Vec<f64>]) -> Result<TropMatrix> {
        TropMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| TropScalar::new(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> TropScalar,
    ) -> TropMatrix {
        let mut m = TropMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Returns the order of a square matrix, or `NotSquare`.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> TropScalar {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TropScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.data
    }

    /// A matrix is column-regular when every column has a nonzero entry.
    pub fn is_column_regular(&self) -> bool {
        self.first_irregular_column().is_none()
    }

    pub(crate) fn first_irregular_column(&self) -> Option<usize> {
        (0..self.cols).find(|&j| (0..self.rows).all(|i| self.get(i, j).is_zero()))
    }

    pub fn col(&self, j: usize) -> TropVector {
        TropVector {
            data: (0..self.rows).map(|i| self.get(i, j)).collect(),
        }
    }

    /// Entrywise max of two equally shaped matrices.
    pub fn add(&self, rhs: &TropMatrix) -> Result<TropMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(self.shape_mismatch(rhs));
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a.oplus(b))
                .collect(),
        })
    }

    /// Matrix product: `(XY)_ij = max_k x_ik y_kj`.
    pub fn mul(&self, rhs: &TropMatrix) -> Result<TropMatrix> {
        self.mul_with(rhs, ExecMode::Auto)
    }

    /// Matrix product with an explicit execution mode.
    pub fn mul_with(&self, rhs: &TropMatrix, mode: ExecMode) -> Result<TropMatrix> {
        if self.cols != rhs.rows {
            return Err(self.shape_mismatch(rhs));
        }
        let run_parallel = match mode {
            ExecMode::Sequential => false,
            ExecMode::Parallel => cfg!(feature = "parallel"),
            ExecMode::Auto => cfg!(feature = "parallel") && self.rows >= PAR_MIN_ROWS,
        };
        let data = if run_parallel {
            self.mul_rows_par(rhs)
        } else {
            (0..self.rows).flat_map(|i| self.mul_row(rhs, i)).collect()
        };
        Ok(TropMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    fn mul_row(&self, rhs: &TropMatrix, i: usize) -> Vec<TropScalar> {
        let mut out = vec![f64::NEG_INFINITY; rhs.cols];
        for k in 0..self.cols {
            let a = self.get(i, k).log();
            if a == f64::NEG_INFINITY {
                continue;
            }
            let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
            for (o, b) in out.iter_mut().zip(row) {
                let v = a + b.log();
                if v > *o {
                    *o = v;
                }
            }
        }
        out.into_iter().map(TropScalar::from_log).collect()
    }

    #[cfg(feature = "parallel")]
    fn mul_rows_par(&self, rhs: &TropMatrix) -> Vec<TropScalar> {
        (0..self.rows)
            .into_par_iter()
            .flat_map_iter(|i| self.mul_row(rhs, i))
            .collect()
    }

    #[cfg(not(feature = "parallel"))]
    fn mul_rows_par(&self, rhs: &TropMatrix) -> Vec<TropScalar> {
        (0..self.rows).flat_map(|i| self.mul_row(rhs, i)).collect()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &TropVector) -> Result<TropVector> {
        if self.cols != x.dim() {
            return Err(Error::DimMismatch {
                left: self.cols,
                right: x.dim(),
            });
        }
        Ok(TropVector {
            data: (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| self.get(i, j).otimes(x.get(j)))
                        .fold(TropScalar::ZERO, TropScalar::oplus)
                })
                .collect(),
        })
    }

    /// `p`-th power of a square matrix; `p = 0` gives the identity.
    pub fn pow(&self, p: usize) -> Result<TropMatrix> {
        let n = self.order()?;
        let mut acc = TropMatrix::identity(n);
        for _ in 0..p {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Max of the diagonal entries.
    pub fn trace(&self) -> Result<TropScalar> {
        let n = self.order()?;
        Ok((0..n)
            .map(|i| self.get(i, i))
            .fold(TropScalar::ZERO, TropScalar::oplus))
    }

    /// Multiplies every entry by a scalar.
    pub fn scale(&self, c: TropScalar) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x.otimes(c)).collect(),
        }
    }

    /// Entrywise `self <= rhs` within a log-scale tolerance.
    pub fn leq(&self, rhs: &TropMatrix, tol: f64) -> Result<bool> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(self.shape_mismatch(rhs));
        }
        Ok(self
            .data
            .iter()
            .zip(&rhs.data)
            .all(|(&a, &b)| a.leq(b, tol)))
    }

    /// Entrywise equality within a log-scale tolerance.
    pub fn approx_eq(&self, rhs: &TropMatrix, tol: f64) -> bool {
        self.rows == rhs.rows
            && self.cols == rhs.cols
            && self
                .data
                .iter()
                .zip(&rhs.data)
                .all(|(&a, &b)| a.approx_eq(b, tol))
    }

    fn shape_mismatch(&self, rhs: &TropMatrix) -> Error {
        Error::ShapeMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: rhs.rows,
            right_cols: rhs.cols,
        }
    }
}

impl Index<(usize, usize)> for TropMatrix {
    type Output = TropScalar;

    fn index(&self, (i, j): (usize, usize)) -> &TropScalar {
        &self.data[i * self.cols + j]
    }
}

impl TropVector {
    pub fn from_scalars(data: Vec<TropScalar>) -> TropVector {
        assert!(!data.is_empty(), "vector must be non-empty");
        TropVector { data }
    }

    pub fn from_values(values: &[f64]) -> TropVector {
        TropVector::from_scalars(values.iter().map(|&v| TropScalar::new(v)).collect())
    }

    pub fn ones(dim: usize) -> TropVector {
        TropVector::from_scalars(vec![TropScalar::ONE; dim])
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn get(&self, i: usize) -> TropScalar {
        self.data[i]
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.data
    }

    /// A vector is regular when it has no zero entries.
    pub fn is_regular(&self) -> bool {
        self.data.iter().all(|x| !x.is_zero())
    }

    pub(crate) fn first_zero_entry(&self) -> Option<usize> {
        self.data.iter().position(|x| x.is_zero())
    }

    /// Conjugate transpose: entrywise inverse, zeros preserved.
    ///
    /// The result has row semantics; it errors on the all-zero vector.
    pub fn conj_transpose(&self) -> Result<TropVector> {
        if self.data.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroVector);
        }
        Ok(TropVector {
            data: self
                .data
                .iter()
                .map(|&x| x.inverse().unwrap_or(TropScalar::ZERO))
                .collect(),
        })
    }

    pub fn scale(&self, c: TropScalar) -> TropVector {
        TropVector {
            data: self.data.iter().map(|&x| x.otimes(c)).collect(),
        }
    }

    /// The quadratic form `x‾ M x = max_{i,j} m_ij x_j / x_i`.
    ///
    /// Requires a regular `x` of matching dimension.
    pub fn quad_form(&self, m: &TropMatrix) -> Result<TropScalar> {
        let n = m.order()?;
        if n != self.dim() {
            return Err(Error::DimMismatch {
                left: n,
                right: self.dim(),
            });
        }
        if let Some(index) = self.first_zero_entry() {
            return Err(Error::NotRegular { index });
        }
        let mut best = f64::NEG_INFINITY;
        for i in 0..n {
            let xi = self.data[i].log();
            for j in 0..n {
                let mij = m.get(i, j).log();
                if mij == f64::NEG_INFINITY {
                    continue;
                }
                let v = mij + self.data[j].log() - xi;
                if v > best {
                    best = v;
                }
            }
        }
        Ok(TropScalar::from_log(best))
    }

    /// True when `other = c * self` for some positive `c`, with matching zero
    /// patterns and log-ratio spread at most `tol`.
    pub fn collinear(&self, other: &TropVector, tol: f64) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (a, b) in self.data.iter().zip(&other.data) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let d = b.log() - a.log();
                    lo = lo.min(d);
                    hi = hi.max(d);
                }
                _ => return false,
            }
        }
        // all-zero overlap: vectors with identical zero patterns are scalings
        hi == f64::NEG_INFINITY || hi - lo <= tol
    }

    /// Entrywise `self <= rhs` within a log-scale tolerance.
    pub fn leq(&self, rhs: &TropVector, tol: f64) -> bool {
        self.dim() == rhs.dim()
            && self
                .data
                .iter()
                .zip(&rhs.data)
                .all(|(&a, &b)| a.leq(b, tol))
    }

    pub fn approx_eq(&self, rhs: &TropVector, tol: f64) -> bool {
        self.dim() == rhs.dim()
            && self
                .data
                .iter()
                .zip(&rhs.data)
                .all(|(&a, &b)| a.approx_eq(b, tol))
    }
}

impl Index<usize> for TropVector {
    type Output = TropScalar;

    fn index(&self, i: usize) -> &TropScalar {
        &self.data[i]
    }
}
