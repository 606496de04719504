//! Dense and compressed-sparse-column matrix storage with the few products
//! the oracles need, plus a spectral-norm routine based on power iteration.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};

/// Sparse matrix in compressed sparse column layout.
///
/// `col_ptr` has `ncols + 1` entries; column `j` occupies the index range
/// `col_ptr[j]..col_ptr[j + 1]` of `row_idx` and `values`.
#[derive(Debug, Clone, PartialEq)]
pub struct CscMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub col_ptr: Vec<usize>,
    pub row_idx: Vec<usize>,
    pub values: Vec<f64>,
}

impl CscMatrix {
    pub fn new(
        nrows: usize,
        ncols: usize,
        col_ptr: Vec<usize>,
        row_idx: Vec<usize>,
        values: Vec<f64>,
    ) -> Result<Self> {
        if col_ptr.len() != ncols + 1 || col_ptr[0] != 0 || col_ptr[ncols] != values.len() {
            return Err(Error::InvalidParameter("malformed CSC column pointers".into()));
        }
        if row_idx.len() != values.len() {
            return Err(Error::InvalidParameter("CSC row/value length mismatch".into()));
        }
        if col_ptr.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameter("CSC column pointers not monotone".into()));
        }
        if row_idx.iter().any(|&i| i >= nrows) {
            return Err(Error::InvalidParameter("CSC row index out of range".into()));
        }
        Ok(Self { nrows, ncols, col_ptr, row_idx, values })
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    fn matvec(&self, x: &Array1<f64>) -> Array1<f64> {
        let mut out = Array1::zeros(self.nrows);
        for j in 0..self.ncols {
            let xj = x[j];
            if xj == 0.0 {
                continue;
            }
            for idx in self.col_ptr[j]..self.col_ptr[j + 1] {
                out[self.row_idx[idx]] += self.values[idx] * xj;
            }
        }
        out
    }

    fn matvec_t(&self, y: &Array1<f64>) -> Array1<f64> {
        let mut out = Array1::zeros(self.ncols);
        for j in 0..self.ncols {
            let mut acc = 0.0;
            for idx in self.col_ptr[j]..self.col_ptr[j + 1] {
                acc += self.values[idx] * y[self.row_idx[idx]];
            }
            out[j] = acc;
        }
        out
    }
}

/// Matrix storage used by the benchmark problems.
#[derive(Debug, Clone, PartialEq)]
pub enum Matrix {
    Dense(Array2<f64>),
    Sparse(CscMatrix),
}

impl Matrix {
    pub fn nrows(&self) -> usize {
        match self {
            Matrix::Dense(a) => a.nrows(),
            Matrix::Sparse(a) => a.nrows,
        }
    }

    pub fn ncols(&self) -> usize {
        match self {
            Matrix::Dense(a) => a.ncols(),
            Matrix::Sparse(a) => a.ncols,
        }
    }

    /// `A x`.
    pub fn matvec(&self, x: &Array1<f64>) -> Array1<f64> {
        debug_assert_eq!(x.len(), self.ncols());
        match self {
            Matrix::Dense(a) => a.dot(x),
            Matrix::Sparse(a) => a.matvec(x),
        }
    }

    /// `Aᵀ y`.
    pub fn matvec_t(&self, y: &Array1<f64>) -> Array1<f64> {
        debug_assert_eq!(y.len(), self.nrows());
        match self {
            Matrix::Dense(a) => a.t().dot(y),
            Matrix::Sparse(a) => a.matvec_t(y),
        }
    }

    /// Euclidean norm of each column.
    pub fn col_norms(&self) -> Vec<f64> {
        match self {
            Matrix::Dense(a) => (0..a.ncols())
                .map(|j| a.column(j).iter().map(|v| v * v).sum::<f64>().sqrt())
                .collect(),
            Matrix::Sparse(a) => (0..a.ncols)
                .map(|j| {
                    (a.col_ptr[j]..a.col_ptr[j + 1])
                        .map(|idx| a.values[idx] * a.values[idx])
                        .sum::<f64>()
                        .sqrt()
                })
                .collect(),
        }
    }
}

/// Largest singular value of `a`, computed by power iteration on `AᵀA`.
///
/// Converges when successive singular-value estimates agree to relative
/// tolerance 1e-9; gives up after 5000 iterations.
pub fn spectral_norm(a: &Matrix) -> Result<f64> {
    spectral_norm_with(a, 1e-9, 5000)
}

/// [`spectral_norm`] with explicit tolerance and iteration cap.
///
/// The iteration starts from the normalized all-ones vector so repeated runs
/// are bit-identical. If that vector happens to lie in the null space of
/// `AᵀA` the iteration restarts once from a ramp vector.
pub fn spectral_norm_with(a: &Matrix, tol: f64, max_iterations: usize) -> Result<f64> {
    let n = a.ncols();
    if n == 0 || a.nrows() == 0 {
        return Err(Error::InvalidParameter("spectral norm of an empty matrix".into()));
    }
    let mut v = Array1::from_elem(n, 1.0 / (n as f64).sqrt());
    let mut sigma_prev = 0.0_f64;
    let mut restarted = false;
    for _ in 0..max_iterations {
        let u = a.matvec_t(&a.matvec(&v));
        let norm = u.dot(&u).sqrt();
        if norm == 0.0 {
            if restarted {
                return Err(Error::InvalidParameter(
                    "power iteration start vectors lie in the null space".into(),
                ));
            }
            // all-ones was annihilated; switch to a ramp start
            restarted = true;
            v = Array1::from_iter((0..n).map(|i| (i + 1) as f64));
            let s = v.dot(&v).sqrt();
            v.mapv_inplace(|x| x / s);
            continue;
        }
        // Rayleigh quotient of AᵀA at the unit vector v
        let sigma = u.dot(&v).max(0.0).sqrt();
        v = u / norm;
        if (sigma - sigma_prev).abs() <= tol * sigma.max(f64::MIN_POSITIVE) {
            return Ok(sigma);
        }
        sigma_prev = sigma;
    }
    Err(Error::PowerIterationDiverged { max_iterations })
}
