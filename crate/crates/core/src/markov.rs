//! Gaussian kernel weights and column-stochastic transition matrices.
//!
//! Column `j` of every transition matrix holds the distribution of the next
//! state when the walk starts from point `j`.

use crate::ingest::DataCloud;
use crate::matrix::DenseMatrix;
use crate::{Error, Result};

/// Tolerance on column sums accepted by [`TransitionMatrix`].
pub const STOCHASTIC_TOL: f64 = 1e-12;

/// A column-stochastic matrix with nonnegative entries.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    matrix: DenseMatrix,
    nonlazy: bool,
}

impl TransitionMatrix {
    /// Validates `matrix` and wraps it. `nonlazy` requires an exactly zero diagonal.
    pub fn new(matrix: DenseMatrix, nonlazy: bool) -> Result<Self> {
        validate_columns(&matrix, &[])?;
        if nonlazy && (0..matrix.n()).any(|i| matrix.get(i, i) != 0.0) {
            return Err(Error::LazyChain);
        }
        Ok(Self { matrix, nonlazy })
    }

    /// Wraps a matrix whose listed columns are allowed to be all zero.
    pub(crate) fn with_zero_columns(matrix: DenseMatrix, zero_columns: &[usize]) -> Self {
        debug_assert!(validate_columns(&matrix, zero_columns).is_ok());
        Self {
            matrix,
            nonlazy: true,
        }
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix.get(i, j)
    }

    pub fn is_nonlazy(&self) -> bool {
        self.nonlazy
    }
}

fn validate_columns(m: &DenseMatrix, skip: &[usize]) -> Result<()> {
    let n = m.n();
    for i in 0..n {
        for j in 0..n {
            let x = m.get(i, j);
            if !(x.is_finite() && (0.0..=1.0).contains(&x)) {
                return Err(Error::InvalidEntry { row: i, col: j });
            }
        }
    }
    for (j, s) in m.column_sums().into_iter().enumerate() {
        if !skip.contains(&j) && (s - 1.0).abs() > STOCHASTIC_TOL {
            return Err(Error::NotStochastic(j));
        }
    }
    Ok(())
}

pub fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// `W_ij = exp(-|x_i - x_j|^2 / epsilon)`, one evaluation per unordered pair.
pub fn gaussian_kernel(cloud: &DataCloud, epsilon: f64) -> Result<DenseMatrix> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let n = cloud.n();
    let mut w = DenseMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            let v = (-squared_distance(cloud.point(i), cloud.point(j)) / epsilon).exp();
            w[(i, j)] = v;
            w[(j, i)] = v;
        }
    }
    Ok(w)
}

/// Divides each column by its sum.
pub fn column_normalize(w: &DenseMatrix) -> Result<TransitionMatrix> {
    let n = w.n();
    for i in 0..n {
        for j in 0..n {
            let x = w.get(i, j);
            if !(x.is_finite() && x >= 0.0) {
                return Err(Error::InvalidEntry { row: i, col: j });
            }
        }
    }
    let sums = w.column_sums();
    if let Some(j) = sums.iter().position(|&s| !(s > 0.0)) {
        return Err(Error::ZeroColumn(j));
    }
    let p = DenseMatrix::from_fn(n, |i, j| w.get(i, j) / sums[j]);
    TransitionMatrix::new(p, false)
}

/// Zeroes the diagonal and renormalizes every column: the non-lazy walk.
pub fn delazify(p: &TransitionMatrix) -> Result<TransitionMatrix> {
    let m = p.matrix();
    let n = m.n();
    let mut off = vec![0.0; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off[j] += m.get(i, j);
            }
        }
    }
    if let Some(j) = off.iter().position(|&s| !(s > 0.0)) {
        return Err(Error::IsolatedColumn(j));
    }
    let star = DenseMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { m.get(i, j) / off[j] });
    TransitionMatrix::new(star, true)
}

/// `P^m` by repeated multiplication.
pub fn matrix_power(p: &TransitionMatrix, m: usize) -> Result<DenseMatrix> {
    if m == 0 {
        return Err(Error::InvalidPower);
    }
    let base = p.matrix();
    let mut acc = base.clone();
    for _ in 1..m {
        acc = acc.matmul(base)?;
    }
    Ok(acc)
}
