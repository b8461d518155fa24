use super::eigen::eigen_symmetric;
use super::laplacian::{laplacian, Laplacian};
use crate::matrix::DenseMatrix;
use crate::{Error, Result};

/// Eigenvalues at or above `-NEAR_ZERO_EIGENVALUE` are treated as zero.
pub const NEAR_ZERO_EIGENVALUE: f64 = 1e-10;

/// The trivial eigenvector must be constant to this coefficient of variation.
const CONSTANCY_TOL: f64 = 1e-6;

/// Spectral coordinates: row `i` is the image of point `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    coords: Vec<f64>,
    dims: usize,
    /// Nontrivial eigenvalues, descending, all `<= 0`.
    pub eigenvalues: Vec<f64>,
    pub trivial_eigenvalue: f64,
    /// False when the top eigenvector was not near-constant, which points at
    /// disconnection or numerical trouble.
    pub trivial_is_constant: bool,
}

impl Embedding {
    pub fn from_coords(coords: Vec<f64>, dims: usize) -> Self {
        Self {
            coords,
            dims,
            eigenvalues: Vec::new(),
            trivial_eigenvalue: 0.0,
            trivial_is_constant: true,
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len() / self.dims
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dims..(i + 1) * self.dims]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dims)
    }

    /// Column `c` of the coordinates (one eigenvector).
    pub fn coordinate(&self, c: usize) -> Vec<f64> {
        self.points().map(|p| p[c]).collect()
    }
}

/// Embeds with the Laplacian built from the weight matrix `s`.
pub fn embed(s: &DenseMatrix, dims: usize) -> Result<Embedding> {
    embed_laplacian(&laplacian(s)?, dims)
}

pub fn embed_laplacian(t: &Laplacian, dims: usize) -> Result<Embedding> {
    if !(2..=3).contains(&dims) {
        return Err(Error::InvalidDims(dims));
    }
    let n = t.n();
    if n < dims + 1 {
        return Err(Error::InvalidEigenCount { count: dims + 1, n });
    }
    let eig = eigen_symmetric(t.matrix(), n)?;
    let near_zero = eig
        .values
        .iter()
        .filter(|&&v| v >= -NEAR_ZERO_EIGENVALUE)
        .count();
    if eig.values[1] >= -NEAR_ZERO_EIGENVALUE {
        return Err(Error::Disconnected { near_zero });
    }

    let trivial = &eig.vectors[0];
    let mean = trivial.iter().sum::<f64>() / n as f64;
    let spread = (trivial.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64).sqrt();
    let trivial_is_constant = mean.abs() > 0.0 && spread / mean.abs() < CONSTANCY_TOL;

    let mut coords = Vec::with_capacity(n * dims);
    for i in 0..n {
        for v in &eig.vectors[1..=dims] {
            coords.push(v[i]);
        }
    }
    Ok(Embedding {
        coords,
        dims,
        eigenvalues: eig.values[1..=dims].to_vec(),
        trivial_eigenvalue: eig.values[0],
        trivial_is_constant,
    })
}
