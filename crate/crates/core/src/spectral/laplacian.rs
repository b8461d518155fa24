use crate::matrix::DenseMatrix;
use crate::{Error, Result};

/// `T` with off-diagonal `s'_ij` and diagonal `-sum_{k != i} s'_ik`, where
/// `s' = (S + S^T) / 2`.
///
/// The quadratic form `f^T T f = -1/2 sum_ij s'_ij (f_i - f_j)^2` is
/// negative semidefinite and the constant vector lies in its kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct Laplacian {
    t: DenseMatrix,
    source_symmetrized: bool,
}

impl Laplacian {
    pub fn matrix(&self) -> &DenseMatrix {
        &self.t
    }

    /// True when the input weights were asymmetric and had to be averaged.
    pub fn source_symmetrized(&self) -> bool {
        self.source_symmetrized
    }

    pub fn n(&self) -> usize {
        self.t.n()
    }
}

/// Builds the Laplacian of a nonnegative weight matrix. The diagonal of `s` is ignored.
pub fn laplacian(s: &DenseMatrix) -> Result<Laplacian> {
    let n = s.n();
    for i in 0..n {
        for j in 0..n {
            let x = s.get(i, j);
            if !(x.is_finite() && x >= 0.0) {
                return Err(Error::InvalidEntry { row: i, col: j });
            }
        }
    }
    let mut t = DenseMatrix::zeros(n);
    let mut symmetrized = false;
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (s.get(i, j), s.get(j, i));
            symmetrized |= a != b;
            let w = 0.5 * (a + b);
            t[(i, j)] = w;
            t[(j, i)] = w;
        }
    }
    for i in 0..n {
        let degree: f64 = (0..n).filter(|&k| k != i).map(|k| t.get(i, k)).sum();
        t[(i, i)] = -degree;
    }
    Ok(Laplacian {
        t,
        source_symmetrized: symmetrized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_weights() {
        let s = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let l = laplacian(&s).unwrap();
        assert_eq!(l.matrix().as_slice(), &[-1.0, 1.0, 1.0, -1.0]);
        assert!(!l.source_symmetrized());
    }

    #[test]
    fn zero_weights() {
        let l = laplacian(&DenseMatrix::zeros(3)).unwrap();
        assert!(l.matrix().as_slice().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn asymmetric_weights_are_averaged() {
        let s = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let l = laplacian(&s).unwrap();
        assert_eq!(l.matrix().as_slice(), &[-0.5, 0.5, 0.5, -0.5]);
        assert!(l.source_symmetrized());
    }

    #[test]
    fn diagonal_is_ignored() {
        let s = DenseMatrix::from_rows(&[vec![7.0, 1.0], vec![1.0, 3.0]]).unwrap();
        assert_eq!(laplacian(&s).unwrap().matrix().as_slice(), &[-1.0, 1.0, 1.0, -1.0]);
    }

    #[test]
    fn negative_weight_is_rejected() {
        let s = DenseMatrix::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(laplacian(&s).is_err());
    }
}
