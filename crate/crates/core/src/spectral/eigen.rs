use crate::matrix::DenseMatrix;
use crate::{Error, Result};

/// Sweeps stop once the off-diagonal Frobenius norm drops below this
/// fraction of the input's Frobenius norm.
pub const JACOBI_REL_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenpairs of a real symmetric matrix, eigenvalues in descending order.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[r]` is the unit eigenvector for `values[r]`.
    pub vectors: Vec<Vec<f64>>,
}

impl SymmetricEigen {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Each eigenvector is sign-normalized so that its entry of largest
/// magnitude is positive.
pub fn jacobi_eigen(matrix: &DenseMatrix) -> Result<SymmetricEigen> {
    let n = matrix.n();
    let norm = matrix.frobenius_norm();
    if !matrix.is_finite() {
        return Err(Error::InvalidEntry { row: 0, col: 0 });
    }
    if !matrix.is_symmetric(1e-12 * norm.max(f64::MIN_POSITIVE)) {
        return Err(Error::NotSymmetric);
    }

    let mut a = matrix.as_slice().to_vec();
    // Row r of `vt` is column r of the accumulated rotation V.
    let mut vt = DenseMatrix::identity(n).as_slice().to_vec();
    let target = JACOBI_REL_TOL * norm;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut converged = off_norm(&a) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NotConverged { sweeps });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, n, p, q, c, s);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                let (head, tail) = vt.split_at_mut(q * n);
                let vp = &mut head[p * n..(p + 1) * n];
                let vq = &mut tail[..n];
                for (x, y) in vp.iter_mut().zip(vq.iter_mut()) {
                    let (xp, xq) = (*x, *y);
                    *x = c * xp - s * xq;
                    *y = s * xp + c * xq;
                }
            }
        }
        sweeps += 1;
        converged = off_norm(&a) <= target;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&r| {
            let mut v = vt[r * n..(r + 1) * n].to_vec();
            fix_sign(&mut v);
            v
        })
        .collect();
    Ok(SymmetricEigen { values, vectors })
}

/// Applies the off-diagonal part of the rotation in the `(p, q)` plane.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[p * n + k];
        let akq = a[q * n + k];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a[p * n + k] = new_p;
        a[k * n + p] = new_p;
        a[q * n + k] = new_q;
        a[k * n + q] = new_q;
    }
}

fn fix_sign(v: &mut [f64]) {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v.get(best).is_some_and(|&x| x < 0.0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// The `count` algebraically largest eigenpairs of a symmetric matrix.
pub fn eigen_symmetric(matrix: &DenseMatrix, count: usize) -> Result<SymmetricEigen> {
    let n = matrix.n();
    if count == 0 || count > n {
        return Err(Error::InvalidEigenCount { count, n });
    }
    let mut full = jacobi_eigen(matrix)?;
    full.values.truncate(count);
    full.vectors.truncate(count);
    Ok(full)
}
