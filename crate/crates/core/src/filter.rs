//! Self-consistency filtering of a non-lazy Markov chain.
//!
//! For a non-lazy chain `P*` and depth `k`, every entry keeps the smallest
//! of its one-step through `k`-step transition probabilities:
//!
//! ```text
//! M_ij = min(P*_ij, (P*^2)_ij, ..., (P*^k)_ij)
//! Q_ij = M_ij / sum_m M_mj
//! ```
//!
//! A state that is easy to reach in one step but unreachable in two is
//! dropped from the column. Because the one-step term has a zero diagonal,
//! so does `Q`. On bipartite graphs (no odd cycles) the one- and two-step
//! supports are disjoint and whole columns vanish; see [`FilterMode`].

use crate::markov::{matrix_power, TransitionMatrix};
use crate::matrix::DenseMatrix;
use crate::{Error, Result};

/// An entry of `Q` counts as present when it exceeds this value.
pub const POSITIVE_THRESHOLD: f64 = 0.0;

/// Default filter depth for embeddings.
pub const DEFAULT_DEPTH: usize = 2;

/// What to do when a column of `M` is entirely zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterMode {
    /// Fail with [`Error::Annihilated`].
    #[default]
    Strict,
    /// Leave the column all-zero and list it in the report.
    Lenient,
}

#[derive(Debug, Clone)]
pub struct FilterReport {
    pub q: TransitionMatrix,
    /// Columns whose unnormalized entries summed to zero (lenient mode only).
    pub annihilated_columns: Vec<usize>,
    /// Pairs `(i, j)` with `P*_ij > 0` but `Q_ij = 0`.
    pub zeroed_pairs: usize,
}

impl FilterReport {
    #[inline]
    pub fn is_positive(&self, i: usize, j: usize) -> bool {
        self.q.get(i, j) > POSITIVE_THRESHOLD
    }

    /// Row-major indicator of `Q_ij > 0`.
    pub fn support(&self) -> Vec<bool> {
        self.q
            .matrix()
            .as_slice()
            .iter()
            .map(|&x| x > POSITIVE_THRESHOLD)
            .collect()
    }
}

fn check_input(p_star: &TransitionMatrix) -> Result<()> {
    if !p_star.is_nonlazy() {
        return Err(Error::LazyChain);
    }
    Ok(())
}

/// Entrywise minimum over the first `k` powers of `p_star`, normalized by column.
pub fn min_filter(p_star: &TransitionMatrix, k: usize, mode: FilterMode) -> Result<FilterReport> {
    check_input(p_star)?;
    if k < 2 {
        return Err(Error::InvalidDepth(k));
    }
    let base = p_star.matrix();
    let mut m = base.clone();
    let mut power = base.clone();
    for _ in 2..=k {
        power = power.matmul(base)?;
        let mut any = false;
        for (dst, &x) in m.as_mut_slice().iter_mut().zip(power.as_slice()) {
            if x < *dst {
                *dst = x;
            }
            any |= *dst > 0.0;
        }
        if !any {
            break;
        }
    }
    finish(p_star, m, mode)
}

/// Pointwise product `P*_ij * (P*^2)_ij`, normalized by column.
pub fn product_filter(p_star: &TransitionMatrix, mode: FilterMode) -> Result<FilterReport> {
    check_input(p_star)?;
    let mut m = matrix_power(p_star, 2)?;
    for (dst, &x) in m.as_mut_slice().iter_mut().zip(p_star.matrix().as_slice()) {
        *dst *= x;
    }
    finish(p_star, m, mode)
}

fn finish(p_star: &TransitionMatrix, mut m: DenseMatrix, mode: FilterMode) -> Result<FilterReport> {
    let n = m.n();
    let sums = m.column_sums();
    let annihilated: Vec<usize> = (0..n).filter(|&j| !(sums[j] > 0.0)).collect();
    if !annihilated.is_empty() && mode == FilterMode::Strict {
        return Err(Error::Annihilated(annihilated));
    }
    for i in 0..n {
        for j in 0..n {
            let s = sums[j];
            m[(i, j)] = if s > 0.0 { m[(i, j)] / s } else { 0.0 };
        }
    }
    let zeroed_pairs = m
        .as_slice()
        .iter()
        .zip(p_star.matrix().as_slice())
        .filter(|(&q, &p)| p > 0.0 && !(q > POSITIVE_THRESHOLD))
        .count();
    Ok(FilterReport {
        q: TransitionMatrix::with_zero_columns(m, &annihilated),
        annihilated_columns: annihilated,
        zeroed_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markov::{column_normalize, delazify};

    fn k3() -> TransitionMatrix {
        delazify(&column_normalize(&DenseMatrix::from_fn(3, |_, _| 1.0)).unwrap()).unwrap()
    }

    fn swap() -> TransitionMatrix {
        let m = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        TransitionMatrix::new(m, true).unwrap()
    }

    #[test]
    fn k3_is_a_fixed_point_of_both_filters() {
        let p = k3();
        let min = min_filter(&p, 2, FilterMode::Strict).unwrap();
        let prod = product_filter(&p, FilterMode::Strict).unwrap();
        assert_eq!(min.q, p);
        assert_eq!(prod.q, p);
        assert_eq!(min.zeroed_pairs, 0);
    }

    #[test]
    fn two_point_chain_is_annihilated() {
        assert!(matches!(
            min_filter(&swap(), 2, FilterMode::Strict),
            Err(Error::Annihilated(ref c)) if c == &[0, 1]
        ));
        assert!(matches!(
            product_filter(&swap(), FilterMode::Strict),
            Err(Error::Annihilated(_))
        ));
        let report = min_filter(&swap(), 2, FilterMode::Lenient).unwrap();
        assert_eq!(report.annihilated_columns, vec![0, 1]);
        assert!(report.q.matrix().as_slice().iter().all(|&x| x == 0.0));
        assert_eq!(report.zeroed_pairs, 2);
    }

    #[test]
    fn depth_below_two_is_rejected() {
        assert!(matches!(
            min_filter(&k3(), 1, FilterMode::Strict),
            Err(Error::InvalidDepth(1))
        ));
    }

    #[test]
    fn lazy_input_is_rejected() {
        let p = column_normalize(&DenseMatrix::from_fn(3, |_, _| 1.0)).unwrap();
        assert!(matches!(
            min_filter(&p, 2, FilterMode::Strict),
            Err(Error::LazyChain)
        ));
    }
}
