//! Reference computations that share no code path with the library.
#![allow(dead_code)]

/// Number of eigenvalues of symmetric `a` strictly below `x`, by Sylvester's
/// law of inertia: the count of negative pivots of `a - x I` under plain
/// Gaussian elimination.
pub fn count_below(a: &[Vec<f64>], x: f64) -> usize {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= x;
    }
    let mut negatives = 0;
    for k in 0..n {
        let mut pivot = m[k][k];
        if pivot == 0.0 {
            pivot = -f64::MIN_POSITIVE;
        }
        if pivot < 0.0 {
            negatives += 1;
        }
        for i in k + 1..n {
            let f = m[i][k] / pivot;
            for j in k + 1..n {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    negatives
}

/// All eigenvalues of a small symmetric matrix, descending, by bisection on
/// [`count_below`] inside the Gershgorin interval.
pub fn bisection_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let radius = a
        .iter()
        .enumerate()
        .map(|(i, r)| r[i].abs() + r.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1.0;
    let mut values: Vec<f64> = (0..n)
        .map(|k| {
            // k-th smallest: least x with count_below(x) > k
            let (mut lo, mut hi) = (-radius, radius);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if count_below(a, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
                if hi - lo < 1e-14 {
                    break;
                }
            }
            0.5 * (lo + hi)
        })
        .collect();
    values.reverse();
    values
}

/// Whether a walk of exactly `len` steps leads from `from` to `to`, by
/// recursive enumeration over adjacency lists.
pub fn walk_exists(adj: &[Vec<bool>], from: usize, to: usize, len: usize) -> bool {
    if len == 0 {
        return from == to;
    }
    (0..adj.len()).any(|z| adj[from][z] && walk_exists(adj, z, to, len - 1))
}

/// `Q_ij > 0` for the depth-`k` min filter of the simple random walk: every
/// walk length `1..=k` must connect `j` to `i`.
pub fn filter_support(adj: &[Vec<bool>], k: usize) -> Vec<Vec<bool>> {
    let n = adj.len();
    (0..n)
        .map(|i| (0..n).map(|j| (1..=k).all(|m| walk_exists(adj, j, i, m))).collect())
        .collect()
}

/// Ordered and unordered counts of pairs absent from `original` but present
/// in `support`.
pub fn surviving_pairs(original: &[Vec<bool>], support: &[Vec<bool>]) -> (usize, usize) {
    let n = original.len();
    let mut ordered = 0;
    let mut unordered = 0;
    for i in 0..n {
        for j in i + 1..n {
            if original[i][j] {
                continue;
            }
            ordered += support[i][j] as usize + support[j][i] as usize;
            unordered += (support[i][j] || support[j][i]) as usize;
        }
    }
    (ordered, unordered)
}

/// The five-vertex neighborhood: x1 (index 0) joined to x2, x3, x4, x5,
/// with x2, x3, x4 mutually adjacent.
pub const FIVE_VERTEX_EDGES: [(usize, usize); 7] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (1, 3)];
