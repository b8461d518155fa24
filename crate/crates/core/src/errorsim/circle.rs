//! Points on the unit circle with randomly injected long-range edges.

use std::f64::consts::PI;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::filter::{min_filter, FilterMode};
use crate::ingest::DataCloud;
use crate::markov::{column_normalize, delazify, gaussian_kernel};
use crate::matrix::DenseMatrix;
use crate::spectral::{embed, Embedding};
use crate::{Error, Result};

/// `(cos 2 pi j / n, sin 2 pi j / n)` for `j = 1..=n`.
pub fn circle_points(n: usize) -> Result<DataCloud> {
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    let coords = (1..=n)
        .flat_map(|j| {
            let a = 2.0 * PI * j as f64 / n as f64;
            [a.cos(), a.sin()]
        })
        .collect();
    DataCloud::new(coords, 2, None)
}

/// Sets `count` distinct off-diagonal pairs, chosen uniformly without
/// replacement, to weight 1 in both directions.
pub fn inject_random_edges(w: &DenseMatrix, count: usize, seed: u64) -> Result<DenseMatrix> {
    let n = w.n();
    let available = n * n.saturating_sub(1) / 2;
    if count > available {
        return Err(Error::TooManyEdges {
            requested: count,
            available,
        });
    }
    let mut out = w.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in index::sample(&mut rng, available, count) {
        let (i, j) = pair_at(n, k);
        out[(i, j)] = 1.0;
        out[(j, i)] = 1.0;
    }
    Ok(out)
}

/// The `k`-th pair `(i, j)`, `i < j`, in lexicographic order.
fn pair_at(n: usize, mut k: usize) -> (usize, usize) {
    for i in 0..n {
        let row = n - 1 - i;
        if k < row {
            return (i, i + 1 + k);
        }
        k -= row;
    }
    unreachable!("pair index out of range")
}

fn centered_plane(e: &Embedding) -> Vec<(f64, f64)> {
    let n = e.n() as f64;
    let (mx, my) = e
        .points()
        .fold((0.0, 0.0), |(x, y), p| (x + p[0] / n, y + p[1] / n));
    e.points().map(|p| (p[0] - mx, p[1] - my)).collect()
}

/// Largest over smallest distance from the centroid, in the first two coordinates.
pub fn radius_ratio(e: &Embedding) -> f64 {
    let (lo, hi) = centered_plane(e)
        .iter()
        .map(|(x, y)| x.hypot(*y))
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), r| (lo.min(r), hi.max(r)));
    hi / lo
}

/// Fraction of consecutive index pairs `(j, j + 1 mod n)` that stay adjacent
/// in the angular order of the embedded points about their centroid.
pub fn cyclic_order_preservation(e: &Embedding) -> f64 {
    let n = e.n();
    let centered = centered_plane(e);
    let angles: Vec<f64> = centered.iter().map(|(x, y)| y.atan2(*x)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| angles[a].total_cmp(&angles[b]).then(a.cmp(&b)));
    let mut position = vec![0; n];
    for (rank, &i) in order.iter().enumerate() {
        position[i] = rank;
    }
    let kept = (0..n)
        .filter(|&j| {
            let gap = (position[j] + n - position[(j + 1) % n]) % n;
            gap == 1 || gap == n - 1
        })
        .count();
    kept as f64 / n as f64
}

#[derive(Debug, Clone)]
pub struct CircleOutcome {
    pub p_embedding: Embedding,
    pub q_embedding: Embedding,
}

impl CircleOutcome {
    pub fn p_radius_ratio(&self) -> f64 {
        radius_ratio(&self.p_embedding)
    }

    pub fn q_radius_ratio(&self) -> f64 {
        radius_ratio(&self.q_embedding)
    }

    pub fn p_preservation(&self) -> f64 {
        cyclic_order_preservation(&self.p_embedding)
    }

    pub fn q_preservation(&self) -> f64 {
        cyclic_order_preservation(&self.q_embedding)
    }
}

/// Embeds `n` circle points from the kernel with `edges` injected unit
/// weights, once with the non-lazy walk `P*` and once with its depth-`depth`
/// min filter.
pub fn circle_experiment(
    n: usize,
    epsilon: f64,
    edges: usize,
    depth: usize,
    seed: u64,
) -> Result<CircleOutcome> {
    let cloud = circle_points(n)?;
    let w = inject_random_edges(&gaussian_kernel(&cloud, epsilon)?, edges, seed)?;
    let p_star = delazify(&column_normalize(&w)?)?;
    let q = min_filter(&p_star, depth, FilterMode::Strict)?;
    Ok(CircleOutcome {
        p_embedding: embed(p_star.matrix(), 2)?,
        q_embedding: embed(q.q.matrix(), 2)?,
    })
}
