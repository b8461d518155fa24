//! Monte Carlo check of the surviving-error bound for random edge additions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::graph::{neighborhood_bound, Graph};
use crate::filter::{min_filter, FilterMode, FilterReport, DEFAULT_DEPTH};
use crate::markov::TransitionMatrix;
use crate::matrix::DenseMatrix;
use crate::{Error, Result};

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    Ok(())
}

/// Adds every missing edge independently with probability `p`.
pub fn perturb(g: &Graph, p: f64, seed: u64) -> Result<Graph> {
    perturb_with_rng(g, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Same as [`perturb`], drawing pairs `(u, v)`, `u < v`, in lexicographic order from `rng`.
pub fn perturb_with_rng<R: Rng>(g: &Graph, p: f64, rng: &mut R) -> Result<Graph> {
    check_probability(p)?;
    let mut out = g.clone();
    if p == 0.0 {
        return Ok(out);
    }
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(p) {
                out.add_edge(u, v);
            }
        }
    }
    Ok(out)
}

/// Simple random walk: column `j` is uniform over the neighbors of `j`.
pub fn transition_nonlazy(g: &Graph) -> Result<TransitionMatrix> {
    let n = g.n();
    let mut m = DenseMatrix::zeros(n);
    for j in 0..n {
        let deg = g.degree(j);
        if deg == 0 {
            return Err(Error::IsolatedVertex(j));
        }
        let w = 1.0 / deg as f64;
        for i in g.neighbors(j) {
            m[(i, j)] = w;
        }
    }
    TransitionMatrix::new(m, true)
}

/// Vertex pairs absent from the original graph that the filter kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SurvivingErrors {
    /// Ordered pairs `(i, j)`, `i != j`, with `Q_ij > 0`.
    pub ordered: usize,
    /// Unordered pairs with `Q_ij > 0` or `Q_ji > 0`.
    pub unordered: usize,
}

pub fn surviving_errors(original: &Graph, q: &FilterReport) -> Result<SurvivingErrors> {
    let n = original.n();
    if q.q.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: q.q.n(),
        });
    }
    let mut counts = SurvivingErrors::default();
    for i in 0..n {
        for j in i + 1..n {
            if original.has_edge(i, j) {
                continue;
            }
            let (a, b) = (q.is_positive(i, j), q.is_positive(j, i));
            counts.ordered += a as usize + b as usize;
            counts.unordered += (a || b) as usize;
        }
    }
    Ok(counts)
}

/// `c n p + c n^2 p^2 + n^3 p^3 / 2`.
pub fn theorem_bound(n: usize, c: usize, p: f64) -> f64 {
    let (n, c) = (n as f64, c as f64);
    c * n * p + c * n * n * p * p + 0.5 * n * n * n * p * p * p
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimReport {
    pub trials: usize,
    pub n: usize,
    pub depth: usize,
    pub p: f64,
    pub seed: u64,
    /// Neighborhood bound of the base graph.
    pub c: usize,
    pub bound: f64,
    pub ordered_counts: Vec<usize>,
    pub unordered_counts: Vec<usize>,
    /// Columns annihilated by the filter, per trial.
    pub annihilated_counts: Vec<usize>,
    /// Randomly added edges, per trial.
    pub added_edges: Vec<usize>,
}

fn mean(values: &[usize]) -> f64 {
    values.iter().sum::<usize>() as f64 / values.len() as f64
}

impl SimReport {
    pub fn mean_unordered(&self) -> f64 {
        mean(&self.unordered_counts)
    }

    pub fn mean_ordered(&self) -> f64 {
        mean(&self.ordered_counts)
    }

    pub fn mean_annihilated(&self) -> f64 {
        mean(&self.annihilated_counts)
    }

    pub fn mean_added(&self) -> f64 {
        mean(&self.added_edges)
    }

    /// Standard error of [`Self::mean_unordered`].
    pub fn standard_error(&self) -> f64 {
        let t = self.unordered_counts.len();
        if t < 2 {
            return 0.0;
        }
        let m = self.mean_unordered();
        let var = self
            .unordered_counts
            .iter()
            .map(|&x| (x as f64 - m).powi(2))
            .sum::<f64>()
            / (t - 1) as f64;
        (var / t as f64).sqrt()
    }

    /// Mean unordered survivors within the bound plus two standard errors.
    pub fn passes(&self) -> bool {
        self.mean_unordered() <= self.bound + 2.0 * self.standard_error()
    }
}

/// [`monte_carlo_with_depth`] at the default filter depth of 2.
pub fn monte_carlo(g: &Graph, p: f64, trials: usize, seed: u64) -> Result<SimReport> {
    monte_carlo_with_depth(g, p, trials, seed, DEFAULT_DEPTH)
}

/// Runs `trials` independent perturb / filter / count rounds.
///
/// Trial `t` draws from a ChaCha8 stream seeded with `seed` on stream `t`,
/// so results do not depend on how the trials are scheduled.
pub fn monte_carlo_with_depth(
    g: &Graph,
    p: f64,
    trials: usize,
    seed: u64,
    depth: usize,
) -> Result<SimReport> {
    check_probability(p)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if depth < 2 {
        return Err(Error::InvalidDepth(depth));
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let base_edges = g.edge_count();

    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let perturbed = perturb_with_rng(g, p, &mut rng)?;
            let walk = transition_nonlazy(&perturbed)?;
            let report = min_filter(&walk, depth, FilterMode::Lenient)?;
            let errors = surviving_errors(g, &report)?;
            Ok((
                errors,
                report.annihilated_columns.len(),
                perturbed.edge_count() - base_edges,
            ))
        })
        .collect::<Result<Vec<_>>>()?;

    let c = neighborhood_bound(g);
    Ok(SimReport {
        trials,
        n: g.n(),
        depth,
        p,
        seed,
        c,
        bound: theorem_bound(g.n(), c, p),
        ordered_counts: outcomes.iter().map(|o| o.0.ordered).collect(),
        unordered_counts: outcomes.iter().map(|o| o.0.unordered).collect(),
        annihilated_counts: outcomes.iter().map(|o| o.1).collect(),
        added_edges: outcomes.iter().map(|o| o.2).collect(),
    })
}
