//! Shared fixtures for the criterion benches.

use mcfilter::{errorsim, markov, TransitionMatrix};

/// Non-lazy kernel walk on `n` circle points.
pub fn circle_walk(n: usize, epsilon: f64) -> TransitionMatrix {
    let cloud = errorsim::circle_points(n).expect("n >= 3");
    let w = markov::gaussian_kernel(&cloud, epsilon).expect("positive epsilon");
    markov::delazify(&markov::column_normalize(&w).expect("positive columns"))
        .expect("kernel columns have off-diagonal mass")
}
