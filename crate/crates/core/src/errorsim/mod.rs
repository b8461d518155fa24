//! Random edge perturbation experiments.
//!
//! [`sim`] adds random edges to a sparse graph, filters the perturbed
//! non-lazy walk and counts the added edges that survive, for comparison with
//! the expected-count bound `c n p + c n^2 p^2 + n^3 p^3 / 2`. [`circle`]
//! injects unit-weight edges into the Gaussian kernel of points on a circle
//! and measures how well each embedding keeps the circular order.

pub mod circle;
mod graph;
pub mod sim;

pub use circle::{
    circle_experiment, circle_points, cyclic_order_preservation, inject_random_edges,
    radius_ratio, CircleOutcome,
};
pub use graph::{neighborhood_bound, Graph};
pub use sim::{
    monte_carlo, monte_carlo_with_depth, perturb, perturb_with_rng, surviving_errors,
    theorem_bound, transition_nonlazy, SimReport, SurvivingErrors,
};
