//! Markov-chain min filtering as a preconditioner for spectral embedding.
//!
//! The pipeline runs point cloud → Gaussian kernel → column-stochastic walk
//! `P` → non-lazy walk `P*` → filtered walk `Q` → Laplacian → leading
//! eigenvectors. The filter keeps, for every pair of states, the smallest of
//! the one- through `k`-step transition probabilities, so a state that is
//! reachable in one step but not consistently in several loses its weight.
//!
//! ```
//! use mcfilter::{filter, markov, spectral, errorsim};
//!
//! let cloud = errorsim::circle_points(40).unwrap();
//! let w = markov::gaussian_kernel(&cloud, 0.02).unwrap();
//! let p_star = markov::delazify(&markov::column_normalize(&w).unwrap()).unwrap();
//! let q = filter::min_filter(&p_star, 2, filter::FilterMode::Strict).unwrap();
//! let embedding = spectral::embed(q.q.matrix(), 2).unwrap();
//! assert_eq!(embedding.n(), 40);
//! ```

mod error;
pub mod errorsim;
pub mod filter;
pub mod ingest;
pub mod markov;
mod matrix;
pub mod spectral;

pub use error::{Error, ErrorKind, Result};
pub use errorsim::Graph;
pub use filter::{FilterMode, FilterReport};
pub use ingest::DataCloud;
pub use markov::TransitionMatrix;
pub use matrix::DenseMatrix;
pub use spectral::{Embedding, Laplacian};
