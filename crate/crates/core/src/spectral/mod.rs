//! Laplacian construction, dense symmetric eigensolver, spectral embedding
//! and the half-space error used to score embeddings.

mod eigen;
mod embed;
mod halfspace;
mod laplacian;

pub use eigen::{eigen_symmetric, jacobi_eigen, SymmetricEigen, JACOBI_MAX_SWEEPS, JACOBI_REL_TOL};
pub use embed::{embed, embed_laplacian, Embedding, NEAR_ZERO_EIGENVALUE};
pub use halfspace::{best_axis_threshold, halfspace_error, HalfspaceFit};
pub use laplacian::{laplacian, Laplacian};
