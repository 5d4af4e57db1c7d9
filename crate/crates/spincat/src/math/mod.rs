//! Numeric building blocks: special functions, dense complex linear algebra,
//! matrix exponentials, nonnegative least squares, small optimizers, and
//! deterministic RNG substreams.

pub mod expm;
pub mod linalg;
pub mod nnls;
pub mod optimize;
pub mod rng;
pub mod special;

pub use expm::{expm, lanczos_expv, propagator};
pub use linalg::{adjoint, hermitian_defect, hermitian_eigenvalues, lu_solve, max_abs, one_norm};
pub use nnls::{nnls, nnls_sum_constrained, SumConstraint};
pub use special::{laguerre_scaled, ln_factorial_table, poisson_cdf, poisson_pmf};
