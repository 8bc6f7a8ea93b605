//! Dense complex linear algebra for small Hilbert spaces (dimension ≤ 32).
//!
//! Everything here is a pure function of its inputs. Subsystem ordering
//! follows the tensor-product convention: the first factor is the most
//! significant digit of the basis index.

mod eigen;
mod entropy;
mod matrix;
mod measurement;
mod state;

pub use eigen::{hermitian_eigensystem, Eigensystem};
pub use entropy::{shannon_entropy, von_neumann_entropy, ENTROPY_ZERO_CUTOFF};
pub use matrix::{tensor_product, ComplexMatrix};
pub use measurement::{
    bloch_projectors, dephase_in_bases, measure_subsystem, BlochMeasurement, Branch, Outcome,
    Side,
};
pub use state::{partial_trace, DensityMatrix, StateVector};

/// Hermiticity tolerance on stored density matrices.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Unit-trace tolerance on density matrices and unit-norm tolerance on kets.
pub const TRACE_TOL: f64 = 1e-12;
/// Smallest eigenvalue accepted as positive semidefinite.
pub const PSD_TOL: f64 = 1e-10;
/// Hermiticity tolerance accepted by the eigensolver.
pub const EIGEN_INPUT_TOL: f64 = 1e-10;
