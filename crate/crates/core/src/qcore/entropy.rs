use super::eigen::hermitian_eigensystem;
use super::state::DensityMatrix;

/// Eigenvalues (and probabilities) below this are treated as exactly zero.
pub const ENTROPY_ZERO_CUTOFF: f64 = 1e-14;

/// `−Σ p log₂ p` with `0·log 0 = 0`.
pub fn shannon_entropy(probabilities: impl IntoIterator<Item = f64>) -> f64 {
    probabilities
        .into_iter()
        .filter(|&p| p >= ENTROPY_ZERO_CUTOFF)
        .map(|p| -p * p.log2())
        .sum()
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    if rho.dim() == 2 {
        return shannon_entropy(qubit_spectrum(rho)).max(0.0);
    }
    let es = hermitian_eigensystem(rho.matrix())
        .expect("density matrices are Hermitian by construction");
    shannon_entropy(es.values).max(0.0)
}

/// Closed-form eigenvalues of a 2×2 Hermitian matrix.
fn qubit_spectrum(rho: &DensityMatrix) -> [f64; 2] {
    let a = rho.entry(0, 0).re;
    let d = rho.entry(1, 1).re;
    let b = rho.entry(0, 1).norm();
    let mean = 0.5 * (a + d);
    let radius = (0.25 * (a - d) * (a - d) + b * b).sqrt();
    [mean + radius, mean - radius]
}
