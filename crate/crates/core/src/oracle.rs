//! Brute-force verification paths, kept independent of the main pipeline.
//!
//! * state construction: closed-form detector state vs the one traced down from
//!   the explicit five-mode Kruskal ket;
//! * discord: exhaustive `(θ, φ)` lattice with no local refinement, each point
//!   evaluated from explicitly projected post-measurement states;
//! * eigenvalues: real roots of the characteristic polynomial, obtained from
//!   Faddeev–LeVerrier coefficients and nested critical-point bracketing;
//! * the overlap `⟨0_K|1_K⟩` between the vacuum and one-particle kets.

use num_complex::Complex64;

use crate::blackhole::{
    kruskal_one_particle, kruskal_vacuum, shared_state_direct, shared_state_fock, squeeze_angle,
    DilatonParams,
};
use crate::correlations::{phi_lattice, quantum_discord, theta_lattice, Entropies};
use crate::error::{Error, Result};
use crate::qcore::{
    measure_subsystem, von_neumann_entropy, BlochMeasurement, Branch, ComplexMatrix,
    DensityMatrix, Outcome, Side,
};

/// Smallest lattice accepted by [`grid_discord`].
pub const MIN_GRID: usize = 64;
/// Lattice used when comparing against the refined optimizer.
pub const VALIDATION_GRID: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub params: DilatonParams,
    /// `‖direct − Fock‖_max` for the detector state.
    pub max_entrywise_deviation: f64,
    /// Largest of `grid_discord − quantum_discord` over both sides.
    pub max_objective_gap: f64,
    pub vacuum_excited_overlap: Complex64,
}

impl std::fmt::Display for OracleReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "alpha={:.6} q_R={} state_deviation={:.3e} discord_grid_gap={:.3e} overlap={:.6e}{:+.6e}i",
            self.params.dilaton(),
            self.params.q_r(),
            self.max_entrywise_deviation,
            self.max_objective_gap,
            self.vacuum_excited_overlap.re,
            self.vacuum_excited_overlap.im,
        )
    }
}

/// `‖shared_state_direct(p) − shared_state_fock(p)‖_max`.
pub fn verify_state_construction(p: &DilatonParams) -> Result<f64> {
    let direct = shared_state_direct(p)?;
    let fock = shared_state_fock(p)?;
    direct.matrix().max_abs_diff(fock.matrix())
}

fn projected_conditional_entropy(rho: &DensityMatrix, side: Side, m: BlochMeasurement) -> Result<f64> {
    let mut total = 0.0;
    for outcome in [Outcome::Plus, Outcome::Minus] {
        if let Branch::Populated { probability, post_state } = measure_subsystem(rho, side, m, outcome)? {
            total += probability * von_neumann_entropy(&post_state);
        }
    }
    Ok(total)
}

/// Discord from the minimum over a `grid_size × grid_size` lattice, no refinement.
pub fn grid_discord(rho: &DensityMatrix, side: Side, grid_size: usize) -> Result<f64> {
    if grid_size < MIN_GRID {
        return Err(Error::ContractViolation(format!(
            "grid size {grid_size} is below the minimum of {MIN_GRID}"
        )));
    }
    let mut best = f64::INFINITY;
    for theta in theta_lattice(grid_size) {
        for phi in phi_lattice(grid_size) {
            best = best.min(projected_conditional_entropy(rho, side, BlochMeasurement::new(theta, phi))?);
        }
    }
    let e = Entropies::of(rho)?;
    Ok(e.marginal(side) - e.joint + best)
}

/// `⟨0_K|1_K⟩` for the kets as written; nonzero only when both `q_L` and `sin r` are.
pub fn overlap_diagnostic(p: &DilatonParams) -> Result<Complex64> {
    let r = squeeze_angle(p)?;
    kruskal_vacuum(&r)?.inner(&kruskal_one_particle(&r, p.q_r())?)
}

/// Runs all three checks at one parameter point using the validation lattice.
pub fn oracle_report(p: &DilatonParams, grid_size: usize) -> Result<OracleReport> {
    let rho = shared_state_direct(p)?;
    let mut gap: f64 = 0.0;
    for side in [Side::A, Side::B] {
        let g = grid_discord(&rho, side, grid_size)? - quantum_discord(&rho, side)?;
        gap = if gap.abs() >= g.abs() { gap } else { g };
    }
    Ok(OracleReport {
        params: *p,
        max_entrywise_deviation: verify_state_construction(p)?,
        max_objective_gap: gap,
        vacuum_excited_overlap: overlap_diagnostic(p)?,
    })
}

/// Coefficients `c_0..c_n` (ascending powers, `c_n = 1`) of `det(λI − M)` for a Hermitian `M`.
pub fn characteristic_polynomial(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut acc = ComplexMatrix::zeros(n);
    for k in 1..=n {
        let shifted = &acc + &ComplexMatrix::identity(n).scale(coeffs[n - k + 1]);
        acc = m * &shifted;
        coeffs[n - k] = -acc.trace() / k as f64;
    }
    coeffs.into_iter().map(|c| c.re).collect()
}

/// All real roots (with multiplicity, descending) of a polynomial whose roots are all real.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let mut roots: Vec<f64> = roots_with_multiplicity(coeffs)
        .into_iter()
        .flat_map(|(x, k)| std::iter::repeat_n(x, k))
        .collect();
    roots.sort_by(|a, b| b.total_cmp(a));
    roots
}

/// Eigenvalues of a Hermitian matrix via its characteristic polynomial, descending.
pub fn eigenvalues_by_characteristic_polynomial(m: &ComplexMatrix) -> Vec<f64> {
    real_roots(&characteristic_polynomial(m))
}

fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

// Between consecutive critical points the polynomial is monotone, so each such
// interval holds at most one simple root. A critical point where the polynomial
// vanishes is a multiple root, one order higher than its order in the derivative.
fn roots_with_multiplicity(coeffs: &[f64]) -> Vec<(f64, usize)> {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    let lead = coeffs[degree];
    if degree == 1 {
        return vec![(-coeffs[0] / lead, 1)];
    }
    let scale = coeffs.iter().fold(0.0f64, |a, c| a.max(c.abs()));
    let bound = 1.0 + coeffs[..degree].iter().fold(0.0f64, |a, c| a.max((c / lead).abs()));
    let zero_tol = 1e-14 * scale.max(1.0);

    let critical = roots_with_multiplicity(&derivative(coeffs));
    let mut roots = Vec::new();
    let mut nodes: Vec<(f64, f64)> = vec![(-bound, eval(coeffs, -bound))];
    for &(c, k) in &critical {
        let v = eval(coeffs, c);
        if v.abs() <= zero_tol {
            roots.push((c, k + 1));
            nodes.push((c, 0.0));
        } else {
            nodes.push((c, v));
        }
    }
    nodes.push((bound, eval(coeffs, bound)));

    for w in nodes.windows(2) {
        let ((a, fa), (b, fb)) = (w[0], w[1]);
        if fa != 0.0 && fb != 0.0 && fa.signum() != fb.signum() {
            roots.push((bisect(coeffs, a, b, fa), 1));
        }
    }
    roots
}

fn bisect(coeffs: &[f64], mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = eval(coeffs, mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_of_diagonal_matrix() {
        let m = ComplexMatrix::from_diagonal(&[1.0, 2.0, 3.0]);
        let c = characteristic_polynomial(&m);
        // (λ−1)(λ−2)(λ−3) = λ³ − 6λ² + 11λ − 6
        for (got, want) in c.iter().zip([-6.0, 11.0, -6.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        let r = real_roots(&c);
        for (got, want) in r.iter().zip([3.0, 2.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn double_root_recovered() {
        // (λ−1)²(λ+2) = λ³ − 3λ + 2
        let r = real_roots(&[2.0, -3.0, 0.0, 1.0]);
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([1.0, 1.0, -2.0]) {
            assert!((got - want).abs() < 1e-12, "{r:?}");
        }
    }

    #[test]
    fn grid_size_floor() {
        let rho = DensityMatrix::maximally_mixed(4).with_dims(vec![2, 2]).unwrap();
        assert!(grid_discord(&rho, Side::A, 16).is_err());
    }
}
