//! Conditional entropy evaluated from the spectral decomposition of `ρ`.
//!
//! With `ρ = Σ_k λ_k |ψ_k⟩⟨ψ_k|` and a rank-one projector `|u⟩⟨u|` on the
//! measured qubit, the unnormalized post-measurement state is
//! `M = Σ_k w_k w_k†` with `w_k = √λ_k ⟨u|ψ_k⟩`. Cauchy–Binet gives
//! `det M = Σ_{k<l} |w_k ∧ w_l|²`, a sum of non-negative terms, so the small
//! eigenvalue `det M / λ_max(M)` keeps full relative precision even when the
//! post-measurement state is almost pure. Entry-wise evaluation of `ad − |b|²`
//! would lose it to cancellation.

use std::f64::consts::LN_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcore::{hermitian_eigensystem, BlochMeasurement, DensityMatrix, Side, ENTROPY_ZERO_CUTOFF};

/// Same threshold as a degenerate measurement branch.
const BRANCH_CUTOFF: f64 = 1e-14;

#[derive(Debug, Clone)]
pub(crate) struct ConditionalObjective {
    side: Side,
    /// `√λ_k ψ_k` for every strictly positive eigenvalue.
    weighted: Vec<[Complex64; 4]>,
}

impl ConditionalObjective {
    pub(crate) fn new(rho: &DensityMatrix, side: Side) -> Result<Self> {
        if rho.dims() != [2, 2] {
            return Err(Error::DimensionMismatch(format!(
                "expected a two-qubit state, got subsystem dimensions {:?}",
                rho.dims()
            )));
        }
        let es = hermitian_eigensystem(rho.matrix())?;
        let weighted = es
            .values
            .iter()
            .enumerate()
            .filter(|(_, &l)| l > 0.0)
            .map(|(k, &l)| {
                let v = es.vector(k);
                let s = l.sqrt();
                [v[0] * s, v[1] * s, v[2] * s, v[3] * s]
            })
            .collect();
        Ok(Self { side, weighted })
    }

    pub(crate) fn eval(&self, m: BlochMeasurement) -> f64 {
        let (c, s) = ((0.5 * m.theta).cos(), (0.5 * m.theta).sin());
        let phase = Complex64::from_polar(1.0, m.phi);
        let plus = [Complex64::new(c, 0.0), phase * s];
        let minus = [Complex64::new(s, 0.0), -phase * c];
        self.branch(&plus) + self.branch(&minus)
    }

    /// `p · S(ρ_post)` for the outcome projecting the measured qubit onto `u`.
    fn branch(&self, u: &[Complex64; 2]) -> f64 {
        let (u0, u1) = (u[0].conj(), u[1].conj());
        let w: Vec<[Complex64; 2]> = self
            .weighted
            .iter()
            .map(|psi| match self.side {
                Side::A => [u0 * psi[0] + u1 * psi[2], u0 * psi[1] + u1 * psi[3]],
                Side::B => [u0 * psi[0] + u1 * psi[1], u0 * psi[2] + u1 * psi[3]],
            })
            .collect();

        let p: f64 = w.iter().map(|x| x[0].norm_sqr() + x[1].norm_sqr()).sum();
        if p < BRANCH_CUTOFF {
            return 0.0;
        }
        let mut det = 0.0;
        for k in 0..w.len() {
            for l in k + 1..w.len() {
                det += (w[k][0] * w[l][1] - w[k][1] * w[l][0]).norm_sqr();
            }
        }
        let large = 0.5 * (p + (p * p - 4.0 * det).max(0.0).sqrt());
        let q = (det / large / p).clamp(0.0, 0.5);
        p * binary_entropy(q)
    }
}

/// Entropy in bits of the distribution `(q, 1 − q)`.
fn binary_entropy(q: f64) -> f64 {
    if q <= 0.0 {
        return 0.0;
    }
    let small = if q < ENTROPY_ZERO_CUTOFF { 0.0 } else { -q * q.log2() };
    small - (1.0 - q) * (-q).ln_1p() / LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blackhole::{shared_state_direct, DilatonParams};
    use crate::qcore::{measure_subsystem, von_neumann_entropy, Branch, ComplexMatrix, Outcome};

    fn by_post_states(rho: &DensityMatrix, side: Side, m: BlochMeasurement) -> f64 {
        [Outcome::Plus, Outcome::Minus]
            .into_iter()
            .map(|o| match measure_subsystem(rho, side, m, o).unwrap() {
                Branch::Populated { probability, post_state } => probability * von_neumann_entropy(&post_state),
                Branch::Degenerate { .. } => 0.0,
            })
            .sum()
    }

    #[test]
    fn agrees_with_explicit_post_states() {
        let mixed = DensityMatrix::new(
            ComplexMatrix::from_rows(vec![
                Complex64::new(0.4, 0.0), Complex64::new(0.05, 0.02), Complex64::new(0.0, 0.1), Complex64::new(0.1, 0.0),
                Complex64::new(0.05, -0.02), Complex64::new(0.2, 0.0), Complex64::new(0.03, 0.0), Complex64::new(0.0, -0.04),
                Complex64::new(0.0, -0.1), Complex64::new(0.03, 0.0), Complex64::new(0.15, 0.0), Complex64::new(0.02, 0.01),
                Complex64::new(0.1, 0.0), Complex64::new(0.0, 0.04), Complex64::new(0.02, -0.01), Complex64::new(0.25, 0.0),
            ])
            .unwrap(),
            vec![2, 2],
        )
        .unwrap();
        let dilaton = shared_state_direct(&DilatonParams::unit(0.9).unwrap()).unwrap();
        for rho in [&mixed, &dilaton] {
            for side in [Side::A, Side::B] {
                let obj = ConditionalObjective::new(rho, side).unwrap();
                for (t, p) in [(0.0, 0.0), (0.4, 1.0), (1.5, 3.3), (2.8, 5.9), (3.1, 0.2)] {
                    let m = BlochMeasurement::new(t, p);
                    assert!((obj.eval(m) - by_post_states(rho, side, m)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn resolves_nearly_pure_post_states() {
        // at α = 0.05 the post-states are pure up to sin²r ≈ 4e-11
        let rho = shared_state_direct(&DilatonParams::unit(0.05).unwrap()).unwrap();
        let obj = ConditionalObjective::new(&rho, Side::A).unwrap();
        let at = |t: f64| obj.eval(BlochMeasurement::new(t, 0.0));
        let centre = at(std::f64::consts::FRAC_PI_2);
        assert!(centre > 0.0);
        for d in [1e-3, 1e-2, 1e-1] {
            assert!(at(std::f64::consts::FRAC_PI_2 + d) > centre);
            assert!(at(std::f64::consts::FRAC_PI_2 - d) > centre);
        }
    }

    #[test]
    fn binary_entropy_values() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-15);
        assert!((binary_entropy(0.25) - 0.8112781244591328).abs() < 1e-15);
    }
}
