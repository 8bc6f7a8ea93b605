use num_complex::Complex64;

use super::fock::{kruskal_one_particle, kruskal_vacuum, FockLabeling, Mode};
use super::params::DilatonParams;
use super::thermal::squeeze_angle;
use crate::error::Result;
use crate::qcore::{ComplexMatrix, DensityMatrix, StateVector};

/// Closed form of the state shared by A and the exterior particle detector B̃:
///
/// `½[C²|00⟩⟨00| + q_R* C|00⟩⟨11| + q_R C|11⟩⟨00| + |q_L|²C²|10⟩⟨10| + S²|01⟩⟨01| + χ₀|11⟩⟨11|]`
///
/// with `χ₀ = |q_R|² + |q_L|² S²`. Basis index is `2·a + b`.
pub fn shared_state_direct(p: &DilatonParams) -> Result<DensityMatrix> {
    let r = squeeze_angle(p)?;
    let (c, s) = (r.cos_r(), r.sin_r());
    let q_r = p.q_r();
    let q_l2 = p.q_l().powi(2);
    let chi0 = q_r.norm_sqr() + q_l2 * s * s;

    let mut m = ComplexMatrix::zeros(4);
    m[(0, 0)] = Complex64::new(0.5 * c * c, 0.0);
    m[(1, 1)] = Complex64::new(0.5 * s * s, 0.0);
    m[(2, 2)] = Complex64::new(0.5 * q_l2 * c * c, 0.0);
    m[(3, 3)] = Complex64::new(0.5 * chi0, 0.0);
    m[(0, 3)] = q_r.conj() * (0.5 * c);
    m[(3, 0)] = q_r * (0.5 * c);
    DensityMatrix::new(m, vec![2, 2])
}

/// Pure five-mode state `(|0⟩_A|0_K⟩ + |1⟩_A|1_K⟩)/√2` on `[A; out⁺; in⁻; out⁻; in⁺]`.
fn shared_pure_state(p: &DilatonParams) -> Result<DensityMatrix> {
    let r = squeeze_angle(p)?;
    let vacuum = kruskal_vacuum(&r)?;
    let excited = kruskal_one_particle(&r, p.q_r())?;
    let norm = std::f64::consts::FRAC_1_SQRT_2;
    let amps: Vec<Complex64> = vacuum
        .amplitudes()
        .iter()
        .chain(excited.amplitudes())
        .map(|z| z * norm)
        .collect();
    StateVector::new(amps)?.projector(vec![2; 5])
}

/// State on `[A; out⁺; out⁻]` after discarding both interior modes.
pub fn shared_state_three_mode(p: &DilatonParams) -> Result<DensityMatrix> {
    let labels = FockLabeling::with_inertial();
    let keep = [Mode::Inertial, Mode::OutFermion, Mode::OutAntifermion]
        .map(|m| labels.position(m).expect("mode is part of the labeling"));
    shared_pure_state(p)?.partial_trace(&keep)
}

/// Builds the same two-qubit state as [`shared_state_direct`] from the explicit
/// Kruskal kets by tracing out the interior modes and then the exterior antifermion.
pub fn shared_state_fock(p: &DilatonParams) -> Result<DensityMatrix> {
    shared_state_three_mode(p)?.partial_trace(&[0, 1])
}
