//! Explicit Kruskal kets in the occupation-number product basis.
//!
//! The four single-mode factors of one Kruskal mode `k` are ordered
//!
//! | position | mode                        |
//! |----------|-----------------------------|
//! | 0        | fermion `k`, outside        |
//! | 1        | antifermion `−k`, inside    |
//! | 2        | antifermion `−k`, outside   |
//! | 3        | fermion `k`, inside         |
//!
//! and the ket `|m n m' n'⟩` has basis index `8m + 4n + 2m' + n'` (first factor
//! most significant). When the inertial qubit A is prepended it becomes the
//! most significant bit of a 5-bit index. Fermionic signs are already folded
//! into the expansion coefficients, so plain product kets are used throughout.

use num_complex::Complex64;

use super::thermal::SqueezeAngle;
use crate::error::{Error, Result};
use crate::qcore::StateVector;

/// One occupation-number factor of the five-qubit space `[A; out⁺; in⁻; out⁻; in⁺]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Inertial,
    OutFermion,
    InAntifermion,
    OutAntifermion,
    InFermion,
}

/// Basis-index ↔ occupation-tuple bijection for a list of two-level modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockLabeling {
    modes: Vec<Mode>,
}

impl FockLabeling {
    /// `[out⁺, in⁻, out⁻, in⁺]`.
    pub fn kruskal() -> Self {
        Self {
            modes: vec![
                Mode::OutFermion,
                Mode::InAntifermion,
                Mode::OutAntifermion,
                Mode::InFermion,
            ],
        }
    }

    /// `[A; out⁺, in⁻, out⁻, in⁺]`.
    pub fn with_inertial() -> Self {
        let mut modes = vec![Mode::Inertial];
        modes.extend(Self::kruskal().modes);
        Self { modes }
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn dim(&self) -> usize {
        1 << self.modes.len()
    }

    pub fn position(&self, mode: Mode) -> Option<usize> {
        self.modes.iter().position(|&m| m == mode)
    }

    pub fn index(&self, occupations: &[u8]) -> Result<usize> {
        if occupations.len() != self.modes.len() || occupations.iter().any(|&n| n > 1) {
            return Err(Error::DimensionMismatch(format!(
                "occupations {occupations:?} do not label {} two-level modes",
                self.modes.len()
            )));
        }
        Ok(occupations
            .iter()
            .fold(0usize, |acc, &n| (acc << 1) | n as usize))
    }

    pub fn occupations(&self, index: usize) -> Vec<u8> {
        let n = self.modes.len();
        (0..n).map(|k| ((index >> (n - 1 - k)) & 1) as u8).collect()
    }
}

fn ket(entries: &[([u8; 4], Complex64)]) -> Result<StateVector> {
    let labels = FockLabeling::kruskal();
    let mut amps = vec![Complex64::new(0.0, 0.0); labels.dim()];
    for (occ, amp) in entries {
        amps[labels.index(occ)?] += amp;
    }
    StateVector::new(amps)
}

/// Kruskal vacuum of one mode:
/// `C²|0000⟩ − SC|0011⟩ + SC|1100⟩ − S²|1111⟩`.
pub fn kruskal_vacuum(r: &SqueezeAngle) -> Result<StateVector> {
    let (c, s) = (r.cos_r(), r.sin_r());
    let re = |x: f64| Complex64::new(x, 0.0);
    ket(&[
        ([0, 0, 0, 0], re(c * c)),
        ([0, 0, 1, 1], re(-s * c)),
        ([1, 1, 0, 0], re(s * c)),
        ([1, 1, 1, 1], re(-s * s)),
    ])
}

/// Kruskal one-particle state:
/// `q_R(C|1000⟩ − S|1011⟩) + q_L(S|1100⟩ + C|0001⟩)` with `q_L = √(1 − |q_R|²)`.
pub fn kruskal_one_particle(r: &SqueezeAngle, q_r: Complex64) -> Result<StateVector> {
    if q_r.norm() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!("|q_R| must not exceed 1, got {q_r}")));
    }
    let q_l = Complex64::new((1.0 - q_r.norm_sqr()).max(0.0).sqrt(), 0.0);
    let (c, s) = (r.cos_r(), r.sin_r());
    ket(&[
        ([1, 0, 0, 0], q_r * c),
        ([1, 0, 1, 1], q_r * -s),
        ([1, 1, 0, 0], q_l * s),
        ([0, 0, 0, 1], q_l * c),
    ])
}
