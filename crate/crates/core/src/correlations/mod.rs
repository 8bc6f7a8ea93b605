//! Total, classical and quantum correlations of two-qubit states.
//!
//! All quantities are in bits. One-sided measures follow the usual convention:
//! measuring side A gives `C(B|A) = S(ρ_B) − min S(B|{Π^A})` and
//! `D(B|A) = I − C(B|A)`.

mod mid;
mod objective;
mod optimize;
mod report;

pub use mid::{dephased_state, mid, Mid};
pub use optimize::{
    minimize_conditional_entropy, phi_lattice, theta_lattice, ConditionalMinimum, COARSE_GRID,
    REFINE_TOL,
};
pub use report::{correlation_report, full_report, CorrelationReport};

use crate::error::Result;
use crate::qcore::{partial_trace, von_neumann_entropy, BlochMeasurement, DensityMatrix};

pub use crate::qcore::{Side, Side as MeasurementSide};

/// Entropies of a two-qubit state and its marginals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entropies {
    pub joint: f64,
    pub a: f64,
    pub b: f64,
}

impl Entropies {
    pub fn of(rho: &DensityMatrix) -> Result<Self> {
        Ok(Self {
            joint: von_neumann_entropy(rho),
            a: von_neumann_entropy(&partial_trace(rho, &[0])?),
            b: von_neumann_entropy(&partial_trace(rho, &[1])?),
        })
    }

    pub fn mutual_information(&self) -> f64 {
        self.a + self.b - self.joint
    }

    pub fn marginal(&self, side: Side) -> f64 {
        match side {
            Side::A => self.a,
            Side::B => self.b,
        }
    }
}

/// `I(A:B) = S(ρ_A) + S(ρ_B) − S(ρ_AB)`.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    Ok(Entropies::of(rho)?.mutual_information())
}

/// `Σ_± p_± S(ρ_{other|±})` for a projective measurement on `side`.
pub fn conditional_entropy(rho: &DensityMatrix, side: Side, m: BlochMeasurement) -> Result<f64> {
    Ok(objective::ConditionalObjective::new(rho, side)?.eval(m))
}

/// Classical correlation and discord obtained by measuring one side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneSided {
    pub side: Side,
    pub classical: f64,
    pub discord: f64,
    pub minimum: ConditionalMinimum,
}

pub fn one_sided(rho: &DensityMatrix, side: Side) -> Result<OneSided> {
    let entropies = Entropies::of(rho)?;
    one_sided_with(rho, side, &entropies)
}

fn one_sided_with(rho: &DensityMatrix, side: Side, entropies: &Entropies) -> Result<OneSided> {
    let minimum = minimize_conditional_entropy(rho, side)?;
    Ok(OneSided {
        side,
        classical: entropies.marginal(side.other()) - minimum.value,
        discord: entropies.marginal(side) - entropies.joint + minimum.value,
        minimum,
    })
}

/// `C(other|side) = S(ρ_other) − min S(other|side)`.
pub fn classical_correlation(rho: &DensityMatrix, side: Side) -> Result<f64> {
    Ok(one_sided(rho, side)?.classical)
}

/// `D(other|side) = S(ρ_side) − S(ρ) + min S(other|side)`.
pub fn quantum_discord(rho: &DensityMatrix, side: Side) -> Result<f64> {
    Ok(one_sided(rho, side)?.discord)
}
