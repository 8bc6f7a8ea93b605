use crate::error::Result;
use crate::qcore::{dephase_in_bases, hermitian_eigensystem, partial_trace, DensityMatrix};

use super::mutual_information;

/// Measurement-induced disturbance split into the surviving (classical) and
/// destroyed (quantum) parts of the mutual information.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mid {
    /// `I(η)` where `η` is ρ dephased in the marginal eigenbases.
    pub classical: f64,
    /// `I(ρ) − I(η)`.
    pub quantum: f64,
}

pub fn mid(rho: &DensityMatrix) -> Result<Mid> {
    let basis_a = hermitian_eigensystem(partial_trace(rho, &[0])?.matrix())?.vectors;
    let basis_b = hermitian_eigensystem(partial_trace(rho, &[1])?.matrix())?.vectors;
    let eta = dephase_in_bases(rho, &basis_a, &basis_b)?;
    let classical = mutual_information(&eta)?;
    Ok(Mid {
        classical,
        quantum: mutual_information(rho)? - classical,
    })
}

/// The dephased state itself, for inspection and tests.
pub fn dephased_state(rho: &DensityMatrix) -> Result<DensityMatrix> {
    let basis_a = hermitian_eigensystem(partial_trace(rho, &[0])?.matrix())?.vectors;
    let basis_b = hermitian_eigensystem(partial_trace(rho, &[1])?.matrix())?.vectors;
    dephase_in_bases(rho, &basis_a, &basis_b)
}
