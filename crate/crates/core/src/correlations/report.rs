use super::mid::mid;
use super::{one_sided_with, Entropies};
use crate::blackhole::{shared_state_direct, DilatonParams};
use crate::error::Result;
use crate::qcore::{BlochMeasurement, DensityMatrix, Side};

/// Every correlation measure of one two-qubit state, in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub mutual_info: f64,
    /// `C(B|A)`, A measured.
    pub classical_a: f64,
    /// `C(A|B)`, B measured.
    pub classical_b: f64,
    /// `D(B|A)`.
    pub discord_a: f64,
    /// `D(A|B)`.
    pub discord_b: f64,
    pub mid_classical: f64,
    pub mid_quantum: f64,
    pub argmin_a: BlochMeasurement,
    pub argmin_b: BlochMeasurement,
}

impl CorrelationReport {
    /// The seven measures in CSV column order.
    pub fn values(&self) -> [f64; 7] {
        [
            self.mutual_info,
            self.classical_a,
            self.classical_b,
            self.discord_a,
            self.discord_b,
            self.mid_classical,
            self.mid_quantum,
        ]
    }
}

pub fn correlation_report(rho: &DensityMatrix) -> Result<CorrelationReport> {
    let entropies = Entropies::of(rho)?;
    let a = one_sided_with(rho, Side::A, &entropies)?;
    let b = one_sided_with(rho, Side::B, &entropies)?;
    let m = mid(rho)?;
    Ok(CorrelationReport {
        mutual_info: entropies.mutual_information(),
        classical_a: a.classical,
        classical_b: b.classical,
        discord_a: a.discord,
        discord_b: b.discord,
        mid_classical: m.classical,
        mid_quantum: m.quantum,
        argmin_a: a.minimum.argmin,
        argmin_b: b.minimum.argmin,
    })
}

/// Report for the detector state at the given black-hole parameters.
pub fn full_report(p: &DilatonParams) -> Result<CorrelationReport> {
    correlation_report(&shared_state_direct(p)?)
}
