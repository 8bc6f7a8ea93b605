//! Rank-1 projective qubit measurements parameterized on the Bloch sphere.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::matrix::{tensor_product, ComplexMatrix};
use super::state::DensityMatrix;
use super::EIGEN_INPUT_TOL;
use crate::error::{Error, Result};

/// Branch probabilities below this are reported as degenerate.
pub const DEGENERATE_BRANCH: f64 = 1e-14;

/// Measurement direction `n = (sinθ cosφ, sinθ sinφ, cosθ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochMeasurement {
    pub theta: f64,
    pub phi: f64,
}

impl BlochMeasurement {
    /// Folds arbitrary angles onto `θ ∈ [0, π]`, `φ ∈ [0, 2π)` describing the same axis.
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(2.0 * PI);
        let mut phi = phi;
        if theta > PI {
            theta = 2.0 * PI - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(2.0 * PI);
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    pub fn bloch_vector(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }
}

/// Which party of a two-qubit state is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Plus,
    Minus,
}

/// Result of one measurement outcome.
#[derive(Debug, Clone, PartialEq)]
pub enum Branch {
    Populated {
        probability: f64,
        post_state: DensityMatrix,
    },
    /// Probability below [`DEGENERATE_BRANCH`]; no post-measurement state exists.
    Degenerate { probability: f64 },
}

impl Branch {
    pub fn probability(&self) -> f64 {
        match self {
            Branch::Populated { probability, .. } | Branch::Degenerate { probability } => {
                *probability
            }
        }
    }

    pub fn post_state(&self) -> Option<&DensityMatrix> {
        match self {
            Branch::Populated { post_state, .. } => Some(post_state),
            Branch::Degenerate { .. } => None,
        }
    }
}

/// `P± = (I ± n·σ)/2`.
pub fn bloch_projectors(m: BlochMeasurement) -> (ComplexMatrix, ComplexMatrix) {
    let [nx, ny, nz] = m.bloch_vector();
    let half = |sign: f64| {
        let mut p = ComplexMatrix::zeros(2);
        p[(0, 0)] = Complex64::new(0.5 * (1.0 + sign * nz), 0.0);
        p[(1, 1)] = Complex64::new(0.5 * (1.0 - sign * nz), 0.0);
        p[(0, 1)] = Complex64::new(0.5 * sign * nx, -0.5 * sign * ny);
        p[(1, 0)] = Complex64::new(0.5 * sign * nx, 0.5 * sign * ny);
        p
    };
    (half(1.0), half(-1.0))
}

/// Measures one qubit of a two-qubit state and returns the outcome probability
/// and the normalized state of the other qubit.
///
/// Uses `Tr_m[(Π⊗I) ρ (Π⊗I)] = Tr_m[(Π⊗I) ρ]`, which holds because `Π² = Π`
/// and the partial trace is cyclic on the measured factor.
pub fn measure_subsystem(
    rho: &DensityMatrix,
    side: Side,
    m: BlochMeasurement,
    outcome: Outcome,
) -> Result<Branch> {
    require_two_qubits(rho)?;
    let (plus, minus) = bloch_projectors(m);
    let proj = match outcome {
        Outcome::Plus => plus,
        Outcome::Minus => minus,
    };
    let r = rho.matrix();
    let mut reduced = ComplexMatrix::zeros(2);
    for k in 0..2 {
        for l in 0..2 {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..2 {
                for j in 0..2 {
                    acc += match side {
                        // Σ_{a,a'} Π_{a a'} ρ_{(a' k),(a l)}
                        Side::A => proj[(i, j)] * r[(2 * j + k, 2 * i + l)],
                        // Σ_{b,b'} Π_{b b'} ρ_{(k b'),(l b)}
                        Side::B => proj[(i, j)] * r[(2 * k + j, 2 * l + i)],
                    };
                }
            }
            reduced[(k, l)] = acc;
        }
    }
    let probability = reduced.trace().re;
    if probability < DEGENERATE_BRANCH {
        return Ok(Branch::Degenerate { probability });
    }
    let post_state =
        DensityMatrix::from_parts_unchecked(reduced.scale_real(1.0 / probability), vec![2]);
    Ok(Branch::Populated {
        probability,
        post_state,
    })
}

/// `η = Σ_{i,j} (π_i ⊗ π_j) ρ (π_i ⊗ π_j)` with rank-1 projectors onto the basis columns.
pub fn dephase_in_bases(
    rho: &DensityMatrix,
    basis_a: &ComplexMatrix,
    basis_b: &ComplexMatrix,
) -> Result<DensityMatrix> {
    require_two_qubits(rho)?;
    for (name, basis) in [("A", basis_a), ("B", basis_b)] {
        if basis.dim() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "basis for {name} must be 2x2"
            )));
        }
        let defect = basis.unitarity_defect();
        if defect > EIGEN_INPUT_TOL {
            return Err(Error::ContractViolation(format!(
                "basis for {name} is not orthonormal (defect {defect:e})"
            )));
        }
    }
    let projectors = |basis: &ComplexMatrix| -> Result<Vec<ComplexMatrix>> {
        (0..2)
            .map(|k| {
                let col = basis.column(k);
                ComplexMatrix::outer(&col, &col)
            })
            .collect()
    };
    let pa = projectors(basis_a)?;
    let pb = projectors(basis_b)?;
    let mut eta = ComplexMatrix::zeros(4);
    for a in &pa {
        for b in &pb {
            let p = tensor_product(a, b);
            eta = &eta + &(&(&p * rho.matrix()) * &p);
        }
    }
    Ok(DensityMatrix::from_parts_unchecked(eta, vec![2, 2]))
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dims() != [2, 2] {
        return Err(Error::DimensionMismatch(format!(
            "expected a two-qubit state, got subsystem dimensions {:?}",
            rho.dims()
        )));
    }
    Ok(())
}
