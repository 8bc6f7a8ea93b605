use num_complex::Complex64;

use super::eigen::hermitian_eigensystem;
use super::matrix::{tensor_product, ComplexMatrix};
use super::{HERMITIAN_TOL, PSD_TOL, TRACE_TOL};
use crate::error::{Error, Result};

/// Normalized pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::DimensionMismatch("empty state vector".into()));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!(
                "state vector has squared norm {norm_sqr}"
            )));
        }
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "inner product of dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|self⟩⟨self|` as a density matrix over the given subsystem dimensions.
    pub fn projector(&self, dims: Vec<usize>) -> Result<DensityMatrix> {
        let m = ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)?;
        DensityMatrix::new(m, dims)
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix with subsystem labels.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validates all three density-matrix invariants.
    pub fn new(matrix: ComplexMatrix, dims: Vec<usize>) -> Result<Self> {
        check_dims(&matrix, &dims)?;
        let herm = matrix.hermiticity_defect();
        if herm > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!("not Hermitian: defect {herm:e}")));
        }
        let tr = matrix.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}")));
        }
        let smallest = hermitian_eigensystem(&matrix)?
            .values
            .last()
            .copied()
            .unwrap_or(0.0);
        if smallest < -PSD_TOL {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {smallest:e}"
            )));
        }
        Ok(Self { matrix, dims })
    }

    /// Skips the eigenvalue check; used for matrices that are density matrices by construction.
    pub(crate) fn from_parts_unchecked(matrix: ComplexMatrix, dims: Vec<usize>) -> Self {
        debug_assert_eq!(matrix.dim(), dims.iter().product::<usize>());
        Self { matrix, dims }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::from_parts_unchecked(
            ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
            vec![dim],
        )
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `ρ ⊗ σ`, concatenating subsystem labels.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self::from_parts_unchecked(tensor_product(&self.matrix, &other.matrix), dims)
    }

    /// Relabels subsystems without touching the matrix.
    pub fn with_dims(self, dims: Vec<usize>) -> Result<Self> {
        check_dims(&self.matrix, &dims)?;
        Ok(Self { dims, ..self })
    }

    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        partial_trace(self, keep)
    }
}

fn check_dims(matrix: &ComplexMatrix, dims: &[usize]) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::DimensionMismatch(
            "subsystem dimensions must be positive".into(),
        ));
    }
    let product: usize = dims.iter().product();
    if product != matrix.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dimensions {dims:?} do not multiply to {}",
            matrix.dim()
        )));
    }
    Ok(())
}

/// Reduced state on the subsystems listed in `keep` (in ascending subsystem order).
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let count = rho.dims.len();
    if keep.is_empty() {
        return Err(Error::ContractViolation(
            "partial trace must keep at least one subsystem".into(),
        ));
    }
    if let Some(&index) = keep.iter().find(|&&k| k >= count) {
        return Err(Error::InvalidSubsystem { index, count });
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    let traced: Vec<usize> = (0..count).filter(|i| !kept.contains(i)).collect();

    let kept_dims: Vec<usize> = kept.iter().map(|&i| rho.dims[i]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&i| rho.dims[i]).collect();
    let kept_size: usize = kept_dims.iter().product();
    let traced_size: usize = traced_dims.iter().product();

    // strides of each subsystem in the full index
    let mut strides = vec![1usize; count];
    for i in (0..count.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * rho.dims[i + 1];
    }
    let offset = |which: &[usize], dims: &[usize], mut idx: usize| {
        let mut off = 0;
        for pos in (0..which.len()).rev() {
            let d = idx % dims[pos];
            idx /= dims[pos];
            off += d * strides[which[pos]];
        }
        off
    };
    let kept_offsets: Vec<usize> = (0..kept_size)
        .map(|i| offset(&kept, &kept_dims, i))
        .collect();
    let traced_offsets: Vec<usize> = (0..traced_size)
        .map(|i| offset(&traced, &traced_dims, i))
        .collect();

    let mut out = ComplexMatrix::zeros(kept_size);
    for (r, &ro) in kept_offsets.iter().enumerate() {
        for (c, &co) in kept_offsets.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for &to in &traced_offsets {
                acc += rho.matrix[(ro + to, co + to)];
            }
            out[(r, c)] = acc;
        }
    }
    Ok(DensityMatrix::from_parts_unchecked(out, kept_dims))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_1_SQRT_2;

    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> DensityMatrix {
        StateVector::new(vec![c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)])
            .unwrap()
            .projector(vec![2, 2])
            .unwrap()
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let a = partial_trace(&bell(), &[0]).unwrap();
        assert!(a.matrix().max_abs_diff(&ComplexMatrix::from_diagonal(&[0.5, 0.5])).unwrap() < 1e-15);
        assert_eq!(a.dims(), &[2]);
    }

    #[test]
    fn product_state_marginals() {
        let ra = DensityMatrix::new(
            ComplexMatrix::from_rows(vec![c(0.7), Complex64::new(0.1, 0.2), Complex64::new(0.1, -0.2), c(0.3)])
                .unwrap(),
            vec![2],
        )
        .unwrap();
        let rb = DensityMatrix::new(ComplexMatrix::from_diagonal(&[0.25, 0.75]), vec![2]).unwrap();
        let rho = ra.tensor(&rb);
        assert!(partial_trace(&rho, &[0]).unwrap().matrix().max_abs_diff(ra.matrix()).unwrap() < 1e-15);
        assert!(partial_trace(&rho, &[1]).unwrap().matrix().max_abs_diff(rb.matrix()).unwrap() < 1e-15);
    }

    #[test]
    fn keep_everything_is_identity() {
        let rho = bell();
        assert_eq!(partial_trace(&rho, &[1, 0]).unwrap(), rho);
    }

    #[test]
    fn out_of_range_subsystem() {
        assert_eq!(
            partial_trace(&bell(), &[2]),
            Err(Error::InvalidSubsystem { index: 2, count: 2 })
        );
        assert!(partial_trace(&bell(), &[]).is_err());
    }

    #[test]
    fn rejects_invalid_matrices() {
        assert!(DensityMatrix::new(ComplexMatrix::from_diagonal(&[0.5, 0.6]), vec![2]).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::from_diagonal(&[1.5, -0.5]), vec![2]).is_err());
        assert!(DensityMatrix::new(
            ComplexMatrix::from_real_rows(&[0.5, 0.1, 0.0, 0.5]).unwrap(),
            vec![2]
        )
        .is_err());
        assert!(DensityMatrix::new(ComplexMatrix::from_diagonal(&[0.5, 0.5]), vec![3]).is_err());
    }

    #[test]
    fn state_vector_norm_enforced() {
        assert!(StateVector::new(vec![c(1.0), c(1.0)]).is_err());
        let v = StateVector::new(vec![c(0.6), Complex64::new(0.0, 0.8)]).unwrap();
        assert!((v.inner(&v).unwrap() - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn uneven_dimensions() {
        // qutrit ⊗ qubit
        let ra = DensityMatrix::new(ComplexMatrix::from_diagonal(&[0.2, 0.3, 0.5]), vec![3]).unwrap();
        let rb = DensityMatrix::new(ComplexMatrix::from_diagonal(&[0.9, 0.1]), vec![2]).unwrap();
        let rho = ra.tensor(&rb);
        assert_eq!(rho.dims(), &[3, 2]);
        assert!(partial_trace(&rho, &[0]).unwrap().matrix().max_abs_diff(ra.matrix()).unwrap() < 1e-15);
        assert!(partial_trace(&rho, &[1]).unwrap().matrix().max_abs_diff(rb.matrix()).unwrap() < 1e-15);
    }
}
