//! Cyclic complex Jacobi eigensolver for small Hermitian matrices.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::EIGEN_INPUT_TOL;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    /// Column `i` is the eigenvector of `values[i]`.
    pub vectors: ComplexMatrix,
}

impl Eigensystem {
    pub fn vector(&self, i: usize) -> Vec<Complex64> {
        self.vectors.column(i)
    }
}

/// Diagonalizes a Hermitian matrix.
///
/// Degenerate eigenvalues keep the order produced by the Jacobi pass (the sort
/// is stable), and every eigenvector is rescaled so that its largest-magnitude
/// component is real and positive. Ties in magnitude resolve to the lowest index.
pub fn hermitian_eigensystem(m: &ComplexMatrix) -> Result<Eigensystem> {
    let defect = m.hermiticity_defect();
    if defect > EIGEN_INPUT_TOL {
        return Err(Error::ContractViolation(format!(
            "eigensystem requires a Hermitian matrix, ‖M − M†‖ = {defect:e}"
        )));
    }
    let n = m.dim();
    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
    }
    let mut v = ComplexMatrix::identity(n);

    let scale = frobenius(&a).max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));

    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let columns: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&i| canonical_phase(v.column(i)))
        .collect();
    let vectors = ComplexMatrix::from_columns(&columns)?;
    Ok(Eigensystem { values, vectors })
}

/// Zeroes `a[p][q]` with the unitary `g = diag(1, e^{-iφ}) · R(θ)` acting on rows/columns p, q.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let phase = apq / b;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let zeta = (aqq - app) / (2.0 * b);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let pc = phase.conj();
    let g00 = Complex64::new(c, 0.0);
    let g01 = Complex64::new(s, 0.0);
    let g10 = pc * -s;
    let g11 = pc * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g00 + akq * g10;
        a[(k, q)] = akp * g01 + akq * g11;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g00.conj() * apk + g10.conj() * aqk;
        a[(q, k)] = g01.conj() * apk + g11.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g00 + vkq * g10;
        v[(k, q)] = vkp * g01 + vkq * g11;
    }
}

fn canonical_phase(mut col: Vec<Complex64>) -> Vec<Complex64> {
    let mut best = 0;
    for (i, z) in col.iter().enumerate() {
        if z.norm() > col[best].norm() + 1e-12 {
            best = i;
        }
    }
    let pivot = col[best];
    if pivot.norm() > 0.0 {
        let unphase = pivot.conj() / pivot.norm();
        for z in col.iter_mut() {
            *z *= unphase;
        }
        col[best] = Complex64::new(col[best].re, 0.0);
    }
    col
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn frobenius(a: &ComplexMatrix) -> f64 {
    a.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_1_SQRT_2;

    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn residual(m: &ComplexMatrix, es: &Eigensystem) -> f64 {
        let n = m.dim();
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let v = es.vector(k);
            for i in 0..n {
                let mv: Complex64 = (0..n).map(|j| m[(i, j)] * v[j]).sum();
                worst = worst.max((mv - v[i] * es.values[k]).norm());
            }
        }
        worst
    }

    #[test]
    fn diagonal_input() {
        let es = hermitian_eigensystem(&ComplexMatrix::from_diagonal(&[0.75, 0.25])).unwrap();
        assert_eq!(es.values, vec![0.75, 0.25]);
        assert_eq!(es.vectors, ComplexMatrix::identity(2));
    }

    #[test]
    fn ascending_diagonal_is_reordered() {
        let es = hermitian_eigensystem(&ComplexMatrix::from_diagonal(&[0.25, 0.75])).unwrap();
        assert_eq!(es.values, vec![0.75, 0.25]);
        assert_eq!(es.vector(0), vec![c(0.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn pauli_x() {
        let sx = ComplexMatrix::from_real_rows(&[0.0, 1.0, 1.0, 0.0]).unwrap();
        let es = hermitian_eigensystem(&sx).unwrap();
        assert!((es.values[0] - 1.0).abs() < 1e-15);
        assert!((es.values[1] + 1.0).abs() < 1e-15);
        let v0 = es.vector(0);
        let v1 = es.vector(1);
        assert!((v0[0] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((v0[1] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        // canonical phase: first component wins the magnitude tie
        assert!((v1[0] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((v1[1] - c(-FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn complex_hermitian_residual_and_orthonormality() {
        let m = ComplexMatrix::from_rows(vec![
            c(2.0, 0.0),
            c(1.0, -1.0),
            c(0.0, 0.5),
            c(1.0, 1.0),
            c(-1.0, 0.0),
            c(0.3, 0.2),
            c(0.0, -0.5),
            c(0.3, -0.2),
            c(0.5, 0.0),
        ])
        .unwrap();
        let es = hermitian_eigensystem(&m).unwrap();
        assert!(residual(&m, &es) < 1e-12);
        assert!(es.vectors.unitarity_defect() < 1e-12);
        assert!(es.values.windows(2).all(|w| w[0] >= w[1]));
        let tr: f64 = es.values.iter().sum();
        assert!((tr - 1.5).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            hermitian_eigensystem(&m),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn degenerate_identity_keeps_computational_basis() {
        let es = hermitian_eigensystem(&ComplexMatrix::from_diagonal(&[0.5, 0.5])).unwrap();
        assert_eq!(es.vectors, ComplexMatrix::identity(2));
    }

    #[test]
    fn deterministic() {
        let m = ComplexMatrix::from_rows(vec![c(0.3, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.7, 0.0)])
            .unwrap();
        let a = hermitian_eigensystem(&m).unwrap();
        let b = hermitian_eigensystem(&m).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
    }
}
