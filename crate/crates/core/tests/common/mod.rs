#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dilaton_discord::qcore::{ComplexMatrix, DensityMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_matrix<R: Rng>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    m
}

/// `G G† / Tr(G G†)`: full-rank mixed state.
pub fn random_state<R: Rng>(rng: &mut R, dims: Vec<usize>) -> DensityMatrix {
    let dim = dims.iter().product();
    let g = gaussian_matrix(rng, dim);
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    let mut m = gg.scale_real(1.0 / tr);
    for i in 0..dim {
        for j in i..dim {
            let z = m[(i, j)];
            m[(j, i)] = z.conj();
        }
        m[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
    }
    DensityMatrix::new(m, dims).unwrap()
}

/// Gram–Schmidt on a random complex matrix.
pub fn random_unitary<R: Rng>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, dim);
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    for j in 0..dim {
        let mut v = g.column(j);
        for u in &cols {
            let proj: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= proj * ui;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols.push(v.into_iter().map(|z| z / norm).collect());
    }
    ComplexMatrix::from_columns(&cols).unwrap()
}

pub fn bell() -> DensityMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut m = ComplexMatrix::zeros(4);
    for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
        m[(i, j)] = Complex64::new(h * h, 0.0);
    }
    DensityMatrix::new(m, vec![2, 2]).unwrap()
}

pub fn assert_density_matrix(rho: &DensityMatrix) {
    let m = rho.matrix();
    assert!(m.hermiticity_defect() <= 1e-12, "hermiticity {}", m.hermiticity_defect());
    assert!((m.trace().re - 1.0).abs() <= 1e-12 && m.trace().im.abs() <= 1e-12);
    let smallest = *dilaton_discord::qcore::hermitian_eigensystem(m)
        .unwrap()
        .values
        .last()
        .unwrap();
    assert!(smallest >= -1e-10, "negative eigenvalue {smallest}");
}
