//! Minimization of the measurement-conditioned entropy over the Bloch sphere.
//!
//! A `COARSE_GRID × COARSE_GRID` lattice over `θ ∈ [0, π)`, `φ ∈ [0, 2π)`
//! locates the basins; the best few lattice local minima are then polished by
//! alternating golden-section searches along θ and φ.

use std::f64::consts::PI;

use super::objective::ConditionalObjective;
use crate::error::Result;
use crate::qcore::{BlochMeasurement, DensityMatrix, Side};

pub const COARSE_GRID: usize = 64;
/// Refinement stops once a full θ/φ round improves the objective by less than this.
pub const REFINE_TOL: f64 = 1e-13;

const MAX_CANDIDATES: usize = 4;
const MAX_ROUNDS: usize = 60;
const GOLDEN_ARG_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalMinimum {
    pub value: f64,
    pub argmin: BlochMeasurement,
}

/// `θ_i = iπ/n`, `i = 0..n`. The pole `θ = π` is omitted: it is the same
/// measurement as `θ = 0` with the outcome labels swapped.
pub fn theta_lattice(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| PI * i as f64 / n as f64)
}

/// `φ_j = 2πj/n`, `j = 0..n`.
pub fn phi_lattice(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |j| 2.0 * PI * j as f64 / n as f64)
}

pub fn minimize_conditional_entropy(
    rho: &DensityMatrix,
    side: Side,
) -> Result<ConditionalMinimum> {
    let f = ConditionalObjective::new(rho, side)?;
    let objective = |theta: f64, phi: f64| -> Result<f64> { Ok(f.eval(BlochMeasurement::new(theta, phi))) };

    let n = COARSE_GRID;
    let thetas: Vec<f64> = theta_lattice(n).collect();
    let phis: Vec<f64> = phi_lattice(n).collect();
    let mut grid = vec![0.0; n * n];
    for (i, &t) in thetas.iter().enumerate() {
        for (j, &p) in phis.iter().enumerate() {
            grid[i * n + j] = objective(t, p)?;
        }
    }

    let mut best = ConditionalMinimum {
        value: f64::INFINITY,
        argmin: BlochMeasurement::new(0.0, 0.0),
    };
    for (k, &v) in grid.iter().enumerate() {
        if v < best.value {
            best = ConditionalMinimum {
                value: v,
                argmin: BlochMeasurement::new(thetas[k / n], phis[k % n]),
            };
        }
    }

    let step_theta = PI / n as f64;
    let step_phi = 2.0 * PI / n as f64;
    for (i, j) in lattice_minima(&grid, n) {
        let (mut theta, mut phi, mut value) = (thetas[i], phis[j], grid[i * n + j]);
        for _ in 0..MAX_ROUNDS {
            let start = value;

            let lo = (theta - step_theta).max(0.0);
            let hi = (theta + step_theta).min(PI);
            let (t, v) = golden_section(|t| objective(t, phi), lo, hi)?;
            if v < value {
                theta = t;
                value = v;
            }

            let (p, v) = golden_section(|p| objective(theta, p), phi - step_phi, phi + step_phi)?;
            if v < value {
                phi = p;
                value = v;
            }

            if start - value < REFINE_TOL {
                break;
            }
        }
        if value < best.value {
            best = ConditionalMinimum {
                value,
                argmin: BlochMeasurement::new(theta, phi),
            };
        }
    }
    Ok(best)
}

/// Lattice points no larger than their eight neighbours (φ wraps, θ does not),
/// best first, at most `MAX_CANDIDATES`.
fn lattice_minima(grid: &[f64], n: usize) -> Vec<(usize, usize)> {
    let mut minima = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = grid[i * n + j];
            let mut is_min = true;
            'scan: for di in [-1i64, 0, 1] {
                let ii = i as i64 + di;
                if ii < 0 || ii >= n as i64 {
                    continue;
                }
                for dj in [-1i64, 0, 1] {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let jj = (j as i64 + dj).rem_euclid(n as i64) as usize;
                    if grid[ii as usize * n + jj] < v {
                        is_min = false;
                        break 'scan;
                    }
                }
            }
            if is_min {
                minima.push((i, j));
            }
        }
    }
    minima.sort_by(|a, b| grid[a.0 * n + a.1].total_cmp(&grid[b.0 * n + b.1]));
    minima.truncate(MAX_CANDIDATES);
    minima
}

/// Golden-section search on `[lo, hi]`; returns the best point evaluated.
fn golden_section<F>(mut f: F, mut lo: f64, mut hi: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let (mut best_x, mut best_f) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    while hi - lo > GOLDEN_ARG_TOL {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
            if f1 < best_f {
                best_x = x1;
                best_f = f1;
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
            if f2 < best_f {
                best_x = x2;
                best_f = f2;
            }
        }
    }
    Ok((best_x, best_f))
}
