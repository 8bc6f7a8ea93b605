use rayon::prelude::*;

use super::{CliError, SweepConfig};
use crate::blackhole::{shared_state_direct, DilatonParams};
use crate::correlations::{one_sided, Side};
use crate::error::{Error, Result};

/// Bisection stops once the bracket is no wider than this.
pub const CROSSING_TOL: f64 = 1e-5;
/// Gap values this small are indistinguishable from optimizer noise and carry no sign.
pub const CROSSING_NOISE_FLOOR: f64 = 1e-9;

/// `C(B|A) − C(A|B)` at one parameter point.
pub fn classical_gap(p: &DilatonParams) -> Result<f64> {
    let rho = shared_state_direct(p)?;
    Ok(one_sided(&rho, Side::A)?.classical - one_sided(&rho, Side::B)?.classical)
}

fn sign(g: f64) -> i8 {
    if g > CROSSING_NOISE_FLOOR {
        1
    } else if g < -CROSSING_NOISE_FLOOR {
        -1
    } else {
        0
    }
}

/// Locates the dilaton at which the two one-sided classical correlations
/// cross: the sweep grid brackets the first resolvable sign change of the
/// gap, then bisection narrows it to [`CROSSING_TOL`].
pub fn find_crossing(config: &SweepConfig) -> std::result::Result<f64, CliError> {
    config.validate()?;
    let gap = |alpha: f64| -> Result<f64> { classical_gap(&config.params(alpha)?) };

    let alphas = config.alphas();
    let gaps: Vec<f64> = alphas
        .par_iter()
        .map(|&a| gap(a))
        .collect::<Result<_>>()?;

    let mut last: Option<(f64, f64)> = None;
    let mut bracket = None;
    for (&a, &g) in alphas.iter().zip(&gaps) {
        if sign(g) == 0 {
            continue;
        }
        if let Some((pa, pg)) = last {
            if sign(pg) != sign(g) {
                bracket = Some((pa, pg, a));
                break;
            }
        }
        last = Some((a, g));
    }
    let (mut lo, mut g_lo, mut hi) = bracket.ok_or(Error::NoCrossing {
        alpha_min: config.alpha_min,
        alpha_max: config.alpha_max,
    })?;

    while hi - lo > CROSSING_TOL {
        let mid = 0.5 * (lo + hi);
        let g_mid = gap(mid)?;
        if g_mid == 0.0 {
            return Ok(mid);
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
