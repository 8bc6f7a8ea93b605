use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::params::DilatonParams;
use crate::error::{Error, Result};

/// Mixing angle `r` between inside and outside modes, stored as `(cos r, sin r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeAngle {
    cos_r: f64,
    sin_r: f64,
}

impl SqueezeAngle {
    /// Accepts any non-negative pair on the unit circle, including the `α → M` limit `cos r = sin r`.
    pub fn from_components(cos_r: f64, sin_r: f64) -> Result<Self> {
        if !(cos_r >= 0.0 && sin_r >= 0.0) || (cos_r * cos_r + sin_r * sin_r - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "({cos_r}, {sin_r}) is not a point of the first quadrant of the unit circle"
            )));
        }
        Ok(Self { cos_r, sin_r })
    }

    pub fn from_angle(r: f64) -> Result<Self> {
        Self::from_components(r.cos(), r.sin())
    }

    /// `cos r = sin r = 1/√2`, the infinite-temperature limit.
    pub fn maximal() -> Self {
        Self {
            cos_r: FRAC_1_SQRT_2,
            sin_r: FRAC_1_SQRT_2,
        }
    }

    pub fn cos_r(&self) -> f64 {
        self.cos_r
    }

    pub fn sin_r(&self) -> f64 {
        self.sin_r
    }
}

/// `cos r = (e^{−8πω(M−α)} + 1)^{−1/2}`, `sin r = (e^{8πω(M−α)} + 1)^{−1/2}`.
pub fn squeeze_angle(p: &DilatonParams) -> Result<SqueezeAngle> {
    check_horizon(p)?;
    let x = p.boltzmann_exponent();
    Ok(SqueezeAngle {
        cos_r: ((-x).exp() + 1.0).recip().sqrt(),
        sin_r: (x.exp() + 1.0).recip().sqrt(),
    })
}

/// `T = 1/(8π(M − α))`.
pub fn hawking_temperature(p: &DilatonParams) -> Result<f64> {
    check_horizon(p)?;
    Ok(1.0 / (8.0 * PI * (p.mass() - p.dilaton())))
}

/// Fermi–Dirac occupation `1/(e^{ω/T} + 1)` seen by the exterior detector.
pub fn occupation_number(p: &DilatonParams) -> Result<f64> {
    let t = hawking_temperature(p)?;
    Ok(((p.omega() / t).exp() + 1.0).recip())
}

// DilatonParams already enforces α < M; this guards values built by other means.
fn check_horizon(p: &DilatonParams) -> Result<()> {
    if p.dilaton() >= p.mass() {
        return Err(Error::Domain(format!(
            "dilaton {} must be strictly below the mass {}",
            p.dilaton(),
            p.mass()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn near_extremal_limit() {
        let p = DilatonParams::unit(1.0 - 1e-15).unwrap();
        let r = squeeze_angle(&p).unwrap();
        assert!((r.cos_r() - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((r.sin_r() - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((occupation_number(&p).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn schwarzschild_case_is_nearly_vacuum() {
        // 1/(e^{8π}+1) = 1.21615567092614e-11 (30-digit evaluation)
        let r = squeeze_angle(&DilatonParams::unit(0.0).unwrap()).unwrap();
        let expected = 1.0 / ((8.0 * PI).exp() + 1.0);
        assert!((r.sin_r().powi(2) - expected).abs() < 1e-24);
        assert!((r.sin_r().powi(2) - 1.216_155_670_926_14e-11).abs() < 1e-24);
    }

    #[test]
    fn temperature_values() {
        let t0 = hawking_temperature(&DilatonParams::unit(0.0).unwrap()).unwrap();
        assert!((t0 - 1.0 / (8.0 * PI)).abs() < 1e-15);
        let t_half = hawking_temperature(&DilatonParams::unit(0.5).unwrap()).unwrap();
        assert!((t_half - 1.0 / (4.0 * PI)).abs() < 1e-15);
        let mut last = 0.0;
        for k in 0..100 {
            let t = hawking_temperature(&DilatonParams::unit(k as f64 * 0.00999).unwrap()).unwrap();
            assert!(t > last);
            last = t;
        }
        assert!(hawking_temperature(&DilatonParams::unit(1.0 - 1e-9).unwrap()).unwrap() > 1e6);
    }

    #[test]
    fn sin_r_increases_with_dilaton() {
        let mut last = -1.0;
        for k in 0..200 {
            let s = squeeze_angle(&DilatonParams::unit(k as f64 * 0.005).unwrap())
                .unwrap()
                .sin_r();
            assert!(s > last);
            assert!(s < FRAC_1_SQRT_2);
            last = s;
        }
    }

    #[test]
    fn explicit_components() {
        assert!(SqueezeAngle::from_components(0.6, 0.8).is_ok());
        assert!(SqueezeAngle::from_components(0.6, 0.7).is_err());
        assert!(SqueezeAngle::from_components(-0.6, 0.8).is_err());
        let r = SqueezeAngle::from_angle(0.3).unwrap();
        assert!((r.sin_r() - 0.3f64.sin()).abs() < 1e-15);
    }
}
