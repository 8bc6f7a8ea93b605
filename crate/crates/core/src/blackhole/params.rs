use num_complex::Complex64;

use crate::error::{Error, Result};

/// Physical inputs, in units `G = c = ħ = k_B = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilatonParams {
    mass: f64,
    dilaton: f64,
    omega: f64,
    q_r: Complex64,
}

impl DilatonParams {
    /// Requires `M > 0`, `0 ≤ α < M`, `ω > 0` and `|q_R| ≤ 1`.
    pub fn new(mass: f64, dilaton: f64, omega: f64, q_r: Complex64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::Domain(format!("mass must be positive, got {mass}")));
        }
        if !(dilaton.is_finite() && dilaton >= 0.0) {
            return Err(Error::Domain(format!(
                "dilaton must be non-negative, got {dilaton}"
            )));
        }
        if dilaton >= mass {
            return Err(Error::Domain(format!(
                "dilaton {dilaton} must be strictly below the mass {mass}"
            )));
        }
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::Domain(format!(
                "frequency must be positive, got {omega}"
            )));
        }
        if !(q_r.re.is_finite() && q_r.im.is_finite()) || q_r.norm() > 1.0 + 1e-12 {
            return Err(Error::Domain(format!("|q_R| must not exceed 1, got {q_r}")));
        }
        Ok(Self {
            mass,
            dilaton,
            omega,
            q_r,
        })
    }

    /// Real `q_R`, the common case.
    pub fn real(mass: f64, dilaton: f64, omega: f64, q_r: f64) -> Result<Self> {
        Self::new(mass, dilaton, omega, Complex64::new(q_r, 0.0))
    }

    /// `M = ω = 1` with the single-mode choice `q_R = 1`.
    pub fn unit(dilaton: f64) -> Result<Self> {
        Self::real(1.0, dilaton, 1.0, 1.0)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn dilaton(&self) -> f64 {
        self.dilaton
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn q_r(&self) -> Complex64 {
        self.q_r
    }

    /// `q_L = √(1 − |q_R|²)`, always real and non-negative.
    pub fn q_l(&self) -> f64 {
        (1.0 - self.q_r.norm_sqr()).max(0.0).sqrt()
    }

    /// `8πω(M − α)`, the exponent of the Fermi–Dirac factor.
    pub(crate) fn boltzmann_exponent(&self) -> f64 {
        8.0 * std::f64::consts::PI * self.omega * (self.mass - self.dilaton)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_checks() {
        assert!(DilatonParams::real(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(DilatonParams::real(1.0, 1.2, 1.0, 1.0).is_err());
        assert!(DilatonParams::real(1.0, -0.1, 1.0, 1.0).is_err());
        assert!(DilatonParams::real(0.0, 0.0, 1.0, 1.0).is_err());
        assert!(DilatonParams::real(1.0, 0.5, 0.0, 1.0).is_err());
        assert!(DilatonParams::real(1.0, 0.5, 1.0, 1.1).is_err());
        assert!(DilatonParams::real(1.0, f64::NAN, 1.0, 1.0).is_err());
        assert!(DilatonParams::real(1.0, 0.999, 1.0, 1.0).is_ok());
    }

    #[test]
    fn q_l_normalization() {
        for q in [0.0, 0.3, 0.6, 0.8, 1.0] {
            let p = DilatonParams::real(1.0, 0.5, 1.0, q).unwrap();
            assert!((p.q_r().norm_sqr() + p.q_l().powi(2) - 1.0).abs() < 1e-12);
            assert!(p.q_l() >= 0.0);
        }
        let p = DilatonParams::new(1.0, 0.5, 1.0, Complex64::from_polar(0.6, 0.7)).unwrap();
        assert!((p.q_l() - 0.8).abs() < 1e-12);
    }
}
