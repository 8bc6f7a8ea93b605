//! Library side of the command-line driver: sweeps over the dilaton, CSV and
//! SVG emission, crossing search and state inspection.

mod crossing;
mod inspect;
mod plot;
mod sweep;

use std::path::PathBuf;

use thiserror::Error;

pub use crossing::{classical_gap, find_crossing, CROSSING_NOISE_FLOOR, CROSSING_TOL};
pub use inspect::render_state;
pub use plot::{render_charts, write_charts, Charts, Series, CHART_HEIGHT, CHART_WIDTH};
pub use sweep::{format_number, sweep, write_csv, SweepRow, CSV_HEADER};

use crate::error::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] Error),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Model(Error::Domain(_)) => 3,
            CliError::Model(Error::NoCrossing { .. }) => 5,
            CliError::Model(_) => 1,
            CliError::Io { .. } => 4,
        }
    }
}

/// Sweep over `steps` uniformly spaced dilaton values.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub mass: f64,
    pub omega: f64,
    pub q_r: f64,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub steps: usize,
    pub output_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            mass: 1.0,
            omega: 1.0,
            q_r: 1.0,
            alpha_min: 0.0,
            alpha_max: 0.999,
            steps: 200,
            output_path: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(CliError::Usage(format!("--mass must be positive, got {}", self.mass)));
        }
        if !(self.omega.is_finite() && self.omega > 0.0) {
            return Err(CliError::Usage(format!("--omega must be positive, got {}", self.omega)));
        }
        if !(0.0..=1.0).contains(&self.q_r) {
            return Err(CliError::Usage(format!("--qr must lie in [0, 1], got {}", self.q_r)));
        }
        if !(0.0 <= self.alpha_min && self.alpha_min < self.alpha_max && self.alpha_max < self.mass)
        {
            return Err(CliError::Usage(format!(
                "need 0 <= alpha-min < alpha-max < mass, got [{}, {}] with mass {}",
                self.alpha_min, self.alpha_max, self.mass
            )));
        }
        if self.steps < 2 {
            return Err(CliError::Usage(format!("--steps must be at least 2, got {}", self.steps)));
        }
        Ok(())
    }

    /// `α_i = α_min + i (α_max − α_min)/(steps − 1)`.
    pub fn alphas(&self) -> Vec<f64> {
        let span = self.alpha_max - self.alpha_min;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.alpha_max
                } else {
                    self.alpha_min + span * i as f64 / (self.steps - 1) as f64
                }
            })
            .collect()
    }

    pub fn params(&self, alpha: f64) -> Result<crate::blackhole::DilatonParams, Error> {
        crate::blackhole::DilatonParams::real(self.mass, alpha, self.omega, self.q_r)
    }
}
