use std::io::Write;

use rayon::prelude::*;

use super::{CliError, SweepConfig};
use crate::blackhole::{hawking_temperature, squeeze_angle};
use crate::correlations::{full_report, CorrelationReport};

pub const CSV_HEADER: &str =
    "alpha,temperature,sin_r,mutual_info,cc_A,cc_B,discord_A,discord_B,mid_classical,mid_quantum";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub temperature: f64,
    pub sin_r: f64,
    pub report: CorrelationReport,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        let mut fields = vec![self.alpha, self.temperature, self.sin_r];
        fields.extend(self.report.values());
        fields
            .into_iter()
            .map(format_number)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Twelve significant digits in scientific notation.
pub fn format_number(x: f64) -> String {
    format!("{x:.11e}")
}

/// Evaluates every grid point; rows come back in ascending α whatever the
/// order in which the worker threads finish.
pub fn sweep(config: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    config.validate()?;
    config
        .alphas()
        .into_par_iter()
        .map(|alpha| {
            let p = config.params(alpha)?;
            Ok(SweepRow {
                alpha,
                temperature: hawking_temperature(&p)?,
                sin_r: squeeze_angle(&p)?.sin_r(),
                report: full_report(&p)?,
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    out.flush()
}
