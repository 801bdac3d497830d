//! Grid sweeps behind `ybx sweep`, with CSV output.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use ybx_core::dynamics::berry_phase;
use ybx_core::entangle::{evaluate, theta_grid, Functional, Model, SweepResult, MIN_GRID};
use ybx_core::{Error, Result};

use crate::parallel::par_map;

pub const DEFAULT_BERRY_STEPS: usize = 100_000;
pub const DEFAULT_GRID: usize = 3001;
/// Each berry point diagonalizes `steps` Hamiltonians, so its grid is coarser.
pub const DEFAULT_BERRY_GRID: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum SweepTarget {
    #[value(name = "entropy-9x9")]
    Entropy9x9,
    #[value(name = "l1-9x9")]
    L1Nine,
    #[value(name = "l1-dhalf")]
    L1Dhalf,
    #[value(name = "concurrence-4x4")]
    Concurrence4x4,
    #[value(name = "berry")]
    Berry,
}

impl SweepTarget {
    pub fn default_grid(self) -> usize {
        match self {
            Self::Berry => DEFAULT_BERRY_GRID,
            _ => DEFAULT_GRID,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Entropy9x9 => "entropy-9x9",
            Self::L1Nine => "l1-9x9",
            Self::L1Dhalf => "l1-dhalf",
            Self::Concurrence4x4 => "concurrence-4x4",
            Self::Berry => "berry",
        }
    }

    fn functional_model(self) -> Option<(Functional, Model)> {
        match self {
            Self::Entropy9x9 => Some((Functional::Entropy, Model::QutritPsi)),
            Self::L1Nine => Some((Functional::L1, Model::QutritPsi)),
            Self::L1Dhalf => Some((Functional::L1, Model::DHalfColumn)),
            Self::Concurrence4x4 => Some((Functional::Concurrence, Model::Type2Column)),
            Self::Berry => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub theta: f64,
    pub value: f64,
    /// Closed form, only for `berry`.
    pub analytic: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub target: String,
    pub grid: usize,
    pub argmax: f64,
    pub max: f64,
    pub step: f64,
    /// Largest numeric-vs-closed-form error over both Berry phases.
    pub max_abs_error: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutput {
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

/// Evaluates `target` on the uniform grid over `[0, pi]`.
///
/// For `berry` the value column is the phase of `|psi+>`; the summary error
/// covers both eigenstates.
pub fn run_sweep(target: SweepTarget, grid: usize, berry_steps: usize) -> Result<SweepOutput> {
    if grid < MIN_GRID {
        return Err(Error::Unsupported(format!(
            "grid size {grid} below {MIN_GRID}"
        )));
    }
    let thetas = theta_grid(grid);
    let (rows, max_abs_error) = match target.functional_model() {
        Some((f, m)) => {
            let values = par_map(&thetas, |&t| evaluate(f, m, t))
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            let rows = thetas.iter().zip(values).map(|(&theta, value)| SweepRow {
                theta,
                value,
                analytic: None,
            });
            (rows.collect::<Vec<_>>(), None)
        }
        None => {
            let results = par_map(&thetas, |&t| berry_phase(t, berry_steps))
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            let err = results.iter().map(|r| r.abs_error).fold(0.0, f64::max);
            let rows = results
                .iter()
                .map(|r| SweepRow {
                    theta: r.theta,
                    value: r.gamma_plus,
                    analytic: Some(r.analytic_plus),
                })
                .collect();
            (rows, Some(err))
        }
    };
    let best = SweepResult::from_values(thetas, rows.iter().map(|r| r.value).collect())?;
    let summary = SweepSummary {
        target: target.name().to_string(),
        grid,
        argmax: best.argmax,
        max: best.max,
        step: best.step(),
        max_abs_error,
    };
    Ok(SweepOutput { rows, summary })
}

/// RFC 4180 CSV with header `theta,value` (plus `analytic` for berry).
pub fn write_csv<W: Write>(out: &SweepOutput, sink: W) -> csv::Result<()> {
    let berry = out.rows.iter().any(|r| r.analytic.is_some());
    let mut w = csv::Writer::from_writer(sink);
    if berry {
        w.write_record(["theta", "value", "analytic"])?;
    } else {
        w.write_record(["theta", "value"])?;
    }
    for r in &out.rows {
        let mut rec = vec![r.theta.to_string(), r.value.to_string()];
        if let Some(a) = r.analytic {
            rec.push(a.to_string());
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn format_summary(s: &SweepSummary) -> String {
    let mut line = format!(
        "{}: grid {} step {:.6e} argmax {:.12} max {:.12}",
        s.target, s.grid, s.step, s.argmax, s.max
    );
    if let Some(e) = s.max_abs_error {
        line.push_str(&format!(" max_abs_error {e:.3e}"));
    }
    line
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn small_grid_is_rejected() {
        assert!(run_sweep(SweepTarget::L1Dhalf, 8, 0).is_err());
    }

    #[test]
    fn csv_header_and_rows() {
        let out = run_sweep(SweepTarget::Concurrence4x4, 17, 0).unwrap();
        let mut buf = Vec::new();
        write_csv(&out, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "theta,value");
        assert_eq!(lines.len(), 18);
        assert!((out.summary.argmax - PI / 4.0).abs() <= out.summary.step);
    }

    #[test]
    fn berry_rows_carry_analytic_column() {
        let out = run_sweep(SweepTarget::Berry, 16, 2000).unwrap();
        let mut buf = Vec::new();
        write_csv(&out, &mut buf).unwrap();
        assert!(String::from_utf8(buf)
            .unwrap()
            .starts_with("theta,value,analytic\n"));
        assert!(out.summary.max_abs_error.unwrap() < 1e-3);
    }
}
