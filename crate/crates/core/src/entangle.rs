//! Entanglement and norm functionals, and a grid sweep that locates their maxima.
//!
//! All logarithms are natural: a maximally entangled qubit pair has entropy
//! `ln 2 ~ 0.693147`, a maximally entangled qutrit pair `ln 3 ~ 1.098612`.
//! The l1-norm is basis dependent; it is always taken in the natural tensor
//! basis of the state.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;

use crate::constructors::{type2_r, wigner_d_half};
use crate::densela::{eig_hermitian, partial_trace, StateVector};
use crate::error::{Error, Result};
use crate::parafermion::psi_theta;

/// Eigenvalues below this are treated as exact zeros in `-x ln x`.
const ENTROPY_FLOOR: f64 = 1e-300;

/// `S = -tr(rho ln rho)` of the reduced state on the factors in `partition`.
pub fn von_neumann_entropy(state: &StateVector, partition: &[usize]) -> Result<f64> {
    let rho = partial_trace(&state.density(), partition)?;
    let eig = eig_hermitian(&rho)?;
    Ok(eig
        .values
        .iter()
        .filter(|&&l| l > ENTROPY_FLOOR)
        .map(|&l| -l * l.ln())
        .sum::<f64>()
        .max(0.0))
}

/// `sum_i |alpha_i|` over the amplitudes in the natural basis.
pub fn l1_norm(state: &StateVector) -> f64 {
    state.amplitudes().iter().map(|z| z.norm()).sum()
}

/// Two-qubit concurrence `2 |ad - bc|`.
pub fn concurrence2(state: &StateVector) -> Result<f64> {
    if state.factor_shape() != [2, 2] {
        return Err(Error::BadShape {
            shape: state.factor_shape().to_vec(),
            dim: state.dim(),
        });
    }
    let a = state.amplitudes();
    Ok((2.0 * (a[0] * a[3] - a[1] * a[2]).norm()).min(1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functional {
    Entropy,
    L1,
    Concurrence,
}

/// One-parameter state families the sweep can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// `|Psi(theta)>` of the qutrit parity sector, as a 9-dim two-qutrit state.
    QutritPsi,
    /// First column of `D^{1/2}(theta, 0)`, i.e. `D|e1>`.
    DHalfColumn,
    /// `R(theta, 0)|00>` for the 4x4 type-II family.
    Type2Column,
}

impl Functional {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "entropy" => Ok(Self::Entropy),
            "l1" => Ok(Self::L1),
            "concurrence" => Ok(Self::Concurrence),
            other => Err(Error::Unsupported(alloc::format!(
                "unknown functional `{other}`"
            ))),
        }
    }
}

impl Model {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "9x9" | "qutrit-psi" => Ok(Self::QutritPsi),
            "dhalf" => Ok(Self::DHalfColumn),
            "4x4" | "type2" => Ok(Self::Type2Column),
            other => Err(Error::Unsupported(alloc::format!(
                "unknown model `{other}`"
            ))),
        }
    }

    pub fn state(self, theta: f64) -> StateVector {
        match self {
            Self::QutritPsi => psi_theta(theta),
            Self::DHalfColumn => {
                StateVector::new(wigner_d_half(theta, 0.0).column(0), &[2]).unwrap()
            }
            Self::Type2Column => StateVector::new(type2_r(theta, 0.0).column(0), &[2, 2]).unwrap(),
        }
    }
}

/// Value of `functional` on `model` at `theta`.
pub fn evaluate(functional: Functional, model: Model, theta: f64) -> Result<f64> {
    let state = model.state(theta);
    match (functional, model) {
        (Functional::L1, _) => Ok(l1_norm(&state)),
        (Functional::Entropy, Model::QutritPsi | Model::Type2Column) => {
            von_neumann_entropy(&state, &[0])
        }
        (Functional::Concurrence, Model::Type2Column) => concurrence2(&state),
        _ => Err(Error::Unsupported(alloc::format!(
            "{functional:?} is not defined on {model:?}"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub argmax_index: usize,
    pub argmax: f64,
    pub max: f64,
}

impl SweepResult {
    /// Picks the first grid point whose value is within `1e-12 max(1, |max|)`
    /// of the maximum, so exact ties resolve to the smallest `theta`.
    pub fn from_values(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.is_empty() || grid.len() != values.len() {
            return Err(Error::DimMismatch {
                left: grid.len(),
                right: values.len(),
            });
        }
        let top = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let slack = 1e-12 * top.abs().max(1.0);
        let argmax_index = values.iter().position(|&v| v >= top - slack).unwrap_or(0);
        Ok(Self {
            argmax: grid[argmax_index],
            max: values[argmax_index],
            argmax_index,
            grid,
            values,
        })
    }

    pub fn step(&self) -> f64 {
        if self.grid.len() < 2 {
            0.0
        } else {
            self.grid[1] - self.grid[0]
        }
    }
}

/// Uniform grid `theta_k = k pi / (n - 1)`, `k = 0..n`, on `[0, pi]`.
pub fn theta_grid(grid_size: usize) -> Vec<f64> {
    let last = (grid_size - 1) as f64;
    (0..grid_size).map(|k| k as f64 * PI / last).collect()
}

pub const MIN_GRID: usize = 16;

pub fn sweep_extrema(
    functional: Functional,
    model: Model,
    grid_size: usize,
) -> Result<SweepResult> {
    if grid_size < MIN_GRID {
        return Err(Error::Unsupported(alloc::format!(
            "grid size {grid_size} below {MIN_GRID}"
        )));
    }
    let grid = theta_grid(grid_size);
    let values = grid
        .iter()
        .map(|&t| evaluate(functional, model, t))
        .collect::<Result<Vec<_>>>()?;
    SweepResult::from_values(grid, values)
}
