//! Named checks for the spin-1 (x) spin-1/2 braid-type relations, their
//! parametrized YBEs, and the qubit-qutrit action of `R6`.
//!
//! Spin-1 labels `{+1, 0, -1}` map to indices `{0, 1, 2}`, spin-1/2 labels
//! `{+1/2, -1/2}` to `{0, 1}`. `R6` takes a qubit-qutrit input ordered
//! `qubit * 3 + qutrit` to an output ordered
//! `qutrit * 2 + qubit`, i.e. it swaps the two factors.

use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;

use crate::constructors::mixed_r;
use crate::densela::{c64, cis, StateVector, C64, ONE, ZERO};
use crate::entangle::von_neumann_entropy;
use crate::error::{Error, Result};
use crate::ybe::{
    check_mixed_braid, check_mixed_ybe, MixedRelation, RelationResidual, SpectralTriple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MixedCheckId {
    Braid1,
    Braid2,
    Braid3,
    Ybe1,
    Ybe2,
    Ybe3,
    ActionTable,
}

impl MixedCheckId {
    pub const ALL: [Self; 7] = [
        Self::Braid1,
        Self::Braid2,
        Self::Braid3,
        Self::Ybe1,
        Self::Ybe2,
        Self::Ybe3,
        Self::ActionTable,
    ];

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "braid1" => Self::Braid1,
            "braid2" => Self::Braid2,
            "braid3" => Self::Braid3,
            "ybe1" => Self::Ybe1,
            "ybe2" => Self::Ybe2,
            "ybe3" => Self::Ybe3,
            "action-table" => Self::ActionTable,
            other => {
                return Err(Error::Unsupported(alloc::format!(
                    "unknown mixed-spin check `{other}`"
                )))
            }
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Braid1 => "braid1",
            Self::Braid2 => "braid2",
            Self::Braid3 => "braid3",
            Self::Ybe1 => "ybe1",
            Self::Ybe2 => "ybe2",
            Self::Ybe3 => "ybe3",
            Self::ActionTable => "action-table",
        }
    }
}

/// Braid checks use only `phi`; YBE checks use the triple's angles with `phi`;
/// the action table is checked at `triple.theta1` and `phi`.
pub fn run_mixed_check(
    id: MixedCheckId,
    triple: &SpectralTriple,
    phi: f64,
    tolerance: f64,
) -> Result<RelationResidual> {
    let t = triple.with_phi(phi);
    match id {
        MixedCheckId::Braid1 => check_mixed_braid(MixedRelation::Rel1, phi, tolerance),
        MixedCheckId::Braid2 => check_mixed_braid(MixedRelation::Rel2, phi, tolerance),
        MixedCheckId::Braid3 => check_mixed_braid(MixedRelation::Rel3, phi, tolerance),
        MixedCheckId::Ybe1 => check_mixed_ybe(MixedRelation::Rel1, &t, tolerance),
        MixedCheckId::Ybe2 => check_mixed_ybe(MixedRelation::Rel2, &t, tolerance),
        MixedCheckId::Ybe3 => check_mixed_ybe(MixedRelation::Rel3, &t, tolerance),
        MixedCheckId::ActionTable => {
            Ok(action_table_residual(triple.theta1, phi, tolerance, false))
        }
    }
}

/// Qubit-qutrit input index `qubit * 3 + qutrit`.
pub fn input_index(qubit: usize, qutrit: usize) -> usize {
    qubit * 3 + qutrit
}

/// Qutrit-qubit output index `qutrit * 2 + qubit`.
pub fn output_index(qutrit: usize, qubit: usize) -> usize {
    qutrit * 2 + qubit
}

/// One basis action: input `(qubit, qutrit)` and the expected output
/// amplitudes keyed by `(qutrit, qubit)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionEntry {
    pub input: (usize, usize),
    pub output: Vec<((usize, usize), C64)>,
}

/// The six basis actions of `R6(theta, phi)`.
///
/// With `literal` the published fourth line is used,
/// `|-1/2>|1> -> cos|1>|-1/2> + sin|-1>|1/2>`; the matrix itself gives
/// `sin|1>|-1/2> + cos|-1>|1/2>`, which is the default.
pub fn action_table(theta: f64, phi: f64, literal: bool) -> Vec<ActionEntry> {
    let (s, c) = (c64(theta.sin(), 0.0), c64(theta.cos(), 0.0));
    let e = cis(phi);
    let fourth = if literal {
        alloc::vec![((0, 1), c), ((2, 0), s)]
    } else {
        alloc::vec![((0, 1), s), ((2, 0), c)]
    };
    alloc::vec![
        ActionEntry {
            input: (0, 0),
            output: alloc::vec![((0, 0), c), ((2, 1), -s * e.conj())]
        },
        ActionEntry {
            input: (1, 2),
            output: alloc::vec![((2, 1), c), ((0, 0), s * e)]
        },
        ActionEntry {
            input: (0, 2),
            output: alloc::vec![((0, 1), c), ((2, 0), -s)]
        },
        ActionEntry {
            input: (1, 0),
            output: fourth
        },
        ActionEntry {
            input: (0, 1),
            output: alloc::vec![((1, 0), ONE)]
        },
        ActionEntry {
            input: (1, 1),
            output: alloc::vec![((1, 1), ONE)]
        },
    ]
}

/// Frobenius distance between the columns of `R6` and the expected actions.
pub fn action_table_residual(
    theta: f64,
    phi: f64,
    tolerance: f64,
    literal: bool,
) -> RelationResidual {
    let (r6, _) = mixed_r(theta, phi);
    let mut sq = 0.0;
    let mut lhs_sq = 0.0;
    let mut rhs_sq = 0.0;
    for entry in action_table(theta, phi, literal) {
        let col = r6.column(input_index(entry.input.0, entry.input.1));
        let mut want = [ZERO; 6];
        for ((qt, qb), amp) in entry.output {
            want[output_index(qt, qb)] += amp;
        }
        for (got, w) in col.iter().zip(want.iter()) {
            sq += (got - w).norm_sqr();
            lhs_sq += got.norm_sqr();
            rhs_sq += w.norm_sqr();
        }
    }
    let residual = sq.sqrt();
    RelationResidual {
        lhs_norm: lhs_sq.sqrt(),
        rhs_norm: rhs_sq.sqrt(),
        residual,
        passed: residual < tolerance,
        tolerance,
    }
}

/// `R6(theta, phi)|1/2>|1>` as a qutrit-qubit state of shape `[3, 2]`.
pub fn entangled_output(theta: f64, phi: f64) -> StateVector {
    let (r6, _) = mixed_r(theta, phi);
    StateVector::new(r6.column(input_index(0, 0)), &[3, 2]).unwrap()
}

/// Entropy of the qubit factor of [`entangled_output`].
pub fn qubit_qutrit_entropy(theta: f64, phi: f64) -> Result<f64> {
    von_neumann_entropy(&entangled_output(theta, phi), &[1])
}

/// `-c^2 ln c^2 - s^2 ln s^2` with `0 ln 0 = 0`.
pub fn binary_entropy_cos_sin(theta: f64) -> f64 {
    let f = |p: f64| if p > 0.0 { -p * p.ln() } else { 0.0 };
    let c2 = theta.cos().powi(2);
    f(c2) + f(1.0 - c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_4, PI};

    #[test]
    fn names_round_trip() {
        for id in MixedCheckId::ALL {
            assert_eq!(MixedCheckId::from_name(id.name()).unwrap(), id);
        }
        assert!(MixedCheckId::from_name("ybe4").is_err());
    }

    #[test]
    fn braids_pass_at_quarter_turn() {
        let t = SpectralTriple::uniform(FRAC_PI_4);
        for id in [
            MixedCheckId::Braid1,
            MixedCheckId::Braid2,
            MixedCheckId::Braid3,
        ] {
            assert!(run_mixed_check(id, &t, 0.4, 1e-12).unwrap().passed);
        }
    }

    #[test]
    fn ybes_share_one_triple() {
        let t = SpectralTriple::lorentz(0.5, -0.3, 1.0).unwrap();
        for id in [MixedCheckId::Ybe1, MixedCheckId::Ybe2, MixedCheckId::Ybe3] {
            assert!(
                run_mixed_check(id, &t, 1.3, 1e-10).unwrap().passed,
                "{id:?}"
            );
        }
    }

    #[test]
    fn action_table_matches_matrix() {
        for (theta, phi) in [(0.3, 0.0), (1.1, 2.0), (FRAC_PI_4, -0.7)] {
            assert!(action_table_residual(theta, phi, 1e-14, false).passed);
        }
    }

    #[test]
    fn literal_fourth_line_disagrees_off_quarter_turn() {
        assert!(action_table_residual(0.3, 0.0, 1e-10, true).residual > 0.1);
        assert!(action_table_residual(FRAC_PI_4, 0.0, 1e-12, true).passed);
    }

    #[test]
    fn zero_qutrit_state_is_untouched() {
        for theta in [0.0, 0.9, PI / 2.0] {
            let (r6, _) = mixed_r(theta, 0.5);
            assert_eq!(r6.column(input_index(1, 1))[output_index(1, 1)], ONE);
        }
    }

    #[test]
    fn entropy_closed_form() {
        for theta in [0.1, 0.6, FRAC_PI_4, 1.3] {
            let got = qubit_qutrit_entropy(theta, 0.8).unwrap();
            assert!((got - binary_entropy_cos_sin(theta)).abs() < 1e-12);
        }
        assert!((qubit_qutrit_entropy(FRAC_PI_4, 0.0).unwrap() - 2.0f64.ln()).abs() < 1e-12);
    }
}
