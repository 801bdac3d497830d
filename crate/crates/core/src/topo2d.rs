//! Two-dimensional topological basis of four qubits and the reduction of
//! the type-II solution onto it.
//!
//! The basis is built from the `-i` eigenvectors of `M4(phi)`,
//! `u1 = (|00> - i e^{i phi}|11>)/sqrt 2` and `u2 = (|01> + i|10>)/sqrt 2`:
//! `e1 = (u1 u1 + u2 u2)/sqrt 2` on pairs (12)(34) and `e2 = -i M4_{23} e1`.
//! On this span both slot embeddings of `R(theta, phi)` close exactly.

use alloc::vec;

use core::f64::consts::FRAC_1_SQRT_2;

#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;

use crate::constructors::{anyon_pair, m4, type2_r};
use crate::densela::{c64, cis, embed, Operator, StateVector, C64, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::ybe::{check_relation, RelationResidual};

/// Orthonormality threshold for [`topo_basis`].
const BASIS_TOL: f64 = 1e-12;
/// Closure threshold for [`reduce_to_2d`].
pub const CLOSURE_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct TopoBasis {
    pub e1: StateVector,
    pub e2: StateVector,
    pub phi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    S12,
    S23,
}

fn pair_state(amps: [C64; 4]) -> StateVector {
    StateVector::new(amps.to_vec(), &[2, 2]).unwrap()
}

fn kron_states(a: &StateVector, b: &StateVector) -> StateVector {
    let mut out = vec![ZERO; a.dim() * b.dim()];
    for (i, &x) in a.amplitudes().iter().enumerate() {
        for (j, &y) in b.amplitudes().iter().enumerate() {
            out[i * b.dim() + j] = x * y;
        }
    }
    let mut shape = a.factor_shape().to_vec();
    shape.extend_from_slice(b.factor_shape());
    StateVector::new(out, &shape).unwrap()
}

pub fn topo_basis(phi: f64) -> Result<TopoBasis> {
    let s = c64(FRAC_1_SQRT_2, 0.0);
    let u1 = pair_state([s, ZERO, ZERO, -I * cis(phi) * s]);
    let u2 = pair_state([ZERO, s, I * s, ZERO]);
    let e1 = kron_states(&u1, &u1)
        .try_add(&kron_states(&u2, &u2))?
        .scale(s);
    let m23 = embed(&m4(phi), 2, 2);
    let e2 = m23.apply(&e1)?.scale(-I);
    let defect = (e1.norm() - 1.0)
        .abs()
        .max((e2.norm() - 1.0).abs())
        .max(e1.inner(&e2).norm());
    if defect > BASIS_TOL {
        return Err(Error::DegenerateBasis { defect });
    }
    Ok(TopoBasis { e1, e2, phi })
}

/// The published kets taken literally: Bell pairs
/// `psi_ij = (|uu> + e^{-i phi}|dd>)/sqrt 2`, `phi_ij = (|ud> - |du>)/sqrt 2`,
/// with `e2` on the re-paired qubits (23)(41).
#[derive(Clone, Debug)]
pub struct DisplayedKets {
    pub e1: StateVector,
    /// `e2` divided by its norm.
    pub e2: StateVector,
    /// Norm of `e2` as written.
    pub e2_raw_norm: f64,
    pub overlap: C64,
}

/// Product of two Bell pairs placed on qubit pairs `p` and `q` (0-based, 4 qubits).
fn place_pairs(a: &[C64; 4], p: (usize, usize), b: &[C64; 4], q: (usize, usize)) -> StateVector {
    let mut out = vec![ZERO; 16];
    for (idx, slot) in out.iter_mut().enumerate() {
        let bit = |k: usize| (idx >> (3 - k)) & 1;
        *slot = a[2 * bit(p.0) + bit(p.1)] * b[2 * bit(q.0) + bit(q.1)];
    }
    StateVector::new(out, &[2, 2, 2, 2]).unwrap()
}

pub fn displayed_kets(phi: f64) -> Result<DisplayedKets> {
    let s = c64(FRAC_1_SQRT_2, 0.0);
    let psi = [s, ZERO, ZERO, cis(-phi) * s];
    let ph = [ZERO, s, -s, ZERO];
    let e1 = place_pairs(&psi, (0, 1), &psi, (2, 3))
        .try_add(&place_pairs(&ph, (0, 1), &ph, (2, 3)))?
        .scale(s);
    let a = ONE + I * cis(phi);
    let b = ONE - I * cis(phi);
    let raw = place_pairs(&psi, (1, 2), &psi, (3, 0))
        .scale(a)
        .try_add(&place_pairs(&ph, (1, 2), &ph, (3, 0)).scale(-b))?
        .try_add(&e1.scale(c64(-1.0, 0.0)))?
        .scale(s);
    let e2_raw_norm = raw.norm();
    let e2 = raw.normalized();
    Ok(DisplayedKets {
        overlap: e1.inner(&e2),
        e1,
        e2,
        e2_raw_norm,
    })
}

/// `R (x) I4` or `I2 (x) R (x) I2` on four qubits.
pub fn slot_operator(r: &Operator, slot: Slot) -> Operator {
    match slot {
        Slot::S12 => embed(r, 1, 4),
        Slot::S23 => embed(r, 2, 2),
    }
}

/// Restriction of `op` to `span{e1, e2}` (assumed orthonormal) and the norm of
/// the part of `op [e1 e2]` that leaves the span.
pub fn restrict_to_span(
    op: &Operator,
    e1: &StateVector,
    e2: &StateVector,
) -> Result<(Operator, f64)> {
    let basis = [e1, e2];
    let images = [op.apply(e1)?, op.apply(e2)?];
    let a = Operator::from_fn(2, |r, col| basis[r].inner(&images[col]));
    let mut leak2: f64 = 0.0;
    for col in 0..2 {
        let mut rest = images[col].clone();
        for (r, b) in basis.iter().enumerate() {
            rest = rest.try_add(&b.scale(-a[(r, col)]))?;
        }
        leak2 += rest.norm().powi(2);
    }
    Ok((a, leak2.sqrt()))
}

/// 2x2 matrix of the slot-embedded `R(theta, phi)` on the topological basis at the same `phi`.
pub fn reduce_to_2d(theta: f64, phi: f64, slot: Slot) -> Result<Operator> {
    let (a, leakage) = reduce_with_leakage(theta, phi, slot)?;
    if leakage > CLOSURE_TOL {
        return Err(Error::NotClosed { leakage });
    }
    Ok(a)
}

pub fn reduce_with_leakage(theta: f64, phi: f64, slot: Slot) -> Result<(Operator, f64)> {
    let basis = topo_basis(phi)?;
    let op = slot_operator(&type2_r(theta, phi), slot);
    restrict_to_span(&op, &basis.e1, &basis.e2)
}

/// `A B A = B A B` for the Ising-anyon pair.
pub fn anyon_braid_check(tolerance: f64) -> RelationResidual {
    let (a, b) = anyon_pair();
    check_relation(&[&a, &b, &a], &[&b, &a, &b], tolerance).expect("2x2 operands")
}
