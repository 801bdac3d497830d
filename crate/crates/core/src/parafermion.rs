//! Z3 parafermions from the Fradkin-Kadanoff strings, the parafermionic
//! Yang-Baxter solution, the Z3 chain, and the two-qutrit parity sector.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;

use crate::constructors::{clock_shift, omega, qutrit_braids, qutrit_r};
use crate::densela::{c64, cis, eig_hermitian, kron_all, Operator, StateVector, C64, I, ZERO};
use crate::error::{Error, Result};
use crate::majorana::{check_dim, degeneracy, ChainModel, ChainSpec};

/// `C_index` on `n_qutrits` sites, `index` in `1..=2 n_qutrits`.
///
/// `C_{2k-1} = (Z^dag)^{k-1} (x) X^dag (x) I...` and
/// `C_{2k} = (Z^dag)^{k-1} (x) (XZ)^dag (x) I...`.
pub fn parafermion_op(index: usize, n_qutrits: usize) -> Result<Operator> {
    if index == 0 || index > 2 * n_qutrits {
        return Err(Error::SiteOutOfRange {
            site: index,
            max: 2 * n_qutrits,
        });
    }
    check_dim(3, n_qutrits)?;
    let (z, x) = clock_shift();
    let k = index.div_ceil(2);
    let local = if index % 2 == 1 {
        x.adjoint()
    } else {
        (&x * &z).adjoint()
    };
    let zd = z.adjoint();
    let id = Operator::identity(3);
    let factors: Vec<&Operator> = (1..=n_qutrits)
        .map(|site| match site.cmp(&k) {
            core::cmp::Ordering::Less => &zd,
            core::cmp::Ordering::Equal => &local,
            core::cmp::Ordering::Greater => &id,
        })
        .collect();
    Ok(kron_all(&factors))
}

/// `R_i(theta) = e^{-i theta} + (2i/3) sin theta [1 + w^2 C_i^dag C_{i+1} + w^2 C_i C_{i+1}^dag]`.
pub fn r_parafermion(i: usize, theta: f64, n_qutrits: usize) -> Result<Operator> {
    if i == 0 || i + 1 > 2 * n_qutrits {
        return Err(Error::SiteOutOfRange {
            site: i,
            max: 2 * n_qutrits - 1,
        });
    }
    let ci = parafermion_op(i, n_qutrits)?;
    let cj = parafermion_op(i + 1, n_qutrits)?;
    let w2 = omega() * omega();
    let dim = ci.dim();
    let bracket = &(&Operator::identity(dim) + &(&ci.adjoint() * &cj).scale(w2))
        + &(&ci * &cj.adjoint()).scale(w2);
    let front = Operator::identity(dim).scale(c64(theta.cos(), -theta.sin()));
    let out = &front + &bracket.scale(I * (2.0 / 3.0 * theta.sin()));
    out.with_factor_shape(ci.factor_shape())
}

fn bond(a: &Operator, b: &Operator) -> Operator {
    &(&a.adjoint() * b) + &(a * &b.adjoint())
}

/// The Z3 chain Hamiltonian as displayed, before Hermitian symmetrization:
/// `-(2/3) w^2 [t1 sum_{i=1}^{N} B_{2i-1} + t2 sum_{i=1}^{N-1} B_{2i}]`
/// with bond `B_k = C_k^dag C_{k+1} + C_k C_{k+1}^dag`.
pub fn z3_chain_h_displayed(spec: &ChainSpec) -> Result<Operator> {
    spec.expect_model(ChainModel::Z3)?;
    z3_chain_raw(spec.n_sites, spec.theta1dot, spec.theta2dot)
}

fn z3_chain_raw(n: usize, t1: f64, t2: f64) -> Result<Operator> {
    let c = (1..=2 * n)
        .map(|k| parafermion_op(k, n))
        .collect::<Result<Vec<_>>>()?;
    let mut h = Operator::zeros(c[0].dim());
    for i in 1..=n {
        h = &h + &bond(&c[2 * i - 2], &c[2 * i - 1]).scale_re(t1);
    }
    for i in 1..n {
        h = &h + &bond(&c[2 * i - 1], &c[2 * i]).scale_re(t2);
    }
    let w2 = omega() * omega();
    h.scale(w2 * (-2.0 / 3.0)).with_factor_shape(&vec![3; n])
}

fn hermitian_part(h: &Operator) -> Operator {
    (h + &h.adjoint()).scale_re(0.5)
}

/// Hermitian part `(H + H^dag)/2` of [`z3_chain_h_displayed`].
pub fn z3_chain_h(spec: &ChainSpec) -> Result<Operator> {
    hermitian_part(&z3_chain_h_displayed(spec)?).with_factor_shape(&vec![3; spec.n_sites])
}

/// Chain parity `P = prod_{i=1}^{N} C_{2i-1}^dag C_{2i}`.
pub fn z3_parity(n_qutrits: usize) -> Result<Operator> {
    let mut p = Operator::identity(3usize.pow(n_qutrits as u32));
    for i in 1..=n_qutrits {
        p = &(&p * &parafermion_op(2 * i - 1, n_qutrits)?.adjoint())
            * &parafermion_op(2 * i, n_qutrits)?;
    }
    p.with_factor_shape(&vec![3; n_qutrits])
}

/// Parity of the symmetry block, `P = prod_{i=1}^{N} C_{2i-1} C_{2i}^dag`
/// (`C1 C2^dag C3 C4^dag` on two qutrits).
pub fn z3_parity_block(n_qutrits: usize) -> Result<Operator> {
    let mut p = Operator::identity(3usize.pow(n_qutrits as u32));
    for i in 1..=n_qutrits {
        p = &(&p * &parafermion_op(2 * i - 1, n_qutrits)?)
            * &parafermion_op(2 * i, n_qutrits)?.adjoint();
    }
    p.with_factor_shape(&vec![3; n_qutrits])
}

/// Emergent mode `Gamma = C_{2n+1}^dag prod_{i=1}^{n} C_{2i-1}^dag C_{2i}`.
///
/// It commutes with `R_1 .. R_{2n}`; the generator `R_{2n+1}` that reaches
/// past `C_{2n+1}` does not commute with it.
pub fn z3_gamma(n: usize, n_qutrits: usize) -> Result<Operator> {
    let mut g = parafermion_op(2 * n + 1, n_qutrits)?.adjoint();
    for i in 1..=n {
        g = &(&g * &parafermion_op(2 * i - 1, n_qutrits)?.adjoint())
            * &parafermion_op(2 * i, n_qutrits)?;
    }
    Ok(g)
}

/// `Gamma = w C1^dag C2 C3^dag`, the three-parafermion form.
pub fn z3_gamma_three(n_qutrits: usize) -> Result<Operator> {
    let c = |k| parafermion_op(k, n_qutrits);
    Ok((&(&c(1)?.adjoint() * &c(2)?) * &c(3)?.adjoint()).scale(omega()))
}

/// Projector onto the `P = w^m` eigenspace of an order-3 unitary `P`:
/// `(I + w^{-m} P + w^{-2m} P^2) / 3`.
pub fn sector_projector(p: &Operator, m: u32) -> Operator {
    let w = omega();
    let wm = w.powu((3 - m % 3) % 3);
    let p2 = p * p;
    let out = &(&Operator::identity(p.dim()) + &p.scale(wm)) + &p2.scale(wm * wm);
    out.scale_re(1.0 / 3.0)
}

/// Ground-space analysis of a Z3 chain.
#[derive(Clone, Debug, PartialEq)]
pub struct Z3Ground {
    pub ground_energy: f64,
    pub degeneracy: usize,
    pub gap: Option<f64>,
    /// Chain parity `w^m` of each ground state, sorted by `m`.
    pub parities: Vec<C64>,
    /// Matching exponents `m` in `0..3`.
    pub sectors: Vec<u32>,
}

/// Diagonalizes the chain and labels each ground state by its parity sector.
///
/// A generic eigensolver returns arbitrary mixtures inside a degenerate
/// eigenspace, so each sector projector is compressed onto the ground space
/// and its rank counted instead of reading parities off the raw vectors.
pub fn z3_ground_parities(spec: &ChainSpec, rel_gap: f64) -> Result<Z3Ground> {
    let h = z3_chain_h(spec)?;
    let deg = degeneracy(&h, rel_gap)?;
    let eig = eig_hermitian(&h)?;
    let p = z3_parity(spec.n_sites)?;
    let n = h.dim();
    let k = deg.degeneracy;
    let g = Operator::from_fn(
        n,
        |r, col| if col < k { eig.vectors[(r, col)] } else { ZERO },
    );
    let mut sectors = Vec::new();
    for m in 0..3u32 {
        let proj = sector_projector(&p, m);
        let compressed = &(&g.adjoint() * &proj) * &g;
        let block = compressed.restrict(&(0..k).collect::<Vec<_>>());
        let rank = eig_hermitian(&block)?
            .values
            .iter()
            .filter(|&&v| v > 0.5)
            .count();
        sectors.extend(core::iter::repeat_n(m, rank));
    }
    let parities = sectors.iter().map(|&m| omega().powu(m)).collect();
    Ok(Z3Ground {
        ground_energy: deg.ground_energy,
        degeneracy: k,
        gap: deg.gap,
        parities,
        sectors,
    })
}

/// Two-qutrit parity `P|ij> = w^{i+j}|ij>` with labels `i, j` in `{1, 2, 3}`.
pub fn qutrit_pair_parity() -> Operator {
    let w = omega();
    Operator::from_fn(9, |r, col| {
        if r == col {
            w.powu((r / 3 + 1 + r % 3 + 1) as u32)
        } else {
            ZERO
        }
    })
}

/// Flat indices of `|11>, |23>, |32>`, the `P = w^2` sector, in that order.
pub const PARITY_SECTOR: [usize; 3] = [0, 5, 7];

/// Norm of the block of `op` mapping the parity sector to its complement.
pub fn sector_leakage(op: &Operator) -> f64 {
    let mut acc = 0.0;
    for &col in &PARITY_SECTOR {
        for r in (0..op.dim()).filter(|r| !PARITY_SECTOR.contains(r)) {
            acc += op[(r, col)].norm_sqr();
        }
    }
    acc.sqrt()
}

/// `(A12(theta), A23(theta))`: the two-qutrit solutions restricted to the parity sector.
pub fn qutrit_parity_subspace(theta: f64) -> Result<(Operator, Operator)> {
    let (b12, b23) = qutrit_braids();
    let r12 = qutrit_r(&b12, theta);
    let r23 = qutrit_r(&b23, theta);
    let leakage = sector_leakage(&r12).max(sector_leakage(&r23));
    if leakage > 1e-10 {
        return Err(Error::NotClosed { leakage });
    }
    Ok((r12.restrict(&PARITY_SECTOR), r23.restrict(&PARITY_SECTOR)))
}

/// `A12(theta) = diag(e^{-i theta}, e^{i theta}, e^{-i theta})`, the displayed reduced form.
pub fn displayed_a12(theta: f64) -> Operator {
    let (em, ep) = (cis(-theta), cis(theta));
    Operator::diagonal(&[em, ep, em])
}

/// Displayed reduced form of `R23` on `{|11>, |23>, |32>}`: `cos t - (i/3) sin t`
/// on the diagonal and `(2i/3) sin t` times `w^2` (above) or `w` (below) in a circulant pattern.
pub fn displayed_a23(theta: f64) -> Operator {
    let (s, c) = theta.sin_cos();
    let w = omega();
    let d = c64(c, -s / 3.0);
    let k = c64(0.0, 2.0 * s / 3.0);
    #[rustfmt::skip]
    let rows = [
        [d, k * w * w, k * w],
        [k * w, d, k * w * w],
        [k * w * w, k * w, d],
    ];
    Operator::from_fn(3, |r, col| rows[r][col])
}

/// `|Psi(theta)> = A23(theta)|11>` written back into the two-qutrit space.
pub fn psi_theta(theta: f64) -> StateVector {
    let (_, a23) = qutrit_parity_subspace(theta).expect("parity sector is closed");
    let mut amps = vec![ZERO; 9];
    for (k, &idx) in PARITY_SECTOR.iter().enumerate() {
        amps[idx] = a23[(k, 0)];
    }
    StateVector::new(amps, &[3, 3]).unwrap()
}

/// Spectrum of one `-(2/3) w^2 (C1^dag C2 + C1 C2^dag)` unit, Hermitian part.
pub fn z3_unit_spectrum() -> Result<Vec<f64>> {
    Ok(eig_hermitian(&hermitian_part(&z3_chain_raw(1, 1.0, 0.0)?))?.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densela::{commutator, frobenius_distance};
    use crate::ybe::{check_ybe, lorentz_theta2};
    use core::f64::consts::PI;

    fn dist(a: &Operator, b: &Operator) -> f64 {
        frobenius_distance(a, b).unwrap()
    }

    #[test]
    fn single_qutrit_examples() {
        let (_, x) = clock_shift();
        assert!(dist(&parafermion_op(1, 1).unwrap(), &x.adjoint()) < 1e-15);
        let c1 = parafermion_op(1, 2).unwrap();
        let c2 = parafermion_op(2, 2).unwrap();
        assert!(dist(&c1.pow(3), &Operator::identity(9)) < 1e-13);
        assert!(dist(&(&c1 * &c2), &(&c2 * &c1).scale(omega())) < 1e-13);
        assert!(matches!(
            parafermion_op(5, 2),
            Err(Error::SiteOutOfRange { .. })
        ));
        assert!(matches!(
            parafermion_op(0, 2),
            Err(Error::SiteOutOfRange { .. })
        ));
    }

    #[test]
    fn r_parafermion_unitary_and_trivial_at_zero() {
        for i in 1..=3 {
            assert!(dist(&r_parafermion(i, 0.0, 2).unwrap(), &Operator::identity(9)) < 1e-14);
            for t in [-1.0, 0.4, 2.0] {
                assert!(r_parafermion(i, t, 2).unwrap().unitarity_defect() < 1e-12);
            }
        }
        assert!(r_parafermion(4, 0.1, 2).is_err());
    }

    #[test]
    fn parafermion_ybe_small() {
        let (t1, t3) = (0.3, -0.8);
        let t2 = lorentz_theta2(t1, t3, 1.0 / 3.0).unwrap();
        let a = [t1, t2, t3].map(|t| r_parafermion(1, t, 2).unwrap());
        let b = [t1, t2, t3].map(|t| r_parafermion(2, t, 2).unwrap());
        assert!(
            check_ybe([&a[0], &a[1], &a[2]], [&b[0], &b[1], &b[2]], 1e-10)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn displayed_chain_is_already_hermitian() {
        let spec = ChainSpec::new(ChainModel::Z3, 3, 0.7, -1.3).unwrap();
        let raw = z3_chain_h_displayed(&spec).unwrap();
        assert!(raw.hermiticity_defect() < 1e-12);
    }

    #[test]
    fn parity_commutes_with_chain() {
        let spec = ChainSpec::new(ChainModel::Z3, 3, 0.37, 1.9).unwrap();
        let h = z3_chain_h(&spec).unwrap();
        let p = z3_parity(3).unwrap();
        assert!(dist(&p.pow(3), &Operator::identity(27)) < 1e-13);
        assert!(commutator(&p, &h).unwrap().frobenius_norm() < 1e-12);
    }

    #[test]
    fn trivial_chain_has_unique_ground_state() {
        let spec = ChainSpec::new(ChainModel::Z3, 2, 1.0, 0.0).unwrap();
        let g = z3_ground_parities(&spec, 1e-8).unwrap();
        assert_eq!(g.degeneracy, 1);
    }

    #[test]
    fn topological_chain_has_three_parity_sectors() {
        let spec = ChainSpec::new(ChainModel::Z3, 3, 0.0, 1.0).unwrap();
        let g = z3_ground_parities(&spec, 1e-8).unwrap();
        assert_eq!(g.degeneracy, 3);
        assert_eq!(g.sectors, vec![0, 1, 2]);
    }

    #[test]
    fn end_operators_commute_with_topological_chain() {
        let n = 3;
        let spec = ChainSpec::new(ChainModel::Z3, n, 0.0, 1.0).unwrap();
        let h = z3_chain_h(&spec).unwrap();
        for k in [1, 2 * n] {
            let c = parafermion_op(k, n).unwrap();
            assert!(commutator(&c, &h).unwrap().frobenius_norm() < 1e-12);
        }
    }

    #[test]
    fn gamma_forms_agree_up_to_omega_and_cube_to_identity() {
        // C3^dag C1^dag C2 = C1^dag C2 C3^dag, so the two forms differ by w.
        let g = z3_gamma(1, 2).unwrap();
        let g3 = z3_gamma_three(2).unwrap();
        assert!(dist(&g.scale(omega()), &g3) < 1e-13);
        assert!(dist(&g.pow(3), &Operator::identity(9)) < 1e-13);
        assert!(dist(&g3.pow(3), &Operator::identity(9)) < 1e-13);
    }

    #[test]
    fn parity_sector_reduction_matches_closed_forms() {
        let t = 0.63;
        let (a12, a23) = qutrit_parity_subspace(t).unwrap();
        let (em, ep) = (c64(t.cos(), -t.sin()), c64(t.cos(), t.sin()));
        assert!(dist(&a12, &Operator::diagonal(&[em, ep, em])) < 1e-12);
        assert!(dist(&a12, &displayed_a12(t)) < 1e-12);
        assert!(dist(&a23, &displayed_a23(t)) < 1e-12);
        assert!(a23.unitarity_defect() < 1e-12);
        let p = qutrit_pair_parity();
        for idx in PARITY_SECTOR {
            assert!((p[(idx, idx)] - omega() * omega()).norm() < 1e-14);
        }
    }

    #[test]
    fn psi_is_normalized_and_peaks_at_third_turn() {
        for t in [0.0, 0.5, PI / 3.0, 2.5] {
            assert!((psi_theta(t).norm() - 1.0).abs() < 1e-12);
        }
        let amps: Vec<f64> = PARITY_SECTOR
            .iter()
            .map(|&i| psi_theta(PI / 3.0).amplitudes()[i].norm_sqr())
            .collect();
        for a in amps {
            assert!((a - 1.0 / 3.0).abs() < 1e-12);
        }
    }
}
