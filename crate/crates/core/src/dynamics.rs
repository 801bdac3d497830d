//! Hamiltonians generated by time-dependent Yang-Baxter solutions, the
//! two-body Berry phase, and the factorized three-body S-matrix.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;

use crate::constructors::pauli;
use crate::densela::{c64, eig_hermitian, kron, kron_all, Operator, StateVector, C64, I, ZERO};
use crate::error::{Error, Result};
use crate::majorana::{exp_bilinear, gamma_of, junction_majoranas};
use crate::ybe::{lorentz_theta2, RelationResidual};

/// Finite-difference Hamiltonian with the size of the part that was dropped.
#[derive(Clone, Debug)]
pub struct ExtractedHamiltonian {
    /// `(H + H^dag) / 2`.
    pub h: Operator,
    /// `|(H - H^dag) / 2|_F` before symmetrization.
    pub antihermitian_remainder: f64,
}

/// `H(t) = i (dR/dt) R^{-1}` by central differences, `R^{-1} = R^dag`.
pub fn hamiltonian_from_r(
    r_of_t: impl Fn(f64) -> Operator,
    t: f64,
    dt: f64,
) -> Result<ExtractedHamiltonian> {
    let (rp, rm, r0) = (r_of_t(t + dt), r_of_t(t - dt), r_of_t(t));
    let defect = [&rp, &rm, &r0]
        .iter()
        .map(|r| r.unitarity_defect())
        .fold(0.0, f64::max);
    if defect > 1e-8 {
        return Err(Error::NonUnitaryFamily { defect });
    }
    let deriv = rp.try_sub(&rm)?.scale(c64(0.0, 1.0 / (2.0 * dt)));
    let raw = deriv.matmul(&r0.adjoint())?;
    let adj = raw.adjoint();
    Ok(ExtractedHamiltonian {
        antihermitian_remainder: (&raw - &adj).scale_re(0.5).frobenius_norm(),
        h: (&raw + &adj).scale_re(0.5),
    })
}

fn two_body_terms(theta: f64, phi: f64, phidot: f64, pair_sign: f64) -> Operator {
    let (s, c) = theta.sin_cos();
    let (z, id) = (pauli::z(), pauli::id());
    let zz = &kron(&z, &id) + &kron(&id, &z);
    let (sp, sm) = (pauli::sigma_plus(), pauli::sigma_minus());
    let pairs = &kron(&sp, &sp).scale(cis_neg(phi)) + &kron(&sm, &sm).scale(cis_neg(-phi));
    let inner = &zz.scale_re(s / 2.0) + &pairs.scale_re(pair_sign * c);
    inner
        .scale_re(phidot * s)
        .with_factor_shape(&[2, 2])
        .unwrap()
}

fn cis_neg(x: f64) -> C64 {
    c64(x.cos(), -x.sin())
}

/// Two-body Hamiltonian of the type-II family with `phi` driven at rate `phidot`:
/// `phidot sin t [ (sin t / 2)(Z1 + Z2) + cos t (e^{-i phi} s+ s+ + e^{i phi} s- s-) ]`.
///
/// This is `i (dR/dt) R^dag` for `R = type2_r(theta, phi(t))`. The published
/// form carries a minus sign on the pair term; that version is
/// [`two_body_h_displayed`] and does not have `|psi+->` as eigenstates.
pub fn two_body_h(theta: f64, phi: f64, phidot: f64) -> Operator {
    two_body_terms(theta, phi, phidot, 1.0)
}

pub fn two_body_h_displayed(theta: f64, phi: f64, phidot: f64) -> Operator {
    two_body_terms(theta, phi, phidot, -1.0)
}

/// `|psi+> = cos(t/2 - pi/4) e^{-i phi}|00> - sin(t/2 - pi/4)|11>`, energy `+phidot sin t`.
pub fn psi_plus(theta: f64, phi: f64) -> StateVector {
    let (s, c) = (theta / 2.0 - PI / 4.0).sin_cos();
    StateVector::new(
        alloc::vec![cis_neg(phi) * c, ZERO, ZERO, c64(-s, 0.0)],
        &[2, 2],
    )
    .unwrap()
}

/// `|psi-> = sin(t/2 - pi/4) e^{-i phi}|00> + cos(t/2 - pi/4)|11>`, energy `-phidot sin t`.
pub fn psi_minus(theta: f64, phi: f64) -> StateVector {
    let (s, c) = (theta / 2.0 - PI / 4.0).sin_cos();
    StateVector::new(
        alloc::vec![cis_neg(phi) * s, ZERO, ZERO, c64(c, 0.0)],
        &[2, 2],
    )
    .unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BerryResult {
    pub theta: f64,
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub analytic_plus: f64,
    pub analytic_minus: f64,
    /// Largest deviation from the closed form, measured on the circle.
    pub abs_error: f64,
}

pub const MIN_BERRY_STEPS: usize = 1000;

/// Wraps into `[0, 2 pi)`.
pub fn wrap_angle(x: f64) -> f64 {
    let r = x - TAU * (x / TAU).floor();
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Distance between two angles on the circle.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = wrap_angle(a - b);
    d.min(TAU - d)
}

/// Discrete loop phase `-sum_k arg <v_k | v_{k+1}>` over a closed loop of states.
pub fn loop_phase(states: &[StateVector]) -> f64 {
    let n = states.len();
    let total: f64 = (0..n)
        .map(|k| states[k].inner(&states[(k + 1) % n]).arg())
        .sum();
    wrap_angle(-total)
}

/// Berry phases of the two non-zero-energy eigenstates of [`two_body_h`] as
/// `phi` winds once around `[0, 2 pi)` in `n_steps` steps.
///
/// The states come from diagonalizing `H(theta, phi_k)` at every step; the
/// loop formula is gauge invariant, so their arbitrary phases drop out.
pub fn berry_phase(theta: f64, n_steps: usize) -> Result<BerryResult> {
    if n_steps < MIN_BERRY_STEPS {
        return Err(Error::Unsupported(alloc::format!(
            "berry_phase needs at least {MIN_BERRY_STEPS} steps"
        )));
    }
    let s = theta.sin();
    let mut plus = Vec::with_capacity(n_steps);
    let mut minus = Vec::with_capacity(n_steps);
    for k in 0..n_steps {
        let phi = TAU * k as f64 / n_steps as f64;
        if s.abs() < 1e-9 {
            // H vanishes; fall back to the closed-form kets.
            plus.push(psi_plus(theta, phi));
            minus.push(psi_minus(theta, phi));
            continue;
        }
        let eig = eig_hermitian(&two_body_h(theta, phi, 1.0))?;
        let (hi, lo) = (eig.vector(3), eig.vector(0));
        if s > 0.0 {
            plus.push(hi);
            minus.push(lo);
        } else {
            plus.push(lo);
            minus.push(hi);
        }
    }
    let gamma_plus = loop_phase(&plus);
    let gamma_minus = loop_phase(&minus);
    let analytic_plus = wrap_angle(PI * (1.0 + s));
    let analytic_minus = wrap_angle(PI * (1.0 - s));
    let abs_error =
        angle_distance(gamma_plus, analytic_plus).max(angle_distance(gamma_minus, analytic_minus));
    Ok(BerryResult {
        theta,
        gamma_plus,
        gamma_minus,
        analytic_plus,
        analytic_minus,
        abs_error,
    })
}

/// The three generators `(-i Y X I, -i I Y X, -i Y Z X)` of the three-body S-matrix.
pub fn s3_lambda() -> [Operator; 3] {
    let (x, y, z, id) = (pauli::x(), pauli::y(), pauli::z(), pauli::id());
    let mi = c64(0.0, -1.0);
    [
        kron_all(&[&y, &x, &id]).scale(mi),
        kron_all(&[&id, &y, &x]).scale(mi),
        kron_all(&[&y, &z, &x]).scale(mi),
    ]
}

/// `(g1 g2, g2 g3, g1 g3)` from the T-junction Majoranas.
pub fn s3_lambda_majorana() -> Result<[Operator; 3]> {
    let [g1, g2, g3] = junction_majoranas()?;
    Ok([g1.matmul(&g2)?, g2.matmul(&g3)?, g1.matmul(&g3)?])
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SParams {
    pub eta: f64,
    pub beta: f64,
}

/// `n = (cos b / sqrt 2, cos b / sqrt 2, sin b)`.
pub fn s3_direction(beta: f64) -> [f64; 3] {
    let (s, c) = beta.sin_cos();
    [c * FRAC_1_SQRT_2, c * FRAC_1_SQRT_2, s]
}

/// `n . Lambda`, which squares to `-I`.
pub fn s3_generator(beta: f64) -> Operator {
    let n = s3_direction(beta);
    let l = s3_lambda();
    (0..3).fold(Operator::zeros(8), |acc, k| &acc + &l[k].scale_re(n[k]))
}

/// `S(eta, beta) = exp(eta n . Lambda) = cos eta I + sin eta (n . Lambda)`.
pub fn s3_matrix(params: SParams) -> Operator {
    let (s, c) = params.eta.sin_cos();
    let out = &Operator::identity(8).scale_re(c) + &s3_generator(params.beta).scale_re(s);
    out.with_factor_shape(&[2, 2, 2]).unwrap()
}

/// `beta = arccot sqrt 2 = atan(1/sqrt 2)`, where `S(pi/3, beta)` and `S(pi/2, beta)`
/// send `|000>` to GHZ- and W-class states.
pub fn ghz_w_beta() -> f64 {
    FRAC_1_SQRT_2.atan()
}

/// `S(eta, beta)|000>`.
pub fn s3_on_zero(params: SParams) -> StateVector {
    let zero = StateVector::basis(&[2, 2, 2], 0).unwrap();
    s3_matrix(params).apply(&zero).unwrap()
}

/// Angles of the factorized S-matrix for one `(theta1, theta3)` pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct S3Angles {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    pub cos_eta: f64,
    pub sin_eta: f64,
    pub cos_beta: f64,
    pub sin_beta: f64,
    pub params: SParams,
    /// `|cos^2 eta + sin^2 eta - 1|` from the closed forms.
    pub normalization_defect: f64,
}

/// `theta2` from the Lorentz rule, then
/// `cos eta = cos t2 cos(t1 + t3)`, `sin eta = sin t2 sqrt(1 + cos^2 D)`,
/// `cos beta = sqrt 2 cos D / sqrt(1 + cos^2 D)`, `sin beta = sin D / sqrt(1 + cos^2 D)`
/// with `D = t1 - t3`.
///
/// The sign of `sin beta` is the one for which the triple product actually
/// equals `exp(eta n . Lambda)`; the published expression has the opposite sign.
pub fn s3_angles(theta1: f64, theta3: f64) -> Result<S3Angles> {
    let theta2 = lorentz_theta2(theta1, theta3, 1.0)?;
    let d = theta1 - theta3;
    let root = (1.0 + d.cos().powi(2)).sqrt();
    let cos_eta = theta2.cos() * (theta1 + theta3).cos();
    let sin_eta = theta2.sin() * root;
    let cos_beta = 2.0f64.sqrt() * d.cos() / root;
    let sin_beta = d.sin() / root;
    let normalization_defect = (cos_eta * cos_eta + sin_eta * sin_eta - 1.0).abs();
    let params = SParams {
        eta: sin_eta.atan2(cos_eta),
        beta: sin_beta.atan2(cos_beta),
    };
    Ok(S3Angles {
        theta1,
        theta2,
        theta3,
        cos_eta,
        sin_eta,
        cos_beta,
        sin_beta,
        params,
        normalization_defect,
    })
}

/// `R12(t1) R23(t2) R12(t3)` with `R_i = exp(t g_i g_{i+1})` on the three junction Majoranas.
pub fn s3_triple_product(theta1: f64, theta2: f64, theta3: f64) -> Result<Operator> {
    let [g1, g2, g3] = junction_majoranas()?;
    let a = exp_bilinear(&g1, &g2, theta1)?;
    let b = exp_bilinear(&g2, &g3, theta2)?;
    let c = exp_bilinear(&g1, &g2, theta3)?;
    a.matmul(&b)?.matmul(&c)
}

/// Compares the triple product against `S(eta, beta)` built from the closed-form angles.
pub fn s3_factorization_check(
    theta1: f64,
    theta3: f64,
    tolerance: f64,
) -> Result<(RelationResidual, S3Angles)> {
    let angles = s3_angles(theta1, theta3)?;
    if angles.normalization_defect > 1e-10 {
        return Err(Error::NormalizationBroken {
            deviation: angles.normalization_defect,
        });
    }
    let lhs = s3_triple_product(theta1, angles.theta2, theta3)?;
    let rhs = s3_matrix(angles.params);
    Ok((RelationResidual::from_sides(&lhs, &rhs, tolerance)?, angles))
}

/// `H = i etadot [ (cos b / sqrt 2)(g1 g2 + g2 g3) + sin b g1 g3 ]`.
pub fn three_body_h(etadot: f64, beta: f64) -> Result<Operator> {
    let [l1, l2, l3] = s3_lambda_majorana()?;
    let (s, c) = beta.sin_cos();
    let inner = &(&l1 + &l2).scale_re(c * FRAC_1_SQRT_2) + &l3.scale_re(s);
    Ok(inner.scale(I * etadot))
}

/// `Gamma = -i g1 g2 g3` on the three junction Majoranas.
pub fn junction_gamma() -> Result<Operator> {
    gamma_of(&junction_majoranas()?)
}
