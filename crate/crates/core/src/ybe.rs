//! Yang-Baxter, braid and mixed-spin braid-type relation checks, plus the
//! spectral-parameter constraints that make them hold.

#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;

use crate::constructors::{mixed_braids, mixed_r, off_diagonal_transpose, wigner_d_general};
use crate::densela::{embed, product, Operator};
use crate::error::{Error, Result};

/// Angles of one Yang-Baxter instance. `phi` is only read by families that carry a phase.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralTriple {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    pub phi: f64,
}

impl SpectralTriple {
    pub fn new(theta1: f64, theta2: f64, theta3: f64) -> Self {
        Self {
            theta1,
            theta2,
            theta3,
            phi: 0.0,
        }
    }

    pub fn with_phi(self, phi: f64) -> Self {
        Self { phi, ..self }
    }

    /// `theta2` from the Lorentzian rule with parameter `kappa`.
    pub fn lorentz(theta1: f64, theta3: f64, kappa: f64) -> Result<Self> {
        Ok(Self::new(
            theta1,
            lorentz_theta2(theta1, theta3, kappa)?,
            theta3,
        ))
    }

    /// `theta2 = theta1 + theta3`; the additive rule that does not solve these families.
    pub fn galilean(theta1: f64, theta3: f64) -> Self {
        Self::new(theta1, theta1 + theta3, theta3)
    }

    /// All three angles equal (the braid limit).
    pub fn uniform(theta: f64) -> Self {
        Self::new(theta, theta, theta)
    }

    pub fn thetas(&self) -> [f64; 3] {
        [self.theta1, self.theta2, self.theta3]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RelationResidual {
    pub lhs_norm: f64,
    pub rhs_norm: f64,
    pub residual: f64,
    pub passed: bool,
    pub tolerance: f64,
}

impl RelationResidual {
    pub fn from_sides(lhs: &Operator, rhs: &Operator, tolerance: f64) -> Result<Self> {
        let residual = lhs.try_sub(rhs)?.frobenius_norm();
        Ok(Self {
            lhs_norm: lhs.frobenius_norm(),
            rhs_norm: rhs.frobenius_norm(),
            residual,
            passed: residual < tolerance,
            tolerance,
        })
    }
}

/// Residual of `lhs[0] lhs[1] ... = rhs[0] rhs[1] ...`.
pub fn check_relation(
    lhs: &[&Operator],
    rhs: &[&Operator],
    tolerance: f64,
) -> Result<RelationResidual> {
    RelationResidual::from_sides(&product(lhs)?, &product(rhs)?, tolerance)
}

/// `R12(t1) R23(t2) R12(t3) = R23(t3) R12(t2) R23(t1)`, where `r12[k]` and
/// `r23[k]` are the slot operators already evaluated at `t_{k+1}`.
pub fn check_ybe(
    r12: [&Operator; 3],
    r23: [&Operator; 3],
    tolerance: f64,
) -> Result<RelationResidual> {
    check_relation(
        &[r12[0], r23[1], r12[2]],
        &[r23[2], r12[1], r23[0]],
        tolerance,
    )
}

/// YBE for a two-site family `r(theta)` acting on `local_dim^2`, embedded as
/// `R (x) I` and `I (x) R` on three sites.
pub fn check_ybe_family(
    r: impl Fn(f64) -> Operator,
    local_dim: usize,
    triple: &SpectralTriple,
    tolerance: f64,
) -> Result<RelationResidual> {
    let ops = triple.thetas().map(&r);
    for op in &ops {
        if op.dim() != local_dim * local_dim {
            return Err(Error::DimMismatch {
                left: op.dim(),
                right: local_dim * local_dim,
            });
        }
    }
    let r12 = ops.clone().map(|op| embed(&op, 1, local_dim));
    let r23 = ops.map(|op| embed(&op, local_dim, 1));
    check_ybe(
        [&r12[0], &r12[1], &r12[2]],
        [&r23[0], &r23[1], &r23[2]],
        tolerance,
    )
}

/// `(B (x) I)(I (x) B)(B (x) I) = (I (x) B)(B (x) I)(I (x) B)`.
pub fn check_braid(b: &Operator, local_dim: usize, tolerance: f64) -> Result<RelationResidual> {
    if b.dim() != local_dim * local_dim {
        return Err(Error::DimMismatch {
            left: b.dim(),
            right: local_dim * local_dim,
        });
    }
    let b1 = embed(b, 1, local_dim);
    let b2 = embed(b, local_dim, 1);
    check_relation(&[&b1, &b2, &b1], &[&b2, &b1, &b2], tolerance)
}

/// `theta2 = atan((tan t1 + tan t3) / (1 + kappa tan t1 tan t3))`, principal branch.
///
/// `kappa = 1` for the 4x4 and mixed-spin families, `kappa = 1/3` for the
/// 9x9 and parafermion families. Solutions are only defined modulo `pi`.
pub fn lorentz_theta2(theta1: f64, theta3: f64, kappa: f64) -> Result<f64> {
    let (u, v) = (theta1.tan(), theta3.tan());
    let den = 1.0 + kappa * (u * v);
    if den.abs() < 1e-12 {
        return Err(Error::SingularDenominator {
            context: "lorentz_theta2",
            value: den,
        });
    }
    Ok(((u + v) / den).atan())
}

fn acos_checked(cos_phi: f64) -> Result<f64> {
    if !cos_phi.is_finite() || cos_phi.abs() > 1.0 + 1e-12 {
        return Err(Error::OutOfRange { cos_phi });
    }
    Ok(cos_phi.clamp(-1.0, 1.0).acos())
}

/// The D-function phase `phi` in `[0, pi]` solving the constraint
/// `cos phi = ((tan t1 + tan t3 - tan t2) / (tan t1 tan t2 tan t3) - 1) / 2`.
pub fn dfun_phi(theta1: f64, theta2: f64, theta3: f64) -> Result<f64> {
    let (a, b, c) = (theta1.tan(), theta2.tan(), theta3.tan());
    let den = a * b * c;
    if den.abs() < 1e-12 {
        return Err(Error::SingularDenominator {
            context: "dfun_phi",
            value: den,
        });
    }
    acos_checked(0.5 * ((a + c - b) / den - 1.0))
}

/// The constraint at `t1 = t2 = t3 = theta`: `cos phi = cos 2theta / (1 - cos 2theta)`.
pub fn dfun_phi_braid(theta: f64) -> Result<f64> {
    let c = (2.0 * theta).cos();
    let den = 1.0 - c;
    if den.abs() < 1e-12 {
        return Err(Error::SingularDenominator {
            context: "dfun_phi_braid",
            value: den,
        });
    }
    acos_checked(c / den)
}

/// `D(t1,0) D(t2,phi) D(t3,0) = D(t3,phi) D(t2,0) D(t1,phi)` for spin `twice_j / 2`.
///
/// The two slots are the `phi = 0` and `phi = triple.phi` members of the family,
/// which is the 2D form the reduced type-II YBE takes.
pub fn check_dfun_ybe(
    twice_j: u32,
    triple: &SpectralTriple,
    tolerance: f64,
) -> Result<RelationResidual> {
    let d = |t: f64, p: f64| wigner_d_general(twice_j, t, p);
    let [t1, t2, t3] = triple.thetas();
    let p = triple.phi;
    check_relation(
        &[&d(t1, 0.0)?, &d(t2, p)?, &d(t3, 0.0)?],
        &[&d(t3, p)?, &d(t2, 0.0)?, &d(t1, p)?],
        tolerance,
    )
}

/// The three mixed-spin relations on strands with spins `{1, 1/2, 1/2}` and permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MixedRelation {
    Rel1,
    Rel2,
    Rel3,
}

impl MixedRelation {
    pub const ALL: [Self; 3] = [Self::Rel1, Self::Rel2, Self::Rel3];

    pub fn name(self) -> &'static str {
        match self {
            Self::Rel1 => "rel1",
            Self::Rel2 => "rel2",
            Self::Rel3 => "rel3",
        }
    }
}

/// Slot operators on the 12-dim three-strand space built from one `(S6, S4)` pair.
struct MixedSlots {
    one_half_12: Operator,
    one_half_23: Operator,
    half_half_12: Operator,
    half_half_23: Operator,
    half_one_12: Operator,
    half_one_23: Operator,
}

impl MixedSlots {
    fn new(s6: &Operator, s4: &Operator) -> Self {
        let ot = off_diagonal_transpose(s6);
        Self {
            one_half_12: embed(s6, 1, 2),
            one_half_23: embed(s6, 2, 1),
            half_half_12: embed(s4, 1, 3),
            half_half_23: embed(s4, 3, 1),
            half_one_12: embed(&ot, 1, 2),
            half_one_23: embed(&ot, 2, 1),
        }
    }
}

fn mixed_relation_residual(
    relation: MixedRelation,
    slots: [&MixedSlots; 3],
    tolerance: f64,
) -> Result<RelationResidual> {
    let [a, b, c] = slots;
    match relation {
        MixedRelation::Rel1 => check_relation(
            &[&a.one_half_12, &b.one_half_23, &c.half_half_12],
            &[&c.half_half_23, &b.one_half_12, &a.one_half_23],
            tolerance,
        ),
        MixedRelation::Rel2 => check_relation(
            &[&a.half_one_12, &b.half_half_23, &c.one_half_12],
            &[&c.one_half_23, &b.half_half_12, &a.half_one_23],
            tolerance,
        ),
        MixedRelation::Rel3 => check_relation(
            &[&a.half_half_12, &b.half_one_23, &c.half_one_12],
            &[&c.half_one_23, &b.half_one_12, &a.half_half_23],
            tolerance,
        ),
    }
}

/// Parametrized mixed-spin YBE with `R6`, `R4` evaluated at the triple's angles and phase.
pub fn check_mixed_ybe(
    relation: MixedRelation,
    triple: &SpectralTriple,
    tolerance: f64,
) -> Result<RelationResidual> {
    let slots = triple.thetas().map(|t| {
        let (r6, r4) = mixed_r(t, triple.phi);
        MixedSlots::new(&r6, &r4)
    });
    mixed_relation_residual(relation, [&slots[0], &slots[1], &slots[2]], tolerance)
}

/// Constant braid-type relation with `B6`, `B4`.
pub fn check_mixed_braid(
    relation: MixedRelation,
    phi: f64,
    tolerance: f64,
) -> Result<RelationResidual> {
    let (b6, b4) = mixed_braids(phi);
    let slots = MixedSlots::new(&b6, &b4);
    mixed_relation_residual(relation, [&slots, &slots, &slots], tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{bell_braid, braid9, r9, type2_r, wigner_d_half};
    use core::f64::consts::PI;

    #[test]
    fn identity_slots_have_zero_residual() {
        let id = Operator::identity(8);
        let r = check_ybe([&id, &id, &id], [&id, &id, &id], 1e-10).unwrap();
        assert_eq!(r.residual, 0.0);
        assert!(r.passed);
    }

    #[test]
    fn lorentz_examples() {
        assert!((lorentz_theta2(PI / 4.0, PI / 4.0, 1.0).unwrap() - PI / 4.0).abs() < 1e-15);
        let want = (3.0f64.sqrt() / 2.0).atan();
        assert!((lorentz_theta2(PI / 6.0, PI / 6.0, 1.0).unwrap() - want).abs() < 1e-15);
        assert!((want - 0.713724).abs() < 1e-6);
        assert!((lorentz_theta2(0.7, 0.0, 1.0 / 3.0).unwrap() - 0.7).abs() < 1e-15);
        assert!(matches!(
            lorentz_theta2(PI / 4.0, -PI / 4.0, 1.0),
            Err(Error::SingularDenominator { .. })
        ));
    }

    #[test]
    fn type2_ybe_and_galilean_control() {
        for phi in [0.0, 0.7] {
            let t = SpectralTriple::lorentz(0.5, -0.9, 1.0).unwrap();
            let r = check_ybe_family(|x| type2_r(x, phi), 2, &t, 1e-10).unwrap();
            assert!(r.passed, "{r:?}");
        }
        let g = SpectralTriple::galilean(PI / 6.0, PI / 6.0);
        assert!(
            check_ybe_family(|x| type2_r(x, 0.0), 2, &g, 1e-10)
                .unwrap()
                .residual
                > 1e-3
        );
    }

    #[test]
    fn nine_by_nine_needs_kappa_third() {
        let t = SpectralTriple::lorentz(0.4, 0.8, 1.0 / 3.0).unwrap();
        assert!(check_ybe_family(r9, 3, &t, 1e-10).unwrap().passed);
        let wrong = SpectralTriple::lorentz(0.4, 0.8, 1.0).unwrap();
        assert!(check_ybe_family(r9, 3, &wrong, 1e-10).unwrap().residual > 1e-3);
    }

    #[test]
    fn braid_examples() {
        assert!(check_braid(&bell_braid(), 2, 1e-12).unwrap().passed);
        assert!(check_braid(&braid9(), 3, 1e-12).unwrap().passed);
        #[rustfmt::skip]
        let swap = Operator::from_real(&[
            1.0, 0.0, 0.0, 0.0,
            0.0, 0.0, 1.0, 0.0,
            0.0, 1.0, 0.0, 0.0,
            0.0, 0.0, 0.0, 1.0,
        ]).unwrap();
        assert!(check_braid(&swap, 2, 1e-12).unwrap().passed);
        assert!(matches!(
            check_braid(&swap, 3, 1e-12),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn dfun_phi_examples() {
        let q = PI / 4.0;
        assert!((dfun_phi(q, q, q).unwrap() - PI / 2.0).abs() < 1e-12);
        assert!((dfun_phi_braid(q).unwrap() - PI / 2.0).abs() < 1e-12);
        assert!((dfun_phi_braid(PI / 2.0).unwrap() - 2.0 * PI / 3.0).abs() < 1e-12);
        let t = SpectralTriple::lorentz(0.3, 0.9, 1.0).unwrap();
        assert!((dfun_phi(t.theta1, t.theta2, t.theta3).unwrap() - PI / 2.0).abs() < 1e-12);
        assert!(matches!(
            dfun_phi(0.0, 0.3, 0.3),
            Err(Error::SingularDenominator { .. })
        ));
        assert!(matches!(
            dfun_phi(0.1, 1.0, 0.1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn dfun_ybe_braid_limit_spin_one() {
        let theta = 1.0;
        let phi = dfun_phi_braid(theta).unwrap();
        let t = SpectralTriple::uniform(theta).with_phi(phi);
        assert!(check_dfun_ybe(2, &t, 1e-10).unwrap().passed);
        assert!(check_dfun_ybe(1, &t, 1e-10).unwrap().passed);
    }

    #[test]
    fn dfun_ybe_half_uses_displayed_matrix() {
        let t = SpectralTriple::lorentz(0.3, 0.9, 1.0)
            .unwrap()
            .with_phi(PI / 2.0);
        let d = wigner_d_half;
        let r = check_relation(
            &[&d(t.theta1, 0.0), &d(t.theta2, t.phi), &d(t.theta3, 0.0)],
            &[&d(t.theta3, t.phi), &d(t.theta2, 0.0), &d(t.theta1, t.phi)],
            1e-10,
        )
        .unwrap();
        assert!(r.passed);
    }

    #[test]
    fn mixed_relations() {
        for phi in [0.0, 0.6] {
            for rel in MixedRelation::ALL {
                assert!(
                    check_mixed_braid(rel, phi, 1e-12).unwrap().passed,
                    "{rel:?}"
                );
                let t = SpectralTriple::uniform(PI / 4.0).with_phi(phi);
                assert!(check_mixed_ybe(rel, &t, 1e-12).unwrap().passed);
                let t = SpectralTriple::lorentz(0.9, -0.2, 1.0)
                    .unwrap()
                    .with_phi(phi);
                assert!(check_mixed_ybe(rel, &t, 1e-10).unwrap().passed);
            }
        }
        let g = SpectralTriple::galilean(PI / 5.0, PI / 5.0);
        assert!(
            check_mixed_ybe(MixedRelation::Rel3, &g, 1e-10)
                .unwrap()
                .residual
                > 1e-3
        );
    }
}
