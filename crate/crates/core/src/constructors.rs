//! Closed-form constructors for every named matrix family.
//!
//! Qubit labels `{0, 1}` are `{up, down}`. Qutrit labels `{1, 2, 3}` map to
//! indices `{0, 1, 2}`; spin-1 labels `{+1, 0, -1}` map to `{0, 1, 2}`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_SQRT_2, PI};

#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;

use crate::densela::{c64, cis, expm_antihermitian, Operator, C64, I, ONE, ZERO};
use crate::error::{Error, Result};

/// `e^{i 2 pi / 3}`.
pub fn omega() -> C64 {
    cis(2.0 * PI / 3.0)
}

fn sqrt3() -> f64 {
    3.0f64.sqrt()
}

/// Pauli matrices and the 2x2 identity.
pub mod pauli {
    use super::*;

    pub fn id() -> Operator {
        Operator::identity(2)
    }

    pub fn x() -> Operator {
        Operator::from_real(&[0.0, 1.0, 1.0, 0.0]).unwrap()
    }

    pub fn y() -> Operator {
        Operator::from_entries(vec![ZERO, -I, I, ZERO]).unwrap()
    }

    pub fn z() -> Operator {
        Operator::from_real(&[1.0, 0.0, 0.0, -1.0]).unwrap()
    }

    /// `|0><1|`, raising in the `{up, down}` labeling.
    pub fn sigma_plus() -> Operator {
        Operator::from_real(&[0.0, 1.0, 0.0, 0.0]).unwrap()
    }

    pub fn sigma_minus() -> Operator {
        Operator::from_real(&[0.0, 0.0, 1.0, 0.0]).unwrap()
    }
}

/// The 4x4 Bell braid matrix.
///
/// The basis-action table for this matrix lists the rows of `B`, i.e. it is
/// the action of the transpose on column vectors; see [`bell_table_image`].
pub fn bell_braid() -> Operator {
    #[rustfmt::skip]
    let m = Operator::from_real(&[
        1.0, 0.0, 0.0, 1.0,
        0.0, 1.0, 1.0, 0.0,
        0.0, -1.0, 1.0, 0.0,
        -1.0, 0.0, 0.0, 1.0,
    ])
    .unwrap();
    m.scale_re(FRAC_1_SQRT_2)
        .with_factor_shape(&[2, 2])
        .unwrap()
}

/// Image of basis ket `k` under the Bell matrix in its tabulated convention
/// (row `k` of the matrix read as a ket).
pub fn bell_table_image(k: usize) -> Vec<C64> {
    bell_braid().row(k).to_vec()
}

/// Type-II solution `R(theta, phi)`, as displayed.
///
/// Equals `cos(theta) I + sin(theta) M4(phi)` with `M4^2 = -I`; at `phi = 0`
/// this is `exp(i theta X (x) Y)`.
pub fn type2_r(theta: f64, phi: f64) -> Operator {
    let (s, c) = theta.sin_cos();
    let z = |x: f64| c64(x, 0.0);
    #[rustfmt::skip]
    let m = Operator::from_entries(vec![
        z(c), ZERO, ZERO, cis(-phi) * s,
        ZERO, z(c), z(-s), ZERO,
        ZERO, z(s), z(c), ZERO,
        -cis(phi) * s, ZERO, ZERO, z(c),
    ])
    .unwrap();
    m.with_factor_shape(&[2, 2]).unwrap()
}

/// Generator of [`type2_r`]: `type2_r(t, phi) = cos t (I + tan t M4)`.
pub fn m4(phi: f64) -> Operator {
    #[rustfmt::skip]
    let m = Operator::from_entries(vec![
        ZERO, ZERO, ZERO, cis(-phi),
        ZERO, ZERO, -ONE, ZERO,
        ZERO, ONE, ZERO, ZERO,
        -cis(phi), ZERO, ZERO, ZERO,
    ])
    .unwrap();
    m.with_factor_shape(&[2, 2]).unwrap()
}

/// The displayed 9x9 braid matrix on two qutrits.
pub fn braid9() -> Operator {
    let w = omega();
    let w2 = w * w;
    let (o, u) = (ZERO, ONE);
    #[rustfmt::skip]
    let rows = [
        [w, o, o, o, o, u, o, w, o],
        [o, w, o, w2, o, o, o, o, w2],
        [o, o, w, o, w, o, u, o, o],
        [o, w2, o, w, o, o, o, o, w2],
        [o, o, u, o, w, o, w, o, o],
        [w, o, o, o, o, w, o, u, o],
        [o, o, w, o, u, o, w, o, o],
        [u, o, o, o, o, w, o, w, o],
        [o, w2, o, w2, o, o, o, o, w],
    ];
    let pre = c64(0.0, 1.0 / sqrt3());
    Operator::from_fn(9, |r, col| pre * rows[r][col])
        .with_factor_shape(&[3, 3])
        .unwrap()
}

/// Anti-Hermitian generator of [`r9`], `-(I - 2 omega B9)/sqrt(3)`, with `M9^2 = -I`.
///
/// The sign in front of `2 omega B9` is the one that makes `M9^2 = -I` hold
/// for the displayed `B9`; the `+` sign gives an operator that squares to
/// something else entirely.
pub fn m9() -> Operator {
    let b = braid9();
    let m = &Operator::identity(9) - &b.scale(omega() * 2.0);
    m.scale_re(-1.0 / sqrt3())
        .with_factor_shape(&[3, 3])
        .unwrap()
}

/// `R9(theta) = exp(theta M9) = cos theta (I + tan theta M9)`.
///
/// `r9(pi/3) = omega * braid9()`.
pub fn r9(theta: f64) -> Operator {
    let (s, c) = theta.sin_cos();
    let m = m9();
    (&Operator::identity(9).scale_re(c) + &m.scale_re(s))
        .with_factor_shape(&[3, 3])
        .unwrap()
}

/// Same family through the exponential, for cross-checking.
pub fn r9_expm(theta: f64) -> Result<Operator> {
    expm_antihermitian(&m9().scale_re(theta))
}

/// `D^{1/2}(theta, phi) = [[cos, -sin e^{-i phi}], [sin e^{i phi}, cos]]`.
pub fn wigner_d_half(theta: f64, phi: f64) -> Operator {
    let (s, c) = theta.sin_cos();
    Operator::from_entries(vec![c64(c, 0.0), -cis(-phi) * s, cis(phi) * s, c64(c, 0.0)]).unwrap()
}

/// Spin matrices `(J_y, J_z)` for spin `twice_j / 2` in the `m = j, j-1, ..., -j` basis.
pub fn spin_matrices(twice_j: u32) -> (Operator, Operator) {
    let n = twice_j as usize + 1;
    let j = twice_j as f64 / 2.0;
    let m = |k: usize| j - k as f64;
    let jz = Operator::from_fn(n, |r, col| if r == col { c64(m(r), 0.0) } else { ZERO });
    // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>
    let jp = Operator::from_fn(n, |r, col| {
        if col == r + 1 {
            c64((j * (j + 1.0) - m(col) * (m(col) + 1.0)).sqrt(), 0.0)
        } else {
            ZERO
        }
    });
    let jy = (&jp - &jp.adjoint()).scale(c64(0.0, -0.5));
    (jy, jz)
}

/// Wigner D-matrix for spin `twice_j / 2`, `twice_j` in `1..=4`.
///
/// Evaluated as `e^{-i phi Jz} e^{-i 2 theta Jy} e^{i phi Jz}`, the ordering
/// that reproduces [`wigner_d_half`] at spin 1/2.
pub fn wigner_d_general(twice_j: u32, theta: f64, phi: f64) -> Result<Operator> {
    if !(1..=4).contains(&twice_j) {
        return Err(Error::UnsupportedSpin { twice_j });
    }
    let (jy, jz) = spin_matrices(twice_j);
    let n = jz.dim();
    let rz = |a: f64| {
        Operator::from_fn(n, |r, col| {
            if r == col {
                cis(a * jz[(r, r)].re)
            } else {
                ZERO
            }
        })
    };
    let ry = expm_antihermitian(&jy.scale(c64(0.0, -2.0 * theta)))?;
    Ok(&(&rz(-phi) * &ry) * &rz(phi))
}

/// `V = (1/sqrt 2) [[1, i], [i, 1]]`.
pub fn v_conjugator() -> Operator {
    Operator::from_entries(vec![ONE, I, I, ONE])
        .unwrap()
        .scale_re(FRAC_1_SQRT_2)
}

/// Ising-anyon pair `(A, B)`: `A = diag(e^{-i pi/4}, e^{i pi/4})`, `B = (1/sqrt 2)[[1, i], [i, 1]]`.
pub fn anyon_pair() -> (Operator, Operator) {
    let a = Operator::diagonal(&[cis(-PI / 4.0), cis(PI / 4.0)]);
    (a, v_conjugator())
}

/// Clock and shift matrices `(Z, X)`: `Z = diag(1, w, w^2)`, `X` the displayed cyclic shift.
///
/// With these, `X Z = omega Z X`.
pub fn clock_shift() -> (Operator, Operator) {
    let w = omega();
    let z = Operator::diagonal(&[ONE, w, w * w]);
    #[rustfmt::skip]
    let x = Operator::from_real(&[
        0.0, 1.0, 0.0,
        0.0, 0.0, 1.0,
        1.0, 0.0, 0.0,
    ])
    .unwrap();
    (z, x)
}

/// Mixed-spin braid matrices `B6` (spin 1 (x) spin 1/2) and `B4` (Bell) at phase `phi`.
pub fn mixed_braids(phi: f64) -> (Operator, Operator) {
    let s2 = c64(2.0f64.sqrt(), 0.0);
    let e = cis(phi);
    let (o, u) = (ZERO, ONE);
    #[rustfmt::skip]
    let b6 = [
        [u, o, o, o, o, e],
        [o, o, u, u, o, o],
        [o, s2, o, o, o, o],
        [o, o, o, o, s2, o],
        [o, o, -u, u, o, o],
        [-e.conj(), o, o, o, o, u],
    ];
    #[rustfmt::skip]
    let b4 = [
        [u, o, o, e],
        [o, u, u, o],
        [o, -u, u, o],
        [-e.conj(), o, o, u],
    ];
    let b6 = Operator::from_fn(6, |r, col| b6[r][col] * FRAC_1_SQRT_2);
    let b4 = Operator::from_fn(4, |r, col| b4[r][col] * FRAC_1_SQRT_2)
        .with_factor_shape(&[2, 2])
        .unwrap();
    (b6, b4)
}

/// Mixed-spin Yang-Baxter solutions `(R6(theta, phi), R4(theta, phi))` as displayed.
///
/// Both reduce to [`mixed_braids`] at `theta = pi/4`.
pub fn mixed_r(theta: f64, phi: f64) -> (Operator, Operator) {
    let (s, c) = theta.sin_cos();
    let e = cis(phi);
    let (o, u) = (ZERO, ONE);
    let (cc, ss) = (c64(c, 0.0), c64(s, 0.0));
    #[rustfmt::skip]
    let r6 = [
        [cc, o, o, o, o, e * s],
        [o, o, cc, ss, o, o],
        [o, u, o, o, o, o],
        [o, o, o, o, u, o],
        [o, o, -ss, cc, o, o],
        [-e.conj() * s, o, o, o, o, cc],
    ];
    #[rustfmt::skip]
    let r4 = [
        [cc, o, o, e * s],
        [o, cc, ss, o],
        [o, -ss, cc, o],
        [-e.conj() * s, o, o, cc],
    ];
    let r6 = Operator::from_fn(6, |r, col| r6[r][col]);
    let r4 = Operator::from_fn(4, |r, col| r4[r][col])
        .with_factor_shape(&[2, 2])
        .unwrap();
    (r6, r4)
}

/// Reflection across the anti-diagonal: `out[i][j] = a[n-1-j][n-1-i]`.
pub fn off_diagonal_transpose(a: &Operator) -> Operator {
    let n = a.dim();
    Operator::from_fn(n, |i, j| a[(n - 1 - j, n - 1 - i)])
}

/// Two-qutrit braid generators `(B12, B23)` of the parity-sector model.
///
/// `B12 = diag(e^{-i pi/3}, e^{i pi/3}, e^{-i pi/3}) (x) I3`; `B23` as displayed.
pub fn qutrit_braids() -> (Operator, Operator) {
    let d = Operator::diagonal(&[cis(-PI / 3.0), cis(PI / 3.0), cis(-PI / 3.0)]);
    let b12 = crate::densela::kron(&d, &Operator::identity(3));
    let w = omega();
    let (o, u) = (ZERO, ONE);
    #[rustfmt::skip]
    let rows = [
        [w, o, o, o, o, w, o, u, o],
        [o, w, o, w, o, o, o, o, u],
        [o, o, w, o, w, o, u, o, o],
        [o, u, o, w, o, o, o, o, w],
        [o, o, u, o, w, o, w, o, o],
        [u, o, o, o, o, w, o, w, o],
        [o, o, w, o, u, o, w, o, o],
        [w, o, o, o, o, u, o, w, o],
        [o, w, o, u, o, o, o, o, w],
    ];
    let pre = I * w / sqrt3();
    let b23 = Operator::from_fn(9, |r, col| pre * rows[r][col])
        .with_factor_shape(&[3, 3])
        .unwrap();
    (b12, b23)
}

/// `R_i(theta) = (2/sqrt 3) [cos(theta + pi/6) I + sin(theta) B_i]` for a qutrit braid generator.
pub fn qutrit_r(b: &Operator, theta: f64) -> Operator {
    let k = 2.0 / sqrt3();
    let id = Operator::identity(b.dim()).scale_re(k * (theta + PI / 6.0).cos());
    let out = &id + &b.scale_re(k * theta.sin());
    out.with_factor_shape(b.factor_shape()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densela::{frobenius_distance, kron, StateVector};

    const TOL: f64 = 1e-12;

    fn dist(a: &Operator, b: &Operator) -> f64 {
        frobenius_distance(a, b).unwrap()
    }

    fn braid_residual(b: &Operator, d: usize) -> f64 {
        let id = Operator::identity(d);
        let b1 = kron(b, &id);
        let b2 = kron(&id, b);
        dist(&(&(&b1 * &b2) * &b1), &(&(&b2 * &b1) * &b2))
    }

    #[test]
    fn constructors_are_unitary() {
        let (b6, b4) = mixed_braids(0.6);
        let (r6, r4) = mixed_r(0.3, 0.6);
        let (zc, xc) = clock_shift();
        let (b12, b23) = qutrit_braids();
        for m in [
            bell_braid(),
            type2_r(0.3, 1.1),
            braid9(),
            r9(0.7),
            wigner_d_half(0.4, 0.9),
            v_conjugator(),
            b6,
            b4,
            r6,
            r4,
            zc,
            xc,
            b12,
            b23,
        ] {
            assert!(m.unitarity_defect() < TOL, "{m:?}");
        }
    }

    #[test]
    fn bell_braid_examples() {
        let b = bell_braid();
        let s = FRAC_1_SQRT_2;
        assert!((b[(0, 0)].re - s).abs() < 1e-15 && (b[(0, 3)].re - s).abs() < 1e-15);
        let img = bell_table_image(0);
        assert!((img[0].re - s).abs() < 1e-15 && (img[3].re - s).abs() < 1e-15);
        assert!(braid_residual(&b, 2) < TOL);
    }

    #[test]
    fn type2_is_the_exponential_of_x_y() {
        let t = 0.41;
        let xy = kron(&pauli::x(), &pauli::y());
        let want = expm_antihermitian(&xy.scale(c64(0.0, t))).unwrap();
        assert!(dist(&type2_r(t, 0.0), &want) < TOL);
        // Neither sign of the Y (x) X exponent reproduces the displayed matrix.
        let yx = kron(&pauli::y(), &pauli::x());
        for sign in [1.0, -1.0] {
            let other = expm_antihermitian(&yx.scale(c64(0.0, sign * t))).unwrap();
            assert!(dist(&type2_r(t, 0.0), &other) > 0.1);
        }
    }

    #[test]
    fn type2_column_zero_at_quarter_turn() {
        let out = type2_r(PI / 4.0, 0.0)
            .apply(&StateVector::basis(&[2, 2], 0).unwrap())
            .unwrap();
        let s = FRAC_1_SQRT_2;
        let want = StateVector::new(vec![c64(s, 0.0), ZERO, ZERO, c64(-s, 0.0)], &[2, 2]).unwrap();
        assert!(out.distance(&want) < 1e-15);
    }

    #[test]
    fn type2_and_bell_differ_in_middle_block() {
        let diff = &type2_r(PI / 4.0, 0.0) - &bell_braid();
        for (r, col) in [(1, 2), (2, 1)] {
            assert!(diff[(r, col)].norm() > 1.0);
        }
        let mut rest = diff.clone();
        rest[(1, 2)] = ZERO;
        rest[(2, 1)] = ZERO;
        assert!(rest.frobenius_norm() < 1e-15);
    }

    #[test]
    fn generators_square_to_minus_identity() {
        for phi in [0.0, 0.8] {
            let m = m4(phi);
            assert!(dist(&(&m * &m), &Operator::identity(4).scale_re(-1.0)) < TOL);
            let t = 0.3;
            let form = (&Operator::identity(4) + &m.scale_re(t.tan())).scale_re(t.cos());
            assert!(dist(&form, &type2_r(t, phi)) < TOL);
        }
        let m = m9();
        assert!(dist(&(&m * &m), &Operator::identity(9).scale_re(-1.0)) < TOL);
        assert!(m.antihermiticity_defect() < TOL);
    }

    #[test]
    fn braid9_entries_and_relation() {
        let b = braid9();
        let want = I * omega() / sqrt3();
        assert!((b[(0, 0)] - want).norm() < 1e-15);
        assert!(braid_residual(&b, 3) < TOL);
    }

    #[test]
    fn r9_forms_agree_and_hit_braid() {
        for t in [-1.1, 0.2, 0.9] {
            assert!(dist(&r9(t), &r9_expm(t).unwrap()) < TOL);
        }
        assert!(dist(&r9(0.0), &Operator::identity(9)) < TOL);
        assert!(dist(&r9(PI / 3.0), &braid9().scale(omega())) < TOL);
    }

    #[test]
    fn wigner_general_matches_half() {
        for (t, p) in [(0.3, 0.7), (-1.0, 2.2)] {
            assert!(dist(&wigner_d_general(1, t, p).unwrap(), &wigner_d_half(t, p)) < TOL);
        }
        for tj in 1..=4 {
            assert!(wigner_d_general(tj, 0.5, 0.4).unwrap().unitarity_defect() < TOL);
        }
        assert!(matches!(
            wigner_d_general(5, 0.1, 0.1),
            Err(Error::UnsupportedSpin { twice_j: 5 })
        ));
        assert!(matches!(
            wigner_d_general(0, 0.1, 0.1),
            Err(Error::UnsupportedSpin { .. })
        ));
    }

    #[test]
    fn wigner_half_at_quarter_turn_is_anyon_b() {
        let (_, b) = anyon_pair();
        assert!(dist(&wigner_d_half(PI / 4.0, PI / 2.0), &b) < TOL);
        assert!(dist(&wigner_d_half(0.0, 1.3), &Operator::identity(2)) < TOL);
    }

    #[test]
    fn v_conjugates_d_half_to_anyons() {
        let v = v_conjugator();
        let (a, b) = anyon_pair();
        let conj = |m: &Operator| &(&v.adjoint() * m) * &v;
        assert!(dist(&conj(&wigner_d_half(PI / 4.0, 0.0)), &a) < TOL);
        assert!(dist(&conj(&wigner_d_half(PI / 4.0, PI / 2.0)), &b) < TOL);
    }

    #[test]
    fn clock_shift_relations() {
        let (z, x) = clock_shift();
        let id = Operator::identity(3);
        assert!(dist(&z.pow(3), &id) < TOL);
        assert!(dist(&x.pow(3), &id) < TOL);
        assert!(dist(&(&x * &z), &(&z * &x).scale(omega())) < TOL);
        let img = x.apply(&StateVector::basis(&[3], 0).unwrap()).unwrap();
        assert_eq!(img.amplitudes()[2], ONE);
    }

    #[test]
    fn mixed_families_reduce_to_braids() {
        for phi in [0.0, 0.6] {
            let (b6, b4) = mixed_braids(phi);
            let (r6, r4) = mixed_r(PI / 4.0, phi);
            assert!(dist(&r6, &b6) < TOL);
            assert!(dist(&r4, &b4) < TOL);
        }
        assert!(dist(&mixed_braids(0.0).1, &bell_braid()) < TOL);
    }

    #[test]
    fn r6_leaves_qutrit_zero_alone() {
        // |1/2>|0> is input index 1, |0>|1/2> is output index 2.
        let (r6, _) = mixed_r(0.77, 0.3);
        let out = r6.apply(&StateVector::basis(&[6], 1).unwrap()).unwrap();
        assert!(out.distance(&StateVector::basis(&[6], 2).unwrap()) < 1e-15);
        let (r6_0, _) = mixed_r(0.0, 0.0);
        assert!(r6_0.unitarity_defect() < TOL);
    }

    #[test]
    fn off_diagonal_transpose_is_involution() {
        let a = Operator::from_fn(5, |r, col| c64(r as f64, col as f64 * 0.5));
        assert_eq!(off_diagonal_transpose(&off_diagonal_transpose(&a)), a);
        assert_eq!(
            off_diagonal_transpose(&Operator::identity(4)),
            Operator::identity(4)
        );
        assert_eq!(off_diagonal_transpose(&a)[(0, 1)], a[(3, 4)]);
    }

    #[test]
    fn qutrit_braids_are_braid_pair_generators() {
        let (b12, b23) = qutrit_braids();
        assert_eq!(b12.factor_shape(), &[3, 3]);
        let r = qutrit_r(&b23, 0.0);
        assert!(dist(&r, &Operator::identity(9)) < TOL);
    }
}
