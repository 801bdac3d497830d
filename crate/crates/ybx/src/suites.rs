//! Verification suites behind `ybx verify`.
//!
//! Every suite draws its random parameters up front from one seeded RNG, then
//! evaluates them in parallel. Checks come back in draw order, so a report
//! depends only on the suite, sample count, seed, tolerance and version.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6, PI};

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ybx_core::constructors::{
    anyon_pair, bell_braid, braid9, clock_shift, m4, m9, omega, qutrit_braids, r9, type2_r,
    v_conjugator, wigner_d_half,
};
use ybx_core::densela::{anticommutator, commutator, eig_hermitian, frobenius_distance, Operator};
use ybx_core::dynamics::{
    ghz_w_beta, junction_gamma, s3_factorization_check, s3_generator, s3_lambda, s3_on_zero,
    three_body_h, SParams,
};
use ybx_core::majorana::{
    exp_bilinear, gamma_emergent, majorana_op, r_majorana, MajoranaSite, Pairing,
};
use ybx_core::parafermion::{
    displayed_a12, displayed_a23, parafermion_op, qutrit_parity_subspace, r_parafermion,
    sector_leakage, z3_gamma_three, z3_parity, z3_parity_block,
};
use ybx_core::topo2d::{anyon_braid_check, reduce_with_leakage, Slot};
use ybx_core::ybe::{
    check_braid, check_dfun_ybe, check_mixed_braid, check_mixed_ybe, check_relation, check_ybe,
    check_ybe_family, dfun_phi, MixedRelation, SpectralTriple,
};
use ybx_core::{c64, Result, StateVector};

use crate::parallel::par_map;
use crate::report::{Check, Report};

/// Half-width of the spectral-angle sampling interval.
pub const ANGLE_BOUND: f64 = 1.2;
/// Samples with `|1 + kappa tan t1 tan t3|` below this are redrawn.
pub const POLE_GUARD: f64 = 1e-3;
/// Floor for negative controls.
pub const CONTROL_FLOOR: f64 = 1e-3;
/// Floor for the `[P, Gamma] != 0` check.
pub const NONZERO_FLOOR: f64 = 0.1;

const TOL_YBE: f64 = 1e-10;
const TOL_BRAID: f64 = 1e-12;
const TOL_TABLE: f64 = 1e-13;
const KAPPA_QUTRIT: f64 = 1.0 / 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    #[value(name = "ybe-4x4")]
    Ybe4x4,
    #[value(name = "ybe-9x9")]
    Ybe9x9,
    #[value(name = "ybe-parafermion")]
    YbeParafermion,
    #[value(name = "ybe-mixed")]
    YbeMixed,
    #[value(name = "braid-all")]
    BraidAll,
    #[value(name = "algebra")]
    Algebra,
    #[value(name = "symmetries")]
    Symmetries,
    #[value(name = "reduction-2d")]
    Reduction2d,
    #[value(name = "reduction-3x3")]
    Reduction3x3,
    #[value(name = "s3-factorize")]
    S3Factorize,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Self::Ybe4x4 => "ybe-4x4",
            Self::Ybe9x9 => "ybe-9x9",
            Self::YbeParafermion => "ybe-parafermion",
            Self::YbeMixed => "ybe-mixed",
            Self::BraidAll => "braid-all",
            Self::Algebra => "algebra",
            Self::Symmetries => "symmetries",
            Self::Reduction2d => "reduction-2d",
            Self::Reduction3x3 => "reduction-3x3",
            Self::S3Factorize => "s3-factorize",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    /// Overrides every relation check's default tolerance when set.
    pub tolerance: Option<f64>,
}

impl VerifyOptions {
    fn tol(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }
}

/// Seeded parameter draws.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn angle(&mut self) -> f64 {
        loop {
            let x = self.rng.random_range(-ANGLE_BOUND..ANGLE_BOUND);
            if x > -ANGLE_BOUND {
                return x;
            }
        }
    }

    pub fn phase(&mut self) -> f64 {
        self.rng.random_range(-PI..PI)
    }

    /// `(t1, t3)` in the open square, away from the additivity pole.
    pub fn lorentz_pair(&mut self, kappa: f64) -> (f64, f64) {
        loop {
            let (a, b) = (self.angle(), self.angle());
            if (1.0 + kappa * a.tan() * b.tan()).abs() >= POLE_GUARD {
                return (a, b);
            }
        }
    }

    /// `(t1, t2, t3, phi)` satisfying the D-function constraint.
    pub fn dfun_quad(&mut self) -> (f64, f64, f64, f64) {
        loop {
            let (a, b, c) = (self.angle(), self.angle(), self.angle());
            if let Ok(phi) = dfun_phi(a, b, c) {
                return (a, b, c, phi);
            }
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    let checks = match suite {
        Suite::Ybe4x4 => ybe_4x4(opts)?,
        Suite::Ybe9x9 => ybe_9x9(opts)?,
        Suite::YbeParafermion => ybe_parafermion(opts)?,
        Suite::YbeMixed => ybe_mixed(opts)?,
        Suite::BraidAll => braid_all(opts)?,
        Suite::Algebra => algebra(opts)?,
        Suite::Symmetries => symmetries(opts)?,
        Suite::Reduction2d => reduction_2d(opts)?,
        Suite::Reduction3x3 => reduction_3x3(opts)?,
        Suite::S3Factorize => s3_factorize(opts)?,
    };
    Ok(Report::new(
        suite.name(),
        opts.seed,
        opts.tolerance,
        opts.samples,
        checks,
    ))
}

fn dist(a: &Operator, b: &Operator) -> Result<f64> {
    frobenius_distance(a, b)
}

fn comm_norm(a: &Operator, b: &Operator) -> Result<f64> {
    Ok(commutator(a, b)?.frobenius_norm())
}

fn collect<T>(v: Vec<Result<T>>) -> Result<Vec<T>> {
    v.into_iter().collect()
}

fn flatten(v: Vec<Result<Vec<Check>>>) -> Result<Vec<Check>> {
    Ok(collect(v)?.into_iter().flatten().collect())
}

fn galilean_control(name: &str, r: impl Fn(f64) -> Operator, local_dim: usize) -> Result<Check> {
    let t = SpectralTriple::galilean(FRAC_PI_6, FRAC_PI_6);
    let res = check_ybe_family(r, local_dim, &t, 0.0)?;
    Ok(Check::control(
        name,
        &[
            ("theta1", t.theta1),
            ("theta2", t.theta2),
            ("theta3", t.theta3),
        ],
        res.residual,
        CONTROL_FLOOR,
    ))
}

fn triple_params(t: &SpectralTriple) -> [(&'static str, f64); 4] {
    [
        ("phi", t.phi),
        ("theta1", t.theta1),
        ("theta2", t.theta2),
        ("theta3", t.theta3),
    ]
}

pub fn ybe_4x4(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<_> = (0..opts.samples)
        .map(|_| (s.lorentz_pair(1.0), s.phase()))
        .collect();
    let tol = opts.tol(TOL_YBE);
    let mut checks = collect(par_map(&draws, |&((t1, t3), phi)| {
        let t = SpectralTriple::lorentz(t1, t3, 1.0)?.with_phi(phi);
        let r = check_ybe_family(|x| type2_r(x, phi), 2, &t, tol)?;
        Ok(Check::relation(
            "ybe-4x4",
            &triple_params(&t),
            r.residual,
            tol,
        ))
    }))?;
    checks.push(galilean_control("galilean-4x4", |x| type2_r(x, 0.0), 2)?);
    Ok(checks)
}

pub fn ybe_9x9(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<_> = (0..opts.samples)
        .map(|_| s.lorentz_pair(KAPPA_QUTRIT))
        .collect();
    let tol = opts.tol(TOL_YBE);
    let mut checks = collect(par_map(&draws, |&(t1, t3)| {
        let t = SpectralTriple::lorentz(t1, t3, KAPPA_QUTRIT)?;
        let r = check_ybe_family(r9, 3, &t, tol)?;
        Ok(Check::relation(
            "ybe-9x9",
            &triple_params(&t),
            r.residual,
            tol,
        ))
    }))?;
    checks.push(galilean_control("galilean-9x9", r9, 3)?);
    Ok(checks)
}

fn parafermion_ybe(t: &SpectralTriple, tol: f64) -> Result<f64> {
    let [a, b, c] = t.thetas();
    let r1 = [
        r_parafermion(1, a, 3)?,
        r_parafermion(1, b, 3)?,
        r_parafermion(1, c, 3)?,
    ];
    let r2 = [
        r_parafermion(2, a, 3)?,
        r_parafermion(2, b, 3)?,
        r_parafermion(2, c, 3)?,
    ];
    Ok(check_ybe([&r1[0], &r1[1], &r1[2]], [&r2[0], &r2[1], &r2[2]], tol)?.residual)
}

pub fn ybe_parafermion(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<_> = (0..opts.samples)
        .map(|_| s.lorentz_pair(KAPPA_QUTRIT))
        .collect();
    let tol = opts.tol(TOL_YBE);
    let mut checks = collect(par_map(&draws, |&(t1, t3)| {
        let t = SpectralTriple::lorentz(t1, t3, KAPPA_QUTRIT)?;
        Ok(Check::relation(
            "ybe-parafermion",
            &triple_params(&t),
            parafermion_ybe(&t, tol)?,
            tol,
        ))
    }))?;
    let g = SpectralTriple::galilean(FRAC_PI_6, FRAC_PI_6);
    checks.push(Check::control(
        "galilean-parafermion",
        &triple_params(&g),
        parafermion_ybe(&g, 0.0)?,
        CONTROL_FLOOR,
    ));
    Ok(checks)
}

pub fn ybe_mixed(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<_> = (0..opts.samples)
        .map(|_| (s.lorentz_pair(1.0), s.phase()))
        .collect();
    let tol = opts.tol(TOL_YBE);
    let mut checks = flatten(par_map(&draws, |&((t1, t3), phi)| {
        let t = SpectralTriple::lorentz(t1, t3, 1.0)?.with_phi(phi);
        MixedRelation::ALL
            .iter()
            .map(|&rel| {
                let r = check_mixed_ybe(rel, &t, tol)?;
                Ok(Check::relation(
                    format!("ybe-mixed-{}", rel.name()),
                    &triple_params(&t),
                    r.residual,
                    tol,
                ))
            })
            .collect()
    }))?;
    let g = SpectralTriple::galilean(FRAC_PI_6, FRAC_PI_6);
    for rel in MixedRelation::ALL {
        let r = check_mixed_ybe(rel, &g, 0.0)?;
        checks.push(Check::control(
            format!("galilean-mixed-{}", rel.name()),
            &triple_params(&g),
            r.residual,
            CONTROL_FLOOR,
        ));
    }
    Ok(checks)
}

/// `r9(pi/3)` against `w B9`.
pub fn r9_third_turn_residual(sign: f64) -> Result<f64> {
    dist(&r9(PI / 3.0), &braid9().scale(omega() * sign))
}

pub fn braid_all(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol = opts.tol(TOL_BRAID);
    let mut checks = vec![
        Check::relation(
            "braid-bell",
            &[],
            check_braid(&bell_braid(), 2, tol)?.residual,
            tol,
        ),
        Check::relation(
            "braid-type2-quarter-turn",
            &[],
            check_braid(&type2_r(FRAC_PI_4, 0.0), 2, tol)?.residual,
            tol,
        ),
        Check::relation(
            "braid-9x9",
            &[],
            check_braid(&braid9(), 3, tol)?.residual,
            tol,
        ),
        Check::relation(
            "r9-third-turn-omega-b9",
            &[],
            r9_third_turn_residual(1.0)?,
            tol,
        ),
        Check::relation("braid-anyon", &[], anyon_braid_check(tol).residual, tol),
    ];
    let (b12, b23) = qutrit_braids();
    checks.push(Check::relation(
        "braid-qutrit-pair",
        &[],
        check_relation(&[&b12, &b23, &b12], &[&b23, &b12, &b23], tol)?.residual,
        tol,
    ));
    let maj = |j| majorana_op(MajoranaSite::from_index(j), 3);
    let bs = (1..=5)
        .map(|i| exp_bilinear(&maj(i)?, &maj(i + 1)?, FRAC_PI_4))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..bs.len() - 1 {
        let r = check_relation(
            &[&bs[i], &bs[i + 1], &bs[i]],
            &[&bs[i + 1], &bs[i], &bs[i + 1]],
            tol,
        )?;
        checks.push(Check::relation(
            format!("braid-majorana-b{}", i + 1),
            &[],
            r.residual,
            tol,
        ));
    }
    let mut s = Sampler::new(opts.seed);
    let phis: Vec<f64> = std::iter::once(0.0)
        .chain((0..opts.samples).map(|_| s.phase()))
        .collect();
    checks.extend(flatten(par_map(&phis, |&phi| {
        MixedRelation::ALL
            .iter()
            .map(|&rel| {
                let r = check_mixed_braid(rel, phi, tol)?;
                Ok(Check::relation(
                    format!("braid-mixed-{}", rel.name()),
                    &[("phi", phi)],
                    r.residual,
                    tol,
                ))
            })
            .collect()
    }))?);
    Ok(checks)
}

/// Largest `|{g_a, g_b} - 2 delta_ab|` over all Majorana pairs on `n` sites.
pub fn clifford_residual(n: usize) -> Result<f64> {
    let g = (1..=2 * n)
        .map(|j| majorana_op(MajoranaSite::from_index(j), n))
        .collect::<Result<Vec<_>>>()?;
    let id2 = Operator::identity(1 << n).scale_re(2.0);
    let zero = Operator::zeros(1 << n);
    let mut worst: f64 = 0.0;
    for a in 0..g.len() {
        for b in a..g.len() {
            let want = if a == b { &id2 } else { &zero };
            worst = worst.max(dist(&anticommutator(&g[a], &g[b])?, want)?);
        }
    }
    Ok(worst)
}

/// Largest deviation in `C_i C_j = w C_j C_i` (`i < j`) and `C_i^3 = I` on `nq` qutrits.
pub fn heisenberg_weyl_residual(nq: usize) -> Result<f64> {
    let c = (1..=2 * nq)
        .map(|k| parafermion_op(k, nq))
        .collect::<Result<Vec<_>>>()?;
    let id = Operator::identity(c[0].dim());
    let w = omega();
    let mut worst: f64 = 0.0;
    for i in 0..c.len() {
        worst = worst.max(dist(&c[i].pow(3), &id)?);
        for j in i + 1..c.len() {
            worst = worst.max(dist(&(&c[i] * &c[j]), &(&c[j] * &c[i]).scale(w))?);
        }
    }
    Ok(worst)
}

pub fn algebra(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol_table = opts.tol(TOL_TABLE);
    let tol = opts.tol(TOL_BRAID);
    let minus = |d| Operator::identity(d).scale_re(-1.0);
    let (z, x) = clock_shift();
    let mut checks = vec![
        Check::relation(
            "clifford-5-sites",
            &[("sites", 5.0)],
            clifford_residual(5)?,
            tol_table,
        ),
        Check::relation(
            "heisenberg-weyl-4-qutrits",
            &[("qutrits", 4.0)],
            heisenberg_weyl_residual(4)?,
            tol_table,
        ),
        Check::relation("m9-squared", &[], dist(&m9().pow(2), &minus(9))?, tol),
        Check::relation(
            "clock-shift",
            &[],
            dist(&(&x * &z), &(&z * &x).scale(omega()))?,
            tol_table,
        ),
    ];
    let l = s3_lambda();
    for (a, b, c, sign) in [(0, 1, 2, 2.0), (1, 2, 0, 2.0), (0, 2, 1, -2.0)] {
        let r = dist(&commutator(&l[a], &l[b])?, &l[c].scale_re(sign))?;
        checks.push(Check::relation(
            format!("su2-lambda{}{}", a + 1, b + 1),
            &[],
            r,
            tol_table,
        ));
    }
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<(f64, f64)> = (0..opts.samples.max(1))
        .map(|_| (s.phase(), s.phase()))
        .collect();
    checks.extend(flatten(par_map(&draws, |&(phi, beta)| {
        let g = s3_generator(beta);
        Ok(vec![
            Check::relation(
                "m4-squared",
                &[("phi", phi)],
                dist(&m4(phi).pow(2), &minus(4))?,
                tol,
            ),
            Check::relation(
                "s3-generator-squared",
                &[("beta", beta)],
                dist(&(&g * &g), &minus(8))?,
                tol,
            ),
        ])
    }))?);
    Ok(checks)
}

/// Largest gap between paired eigenvalues `(v_0, v_1), (v_2, v_3), ...`.
pub fn pairing_residual(h: &Operator) -> Result<f64> {
    let v = eig_hermitian(h)?.values;
    Ok(v.chunks(2).map(|p| (p[1] - p[0]).abs()).fold(0.0, f64::max))
}

pub fn symmetries(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol = opts.tol(TOL_BRAID);
    let gamma = junction_gamma()?;
    let gamma5 = gamma_emergent(5, 3)?;
    let maj = |j| majorana_op(MajoranaSite::from_index(j), 3);
    let mut checks = Vec::new();
    for i in 1..=4 {
        let b = exp_bilinear(&maj(i)?, &maj(i + 1)?, FRAC_PI_4)?;
        checks.push(Check::relation(
            format!("gamma-prime-b{i}"),
            &[("majoranas", 5.0)],
            comm_norm(&gamma5, &b)?,
            tol,
        ));
    }
    let p_block = z3_parity_block(2)?;
    let g3 = z3_gamma_three(2)?;
    let p_chain = z3_parity(2)?;
    checks.push(Check::control(
        "z3-p-gamma-noncommuting",
        &[],
        comm_norm(&p_block, &g3)?,
        NONZERO_FLOOR,
    ));
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<(f64, f64, f64)> = (0..opts.samples.max(1))
        .map(|_| (s.phase(), s.angle(), s.phase()))
        .collect();
    checks.extend(flatten(par_map(&draws, |&(theta, etadot, beta)| {
        let mut out = Vec::new();
        for i in 1..=2 {
            let r = r_majorana(i, theta, 3, Pairing::NextNearest)?;
            out.push(Check::relation(
                format!("majorana-gamma-r{i}"),
                &[("theta", theta)],
                comm_norm(&gamma, &r)?,
                tol,
            ));
            let rz = r_parafermion(i, theta, 2)?;
            out.push(Check::relation(
                format!("z3-gamma-r{i}"),
                &[("theta", theta)],
                comm_norm(&g3, &rz)?,
                tol,
            ));
        }
        for i in 1..=3 {
            let rz = r_parafermion(i, theta, 2)?;
            out.push(Check::relation(
                format!("z3-block-parity-r{i}"),
                &[("theta", theta)],
                comm_norm(&p_block, &rz)?,
                tol,
            ));
            out.push(Check::relation(
                format!("z3-chain-parity-r{i}"),
                &[("theta", theta)],
                comm_norm(&p_chain, &rz)?,
                tol,
            ));
        }
        let h = three_body_h(etadot, beta)?;
        let params = [("beta", beta), ("etadot", etadot)];
        out.push(Check::relation(
            "three-body-gamma",
            &params,
            comm_norm(&gamma, &h)?,
            tol,
        ));
        out.push(Check::relation(
            "three-body-doubling",
            &params,
            pairing_residual(&h)?,
            opts.tol(1e-10),
        ));
        Ok(out)
    }))?);
    Ok(checks)
}

/// `V^dag D^{1/2}(theta, phi) V`.
pub fn conjugated_d_half(theta: f64, phi: f64) -> Operator {
    let v = v_conjugator();
    &(&v.adjoint() * &wigner_d_half(theta, phi)) * &v
}

/// Checks of the four-qubit reduction at one `(theta, basis phi)`.
pub fn reduction_2d_point(
    theta: f64,
    phi: f64,
    tol_leak: f64,
    tol_match: f64,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (slot, name, dphi) in [(Slot::S12, "12", 0.0), (Slot::S23, "23", FRAC_PI_2)] {
        let (a, leak) = reduce_with_leakage(theta, phi, slot)?;
        let params = [("phi", phi), ("theta", theta)];
        out.push(Check::relation(
            format!("topo-leakage-{name}"),
            &params,
            leak,
            tol_leak,
        ));
        let r = dist(&a, &conjugated_d_half(theta, dphi))?;
        out.push(Check::relation(
            format!("topo-d-half-{name}"),
            &params,
            r,
            tol_match,
        ));
        out.push(Check::relation(
            format!("topo-unit-det-{name}"),
            &params,
            (det2(&a).norm() - 1.0).abs(),
            tol_match,
        ));
    }
    Ok(out)
}

fn det2(a: &Operator) -> ybx_core::C64 {
    a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)]
}

/// Reduced matrices at `theta = pi/4` against the anyon pair.
pub fn anyon_limit_residuals() -> Result<[f64; 2]> {
    let (a, b) = anyon_pair();
    let (r12, _) = reduce_with_leakage(FRAC_PI_4, 0.0, Slot::S12)?;
    let (r23, _) = reduce_with_leakage(FRAC_PI_4, 0.0, Slot::S23)?;
    Ok([dist(&r12, &a)?, dist(&r23, &b)?])
}

/// D-function YBE for `j = 1/2` and `j = 1` at one constraint solution.
pub fn dfun_universality(quad: (f64, f64, f64, f64), tol: f64) -> Result<Vec<Check>> {
    let (t1, t2, t3, phi) = quad;
    let t = SpectralTriple::new(t1, t2, t3).with_phi(phi);
    [1u32, 2]
        .iter()
        .map(|&twice_j| {
            let r = check_dfun_ybe(twice_j, &t, tol)?;
            Ok(Check::relation(
                format!("dfun-ybe-j{twice_j}/2"),
                &triple_params(&t),
                r.residual,
                tol,
            ))
        })
        .collect()
}

pub const TOPO_GRID: usize = 25;

pub fn reduction_2d(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol_ybe = opts.tol(TOL_YBE);
    let tol = opts.tol(TOL_BRAID);
    let grid: Vec<f64> = ybx_core::entangle::theta_grid(TOPO_GRID);
    let mut checks = flatten(par_map(&grid, |&theta| {
        reduction_2d_point(theta, 0.0, tol_ybe, tol_ybe)
    }))?;
    let [ra, rb] = anyon_limit_residuals()?;
    checks.push(Check::relation("topo-anyon-a", &[], ra, tol));
    checks.push(Check::relation("topo-anyon-b", &[], rb, tol));
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<_> = (0..opts.samples)
        .map(|_| (s.angle(), s.phase(), s.dfun_quad()))
        .collect();
    checks.extend(flatten(par_map(&draws, |&(theta, phi, quad)| {
        let mut out = reduction_2d_point(theta, phi, tol_ybe, tol_ybe)?;
        out.extend(dfun_universality(quad, tol_ybe)?);
        Ok(out)
    }))?);
    Ok(checks)
}

/// YBE of the reduced 3x3 pair with `theta2` from the `kappa = 1/3` rule.
pub fn reduced_3x3_ybe(t1: f64, t3: f64, tol: f64) -> Result<(SpectralTriple, f64)> {
    let t = SpectralTriple::lorentz(t1, t3, KAPPA_QUTRIT)?;
    let [a, b, c] = t.thetas();
    let (x1, y1) = qutrit_parity_subspace(a)?;
    let (x2, y2) = qutrit_parity_subspace(b)?;
    let (x3, y3) = qutrit_parity_subspace(c)?;
    Ok((
        t,
        check_ybe([&x1, &x2, &x3], [&y1, &y2, &y3], tol)?.residual,
    ))
}

pub fn reduction_3x3(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol_ybe = opts.tol(TOL_YBE);
    let tol = opts.tol(TOL_BRAID);
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<_> = (0..opts.samples.max(1))
        .map(|_| (s.angle(), s.lorentz_pair(KAPPA_QUTRIT)))
        .collect();
    flatten(par_map(&draws, |&(theta, (t1, t3))| {
        let (b12, b23) = qutrit_braids();
        let r12 = ybx_core::constructors::qutrit_r(&b12, theta);
        let r23 = ybx_core::constructors::qutrit_r(&b23, theta);
        let leak = sector_leakage(&r12).max(sector_leakage(&r23));
        let (a12, a23) = qutrit_parity_subspace(theta)?;
        let p = [("theta", theta)];
        let (t, res) = reduced_3x3_ybe(t1, t3, tol_ybe)?;
        Ok(vec![
            Check::relation("qutrit-sector-leakage", &p, leak, tol_ybe),
            Check::relation(
                "qutrit-a12-displayed",
                &p,
                dist(&a12, &displayed_a12(theta))?,
                tol,
            ),
            Check::relation(
                "qutrit-a23-displayed",
                &p,
                dist(&a23, &displayed_a23(theta))?,
                tol,
            ),
            Check::relation("qutrit-3x3-ybe", &triple_params(&t), res, tol_ybe),
        ])
    }))
}

/// Distance of `S(eta, arccot sqrt 2)|000>` from the expected GHZ (`pi/3`) or W (`pi/2`) output.
pub fn ghz_w_residuals() -> Result<[f64; 2]> {
    let beta = ghz_w_beta();
    let shape = [2, 2, 2];
    let vec_of = |entries: &[(usize, f64)]| {
        let mut amps = vec![c64(0.0, 0.0); 8];
        for &(k, a) in entries {
            amps[k] = c64(a, 0.0);
        }
        StateVector::new(amps, &shape)
    };
    let r3 = 1.0 / 3.0f64.sqrt();
    let ghz = vec_of(&[(0b000, 0.5), (0b011, 0.5), (0b101, 0.5), (0b110, 0.5)])?;
    let w = vec_of(&[(0b011, r3), (0b101, r3), (0b110, r3)])?;
    Ok([
        s3_on_zero(SParams {
            eta: PI / 3.0,
            beta,
        })
        .distance(&ghz),
        s3_on_zero(SParams {
            eta: PI / 2.0,
            beta,
        })
        .distance(&w),
    ])
}

pub fn s3_factorize(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol_ybe = opts.tol(TOL_YBE);
    let tol = opts.tol(TOL_BRAID);
    let [ghz, w] = ghz_w_residuals()?;
    let mut checks = vec![
        Check::relation("s3-ghz", &[], ghz, tol),
        Check::relation("s3-w", &[], w, tol),
    ];
    let mut s = Sampler::new(opts.seed);
    let draws: Vec<_> = (0..opts.samples).map(|_| s.lorentz_pair(1.0)).collect();
    checks.extend(flatten(par_map(&draws, |&(t1, t3)| {
        let (r, a) = s3_factorization_check(t1, t3, tol_ybe)?;
        let params = [
            ("beta", a.params.beta),
            ("eta", a.params.eta),
            ("theta1", t1),
            ("theta2", a.theta2),
            ("theta3", t3),
        ];
        Ok(vec![
            Check::relation("s3-factorization", &params, r.residual, tol_ybe),
            Check::relation("s3-normalization", &params, a.normalization_defect, tol_ybe),
        ])
    }))?);
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(samples: usize) -> VerifyOptions {
        VerifyOptions {
            samples,
            seed: 3,
            tolerance: None,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::value_variants() {
            assert_eq!(Suite::from_str(s.name(), false).unwrap(), *s);
        }
    }

    #[test]
    fn sampler_is_deterministic_and_in_range() {
        let (mut a, mut b) = (Sampler::new(9), Sampler::new(9));
        for _ in 0..100 {
            let (x, y) = (a.lorentz_pair(1.0), b.lorentz_pair(1.0));
            assert_eq!(x, y);
            assert!(x.0.abs() < ANGLE_BOUND && x.1.abs() < ANGLE_BOUND);
            assert!((1.0 + x.0.tan() * x.1.tan()).abs() >= POLE_GUARD);
        }
    }

    #[test]
    fn every_suite_passes_with_a_few_samples() {
        for s in Suite::value_variants() {
            let r = run_suite(*s, &opts(4)).unwrap();
            let failed: Vec<_> = r
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| (&c.name, c.residual))
                .collect();
            assert!(r.summary.passed, "{}: {failed:?}", s.name());
        }
    }

    #[test]
    fn negative_tolerance_fails_the_suite() {
        let r = run_suite(
            Suite::Ybe4x4,
            &VerifyOptions {
                samples: 4,
                seed: 1,
                tolerance: Some(1e-16),
            },
        )
        .unwrap();
        assert!(!r.summary.passed);
    }

    #[test]
    fn literal_minus_omega_identity_does_not_hold() {
        assert!(r9_third_turn_residual(1.0).unwrap() < 1e-12);
        assert!((r9_third_turn_residual(-1.0).unwrap() - 6.0).abs() < 1e-9);
    }
}
