//! Jordan-Wigner Majorana operators, their Yang-Baxter solutions, the Kitaev
//! chain and the emergent odd-count symmetry.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;

use crate::constructors::pauli;
use crate::densela::{c64, eig_hermitian, expm_antihermitian, kron_all, Operator, C64, I, ONE};
use crate::error::{Error, Result};

/// Largest Hilbert-space dimension any chain or string operator may reach.
pub const DIM_CAP: usize = 4096;

pub(crate) fn check_dim(local: usize, n: usize) -> Result<usize> {
    let mut dim: usize = 1;
    for _ in 0..n {
        dim = dim.saturating_mul(local);
        if dim > DIM_CAP {
            return Err(Error::DimensionCap { dim, cap: DIM_CAP });
        }
    }
    Ok(dim)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    A,
    B,
}

/// `gamma_{spin_site, flavor}`; spin sites are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MajoranaSite {
    pub spin_site: usize,
    pub flavor: Flavor,
}

impl MajoranaSite {
    pub fn new(spin_site: usize, flavor: Flavor) -> Self {
        Self { spin_site, flavor }
    }

    /// Sequential label `j` (1-based): `gamma_{2k-1} = gamma_{k,A}`, `gamma_{2k} = gamma_{k,B}`.
    pub fn from_index(j: usize) -> Self {
        let flavor = if j % 2 == 1 { Flavor::A } else { Flavor::B };
        Self {
            spin_site: j.div_ceil(2),
            flavor,
        }
    }
}

/// `gamma_{j,A} = Z...Z X_j`, `gamma_{j,B} = Z...Z Y_j` on `n_sites` qubits.
pub fn majorana_op(site: MajoranaSite, n_sites: usize) -> Result<Operator> {
    if site.spin_site == 0 || site.spin_site > n_sites {
        return Err(Error::SiteOutOfRange {
            site: site.spin_site,
            max: n_sites,
        });
    }
    check_dim(2, n_sites)?;
    let (z, id) = (pauli::z(), pauli::id());
    let local = match site.flavor {
        Flavor::A => pauli::x(),
        Flavor::B => pauli::y(),
    };
    let factors: Vec<&Operator> = (1..=n_sites)
        .map(|k| match k.cmp(&site.spin_site) {
            core::cmp::Ordering::Less => &z,
            core::cmp::Ordering::Equal => &local,
            core::cmp::Ordering::Greater => &id,
        })
        .collect();
    Ok(kron_all(&factors))
}

/// Which pair of Majoranas an `R` generator couples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// `gamma_{i,A} gamma_{i,B}`, inside spin site `i`.
    OddEven,
    /// `gamma_{i,B} gamma_{i+1,A}`, across spin sites `i, i+1`.
    EvenOdd,
    /// `gamma_{i,A} gamma_{i+1,A}`, the Pauli-equivalent form `exp(-i theta Y_i X_{i+1})`.
    NextNearest,
}

fn pair_sites(i: usize, pairing: Pairing) -> (MajoranaSite, MajoranaSite) {
    match pairing {
        Pairing::OddEven => (
            MajoranaSite::new(i, Flavor::A),
            MajoranaSite::new(i, Flavor::B),
        ),
        Pairing::EvenOdd => (
            MajoranaSite::new(i, Flavor::B),
            MajoranaSite::new(i + 1, Flavor::A),
        ),
        Pairing::NextNearest => (
            MajoranaSite::new(i, Flavor::A),
            MajoranaSite::new(i + 1, Flavor::A),
        ),
    }
}

/// `exp(theta gamma gamma')` for the pair selected by `pairing` at spin site `i`.
pub fn r_majorana(i: usize, theta: f64, n_sites: usize, pairing: Pairing) -> Result<Operator> {
    let (a, b) = pair_sites(i, pairing);
    let ga = majorana_op(a, n_sites)?;
    let gb = majorana_op(b, n_sites)?;
    exp_bilinear(&ga, &gb, theta)
}

/// `exp(theta a b)` for anticommuting Hermitian involutions `a`, `b`; `(ab)^2 = -I`
/// so this is `cos theta + sin theta a b`.
pub fn exp_bilinear(a: &Operator, b: &Operator, theta: f64) -> Result<Operator> {
    let ab = a.matmul(b)?;
    Ok(&Operator::identity(ab.dim()).scale_re(theta.cos()) + &ab.scale_re(theta.sin()))
}

/// Same as [`exp_bilinear`] through the general exponential.
pub fn exp_bilinear_expm(a: &Operator, b: &Operator, theta: f64) -> Result<Operator> {
    expm_antihermitian(&a.matmul(b)?.scale_re(theta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainModel {
    Kitaev,
    Z3,
}

impl ChainModel {
    pub fn local_dim(self) -> usize {
        match self {
            Self::Kitaev => 2,
            Self::Z3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Kitaev => "kitaev",
            Self::Z3 => "z3",
        }
    }
}

/// Open chain of `n_sites` spin sites with odd-even coupling `theta1dot` and
/// even-odd coupling `theta2dot`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChainSpec {
    pub model: ChainModel,
    pub n_sites: usize,
    pub theta1dot: f64,
    pub theta2dot: f64,
}

impl ChainSpec {
    pub fn new(model: ChainModel, n_sites: usize, theta1dot: f64, theta2dot: f64) -> Result<Self> {
        if n_sites < 2 {
            return Err(Error::BadModel(alloc::format!(
                "chain needs at least 2 sites, got {n_sites}"
            )));
        }
        check_dim(model.local_dim(), n_sites)?;
        Ok(Self {
            model,
            n_sites,
            theta1dot,
            theta2dot,
        })
    }

    pub fn dim(&self) -> usize {
        self.model.local_dim().pow(self.n_sites as u32)
    }

    pub(crate) fn expect_model(&self, model: ChainModel) -> Result<()> {
        if self.model == model {
            Ok(())
        } else {
            Err(Error::BadModel(alloc::format!(
                "expected a {} chain, got {}",
                model.name(),
                self.model.name()
            )))
        }
    }
}

/// `H = i sum_{k=1}^{N} t1 gamma_{k,A} gamma_{k,B} + i sum_{k=1}^{N-1} t2 gamma_{k,B} gamma_{k+1,A}`.
///
/// The even-odd sum stops at `N-1`, leaving `gamma_{1,A}` and `gamma_{N,B}` unpaired.
pub fn kitaev_chain_h(spec: &ChainSpec) -> Result<Operator> {
    spec.expect_model(ChainModel::Kitaev)?;
    let n = spec.n_sites;
    let g = |k, f| majorana_op(MajoranaSite::new(k, f), n);
    let mut h = Operator::zeros(spec.dim());
    for k in 1..=n {
        h = &h
            + &g(k, Flavor::A)?
                .matmul(&g(k, Flavor::B)?)?
                .scale(I * spec.theta1dot);
    }
    for k in 1..n {
        h = &h
            + &g(k, Flavor::B)?
                .matmul(&g(k + 1, Flavor::A)?)?
                .scale(I * spec.theta2dot);
    }
    h.with_factor_shape(&vec![2; n])
}

/// Ground-state cluster of a Hermitian operator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Degeneracy {
    pub ground_energy: f64,
    pub degeneracy: usize,
    /// Distance from the top of the ground cluster to the next eigenvalue;
    /// `None` when the whole spectrum is one cluster.
    pub gap: Option<f64>,
    /// `max - min` of the spectrum.
    pub spread: f64,
}

/// Counts eigenvalues within `rel_gap * spread` of the minimum.
pub fn degeneracy(h: &Operator, rel_gap: f64) -> Result<Degeneracy> {
    let values = eig_hermitian(h)?.values;
    Ok(degeneracy_of(&values, rel_gap))
}

pub fn degeneracy_of(values: &[f64], rel_gap: f64) -> Degeneracy {
    let lo = values[0];
    let spread = values[values.len() - 1] - lo;
    let cut = rel_gap * spread;
    let count = values.iter().take_while(|&&v| v - lo <= cut).count();
    let gap = values.get(count).map(|&v| v - values[count - 1]);
    Degeneracy {
        ground_energy: lo,
        degeneracy: count,
        gap,
        spread,
    }
}

/// `Gamma' = i^{N(N-1)/2} gamma_1 ... gamma_N` for the first `n_majoranas` sequential Majoranas.
pub fn gamma_emergent(n_majoranas: usize, n_sites: usize) -> Result<Operator> {
    if n_majoranas.is_multiple_of(2) {
        return Err(Error::BadParity(n_majoranas));
    }
    if n_majoranas > 2 * n_sites {
        return Err(Error::SiteOutOfRange {
            site: n_majoranas,
            max: 2 * n_sites,
        });
    }
    let gammas = (1..=n_majoranas)
        .map(|j| majorana_op(MajoranaSite::from_index(j), n_sites))
        .collect::<Result<Vec<_>>>()?;
    gamma_of(&gammas)
}

/// `i^{N(N-1)/2} prod gammas` for any odd list of mutually anticommuting Majoranas.
pub fn gamma_of(gammas: &[Operator]) -> Result<Operator> {
    let n = gammas.len();
    if n.is_multiple_of(2) {
        return Err(Error::BadParity(n));
    }
    let phase = i_power(n * (n - 1) / 2);
    let prod = gammas[1..]
        .iter()
        .try_fold(gammas[0].clone(), |acc, g| acc.matmul(g))?;
    Ok(prod.scale(phase))
}

fn i_power(k: usize) -> C64 {
    match k % 4 {
        0 => ONE,
        1 => I,
        2 => c64(-1.0, 0.0),
        _ => -I,
    }
}

/// `gamma_{1,A}, gamma_{2,A}, gamma_{3,A}` on three spin sites: the three
/// Majoranas of the T-junction, coupled by next-nearest `R` generators.
pub fn junction_majoranas() -> Result<[Operator; 3]> {
    let g = |k| majorana_op(MajoranaSite::new(k, Flavor::A), 3);
    Ok([g(1)?, g(2)?, g(3)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::pauli;
    use crate::densela::{anticommutator, commutator, embed, frobenius_distance, kron};
    use core::f64::consts::PI;

    fn dist(a: &Operator, b: &Operator) -> f64 {
        frobenius_distance(a, b).unwrap()
    }

    #[test]
    fn single_site_and_clifford_examples() {
        let g1a = majorana_op(MajoranaSite::new(1, Flavor::A), 1).unwrap();
        assert!(dist(&g1a, &pauli::x()) < 1e-15);
        assert!(dist(&(&g1a * &g1a), &Operator::identity(2)) < 1e-15);
        let a = majorana_op(MajoranaSite::new(1, Flavor::A), 2).unwrap();
        let b = majorana_op(MajoranaSite::new(2, Flavor::B), 2).unwrap();
        assert!(anticommutator(&a, &b).unwrap().frobenius_norm() < 1e-14);
        assert!(majorana_op(MajoranaSite::new(3, Flavor::A), 2).is_err());
    }

    #[test]
    fn next_nearest_equals_pauli_form() {
        let t = 0.52;
        let yx = kron(&pauli::y(), &pauli::x());
        let pauli_form = expm_antihermitian(&yx.scale(c64(0.0, -t))).unwrap();
        let r = r_majorana(1, t, 2, Pairing::NextNearest).unwrap();
        assert!(dist(&r, &pauli_form) < 1e-12);
        let r3 = r_majorana(2, t, 3, Pairing::NextNearest).unwrap();
        assert!(dist(&r3, &embed(&pauli_form, 2, 1)) < 1e-12);
    }

    #[test]
    fn braid_generator_fourth_power_is_minus_identity() {
        let r = r_majorana(1, PI / 4.0, 2, Pairing::OddEven).unwrap();
        assert!(dist(&r.pow(4), &Operator::identity(4).scale_re(-1.0)) < 1e-12);
        assert!(
            dist(
                &r_majorana(1, 0.0, 2, Pairing::EvenOdd).unwrap(),
                &Operator::identity(4)
            ) < 1e-15
        );
    }

    #[test]
    fn closed_form_matches_expm() {
        let [a, b, _] = junction_majoranas().unwrap();
        assert!(
            dist(
                &exp_bilinear(&a, &b, 0.8).unwrap(),
                &exp_bilinear_expm(&a, &b, 0.8).unwrap()
            ) < 1e-12
        );
    }

    #[test]
    fn kitaev_trivial_phase() {
        let spec = ChainSpec::new(ChainModel::Kitaev, 3, 1.0, 0.0).unwrap();
        let h = kitaev_chain_h(&spec).unwrap();
        let zsum = (1..=3).fold(Operator::zeros(8), |acc, k| {
            &acc + &embed(&pauli::z(), 1 << (k - 1), 1 << (3 - k))
        });
        assert!(dist(&h, &zsum.scale_re(-1.0)) < 1e-14);
        let d = degeneracy(&h, 1e-8).unwrap();
        assert_eq!(d.degeneracy, 1);
        assert!((d.gap.unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn kitaev_topological_phase() {
        for n in 2..=6 {
            let spec = ChainSpec::new(ChainModel::Kitaev, n, 0.0, 1.0).unwrap();
            let h = kitaev_chain_h(&spec).unwrap();
            assert_eq!(degeneracy(&h, 1e-8).unwrap().degeneracy, 2, "n = {n}");
            for end in [
                MajoranaSite::new(1, Flavor::A),
                MajoranaSite::new(n, Flavor::B),
            ] {
                let g = majorana_op(end, n).unwrap();
                assert!(commutator(&g, &h).unwrap().frobenius_norm() < 1e-12);
            }
        }
    }

    #[test]
    fn chain_spec_validation() {
        assert!(matches!(
            ChainSpec::new(ChainModel::Kitaev, 1, 1.0, 0.0),
            Err(Error::BadModel(_))
        ));
        assert!(matches!(
            ChainSpec::new(ChainModel::Kitaev, 13, 1.0, 0.0),
            Err(Error::DimensionCap { .. })
        ));
        assert!(matches!(
            ChainSpec::new(ChainModel::Z3, 8, 1.0, 0.0),
            Err(Error::DimensionCap { .. })
        ));
        let z3 = ChainSpec::new(ChainModel::Z3, 2, 1.0, 0.0).unwrap();
        assert!(matches!(kitaev_chain_h(&z3), Err(Error::BadModel(_))));
    }

    #[test]
    fn degeneracy_examples() {
        let d = degeneracy(&pauli::z(), 1e-8).unwrap();
        assert_eq!((d.degeneracy, d.gap), (1, Some(2.0)));
        let d = degeneracy(&Operator::identity(3), 1e-8).unwrap();
        assert_eq!((d.degeneracy, d.gap), (3, None));
        let bad = Operator::from_real(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            degeneracy(&bad, 1e-8),
            Err(Error::NonHermitian { .. })
        ));
    }

    #[test]
    fn gamma_three_examples() {
        let g = gamma_emergent(3, 2).unwrap();
        assert!(g.hermiticity_defect() < 1e-14);
        assert!(dist(&(&g * &g), &Operator::identity(4)) < 1e-14);
        // Gamma commutes with its own constituents; the next Majorana anticommutes.
        let g1 = majorana_op(MajoranaSite::from_index(1), 2).unwrap();
        assert!(commutator(&g, &g1).unwrap().frobenius_norm() < 1e-14);
        let g4 = majorana_op(MajoranaSite::from_index(4), 2).unwrap();
        assert!(commutator(&g, &g4).unwrap().frobenius_norm() > 0.1);
        assert!(matches!(gamma_emergent(4, 2), Err(Error::BadParity(4))));
        assert!(matches!(
            gamma_emergent(5, 2),
            Err(Error::SiteOutOfRange { .. })
        ));
    }
}
