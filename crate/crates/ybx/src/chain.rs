//! Chain spectra behind `ybx chain`.

use clap::ValueEnum;
use serde::Serialize;

use ybx_core::majorana::{degeneracy, kitaev_chain_h, ChainModel, ChainSpec};
use ybx_core::parafermion::z3_ground_parities;
use ybx_core::Result;

pub const DEFAULT_REL_GAP: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum ChainKind {
    Kitaev,
    Z3,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainSummary {
    pub model: String,
    pub n: usize,
    pub t1: f64,
    pub t2: f64,
    pub dim: usize,
    pub ground_energy: f64,
    pub degeneracy: usize,
    pub gap: Option<f64>,
    /// Ground-state parities as `w^m` exponents, Z3 only.
    pub parity_sectors: Option<Vec<u32>>,
}

pub fn run_chain(
    kind: ChainKind,
    n: usize,
    t1: f64,
    t2: f64,
    rel_gap: f64,
) -> Result<ChainSummary> {
    let model = match kind {
        ChainKind::Kitaev => ChainModel::Kitaev,
        ChainKind::Z3 => ChainModel::Z3,
    };
    let spec = ChainSpec::new(model, n, t1, t2)?;
    let (ground_energy, deg, gap, parity_sectors) = match kind {
        ChainKind::Kitaev => {
            let d = degeneracy(&kitaev_chain_h(&spec)?, rel_gap)?;
            (d.ground_energy, d.degeneracy, d.gap, None)
        }
        ChainKind::Z3 => {
            let g = z3_ground_parities(&spec, rel_gap)?;
            (g.ground_energy, g.degeneracy, g.gap, Some(g.sectors))
        }
    };
    Ok(ChainSummary {
        model: model.name().to_string(),
        n,
        t1,
        t2,
        dim: spec.dim(),
        ground_energy,
        degeneracy: deg,
        gap,
        parity_sectors,
    })
}

/// `1`, `ω`, `ω²` for exponents 0, 1, 2.
pub fn parity_label(m: u32) -> &'static str {
    match m % 3 {
        0 => "1",
        1 => "ω",
        _ => "ω²",
    }
}

pub fn format_chain(s: &ChainSummary) -> String {
    let mut out = format!(
        "model {}\nn {}\nt1 {}\nt2 {}\ndim {}\nground_energy {:.12}\ndegeneracy {}\n",
        s.model, s.n, s.t1, s.t2, s.dim, s.ground_energy, s.degeneracy
    );
    match s.gap {
        Some(g) => out.push_str(&format!("gap {g:.12}\n")),
        None => out.push_str("gap none\n"),
    }
    if let Some(p) = &s.parity_sectors {
        let labels: Vec<_> = p.iter().map(|&m| parity_label(m)).collect();
        out.push_str(&format!("parities {}\n", labels.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kitaev_phases() {
        assert_eq!(
            run_chain(ChainKind::Kitaev, 4, 1.0, 0.0, DEFAULT_REL_GAP)
                .unwrap()
                .degeneracy,
            1
        );
        assert_eq!(
            run_chain(ChainKind::Kitaev, 4, 0.0, 1.0, DEFAULT_REL_GAP)
                .unwrap()
                .degeneracy,
            2
        );
    }

    #[test]
    fn z3_topological_parities() {
        let s = run_chain(ChainKind::Z3, 3, 0.0, 1.0, DEFAULT_REL_GAP).unwrap();
        assert_eq!(s.degeneracy, 3);
        assert!(format_chain(&s).contains("parities 1, ω, ω²"));
    }

    #[test]
    fn oversized_chain_is_rejected() {
        assert!(run_chain(ChainKind::Z3, 9, 0.0, 1.0, DEFAULT_REL_GAP).is_err());
    }
}
