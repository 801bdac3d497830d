use alloc::string::String;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("factor shape {shape:?} does not multiply to dimension {dim}")]
    BadShape {
        shape: alloc::vec::Vec<usize>,
        dim: usize,
    },

    #[error("factor index {index} out of range for {factors} tensor factors")]
    BadFactorIndex { index: usize, factors: usize },

    #[error("generator is not anti-Hermitian (|A + A^dag|_F = {defect:e})")]
    NonAntiHermitian { defect: f64 },

    #[error("operator is not Hermitian (|H - H^dag|_F = {defect:e})")]
    NonHermitian { defect: f64 },

    #[error("denominator vanishes ({value:e}) in {context}")]
    SingularDenominator { context: &'static str, value: f64 },

    #[error("no real angle exists: cos(phi) = {cos_phi}")]
    OutOfRange { cos_phi: f64 },

    #[error("spin 2j = {twice_j} is not supported (allowed: 1, 2, 3, 4)")]
    UnsupportedSpin { twice_j: u32 },

    #[error("site {site} out of range (valid 1..={max})")]
    SiteOutOfRange { site: usize, max: usize },

    #[error("chain model mismatch: {0}")]
    BadModel(String),

    #[error("chain dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("emergent mode needs an odd number of Majorana operators, got {0}")]
    BadParity(usize),

    #[error("cos^2(eta) + sin^2(eta) deviates from 1 by {deviation:e}")]
    NormalizationBroken { deviation: f64 },

    #[error("operator family is not unitary near t (defect {defect:e})")]
    NonUnitaryFamily { defect: f64 },

    #[error("the 2D span is not invariant (leakage {leakage:e})")]
    NotClosed { leakage: f64 },

    #[error("basis vectors are not orthonormal (defect {defect:e})")]
    DegenerateBasis { defect: f64 },

    #[error("unsupported combination: {0}")]
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;
