//! Dense complex linear algebra on small tensor-product spaces.
//!
//! Everything here works on row-major `dim x dim` complex matrices that carry
//! an optional tensor-factor shape. Basis indices are big-endian: the leftmost
//! factor is the most significant digit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex;
#[allow(unused_imports)] // shadowed by inherent float methods when std is linked
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    Complex { re, im }
}

pub const ZERO: C64 = c64(0.0, 0.0);
pub const ONE: C64 = c64(1.0, 0.0);
pub const I: C64 = c64(0.0, 1.0);

/// `e^{i x}`.
#[inline]
pub fn cis(x: f64) -> C64 {
    c64(x.cos(), x.sin())
}

fn check_shape(shape: &[usize], dim: usize) -> Result<()> {
    if shape.is_empty() || shape.iter().product::<usize>() == dim {
        Ok(())
    } else {
        Err(Error::BadShape {
            shape: shape.to_vec(),
            dim,
        })
    }
}

/// Dense square complex matrix with tensor-factor bookkeeping.
#[derive(Clone, PartialEq)]
pub struct Operator {
    dim: usize,
    entries: Vec<C64>,
    factor_shape: Vec<usize>,
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Operator(dim={}, shape={:?})",
            self.dim, self.factor_shape
        )?;
        for r in 0..self.dim {
            write!(f, "  [")?;
            for col in 0..self.dim {
                let z = self[(r, col)];
                write!(f, " {:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl Operator {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![ZERO; dim * dim],
            factor_shape: vec![dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut out = Self::zeros(dim);
        for k in 0..dim {
            out.entries[k * dim + k] = ONE;
        }
        out
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for col in 0..dim {
                entries.push(f(r, col));
            }
        }
        Self {
            dim,
            entries,
            factor_shape: vec![dim],
        }
    }

    /// Builds a matrix from row-major entries; the length must be a perfect square.
    pub fn from_entries(entries: Vec<C64>) -> Result<Self> {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != entries.len() {
            return Err(Error::BadShape {
                shape: vec![entries.len()],
                dim: dim * dim,
            });
        }
        Ok(Self {
            dim,
            entries,
            factor_shape: vec![dim],
        })
    }

    pub fn from_real(entries: &[f64]) -> Result<Self> {
        Self::from_entries(entries.iter().map(|&x| c64(x, 0.0)).collect())
    }

    pub fn diagonal(diag: &[C64]) -> Self {
        let mut out = Self::zeros(diag.len());
        for (k, &z) in diag.iter().enumerate() {
            out[(k, k)] = z;
        }
        out
    }

    pub fn with_factor_shape(mut self, shape: &[usize]) -> Result<Self> {
        check_shape(shape, self.dim)?;
        self.factor_shape = shape.to_vec();
        Ok(self)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factor_shape(&self) -> &[usize] {
        &self.factor_shape
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn column(&self, col: usize) -> Vec<C64> {
        (0..self.dim).map(|r| self[(r, col)]).collect()
    }

    pub fn row(&self, r: usize) -> &[C64] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&z| f(z)).collect(),
            factor_shape: self.factor_shape.clone(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::from_fn(n, |r, col| self.entries[col * n + r].conj());
        out.factor_shape = self.factor_shape.clone();
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = Self::from_fn(n, |r, col| self.entries[col * n + r]);
        out.factor_shape = self.factor_shape.clone();
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|k| self[(k, k)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            factor_shape: self.factor_shape.clone(),
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for r in 0..n {
            let row = &mut out[r * n..(r + 1) * n];
            for k in 0..n {
                let a = self.entries[r * n + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &other.entries[k * n..(k + 1) * n];
                for (o, &b) in row.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Ok(Self {
            dim: n,
            entries: out,
            factor_shape: self.factor_shape.clone(),
        })
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        acc.factor_shape = self.factor_shape.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `|U^dag U - I|_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let prod = &self.adjoint() * self;
        (&prod - &Self::identity(self.dim)).frobenius_norm()
    }

    /// `|H - H^dag|_F`.
    pub fn hermiticity_defect(&self) -> f64 {
        (self - &self.adjoint()).frobenius_norm()
    }

    /// `|A + A^dag|_F`.
    pub fn antihermiticity_defect(&self) -> f64 {
        (self + &self.adjoint()).frobenius_norm()
    }

    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        if self.dim != state.dim() {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: state.dim(),
            });
        }
        let amps = (0..self.dim)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(state.amplitudes())
                    .map(|(&a, &b)| a * b)
                    .sum()
            })
            .collect();
        StateVector::new(amps, state.factor_shape())
    }

    /// Matrix elements `<basis_r|A|basis_c>` on the given basis indices.
    pub fn restrict(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |r, col| self[(indices[r], indices[col])])
    }
}

impl Index<(usize, usize)> for Operator {
    type Output = C64;
    #[inline]
    fn index(&self, (r, col): (usize, usize)) -> &C64 {
        &self.entries[r * self.dim + col]
    }
}

impl IndexMut<(usize, usize)> for Operator {
    #[inline]
    fn index_mut(&mut self, (r, col): (usize, usize)) -> &mut C64 {
        &mut self.entries[r * self.dim + col]
    }
}

// The operator overloads panic on mismatched dimensions, like the usual
// matrix libraries do; `try_*` and `matmul` return errors instead.
impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        self.matmul(rhs)
            .expect("operator product: dimension mismatch")
    }
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        self.try_add(rhs).expect("operator sum: dimension mismatch")
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        self.try_sub(rhs)
            .expect("operator difference: dimension mismatch")
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.map(|z| -z)
    }
}

/// Product of a sequence of operators, left to right.
pub fn product(ops: &[&Operator]) -> Result<Operator> {
    let (first, rest) = ops
        .split_first()
        .ok_or(Error::Unsupported("empty product".into()))?;
    rest.iter()
        .try_fold((*first).clone(), |acc, op| acc.matmul(op))
}

pub fn commutator(a: &Operator, b: &Operator) -> Result<Operator> {
    a.matmul(b)?.try_sub(&b.matmul(a)?)
}

pub fn anticommutator(a: &Operator, b: &Operator) -> Result<Operator> {
    a.matmul(b)?.try_add(&b.matmul(a)?)
}

fn joined_shape(a: &Operator, b: &Operator) -> Vec<usize> {
    let part = |op: &Operator| {
        if op.factor_shape.is_empty() {
            vec![op.dim]
        } else {
            op.factor_shape.clone()
        }
    };
    let mut shape = part(a);
    shape.extend(part(b));
    shape
}

/// Kronecker product `a (x) b`; factor shapes are concatenated.
pub fn kron(a: &Operator, b: &Operator) -> Operator {
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    let mut entries = vec![ZERO; n * n];
    for ar in 0..na {
        for ac in 0..na {
            let x = a[(ar, ac)];
            if x.is_zero() {
                continue;
            }
            for br in 0..nb {
                let base = (ar * nb + br) * n + ac * nb;
                for bc in 0..nb {
                    entries[base + bc] = x * b[(br, bc)];
                }
            }
        }
    }
    Operator {
        dim: n,
        entries,
        factor_shape: joined_shape(a, b),
    }
}

/// Kronecker product of a list of factors.
pub fn kron_all(ops: &[&Operator]) -> Operator {
    ops.iter().fold(
        Operator::identity(1).with_factor_shape(&[]).unwrap(),
        |acc, op| kron(&acc, op),
    )
}

/// `I_left (x) op (x) I_right`, skipping identity factors of dimension 1.
pub fn embed(op: &Operator, left: usize, right: usize) -> Operator {
    let mut out = op.clone();
    if left > 1 {
        out = kron(&Operator::identity(left), &out);
    }
    if right > 1 {
        out = kron(&out, &Operator::identity(right));
    }
    out
}

/// `|a - b|_F`.
pub fn frobenius_distance(a: &Operator, b: &Operator) -> Result<f64> {
    Ok(a.try_sub(b)?.frobenius_norm())
}

/// Dense complex state vector with tensor-factor bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<C64>,
    factor_shape: Vec<usize>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<C64>, factor_shape: &[usize]) -> Result<Self> {
        let dim = amplitudes.len();
        if dim == 0 {
            return Err(Error::BadShape {
                shape: factor_shape.to_vec(),
                dim,
            });
        }
        let shape = if factor_shape.is_empty() {
            vec![dim]
        } else {
            factor_shape.to_vec()
        };
        check_shape(&shape, dim)?;
        Ok(Self {
            amplitudes,
            factor_shape: shape,
        })
    }

    /// Computational basis state with the given flat index.
    pub fn basis(factor_shape: &[usize], index: usize) -> Result<Self> {
        let dim: usize = factor_shape.iter().product();
        if index >= dim {
            return Err(Error::BadFactorIndex {
                index,
                factors: dim,
            });
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Self::new(amps, factor_shape)
    }

    /// Product basis state from per-factor labels, e.g. `[0, 1]` for `|01>`.
    pub fn product_basis(factor_shape: &[usize], labels: &[usize]) -> Result<Self> {
        if labels.len() != factor_shape.len() {
            return Err(Error::DimMismatch {
                left: labels.len(),
                right: factor_shape.len(),
            });
        }
        let mut index = 0;
        for (k, (&l, &d)) in labels.iter().zip(factor_shape).enumerate() {
            if l >= d {
                return Err(Error::BadFactorIndex {
                    index: k,
                    factors: factor_shape.len(),
                });
            }
            index = index * d + l;
        }
        Self::basis(factor_shape, index)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn factor_shape(&self) -> &[usize] {
        &self.factor_shape
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        self.scale(c64(1.0 / n, 0.0))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            amplitudes: self.amplitudes.iter().map(|&z| z * s).collect(),
            factor_shape: self.factor_shape.clone(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(&a, &b)| a + b)
                .collect(),
            factor_shape: self.factor_shape.clone(),
        })
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, &b)| a.conj() * b)
            .sum()
    }

    /// `|psi><psi|` carrying the state's factor shape.
    pub fn density(&self) -> Operator {
        let a = &self.amplitudes;
        let mut rho = Operator::from_fn(a.len(), |r, col| a[r] * a[col].conj());
        rho.factor_shape = self.factor_shape.clone();
        rho
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Traces out every factor not listed in `keep`.
///
/// `keep` is interpreted as a set; the result's factors appear in ascending
/// index order.
pub fn partial_trace(rho: &Operator, keep: &[usize]) -> Result<Operator> {
    let shape = rho.factor_shape();
    if shape.is_empty() {
        return Err(Error::BadFactorIndex {
            index: 0,
            factors: 0,
        });
    }
    let nf = shape.len();
    let mut kept = [false; 64];
    if nf > kept.len() {
        return Err(Error::BadShape {
            shape: shape.to_vec(),
            dim: rho.dim(),
        });
    }
    for &k in keep {
        if k >= nf {
            return Err(Error::BadFactorIndex {
                index: k,
                factors: nf,
            });
        }
        kept[k] = true;
    }
    let kept_shape: Vec<usize> = (0..nf).filter(|&k| kept[k]).map(|k| shape[k]).collect();
    let traced_shape: Vec<usize> = (0..nf).filter(|&k| !kept[k]).map(|k| shape[k]).collect();
    let dk: usize = kept_shape.iter().product();
    let dt: usize = traced_shape.iter().product();

    // Flat index of the full space from (kept multi-index, traced multi-index).
    let compose = |ki: usize, ti: usize| -> usize {
        let mut digits = [0usize; 64];
        let (mut ki, mut ti) = (ki, ti);
        for k in (0..nf).rev() {
            if kept[k] {
                digits[k] = ki % shape[k];
                ki /= shape[k];
            } else {
                digits[k] = ti % shape[k];
                ti /= shape[k];
            }
        }
        digits[..nf]
            .iter()
            .zip(shape)
            .fold(0, |acc, (&d, &s)| acc * s + d)
    };

    let mut out = Operator::zeros(dk);
    for r in 0..dk {
        for col in 0..dk {
            let mut acc = ZERO;
            for t in 0..dt {
                acc += rho[(compose(r, t), compose(col, t))];
            }
            out[(r, col)] = acc;
        }
    }
    if kept_shape.is_empty() {
        out.factor_shape = vec![1];
    } else {
        out.factor_shape = kept_shape;
    }
    Ok(out)
}

/// Eigen-decomposition of a Hermitian operator.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: Operator,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> StateVector {
        StateVector::new(self.vectors.column(k), &[self.vectors.dim()]).unwrap()
    }
}

pub fn eig_hermitian(h: &Operator) -> Result<HermitianEigen> {
    let n = h.dim();
    let defect = h.hermiticity_defect();
    if defect >= 1e-10 * h.frobenius_norm().max(1.0) {
        return Err(Error::NonHermitian { defect });
    }
    let sym = (h + &h.adjoint()).scale_re(0.5);
    let m = DMatrix::from_row_slice(n, n, sym.entries());
    let eig = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = Operator::from_fn(n, |r, col| eig.eigenvectors[(r, order[col])]);
    Ok(HermitianEigen { values, vectors })
}

/// `exp(a)` for anti-Hermitian `a`, evaluated through the eigenbasis of `i a`.
pub fn expm_antihermitian(a: &Operator) -> Result<Operator> {
    let defect = a.antihermiticity_defect();
    let scale = a.frobenius_norm();
    if scale > 0.0 && defect >= 1e-12 * scale {
        return Err(Error::NonAntiHermitian { defect });
    }
    let n = a.dim();
    let h = a.scale(I);
    let eig = eig_hermitian(&h)?;
    // a = -i h  =>  exp(a) = V diag(e^{-i lambda}) V^dag
    let phases: Vec<C64> = eig.values.iter().map(|&l| cis(-l)).collect();
    let v = &eig.vectors;
    let mut out = Operator::from_fn(n, |r, col| {
        (0..n)
            .map(|k| v[(r, k)] * phases[k] * v[(col, k)].conj())
            .sum()
    });
    out.factor_shape = a.factor_shape.clone();
    Ok(out)
}
