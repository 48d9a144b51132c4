//! Dense complex matrices.
//!
//! Storage is row-major and immutable once built. Constructors reject
//! NaN/Inf, so every downstream operation may assume finite input.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerance::ToleranceConfig;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Complex scalar type used throughout.
pub type C64 = Complex64;

/// `re + i·im` as a [`C64`].
pub const fn c64(re: f64, im: f64) -> C64 {
    Complex64::new(re, im)
}

/// Dense `rows × cols` complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    /// Validated constructor: positive dimensions, exact entry count, finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyDimension { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::EntryCount { rows, cols, expected: rows * cols, got: data.len() });
        }
        if let Some(k) = data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite { row: k / cols, col: k % cols });
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Builds from separate real and imaginary parts, both row-major.
    pub fn from_parts(rows: usize, cols: usize, re: &[f64], im: &[f64]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::EntryCount { rows, cols, expected: re.len(), got: im.len() });
        }
        let data = re.iter().zip(im).map(|(&a, &b)| c64(a, b)).collect();
        Self::new(rows, cols, data)
    }

    /// Real matrix from row-major values.
    pub fn from_real(rows: usize, cols: usize, re: &[f64]) -> Result<Self> {
        Self::new(rows, cols, re.iter().map(|&a| c64(a, 0.0)).collect())
    }

    /// Entry-generating constructor. Zero-sized shapes are allowed (e.g. `L`
    /// of a full-rank decomposition).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        debug_assert!(data.iter().all(|z| z.re.is_finite() && z.im.is_finite()));
        ComplexMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { rows, cols, data: alloc::vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c64(1.0, 0.0) } else { c64(0.0, 0.0) })
    }

    /// Square diagonal matrix. Panics on non-finite input.
    pub fn diag(d: &[C64]) -> Self {
        assert!(d.iter().all(|z| z.re.is_finite() && z.im.is_finite()), "non-finite diagonal");
        let n = d.len();
        Self::from_fn(n, n, |i, j| if i == j { d[i] } else { c64(0.0, 0.0) })
    }

    pub fn diag_real(d: &[f64]) -> Self {
        let d: Vec<C64> = d.iter().map(|&x| c64(x, 0.0)).collect();
        Self::diag(&d)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn data_mut(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { op: "mat_mul", left: self.shape(), right: rhs.shape() });
        }
        let (n, m) = (self.rows, rhs.cols);
        let mut out = alloc::vec![c64(0.0, 0.0); n * m];
        for i in 0..n {
            let orow = &mut out[i * m..(i + 1) * m];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let brow = &rhs.data[k * m..(k + 1) * m];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Ok(ComplexMatrix { rows: n, cols: m, data: out })
    }

    fn zip_with(&self, rhs: &Self, op: &'static str, f: impl Fn(C64, C64) -> C64) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch { op, left: self.shape(), right: rhs.shape() });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(ComplexMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    pub fn scale(&self, s: C64) -> Self {
        ComplexMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(c64(s, 0.0))
    }

    /// Non-negative integer power of a square matrix; `A⁰ = I`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<C64> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self.get(i, i)).sum())
    }

    pub fn frobenius_norm(&self) -> f64 {
        // Scaled sum of squares, so huge or tiny entries do not overflow.
        let scale = self.data.iter().fold(0.0f64, |m, z| m.max(z.re.abs()).max(z.im.abs()));
        if scale == 0.0 {
            return 0.0;
        }
        let ss: f64 = self
            .data
            .iter()
            .map(|z| {
                let (a, b) = (z.re / scale, z.im / scale);
                a * a + b * b
            })
            .sum();
        scale * ss.sqrt()
    }

    pub fn frobenius_distance(&self, rhs: &Self) -> Result<f64> {
        Ok(self.try_sub(rhs)?.frobenius_norm())
    }

    /// `‖A − B‖_F / max(1, ‖A‖_F, ‖B‖_F)`: the quantity `approx_eq` thresholds.
    pub fn relative_residual(&self, rhs: &Self) -> Result<f64> {
        let d = self.frobenius_distance(rhs)?;
        Ok(d / 1f64.max(self.frobenius_norm()).max(rhs.frobenius_norm()))
    }

    pub fn approx_eq(&self, rhs: &Self, cfg: &ToleranceConfig) -> Result<bool> {
        Ok(self.relative_residual(rhs)? <= cfg.eq_tol)
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Copy of the block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols, "block out of range");
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j))
    }

    /// Side-by-side concatenation `[A B …]`.
    pub fn hstack(parts: &[&Self]) -> Result<Self> {
        let rows = parts.first().map_or(0, |p| p.rows);
        if let Some(bad) = parts.iter().find(|p| p.rows != rows) {
            return Err(Error::DimensionMismatch { op: "hstack", left: parts[0].shape(), right: bad.shape() });
        }
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for p in parts {
                data.extend_from_slice(&p.data[i * p.cols..(i + 1) * p.cols]);
            }
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, z| m.max(z.norm()))
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, "{:+.6e}{:+.6e}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Shape-checked operators for internal algebra where shapes are known to
/// agree. They panic on mismatch; use the `try_*` methods otherwise.
impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        match self.try_mul(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        match self.try_add(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        match self.try_sub(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale_real(-1.0)
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, s: f64) -> ComplexMatrix {
        self.scale_real(s)
    }
}

pub fn conj_transpose(a: &ComplexMatrix) -> ComplexMatrix {
    a.conj_transpose()
}

pub fn mat_mul(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.try_mul(b)
}

pub fn trace(a: &ComplexMatrix) -> Result<C64> {
    a.trace()
}

pub fn frobenius_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    a.frobenius_distance(b)
}

pub fn approx_eq(a: &ComplexMatrix, b: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<bool> {
    a.approx_eq(b, cfg)
}

/// Count of singular values above `cutoff · σ_max`; 0 for the zero matrix.
pub fn numerical_rank(a: &ComplexMatrix, cfg: &ToleranceConfig) -> usize {
    numerical_rank_scaled(a, 0.0, cfg)
}

/// Rank with the cutoff measured against `max(σ_max, reference)`.
///
/// For a matrix formed from other operands (`I − A`, `A − A³`, …) pass
/// their scale as `reference`: a product that is mathematically zero then
/// reports rank 0 instead of counting rounding noise.
pub fn numerical_rank_scaled(a: &ComplexMatrix, reference: f64, cfg: &ToleranceConfig) -> usize {
    let sv = crate::decomp::singular_values(a);
    rank_from_singular_values(&sv, reference, cfg.rank_cutoff(a.rows, a.cols))
}

pub(crate) fn rank_from_singular_values(sv: &[f64], reference: f64, cutoff: f64) -> usize {
    let top = sv.first().copied().unwrap_or(0.0).max(reference);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > cutoff * top).count()
}
