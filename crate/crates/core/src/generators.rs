//! Seeded matrix constructions for every class plus the adjacent non-3-OP
//! families used by completeness sweeps.
//!
//! RNG: ChaCha8 seeded from a `u64`. Independent tasks draw from
//! `derive_seed(base, index)`, so parallel sweeps are reproducible.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::classes::{ClassLabel, Signature};
use crate::decomp::householder_qr;
use crate::error::{Error, Result};
use crate::matrix::{c64, ComplexMatrix, C64};
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// The generator behind every construction.
pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of task `index` under `base`: `mix(mix(base) + index)` with the
/// SplitMix64 mixer.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    splitmix64(splitmix64(base).wrapping_add(index))
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c64(re, im) * core::f64::consts::FRAC_1_SQRT_2
}

/// Entries i.i.d. standard complex Gaussian (`E|z|² = 1`).
pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Haar unitary: QR of a complex Gaussian with `Q · diag(r_ii / |r_ii|)`.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    loop {
        let g = gaussian_matrix(n, n, rng);
        let (q, rdiag) = householder_qr(&g);
        if rdiag.iter().all(|r| r.norm() > 0.0) {
            return ComplexMatrix::from_fn(n, n, |i, j| q.get(i, j) * (rdiag[j] / rdiag[j].norm()));
        }
    }
}

pub fn random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    haar_unitary(n, &mut rng_from_seed(seed))
}

/// Named constructions. Labels build members of that class; the rest are
/// families adjacent to the orthogonal tripotents or sampling ensembles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Construction {
    Label(ClassLabel),
    HermitianNonTripotent,
    TripotentNonHermitian,
    NormalNonTripotent,
    PartialIsometryNonEp,
    EpNonPi,
    /// Normal with spectrum on a lattice of phases `kπ/4` and moduli
    /// `{1, 1/√3}`, plus 0. Contains both `±1` and `±i/√3`.
    NormalUnitModulusSpectrum,
    Gaussian,
}

impl Construction {
    /// The five non-3-OP families adjacent to the orthogonal tripotents.
    pub const ADJACENT: [Construction; 5] = [
        Construction::HermitianNonTripotent,
        Construction::TripotentNonHermitian,
        Construction::NormalNonTripotent,
        Construction::PartialIsometryNonEp,
        Construction::EpNonPi,
    ];

    pub fn all() -> Vec<Construction> {
        let mut v: Vec<Construction> = ClassLabel::ALL.iter().map(|&l| Construction::Label(l)).collect();
        v.extend(Self::ADJACENT);
        v.push(Construction::NormalUnitModulusSpectrum);
        v.push(Construction::Gaussian);
        v
    }

    pub fn name(&self) -> String {
        match self {
            Construction::Label(l) => String::from(l.name()),
            Construction::HermitianNonTripotent => "hermitian-nontripotent".into(),
            Construction::TripotentNonHermitian => "tripotent-nonhermitian".into(),
            Construction::NormalNonTripotent => "normal-nontripotent".into(),
            Construction::PartialIsometryNonEp => "partial-isometry-nonEP".into(),
            Construction::EpNonPi => "EP-nonPI".into(),
            Construction::NormalUnitModulusSpectrum => "normal-unit-modulus-spectrum".into(),
            Construction::Gaussian => "gaussian".into(),
        }
    }

    /// Smallest dimension at which the construction exists.
    pub fn min_n(&self) -> usize {
        match self {
            Construction::TripotentNonHermitian | Construction::PartialIsometryNonEp => 2,
            _ => 1,
        }
    }

    /// Whether every output is an orthogonal tripotent (`Some(true)`),
    /// never one (`Some(false)`), or either.
    pub fn three_op_profile(&self) -> Option<bool> {
        match self {
            Construction::Label(ClassLabel::ThreeOP) | Construction::Label(ClassLabel::OP) => Some(true),
            Construction::Label(_) | Construction::NormalUnitModulusSpectrum | Construction::Gaussian => None,
            _ => Some(false),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(c) = Construction::all().into_iter().find(|c| c.name().eq_ignore_ascii_case(s)) {
            return Ok(c);
        }
        s.parse::<ClassLabel>().map(Construction::Label)
    }
}

/// What to generate.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub construction: Construction,
    /// Only with `ThreeOP`.
    pub signature: Option<Signature>,
    pub rank: Option<usize>,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, construction: Construction, seed: u64) -> Self {
        GenSpec { n, construction, signature: None, rank: None, seed }
    }

    pub fn three_op(signature: Signature, seed: u64) -> Self {
        GenSpec {
            n: signature.n(),
            construction: Construction::Label(ClassLabel::ThreeOP),
            signature: Some(signature),
            rank: None,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Infeasible(msg));
        if self.n == 0 {
            return bad("n must be positive".into());
        }
        if self.n < self.construction.min_n() {
            return bad(format!("{} needs n >= {}", self.construction, self.construction.min_n()));
        }
        if let Some(sig) = self.signature {
            if self.construction != Construction::Label(ClassLabel::ThreeOP) {
                return bad("signature is only valid with ThreeOP".into());
            }
            if sig.n() != self.n {
                return bad(format!("signature {sig} does not sum to n = {}", self.n));
            }
            if self.rank.is_some_and(|r| r != sig.p + sig.q) {
                return bad("rank disagrees with signature".into());
            }
        }
        if let Some(r) = self.rank {
            if r > self.n {
                return bad(format!("rank {r} exceeds n = {}", self.n));
            }
            let ok = match self.construction {
                Construction::PartialIsometryNonEp => (1..self.n).contains(&r),
                Construction::EpNonPi => r >= 1,
                _ => true,
            };
            if !ok {
                return bad(format!("rank {r} infeasible for {}", self.construction));
            }
        }
        Ok(())
    }
}

/// Deterministic in `spec`.
pub fn generate(spec: &GenSpec) -> Result<ComplexMatrix> {
    spec.validate()?;
    let mut rng = rng_from_seed(spec.seed);
    Ok(Builder { n: spec.n, rank: spec.rank, rng: &mut rng }.build(spec.construction, spec.signature))
}

/// `A + ε·G` with `G` a seeded complex Gaussian scaled to `‖G‖_F = 1`.
pub fn perturb(a: &ComplexMatrix, epsilon: f64, seed: u64) -> ComplexMatrix {
    if epsilon == 0.0 {
        return a.clone();
    }
    let mut rng = rng_from_seed(seed);
    let g = loop {
        let g = gaussian_matrix(a.rows(), a.cols(), &mut rng);
        let nrm = g.frobenius_norm();
        if nrm > 0.0 {
            break g.scale_real(1.0 / nrm);
        }
    };
    a + &g.scale_real(epsilon)
}

struct Builder<'r> {
    n: usize,
    rank: Option<usize>,
    rng: &'r mut SeededRng,
}

const RESAMPLE_LIMIT: usize = 256;

impl Builder<'_> {
    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.rng.random::<f64>()
    }

    fn index(&mut self, upper: usize) -> usize {
        self.rng.random_range(0..upper)
    }

    fn coin(&mut self) -> bool {
        self.rng.random::<bool>()
    }

    fn rank_or(&mut self, lo: usize, hi: usize) -> usize {
        match self.rank {
            Some(r) => r,
            None => lo + self.index(hi - lo + 1),
        }
    }

    /// `W · diag(d) · W*` for Haar `W`.
    fn unitary_diag(&mut self, d: &[C64]) -> ComplexMatrix {
        let w = haar_unitary(d.len(), self.rng);
        let wd = ComplexMatrix::from_fn(d.len(), d.len(), |i, j| w.get(i, j) * d[j]);
        &wd * &w.conj_transpose()
    }

    /// Random `S` with singular values in `[1/2, 2]`, and `S⁻¹`.
    fn conditioned_pair(&mut self, n: usize) -> (ComplexMatrix, ComplexMatrix) {
        let w1 = haar_unitary(n, self.rng);
        let w2 = haar_unitary(n, self.rng);
        let mut s: Vec<f64> = (0..n).map(|_| self.uniform(0.5, 2.0)).collect();
        if n >= 2 {
            s[0] = 0.5;
            s[1] = 2.0;
        }
        let sd = ComplexMatrix::from_fn(n, n, |i, j| w1.get(i, j) * s[j]);
        let si = ComplexMatrix::from_fn(n, n, |i, j| w2.get(j, i).conj() / s[j]);
        (&sd * &w2, &si * &w1.conj_transpose())
    }

    fn similar_diag(&mut self, d: &[C64]) -> ComplexMatrix {
        let (s, si) = self.conditioned_pair(d.len());
        &(&s * &ComplexMatrix::diag(d)) * &si
    }

    /// `U · [top; 0] · U*` with `top` an `r × n` block.
    fn embed_rows(&mut self, top: &ComplexMatrix) -> ComplexMatrix {
        let n = self.n;
        let u = haar_unitary(n, self.rng);
        let r = top.rows();
        let mid = ComplexMatrix::from_fn(n, n, |i, j| if i < r { top.get(i, j) } else { c64(0.0, 0.0) });
        &(&u * &mid) * &u.conj_transpose()
    }

    /// `[M 0]` padded to `r × n`.
    fn pad_right(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let n = self.n;
        ComplexMatrix::from_fn(m.rows(), n, |i, j| if j < m.cols() { m.get(i, j) } else { c64(0.0, 0.0) })
    }

    fn off_lattice_real(&mut self) -> f64 {
        loop {
            let x = self.uniform(-2.5, 2.5);
            if [-1.0, 0.0, 1.0].iter().all(|c| (x - c).abs() >= 0.1) {
                return x;
            }
        }
    }

    fn off_lattice_complex(&mut self) -> C64 {
        loop {
            let m = self.uniform(0.2, 2.5);
            let th = self.uniform(0.0, core::f64::consts::TAU);
            let z = C64::from_polar(m, th);
            if [-1.0, 0.0, 1.0].iter().all(|&c| (z - c64(c, 0.0)).norm() >= 0.1) {
                return z;
            }
        }
    }

    fn signed_unit(&mut self) -> f64 {
        [-1.0, 0.0, 1.0][self.index(3)]
    }

    fn build(&mut self, construction: Construction, signature: Option<Signature>) -> ComplexMatrix {
        let n = self.n;
        match construction {
            Construction::Label(label) => self.member(label, signature),
            Construction::HermitianNonTripotent => {
                let mut d: Vec<C64> = (0..n)
                    .map(|_| if self.coin() { c64(self.signed_unit(), 0.0) } else { c64(self.off_lattice_real(), 0.0) })
                    .collect();
                let k = self.index(n);
                d[k] = c64(self.off_lattice_real(), 0.0);
                self.unitary_diag(&d)
            }
            Construction::NormalNonTripotent => {
                let mut d: Vec<C64> = (0..n)
                    .map(|_| if self.coin() { c64(self.signed_unit(), 0.0) } else { self.off_lattice_complex() })
                    .collect();
                let k = self.index(n);
                d[k] = self.off_lattice_complex();
                self.unitary_diag(&d)
            }
            Construction::TripotentNonHermitian => {
                for _ in 0..RESAMPLE_LIMIT {
                    let mut d: Vec<f64> = (0..n).map(|_| self.signed_unit()).collect();
                    // At least two distinct values, or a similarity cannot break symmetry.
                    if d.iter().all(|&x| x == d[0]) {
                        let k = 1 + self.index(n - 1);
                        d[k] = if d[0] == 1.0 { -1.0 } else { 1.0 };
                    }
                    let dc: Vec<C64> = d.iter().map(|&x| c64(x, 0.0)).collect();
                    let a = self.similar_diag(&dc);
                    if a.relative_residual(&a.conj_transpose()).expect("square") > 1e-3 {
                        return a;
                    }
                }
                unreachable!("generic similarity is non-Hermitian")
            }
            Construction::PartialIsometryNonEp => {
                let r = self.rank_or(1, n - 1);
                for _ in 0..RESAMPLE_LIMIT {
                    let w = haar_unitary(n, self.rng);
                    let top = w.block(0, r, 0, n);
                    if top.block(0, r, r, n).frobenius_norm() >= 0.1 {
                        return self.embed_rows(&top);
                    }
                }
                unreachable!("Haar rows have a nonzero tail")
            }
            Construction::EpNonPi => {
                let r = self.rank_or(1, n);
                let k = haar_unitary(r, self.rng);
                let mut sigma: Vec<f64> = (0..r).map(|_| self.uniform(0.3, 3.0)).collect();
                let j = self.index(r);
                sigma[j] = if self.coin() { self.uniform(0.3, 0.75) } else { self.uniform(1.25, 3.0) };
                let sk = ComplexMatrix::from_fn(r, r, |i, c| k.get(i, c) * sigma[i]);
                let top = self.pad_right(&sk);
                self.embed_rows(&top)
            }
            Construction::NormalUnitModulusSpectrum => {
                let d: Vec<C64> = (0..n).map(|_| self.lattice_point()).collect();
                self.unitary_diag(&d)
            }
            Construction::Gaussian => gaussian_matrix(n, n, self.rng),
        }
    }

    fn lattice_point(&mut self) -> C64 {
        // 8 phases × 2 moduli, plus the origin.
        let k = self.index(17);
        if k == 16 {
            return c64(0.0, 0.0);
        }
        let modulus = if k < 8 { 1.0 } else { 1.0 / 3f64.sqrt() };
        let phase = (k % 8) as f64 * core::f64::consts::FRAC_PI_4;
        let z = C64::from_polar(modulus, phase);
        // Snap rounding dust so ±1 and ±i/√3 are hit exactly.
        c64(snap(z.re), snap(z.im))
    }

    fn member(&mut self, label: ClassLabel, signature: Option<Signature>) -> ComplexMatrix {
        let n = self.n;
        match label {
            ClassLabel::ThreeOP => {
                let sig = signature.unwrap_or_else(|| {
                    let r = self.rank_or(0, n);
                    let p = self.index(r + 1);
                    Signature { p, q: r - p, z: n - r }
                });
                let d: Vec<C64> = sig.canonical_diagonal().into_iter().map(|x| c64(x, 0.0)).collect();
                self.unitary_diag(&d)
            }
            ClassLabel::OP => {
                let r = self.rank_or(0, n);
                let d: Vec<C64> = (0..n).map(|i| c64(if i < r { 1.0 } else { 0.0 }, 0.0)).collect();
                self.unitary_diag(&d)
            }
            ClassLabel::H => {
                let r = self.rank_or(0, n);
                let d: Vec<C64> = (0..n).map(|i| c64(if i < r { self.off_lattice_real() } else { 0.0 }, 0.0)).collect();
                self.unitary_diag(&d)
            }
            ClassLabel::N => {
                let r = self.rank_or(0, n);
                let d: Vec<C64> =
                    (0..n).map(|i| if i < r { self.off_lattice_complex() } else { c64(0.0, 0.0) }).collect();
                self.unitary_diag(&d)
            }
            ClassLabel::P => {
                let r = self.rank_or(0, n);
                let d: Vec<C64> = (0..n).map(|i| c64(if i < r { 1.0 } else { 0.0 }, 0.0)).collect();
                self.similar_diag(&d)
            }
            ClassLabel::TM => {
                let r = self.rank_or(0, n);
                let d: Vec<C64> = (0..n)
                    .map(|i| {
                        c64(
                            if i < r {
                                if self.coin() {
                                    1.0
                                } else {
                                    -1.0
                                }
                            } else {
                                0.0
                            },
                            0.0,
                        )
                    })
                    .collect();
                self.similar_diag(&d)
            }
            ClassLabel::EP => {
                let r = self.rank_or(0, n);
                let (s, _) = self.conditioned_pair(r);
                let top = self.pad_right(&s);
                self.embed_rows(&top)
            }
            ClassLabel::MP => {
                let r = self.rank_or(0, n);
                let d: Vec<C64> = (0..r).map(|_| c64(if self.coin() { 1.0 } else { -1.0 }, 0.0)).collect();
                let m = if r == 0 { ComplexMatrix::zeros(0, 0) } else { self.similar_diag(&d) };
                let top = self.pad_right(&m);
                self.embed_rows(&top)
            }
            ClassLabel::PI | ClassLabel::SD => {
                let r = self.rank_or(0, n);
                let w = haar_unitary(n, self.rng);
                let scale = if label == ClassLabel::SD { self.uniform(0.3, 3.0) } else { 1.0 };
                let top = w.block(0, r, 0, n).scale_real(scale);
                self.embed_rows(&top)
            }
        }
    }
}

fn snap(x: f64) -> f64 {
    for target in [0.0, 1.0, -1.0, 1.0 / 3f64.sqrt(), -1.0 / 3f64.sqrt()] {
        if (x - target).abs() < 1e-15 {
            return target;
        }
    }
    x
}

/// One of the fixed reference examples.
#[derive(Debug, Clone, PartialEq)]
pub enum ExampleEntry {
    /// A positive diagonal `Σ` (by its entries) with a matrix `K`.
    SigmaK {
        sigma: Vec<f64>,
        k: ComplexMatrix,
    },
    Matrix(ComplexMatrix),
}

/// The three fixed examples:
/// - `sigma-k`: `Σ = diag(2, 1/2)`, `K = [[0,1],[1,0]]`, where
///   `(Σ³ + Σ⁻³)K = K(Σ³ + Σ⁻³)` yet `ΣK ≠ KΣ`;
/// - `star-average`: `diag(1, −1, i/√3, −i/√3)`, satisfying
///   `A + A† = 2A*` without being an orthogonal tripotent;
/// - `star-average-dagger`: its displayed pseudoinverse
///   `diag(1, −1, −√3 i, √3 i)`.
pub fn reference_examples() -> Vec<(&'static str, ExampleEntry)> {
    let r = 1.0 / 3f64.sqrt();
    let s3 = 3f64.sqrt();
    let swap = ComplexMatrix::from_fn(2, 2, |i, j| c64(if i != j { 1.0 } else { 0.0 }, 0.0));
    alloc::vec![
        ("sigma-k", ExampleEntry::SigmaK { sigma: alloc::vec![2.0, 0.5], k: swap }),
        (
            "star-average",
            ExampleEntry::Matrix(ComplexMatrix::diag(&[c64(1.0, 0.0), c64(-1.0, 0.0), c64(0.0, r), c64(0.0, -r)])),
        ),
        (
            "star-average-dagger",
            ExampleEntry::Matrix(ComplexMatrix::diag(&[c64(1.0, 0.0), c64(-1.0, 0.0), c64(0.0, -s3), c64(0.0, s3)])),
        ),
    ]
}

/// The `star-average` matrix `diag(1, −1, i/√3, −i/√3)`.
pub fn star_average_example() -> ComplexMatrix {
    match &reference_examples()[1].1 {
        ExampleEntry::Matrix(m) => m.clone(),
        ExampleEntry::SigmaK { .. } => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{is_member, signature};
    use crate::decomp::mp_inverse;
    use crate::tolerance::ToleranceConfig;

    #[test]
    fn unitary_basics() {
        let u = random_unitary(1, 5);
        assert!((u.get(0, 0).norm() - 1.0).abs() < 1e-15);
        assert_eq!(random_unitary(6, 42), random_unitary(6, 42));
        assert_ne!(random_unitary(6, 42), random_unitary(6, 43));
        let u = random_unitary(8, 3);
        let res = (&u.conj_transpose() * &u).frobenius_distance(&ComplexMatrix::identity(8)).unwrap();
        assert!(res < 1e-12 * 8.0);
    }

    #[test]
    fn derive_seed_separates_streams() {
        let seeds: Vec<u64> = (0..1000).map(|i| derive_seed(7, i)).collect();
        let mut sorted = seeds.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 1000);
        assert_ne!(derive_seed(7, 0), derive_seed(8, 0));
    }

    #[test]
    fn spec_examples() {
        let cfg = ToleranceConfig::default();
        let a = generate(&GenSpec::three_op(Signature { p: 2, q: 2, z: 1 }, 1)).unwrap();
        assert_eq!(signature(&a, &cfg).unwrap(), Signature { p: 2, q: 2, z: 1 });

        let a = generate(&GenSpec::new(4, Construction::PartialIsometryNonEp, 2)).unwrap();
        assert!(is_member(&a, ClassLabel::PI, &cfg).unwrap());
        assert!(!is_member(&a, ClassLabel::EP, &cfg).unwrap());

        let spec = GenSpec { rank: Some(2), ..GenSpec::new(3, Construction::Label(ClassLabel::OP), 3) };
        let a = generate(&spec).unwrap();
        assert!(is_member(&a, ClassLabel::OP, &cfg).unwrap());
        assert!(is_member(&a, ClassLabel::ThreeOP, &cfg).unwrap());
        assert!((a.trace().unwrap().re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_specs() {
        let op = Construction::Label(ClassLabel::OP);
        assert!(matches!(generate(&GenSpec { rank: Some(4), ..GenSpec::new(3, op, 0) }), Err(Error::Infeasible(_))));
        let bad_sig = GenSpec { signature: Some(Signature { p: 1, q: 0, z: 0 }), ..GenSpec::new(2, op, 0) };
        assert!(generate(&bad_sig).is_err());
        assert!(generate(&GenSpec::new(1, Construction::TripotentNonHermitian, 0)).is_err());
        assert!(generate(&GenSpec::new(0, Construction::Gaussian, 0)).is_err());
    }

    #[test]
    fn perturbation() {
        let cfg = ToleranceConfig::default();
        let a = generate(&GenSpec::new(4, Construction::Label(ClassLabel::ThreeOP), 9)).unwrap();
        assert_eq!(perturb(&a, 0.0, 1), a);
        assert!(!is_member(&perturb(&a, 1e-3, 1), ClassLabel::ThreeOP, &cfg).unwrap());
        assert!(is_member(&perturb(&a, 1e-12, 1), ClassLabel::ThreeOP, &cfg).unwrap());
        let d = perturb(&a, 0.5, 2).frobenius_distance(&a).unwrap();
        assert!((d - 0.5).abs() < 1e-12);
    }

    #[test]
    fn reference_examples_are_consistent() {
        let cfg = ToleranceConfig::default();
        let ex = reference_examples();
        assert_eq!(ex.len(), 3);
        let (ExampleEntry::Matrix(a), ExampleEntry::Matrix(ad)) = (&ex[1].1, &ex[2].1) else { panic!("shape") };
        assert!(mp_inverse(a, &cfg).unwrap().frobenius_distance(ad).unwrap() < 1e-12);
        let lhs = a + ad;
        assert!(lhs.frobenius_distance(&a.conj_transpose().scale_real(2.0)).unwrap() <= 1e-12);
    }

    #[test]
    fn labels_generate_members() {
        let cfg = ToleranceConfig::default();
        for label in ClassLabel::ALL {
            for n in 1..=6 {
                for seed in 0..8 {
                    let a = generate(&GenSpec::new(n, Construction::Label(label), seed)).unwrap();
                    assert!(is_member(&a, label, &cfg).unwrap(), "{label} n={n} seed={seed}");
                }
            }
        }
    }

    #[test]
    fn adjacent_families_miss_three_op() {
        use ClassLabel::*;
        let cfg = ToleranceConfig::default();
        let expect: [(Construction, &[ClassLabel], &[ClassLabel]); 5] = [
            (Construction::HermitianNonTripotent, &[H, N], &[ThreeOP, TM]),
            (Construction::TripotentNonHermitian, &[TM], &[H, ThreeOP]),
            (Construction::NormalNonTripotent, &[N], &[ThreeOP]),
            (Construction::PartialIsometryNonEp, &[PI], &[EP, ThreeOP]),
            (Construction::EpNonPi, &[EP], &[PI, ThreeOP]),
        ];
        for (c, yes, no) in expect {
            for n in c.min_n()..=6 {
                for seed in 0..8 {
                    let a = generate(&GenSpec::new(n, c, seed)).unwrap();
                    for &l in yes {
                        assert!(is_member(&a, l, &cfg).unwrap(), "{c} n={n} seed={seed} not {l}");
                    }
                    for &l in no {
                        assert!(!is_member(&a, l, &cfg).unwrap(), "{c} n={n} seed={seed} is {l}");
                    }
                }
            }
        }
    }

    #[test]
    fn construction_names_round_trip() {
        for c in Construction::all() {
            assert_eq!(c.name().parse::<Construction>().unwrap(), c);
        }
        assert_eq!("3-OP".parse::<Construction>().unwrap(), Construction::Label(ClassLabel::ThreeOP));
    }
}
