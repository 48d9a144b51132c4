//! SVD, Hermitian eigendecomposition, Moore–Penrose inverse,
//! Hartwig–Spindelböck decomposition and Khatri Gram powers.

mod eigen;
mod gram;
mod hs;
mod pinv;
mod qr;
mod svd;

pub use eigen::{herm_eig, HermEig};
pub use gram::{gram_power, GramSide};
pub use hs::{hs_decompose, mp_via_hs, HSDecomposition};
pub use pinv::{mp_inverse, penrose_residuals};
pub use qr::householder_qr;
pub use svd::{singular_values, svd, SvdResult};

pub(crate) use gram::{gram, gram_pinv};
pub(crate) use pinv::{pinv_from_svd, retained_rank};
