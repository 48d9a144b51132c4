//! Orthogonal tripotent matrices (`A³ = A = A*`): a dense complex matrix
//! substrate, decompositions, class predicates, characterization checkers
//! and seeded generators.
//!
//! `no_std` + `alloc`. The `std` feature (on by default) only switches the
//! float math from `libm` to the platform implementation.

#![no_std]

extern crate alloc;
#[cfg(any(feature = "std", test))]
extern crate std;

pub mod characterizations;
pub mod classes;
pub mod commutation;
pub mod decomp;
mod error;
pub mod generators;
pub mod matrix;
mod tolerance;

pub use characterizations::{Check, PowerParams, Subject, TheoremReport};
pub use classes::{is_member, signature, ClassLabel, Signature};
pub use error::{Error, Result};
pub use matrix::{c64, ComplexMatrix, C64};
pub use tolerance::{ToleranceConfig, RANK_EPS_MULTIPLE};
