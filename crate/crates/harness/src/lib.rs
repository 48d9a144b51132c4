//! File formats, the verification-suite driver and counterexample search
//! on top of `tripotent-core`.

pub mod error;
pub mod json;
pub mod search;
pub mod suite;

pub use error::{HarnessError, Result};
