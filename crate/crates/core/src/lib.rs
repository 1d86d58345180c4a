//! Spin squeezing of symmetric N-qubit states built from two distinct
//! Majorana spinors.
//!
//! The canonical state with `N - k` copies of `|0>` and `k` copies of
//! `a|0> + sqrt(1-a²)|1>` lives on the Dicke ladder ([`state`]). Its two-qubit
//! reduced matrix ([`reduction`]) fixes the Kitagawa–Ueda parameter ξ
//! ([`squeezing`]). Every closed form has an independent route beside it:
//! brute-force partial traces on the 2^N space and a direct scan of the
//! collective spin variance. [`sweep`] drives parameter grids and writes
//! CSV, JSON and SVG.

// Negated comparisons below are NaN guards.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod error;
pub mod reduction;
pub mod squeezing;
pub mod state;
pub mod sweep;

pub use error::{Error, Result};
pub use reduction::TwoQubitDensity;
pub use squeezing::SqueezingReport;
pub use state::{DickeVector, FamilyParams, FullState, Spinor};
