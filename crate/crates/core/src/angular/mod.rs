//! Angular-momentum primitives shared by the state, reduction and squeezing
//! modules: the spin-(N/2) ⊗ spin-1 coupling coefficients, collective spin
//! matrices on the Dicke ladder, and log-space combinatorics.

mod cg;
mod combinatorics;
mod spin;

pub use cg::{cg_triple, CgTriple};
pub use combinatorics::{log_binomial, LogFactorialTable};
pub use spin::{collective_spin, collective_spin_with_limit, CollectiveSpinSet};

/// Largest N accepted for work on the (N+1)-dimensional Dicke ladder.
pub const DICKE_N_MAX: usize = 10_000;

/// Largest N for which dense collective spin matrices are built.
pub const SPIN_MATRIX_N_MAX: usize = 2_000;

/// Largest N accepted for anything that touches the full 2^N Hilbert space.
pub const TENSOR_N_MAX: usize = 14;
