use nalgebra::{Complex, DMatrix, DVector, Vector3};

use crate::error::{Error, Result};

use super::SPIN_MATRIX_N_MAX;

type C64 = Complex<f64>;

/// Collective spin components `J_x, J_y, J_z` for spin `j = N/2`, in the
/// basis `|N/2, N/2 - r>`, `r = 0..=N`.
#[derive(Clone, Debug)]
pub struct CollectiveSpinSet {
    n: usize,
    pub jx: DMatrix<C64>,
    pub jy: DMatrix<C64>,
    pub jz: DMatrix<C64>,
}

pub fn collective_spin(n: usize) -> Result<CollectiveSpinSet> {
    collective_spin_with_limit(n, SPIN_MATRIX_N_MAX)
}

pub fn collective_spin_with_limit(n: usize, n_max: usize) -> Result<CollectiveSpinSet> {
    if n < 1 {
        return Err(Error::domain("collective_spin needs N >= 1"));
    }
    if n > n_max {
        return Err(Error::ResourceLimit {
            what: "collective_spin",
            n,
            max: n_max,
        });
    }
    let dim = n + 1;
    let j = n as f64 / 2.0;
    let mut jx = DMatrix::<C64>::zeros(dim, dim);
    let mut jy = DMatrix::<C64>::zeros(dim, dim);
    let mut jz = DMatrix::<C64>::zeros(dim, dim);
    for r in 0..dim {
        let m = j - r as f64;
        jz[(r, r)] = C64::new(m, 0.0);
        if r > 0 {
            // <m+1| J+ |m>
            let raise = (j * (j + 1.0) - m * (m + 1.0)).max(0.0).sqrt() / 2.0;
            jx[(r - 1, r)] = C64::new(raise, 0.0);
            jx[(r, r - 1)] = C64::new(raise, 0.0);
            jy[(r - 1, r)] = C64::new(0.0, -raise);
            jy[(r, r - 1)] = C64::new(0.0, raise);
        }
    }
    Ok(CollectiveSpinSet { n, jx, jy, jz })
}

impl CollectiveSpinSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    /// `n̂ · J⃗`.
    pub fn along(&self, dir: &Vector3<f64>) -> DMatrix<C64> {
        &self.jx * C64::from(dir.x) + &self.jy * C64::from(dir.y) + &self.jz * C64::from(dir.z)
    }

    /// `<ψ|J⃗|ψ>` for a normalized state on the ladder.
    pub fn mean_spin(&self, psi: &DVector<C64>) -> Vector3<f64> {
        Vector3::new(
            expectation(&self.jx, psi),
            expectation(&self.jy, psi),
            expectation(&self.jz, psi),
        )
    }
}

/// Real part of `<ψ|op|ψ>`; callers pass Hermitian operators.
pub(crate) fn expectation(op: &DMatrix<C64>, psi: &DVector<C64>) -> f64 {
    psi.dotc(&(op * psi)).re
}
