//! Two-qubit reduced density matrices of symmetric states.
//!
//! Three independent routes produce the same six numbers: the closed-form
//! sums over the canonical amplitudes, a trace on the Dicke ladder through
//! the spin-(N/2-1) ⊗ spin-1 decomposition, and a literal partial trace of
//! the 2^N state vector.

use nalgebra::{Complex, Matrix3, Matrix4, SMatrix};
use serde::{Deserialize, Serialize};

use crate::angular::{cg_triple, CgTriple};
use crate::error::{Error, Result};
use crate::state::{canonical_amplitudes, DickeVector, FamilyParams, FullState};

type C64 = Complex<f64>;

/// Largest imaginary part or off-template deviation tolerated when reading
/// a numerically reduced matrix.
pub const TEMPLATE_TOL: f64 = 1e-12;

/// Smallest eigenvalue accepted as positive semidefinite.
pub const PSD_FLOOR: f64 = -1e-10;

/// Entries of the exchange-symmetric reduced matrix in the basis
/// `|00>, |01>, |10>, |11>`:
///
/// ```text
/// [A B B C]
/// [B D D E]
/// [B D D E]
/// [C E E F]
/// ```
#[allow(non_snake_case)]
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoQubitDensity {
    pub A: f64,
    pub B: f64,
    pub C: f64,
    pub D: f64,
    pub E: f64,
    pub F: f64,
}

impl TwoQubitDensity {
    pub fn to_matrix(&self) -> Matrix4<f64> {
        let Self { A, B, C, D, E, F } = *self;
        Matrix4::new(
            A, B, B, C, //
            B, D, D, E, //
            B, D, D, E, //
            C, E, E, F,
        )
    }

    pub fn trace(&self) -> f64 {
        self.A + 2.0 * self.D + self.F
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.to_matrix().symmetric_eigenvalues().min()
    }

    pub fn is_psd(&self) -> bool {
        self.min_eigenvalue() >= PSD_FLOOR
    }

    /// Largest element-wise difference.
    pub fn max_diff(&self, other: &TwoQubitDensity) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.A, self.B, self.C, self.D, self.E, self.F]
    }

    /// Reads the six entries off a 4×4 matrix, rejecting anything that is
    /// not real or does not match the symmetric template.
    pub fn fit_template(m: &Matrix4<C64>) -> Result<Self> {
        let residue = m.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        if residue > TEMPLATE_TOL {
            return Err(Error::ImaginaryResidue { residue });
        }
        let re = m.map(|z| z.re);
        let mean = |cells: &[(usize, usize)]| {
            cells.iter().map(|&c| re[c]).sum::<f64>() / cells.len() as f64
        };
        let groups: [&[(usize, usize)]; 6] = [
            &[(0, 0)],
            &[(0, 1), (0, 2), (1, 0), (2, 0)],
            &[(0, 3), (3, 0)],
            &[(1, 1), (1, 2), (2, 1), (2, 2)],
            &[(1, 3), (2, 3), (3, 1), (3, 2)],
            &[(3, 3)],
        ];
        let vals = groups.map(mean);
        let rho = TwoQubitDensity {
            A: vals[0],
            B: vals[1],
            C: vals[2],
            D: vals[3],
            E: vals[4],
            F: vals[5],
        };
        let residual = (rho.to_matrix() - re).abs().max();
        if residual > TEMPLATE_TOL {
            return Err(Error::TemplateViolation { residual });
        }
        Ok(rho)
    }
}

fn cg_table(n: usize, r_max: usize) -> Vec<CgTriple> {
    (0..=r_max)
        .map(|r| cg_triple(n, r).expect("r within ladder"))
        .collect()
}

/// General-k closed-form sums over the canonical amplitudes.
pub fn reduced_closed_form(params: &FamilyParams) -> TwoQubitDensity {
    let k = params.k();
    let state = canonical_amplitudes(params);
    let beta = &state.amps()[..=k];
    let c = cg_table(params.n(), k);
    let s2 = std::f64::consts::SQRT_2;

    let a: f64 = (0..=k).map(|r| (beta[r] * c[r].c_plus).powi(2)).sum();
    let b: f64 = (0..k)
        .map(|r| beta[r] * beta[r + 1] * c[r].c_plus * c[r + 1].c_zero)
        .sum::<f64>()
        / s2;
    let d: f64 = (0..k)
        .map(|r| (beta[r + 1] * c[r + 1].c_zero).powi(2))
        .sum::<f64>()
        / 2.0;
    let (cc, e, f) = if k >= 2 {
        let cc: f64 = (0..=k - 2)
            .map(|r| beta[r] * beta[r + 2] * c[r].c_plus * c[r + 2].c_minus)
            .sum();
        let e: f64 = (0..=k - 2)
            .map(|r| beta[r + 1] * beta[r + 2] * c[r + 1].c_zero * c[r + 2].c_minus)
            .sum::<f64>()
            / s2;
        let f: f64 = (0..=k - 2)
            .map(|r| (beta[r + 2] * c[r + 2].c_minus).powi(2))
            .sum();
        (cc, e, f)
    } else {
        (0.0, 0.0, 0.0)
    };
    TwoQubitDensity {
        A: a,
        B: b,
        C: cc,
        D: d,
        E: e,
        F: f,
    }
}

/// Explicit k = 1 expressions.
pub fn reduced_k1(params: &FamilyParams) -> Result<TwoQubitDensity> {
    if params.k() != 1 {
        return Err(Error::domain(format!(
            "reduced_k1 needs k = 1, got {}",
            params.k()
        )));
    }
    let n = params.n() as f64;
    let a2 = params.a() * params.a();
    let denom = n * n * a2 + n * (1.0 - a2);
    Ok(TwoQubitDensity {
        A: (n * n * a2 + (n - 2.0) * (1.0 - a2)) / denom,
        B: params.a() * params.b() / (1.0 + a2 * (n - 1.0)),
        C: 0.0,
        D: (1.0 - a2) / denom,
        E: 0.0,
        F: 0.0,
    })
}

/// Explicit k = 2 amplitudes and coupling coefficients.
pub fn reduced_k2(params: &FamilyParams) -> Result<TwoQubitDensity> {
    if params.k() != 2 {
        return Err(Error::domain(format!(
            "reduced_k2 needs k = 2, got {}",
            params.k()
        )));
    }
    let n = params.n() as f64;
    let (a, b) = (params.a(), params.b());
    let raw = [
        n * (n - 1.0) / 2.0 * a * a,
        n.sqrt() * (n - 1.0) * a * b,
        (n * (n - 1.0) / 2.0).sqrt() * (1.0 - a * a),
    ];
    let norm = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [b0, b1, b2] = raw.map(|x| x / norm);

    let c1_plus = ((n - 2.0) / n).sqrt();
    let c1_zero = (2.0 / n).sqrt();
    let c2_plus = ((n - 3.0) * (n - 2.0) / (n * (n - 1.0))).sqrt();
    let c2_zero = 2.0 * ((n - 2.0) / (n * (n - 1.0))).sqrt();
    let c2_minus = (2.0 / (n * (n - 1.0))).sqrt();
    let s2 = std::f64::consts::SQRT_2;

    Ok(TwoQubitDensity {
        A: b0 * b0 + (b1 * c1_plus).powi(2) + (b2 * c2_plus).powi(2),
        B: (b0 * b1 * c1_zero + b1 * b2 * c1_plus * c2_zero) / s2,
        C: b0 * b2 * c2_minus,
        D: ((b1 * c1_zero).powi(2) + (b2 * c2_zero).powi(2)) / 2.0,
        E: b1 * b2 * c1_zero * c2_minus / s2,
        F: (b2 * c2_minus).powi(2),
    })
}

/// Reduction of an arbitrary real Dicke vector on the coupled ladder.
///
/// `|N/2, N/2-r> = Σ_{m2} c^{(r)}_{m2} |N/2-1, N/2-r-m2> ⊗ |1, m2>`; tracing
/// the spin-(N/2-1) factor pairs rung `r` with rung `r' = r + m2 - m2'`.
pub fn reduced_dicke_trace(state: &DickeVector) -> Result<TwoQubitDensity> {
    let n = state.n();
    if n < 2 {
        return Err(Error::domain("reduced_dicke_trace needs N >= 2"));
    }
    let beta = state.amps();
    let c = cg_table(n, n);
    let m2_values = [1i32, 0, -1];

    let mut spin1 = Matrix3::<f64>::zeros();
    for (row, &m2) in m2_values.iter().enumerate() {
        for (col, &m2p) in m2_values.iter().enumerate() {
            let mut acc = 0.0;
            for r in 0..=n {
                let rp = r as i64 + (m2 - m2p) as i64;
                if rp < 0 || rp > n as i64 {
                    continue;
                }
                let rp = rp as usize;
                acc += beta[r] * beta[rp] * c[r].get(m2) * c[rp].get(m2p);
            }
            spin1[(row, col)] = acc;
        }
    }

    // Columns: |1,1> = |00>, |1,0> = (|01>+|10>)/√2, |1,-1> = |11>.
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let iso = SMatrix::<f64, 4, 3>::new(
        1.0, 0.0, 0.0, //
        0.0, h, 0.0, //
        0.0, h, 0.0, //
        0.0, 0.0, 1.0,
    );
    let rho = iso * spin1 * iso.transpose();
    TwoQubitDensity::fit_template(&rho.map(C64::from))
}

/// Literal partial trace of `|ψ><ψ|` onto qubits `i` and `j` (in that order).
pub fn reduced_pair(state: &FullState, i: usize, j: usize) -> Result<Matrix4<C64>> {
    let n = state.n();
    if i >= n || j >= n || i == j {
        return Err(Error::domain(format!(
            "invalid qubit pair ({i}, {j}) for N = {n}"
        )));
    }
    let (mi, mj) = (state.qubit_mask(i), state.qubit_mask(j));
    let psi = state.amps();
    let mut rho = Matrix4::<C64>::zeros();
    for (x, &amp) in psi.iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        let row = usize::from(x & mi != 0) * 2 + usize::from(x & mj != 0);
        let rest = x & !(mi | mj);
        for col in 0..4 {
            let y = rest | if col & 2 != 0 { mi } else { 0 } | if col & 1 != 0 { mj } else { 0 };
            rho[(row, col)] += amp * psi[y].conj();
        }
    }
    Ok(rho)
}

/// Partial trace keeping qubits 0 and 1.
pub fn reduced_bruteforce(state: &FullState) -> Result<TwoQubitDensity> {
    if state.n() < 2 {
        return Err(Error::domain("reduced_bruteforce needs N >= 2"));
    }
    TwoQubitDensity::fit_template(&reduced_pair(state, 0, 1)?)
}
