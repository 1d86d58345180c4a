//! Canonical two-spinor states on the Dicke ladder, and the full 2^N
//! embedding used by the brute-force oracles.

use nalgebra::{Complex, DVector};
use serde::{Deserialize, Serialize};

use crate::angular::{LogFactorialTable, DICKE_N_MAX, TENSOR_N_MAX};
use crate::error::{Error, Result};

type C64 = Complex<f64>;

const NORM_TOL: f64 = 1e-12;

/// Labels the canonical state with `N - k` copies of `|0>` and `k` copies of
/// `a|0> + b|1>`, `b = sqrt(1 - a^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    n: usize,
    k: usize,
    a: f64,
}

impl FamilyParams {
    pub fn new(n: usize, k: usize, a: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("family needs N >= 2, got {n}")));
        }
        if n > DICKE_N_MAX {
            return Err(Error::ResourceLimit {
                what: "family state",
                n,
                max: DICKE_N_MAX,
            });
        }
        if k < 1 || k > n / 2 {
            return Err(Error::domain(format!(
                "family needs 1 <= k <= floor(N/2) = {}, got k = {k}",
                n / 2
            )));
        }
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::domain(format!(
                "family needs 0 <= a <= 1, got a = {a}"
            )));
        }
        Ok(Self { n, k, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        (1.0 - self.a * self.a).max(0.0).sqrt()
    }

    pub fn with_a(&self, a: f64) -> Result<Self> {
        Self::new(self.n, self.k, a)
    }
}

/// Single-qubit state `amp0 |0> + amp1 e^{i phase} |1>`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spinor {
    amp0: f64,
    amp1: f64,
    phase: f64,
}

impl Spinor {
    pub fn new(amp0: f64, amp1: f64, phase: f64) -> Result<Self> {
        let norm_sq = amp0 * amp0 + amp1 * amp1;
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORM_TOL || !phase.is_finite() {
            return Err(Error::UnnormalizedSpinor { norm_sq });
        }
        Ok(Self { amp0, amp1, phase })
    }

    pub fn zero() -> Self {
        Self {
            amp0: 1.0,
            amp1: 0.0,
            phase: 0.0,
        }
    }

    pub fn one() -> Self {
        Self {
            amp0: 0.0,
            amp1: 1.0,
            phase: 0.0,
        }
    }

    /// `a|0> + sqrt(1 - a^2)|1>`.
    pub fn canonical(a: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::domain(format!(
                "canonical spinor needs 0 <= a <= 1, got {a}"
            )));
        }
        Ok(Self {
            amp0: a,
            amp1: (1.0 - a * a).max(0.0).sqrt(),
            phase: 0.0,
        })
    }

    pub fn amp0(&self) -> f64 {
        self.amp0
    }

    pub fn amp1(&self) -> f64 {
        self.amp1
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// Complex components `(<0|ε>, <1|ε>)`.
    pub fn components(&self) -> [C64; 2] {
        [
            C64::new(self.amp0, 0.0),
            C64::from_polar(self.amp1, self.phase),
        ]
    }
}

/// Real amplitudes over `|N/2, N/2 - r>`, `r = 0..=N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDicke")]
pub struct DickeVector {
    #[serde(rename = "N")]
    n: usize,
    amps: Vec<f64>,
}

#[derive(Deserialize)]
struct RawDicke {
    #[serde(rename = "N")]
    n: usize,
    amps: Vec<f64>,
}

impl TryFrom<RawDicke> for DickeVector {
    type Error = Error;

    fn try_from(raw: RawDicke) -> Result<Self> {
        DickeVector::new(raw.n, raw.amps)
    }
}

impl DickeVector {
    pub fn new(n: usize, amps: Vec<f64>) -> Result<Self> {
        if amps.len() != n + 1 {
            return Err(Error::domain(format!(
                "Dicke vector for N = {n} needs {} amplitudes, got {}",
                n + 1,
                amps.len()
            )));
        }
        if n > DICKE_N_MAX {
            return Err(Error::ResourceLimit {
                what: "Dicke vector",
                n,
                max: DICKE_N_MAX,
            });
        }
        let norm = amps.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::domain(format!(
                "Dicke vector has norm {norm}, expected 1"
            )));
        }
        Ok(Self { n, amps })
    }

    /// Normalizes `amps` before validating.
    pub fn normalized(n: usize, mut amps: Vec<f64>) -> Result<Self> {
        let norm = amps.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::domain("cannot normalize a zero Dicke vector"));
        }
        amps.iter_mut().for_each(|x| *x /= norm);
        Self::new(n, amps)
    }

    /// The Dicke state `|N/2, N/2 - r>`.
    pub fn basis(n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(Error::domain(format!(
                "Dicke index r = {r} exceeds N = {n}"
            )));
        }
        let mut amps = vec![0.0; n + 1];
        amps[r] = 1.0;
        Self::new(n, amps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[f64] {
        &self.amps
    }

    pub fn to_complex(&self) -> DVector<C64> {
        DVector::from_iterator(self.amps.len(), self.amps.iter().map(|&x| C64::from(x)))
    }
}

/// Amplitudes of the canonical state, computed in log space and renormalized.
pub fn canonical_amplitudes(params: &FamilyParams) -> DickeVector {
    let (n, k) = (params.n, params.k);
    let table = LogFactorialTable::new(n);
    let ln_a = params.a.ln();
    let ln_b = params.b().ln();
    let mut logs = vec![f64::NEG_INFINITY; n + 1];
    for (r, slot) in logs.iter_mut().enumerate().take(k + 1) {
        *slot = 0.5 * (table.ln_factorial(n) + table.ln_factorial(n - r) - table.ln_factorial(r))
            + pow_log(ln_a, k - r)
            + pow_log(ln_b, r)
            - table.ln_factorial(n - k)
            - table.ln_factorial(k - r);
    }
    let amps = exp_normalize(&logs);
    DickeVector { n, amps }
}

/// `e * ln(x)` with the convention `0^0 = 1`.
fn pow_log(ln_x: f64, e: usize) -> f64 {
    if e == 0 {
        0.0
    } else {
        e as f64 * ln_x
    }
}

fn exp_normalize(logs: &[f64]) -> Vec<f64> {
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut out: Vec<f64> = logs.iter().map(|&l| (l - max).exp()).collect();
    let norm = out.iter().map(|x| x * x).sum::<f64>().sqrt();
    out.iter_mut().for_each(|x| *x /= norm);
    out
}

/// Normalized Dicke components of the symmetrized product of `N - k` copies
/// of `eps1` and `k` copies of `eps2`, keeping relative phases.
pub fn two_spinor_expansion_complex(
    eps1: &Spinor,
    eps2: &Spinor,
    n: usize,
    k: usize,
) -> Result<Vec<C64>> {
    if n < 2 || k < 1 || k > n / 2 {
        return Err(Error::domain(format!(
            "two-spinor expansion needs N >= 2 and 1 <= k <= N/2, got N = {n}, k = {k}"
        )));
    }
    if n > DICKE_N_MAX {
        return Err(Error::ResourceLimit {
            what: "two-spinor expansion",
            n,
            max: DICKE_N_MAX,
        });
    }
    let table = LogFactorialTable::new(n);
    let m = n - k;
    let (a1, b1) = (eps1.amp0.abs().ln(), eps1.amp1.abs().ln());
    let (a2, b2) = (eps2.amp0.abs().ln(), eps2.amp1.abs().ln());
    let sign = |x: f64, e: usize| if x < 0.0 && e % 2 == 1 { -1.0 } else { 1.0 };

    // (log magnitude, unit phase) per term, then one global shift.
    let mut terms: Vec<(usize, f64, C64)> = Vec::new();
    for r in 0..=n {
        let j_lo = r.saturating_sub(k);
        let j_hi = r.min(m);
        for j in j_lo..=j_hi {
            let i = r - j;
            let log_mag = table.ln_binomial(m, j) + table.ln_binomial(k, i)
                - 0.5 * table.ln_binomial(n, r)
                + pow_log(a1, m - j)
                + pow_log(b1, j)
                + pow_log(a2, k - i)
                + pow_log(b2, i);
            if log_mag == f64::NEG_INFINITY {
                continue;
            }
            let s = sign(eps1.amp0, m - j)
                * sign(eps1.amp1, j)
                * sign(eps2.amp0, k - i)
                * sign(eps2.amp1, i);
            let phase = C64::from_polar(s, j as f64 * eps1.phase + i as f64 * eps2.phase);
            terms.push((r, log_mag, phase));
        }
    }
    let max = terms.iter().map(|t| t.1).fold(f64::NEG_INFINITY, f64::max);
    let mut amps = vec![C64::new(0.0, 0.0); n + 1];
    for (r, log_mag, phase) in terms {
        amps[r] += phase * (log_mag - max).exp();
    }
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::domain("symmetrized spinor product vanished"));
    }
    amps.iter_mut().for_each(|z| *z /= norm);
    Ok(amps)
}

/// Real Dicke amplitudes of the symmetrized two-spinor product, with the
/// global phase fixed so the largest component is positive.
///
/// Identical spinors give the product state; relative phases that survive
/// the global phase fix are reported as [`Error::ComplexAmplitudes`].
pub fn two_spinor_expansion(
    eps1: &Spinor,
    eps2: &Spinor,
    n: usize,
    k: usize,
) -> Result<DickeVector> {
    let amps = two_spinor_expansion_complex(eps1, eps2, n, k)?;
    let pivot = amps
        .iter()
        .copied()
        .max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
        .expect("non-empty");
    let unphase = pivot.conj() / pivot.norm();
    let rotated: Vec<C64> = amps.iter().map(|z| z * unphase).collect();
    let residue = rotated.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if residue > NORM_TOL {
        return Err(Error::ComplexAmplitudes { residue });
    }
    DickeVector::normalized(n, rotated.iter().map(|z| z.re).collect())
}

/// State vector on the full 2^N space. Qubit 0 is the most significant bit
/// of the basis index; a set bit means `|1>`.
#[derive(Clone, Debug, PartialEq)]
pub struct FullState {
    n: usize,
    amps: Vec<C64>,
}

impl FullState {
    pub fn new(n: usize, amps: Vec<C64>) -> Result<Self> {
        if n > TENSOR_N_MAX {
            return Err(Error::ResourceLimit {
                what: "full tensor state",
                n,
                max: TENSOR_N_MAX,
            });
        }
        if amps.len() != 1 << n {
            return Err(Error::domain(format!(
                "full state for N = {n} needs {} amplitudes, got {}",
                1usize << n,
                amps.len()
            )));
        }
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::domain(format!(
                "full state has norm {norm}, expected 1"
            )));
        }
        Ok(Self { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    /// Bit mask selecting qubit `q` in a basis index.
    pub fn qubit_mask(&self, q: usize) -> usize {
        1 << (self.n - 1 - q)
    }

    /// Copy with qubit labels `i` and `j` exchanged.
    pub fn swap_qubits(&self, i: usize, j: usize) -> FullState {
        let (mi, mj) = (self.qubit_mask(i), self.qubit_mask(j));
        let mut amps = self.amps.clone();
        for (x, slot) in amps.iter_mut().enumerate() {
            let bi = x & mi != 0;
            let bj = x & mj != 0;
            let y = if bi != bj { x ^ mi ^ mj } else { x };
            *slot = self.amps[y];
        }
        FullState { n: self.n, amps }
    }

    /// Largest amplitude change under any single transposition of qubits.
    pub fn exchange_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let swapped = self.swap_qubits(i, j);
                for (p, q) in self.amps.iter().zip(&swapped.amps) {
                    worst = worst.max((p - q).norm());
                }
            }
        }
        worst
    }

    /// Components along the normalized Dicke kets.
    pub fn dicke_components(&self) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); self.n + 1];
        for (x, z) in self.amps.iter().enumerate() {
            out[x.count_ones() as usize] += z;
        }
        let table = LogFactorialTable::new(self.n);
        for (r, z) in out.iter_mut().enumerate() {
            *z *= (-0.5 * table.ln_binomial(self.n, r)).exp();
        }
        out
    }

    /// Projection back onto the real Dicke ladder.
    pub fn project(&self) -> Result<DickeVector> {
        let comps = self.dicke_components();
        let residue = comps.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        if residue > NORM_TOL {
            return Err(Error::ComplexAmplitudes { residue });
        }
        DickeVector::new(self.n, comps.iter().map(|z| z.re).collect())
    }
}

/// Embeds `|N/2, N/2 - r>` as the normalized sum of all basis kets with `r`
/// ones.
pub fn full_tensor(state: &DickeVector) -> Result<FullState> {
    let n = state.n;
    if n > TENSOR_N_MAX {
        return Err(Error::ResourceLimit {
            what: "full_tensor",
            n,
            max: TENSOR_N_MAX,
        });
    }
    let table = LogFactorialTable::new(n);
    let weights: Vec<f64> = (0..=n)
        .map(|r| state.amps[r] * (-0.5 * table.ln_binomial(n, r)).exp())
        .collect();
    let amps = (0..1usize << n)
        .map(|x| C64::from(weights[x.count_ones() as usize]))
        .collect();
    FullState::new(n, amps)
}
