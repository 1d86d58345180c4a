//! Kitagawa–Ueda squeezing parameter from two-qubit correlations.
//!
//! For a symmetric N-qubit state, `ξ² = 1 + (N-1) min_{n̂ ⊥ n̂0} n̂ᵀ T n̂`,
//! where `T` is the two-qubit Pauli correlation matrix and `n̂0` the mean spin
//! direction. [`xi_direction_scan`] computes the same quantity from the
//! collective spin variance and serves as the independent check.

mod scan;
mod threshold;

pub use scan::{golden_section_min, xi_direction_scan, xi_direction_scan_with, ScanOptions};
pub use threshold::{grid_min_xi, refined_min_xi, squeezing_threshold, MinimumXi, Side, Threshold};

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reduction::{reduced_closed_form, TwoQubitDensity};
use crate::state::FamilyParams;

/// Mean spin lengths (relative to N/2) below this have no defined direction.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

/// A state counts as squeezed when `ξ < 1 - SQUEEZED_TOL`.
pub const SQUEEZED_TOL: f64 = 1e-9;

/// Radicands between this floor and zero are rounding and clamp to zero.
pub const RADICAND_FLOOR: f64 = -1e-10;

/// Qubit orientation `s_i = Tr[ρ σ_i⊗I]` and correlations `t_ij = Tr[ρ σ_i⊗σ_j]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochCorrelation {
    pub s: Vector3<f64>,
    pub t: Matrix3<f64>,
}

impl BlochCorrelation {
    /// Rotates both `s` and `T` by `rot` (`T ↦ R T Rᵀ`).
    pub fn rotated(&self, rot: &Matrix3<f64>) -> Self {
        Self {
            s: rot * self.s,
            t: rot * self.t * rot.transpose(),
        }
    }
}

/// Right-handed orthonormal frame with `n0` along the mean spin and
/// `n1 × n2 = n0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinTriad {
    pub n0: Vector3<f64>,
    pub n1: Vector3<f64>,
    pub n2: Vector3<f64>,
}

impl SpinTriad {
    /// Deterministic completion of an arbitrary direction: `n1` is the
    /// coordinate axis least aligned with `dir`, orthogonalized.
    pub fn complete(dir: &Vector3<f64>) -> Result<Self> {
        let len = dir.norm();
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::DegenerateMeanSpin { length: len });
        }
        let n0 = dir / len;
        let axis = n0.iamin();
        let mut helper = Vector3::zeros();
        helper[axis] = 1.0;
        let n1 = (helper - n0 * n0.dot(&helper)).normalize();
        let n2 = n0.cross(&n1);
        Ok(Self { n0, n1, n2 })
    }

    /// Largest deviation from orthonormality.
    pub fn orthonormality_error(&self) -> f64 {
        let v = [self.n0, self.n1, self.n2];
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v[i].dot(&v[j]) - want).abs());
            }
        }
        worst
    }
}

/// Result of a squeezing evaluation. `xi`, `tperp_min` and `n_min` are absent
/// when the mean spin is degenerate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SqueezingReport {
    pub xi: Option<f64>,
    pub tperp_min: Option<f64>,
    pub n_min: Option<[f64; 3]>,
    pub mean_spin_len: f64,
    pub squeezed: bool,
    pub degenerate: bool,
}

impl SqueezingReport {
    pub(crate) fn degenerate(mean_spin_len: f64) -> Self {
        Self {
            xi: None,
            tperp_min: None,
            n_min: None,
            mean_spin_len,
            squeezed: false,
            degenerate: true,
        }
    }

    pub(crate) fn from_xi(
        xi: f64,
        tperp_min: f64,
        n_min: Vector3<f64>,
        mean_spin_len: f64,
    ) -> Self {
        Self {
            xi: Some(xi),
            tperp_min: Some(tperp_min),
            n_min: Some([n_min.x, n_min.y, n_min.z]),
            mean_spin_len,
            squeezed: xi < 1.0 - SQUEEZED_TOL,
            degenerate: false,
        }
    }

    /// `ξ`, or [`Error::DegenerateMeanSpin`] for a flagged report.
    pub fn xi_value(&self) -> Result<f64> {
        self.xi.ok_or(Error::DegenerateMeanSpin {
            length: self.mean_spin_len,
        })
    }
}

/// Orientation and correlations of the symmetric template.
pub fn bloch_correlation(rho: &TwoQubitDensity) -> BlochCorrelation {
    let TwoQubitDensity { A, B, C, D, E, F } = *rho;
    let txx = 2.0 * (C + D);
    let tyy = 2.0 * (D - C);
    let tzz = A - 2.0 * D + F;
    let txz = 2.0 * (B - E);
    BlochCorrelation {
        s: Vector3::new(2.0 * (B + E), 0.0, A - F),
        t: Matrix3::new(
            txx, 0.0, txz, //
            0.0, tyy, 0.0, //
            txz, 0.0, tzz,
        ),
    }
}

/// Frame with `n0 = s/|s|`. For `s_y = 0` this is `n1 = ŷ`,
/// `n2 = (-s_z, 0, s_x)/|s|`; otherwise [`SpinTriad::complete`].
pub fn mean_spin_triad(bc: &BlochCorrelation) -> Result<SpinTriad> {
    let len = bc.s.norm();
    if !(len >= DEGENERACY_THRESHOLD) {
        return Err(Error::DegenerateMeanSpin { length: len });
    }
    if bc.s.y != 0.0 {
        return SpinTriad::complete(&bc.s);
    }
    let (sx, sz) = (bc.s.x, bc.s.z);
    Ok(SpinTriad {
        n0: Vector3::new(sx / len, 0.0, sz / len),
        n1: Vector3::new(0.0, 1.0, 0.0),
        n2: Vector3::new(-sz / len, 0.0, sx / len),
    })
}

/// Smallest eigenvalue of `T` restricted to `span(n1, n2)`, and a unit
/// direction attaining it.
pub fn tperp_min(bc: &BlochCorrelation, triad: &SpinTriad) -> (f64, Vector3<f64>) {
    let t = &bc.t;
    let p = triad.n1.dot(&(t * triad.n1));
    let q = triad.n2.dot(&(t * triad.n2));
    let u = triad.n1.dot(&(t * triad.n2));
    let lambda = 0.5 * ((p + q) - ((p - q).powi(2) + 4.0 * u * u).sqrt());

    // (p - λ) v1 + u v2 = 0 and u v1 + (q - λ) v2 = 0; take the better
    // conditioned of the two null vectors.
    let cand_a = (u, lambda - p);
    let cand_b = (lambda - q, u);
    let norm = |c: (f64, f64)| c.0.hypot(c.1);
    let (v1, v2) = if norm(cand_a).max(norm(cand_b)) <= 1e-15 * (p.abs() + q.abs()).max(1e-300) {
        if p <= q {
            (1.0, 0.0)
        } else {
            (0.0, 1.0)
        }
    } else if norm(cand_a) >= norm(cand_b) {
        cand_a
    } else {
        cand_b
    };
    let dir = (triad.n1 * v1 + triad.n2 * v2).normalize();
    (lambda, dir)
}

fn radicand_to_xi(value: f64) -> Result<f64> {
    if value < RADICAND_FLOOR || value.is_nan() {
        return Err(Error::NegativeRadicand { value });
    }
    Ok(value.max(0.0).sqrt())
}

/// ξ from orientation and correlation data of an N-qubit symmetric state.
pub fn xi_from_bloch(bc: &BlochCorrelation, n: usize) -> Result<SqueezingReport> {
    let len = bc.s.norm();
    let triad = match mean_spin_triad(bc) {
        Ok(t) => t,
        Err(Error::DegenerateMeanSpin { .. }) => return Ok(SqueezingReport::degenerate(len)),
        Err(e) => return Err(e),
    };
    let (t_min, dir) = tperp_min(bc, &triad);
    let xi = radicand_to_xi(1.0 + (n as f64 - 1.0) * t_min)?;
    Ok(SqueezingReport::from_xi(xi, t_min, dir, len))
}

/// ξ from a two-qubit reduced matrix of an N-qubit symmetric state.
pub fn xi_from_density(rho: &TwoQubitDensity, n: usize) -> Result<SqueezingReport> {
    xi_from_bloch(&bloch_correlation(rho), n)
}

/// ξ of the canonical family state through the generic correlation path.
pub fn xi(params: &FamilyParams) -> Result<SqueezingReport> {
    xi_from_density(&reduced_closed_form(params), params.n())
}

/// ξ of the canonical family state from the rational expression for
/// `n̂2ᵀ T n̂2` in the six matrix entries.
pub fn xi_closed_form_family(params: &FamilyParams) -> Result<SqueezingReport> {
    let TwoQubitDensity { A, B, C, D, E, F } = reduced_closed_form(params);
    let sx = 2.0 * (B + E);
    let sz = A - F;
    let denom = 4.0 * (B + E).powi(2) + (A - F).powi(2);
    let len = denom.sqrt();
    if !(len >= DEGENERACY_THRESHOLD) {
        return Ok(SqueezingReport::degenerate(len));
    }
    let numer = 2.0 * (A - F).powi(2) * (C + D) + 4.0 * (B + E).powi(2) * (1.0 - 4.0 * D)
        - 8.0 * (A - F) * (B * B - E * E);
    let t_min = numer / denom;
    let xi = radicand_to_xi(1.0 + (params.n() as f64 - 1.0) * t_min)?;
    Ok(SqueezingReport::from_xi(
        xi,
        t_min,
        Vector3::new(-sz / len, 0.0, sx / len),
        len,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::reduced_k1;

    fn family(n: usize, k: usize, a: f64) -> FamilyParams {
        FamilyParams::new(n, k, a).unwrap()
    }

    fn rho(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> TwoQubitDensity {
        TwoQubitDensity {
            A: a,
            B: b,
            C: c,
            D: d,
            E: e,
            F: f,
        }
    }

    #[test]
    fn bloch_of_product_and_w() {
        let bc = bloch_correlation(&rho(1.0, 0.0, 0.0, 0.0, 0.0, 0.0));
        assert_eq!(bc.s, Vector3::new(0.0, 0.0, 1.0));
        assert_eq!(bc.t, Matrix3::from_diagonal(&Vector3::new(0.0, 0.0, 1.0)));

        let third = 1.0 / 3.0;
        let bc = bloch_correlation(&rho(third, 0.0, 0.0, third, 0.0, 0.0));
        assert!((bc.s - Vector3::new(0.0, 0.0, third)).norm() < 1e-15);
        assert!((bc.t[(0, 0)] - 2.0 * third).abs() < 1e-15);
        assert!((bc.t[(1, 1)] - 2.0 * third).abs() < 1e-15);
        assert!((bc.t[(2, 2)] + third).abs() < 1e-15);
        assert_eq!(bc.t, bc.t.transpose());
    }

    #[test]
    fn triad_examples() {
        let bc = |s: Vector3<f64>| BlochCorrelation {
            s,
            t: Matrix3::zeros(),
        };
        let tr = mean_spin_triad(&bc(Vector3::z())).unwrap();
        assert_eq!(tr.n0, Vector3::z());
        assert_eq!(tr.n1, Vector3::y());
        assert_eq!(tr.n2, -Vector3::x());

        let tr = mean_spin_triad(&bc(Vector3::x())).unwrap();
        assert_eq!(tr.n0, Vector3::x());
        assert_eq!(tr.n2, Vector3::z());

        assert!(matches!(
            mean_spin_triad(&bc(Vector3::zeros())),
            Err(Error::DegenerateMeanSpin { .. })
        ));

        let tr = mean_spin_triad(&bc(Vector3::new(0.3, -0.5, 0.2))).unwrap();
        assert!(tr.orthonormality_error() < 1e-12);
        assert!((tr.n1.cross(&tr.n2) - tr.n0).norm() < 1e-12);
    }

    #[test]
    fn tperp_examples() {
        let tri = SpinTriad {
            n0: Vector3::z(),
            n1: Vector3::x(),
            n2: Vector3::y(),
        };
        let bc = BlochCorrelation {
            s: Vector3::z(),
            t: Matrix3::from_diagonal(&Vector3::new(0.2, 0.5, 0.9)),
        };
        let (v, dir) = tperp_min(&bc, &tri);
        assert!((v - 0.2).abs() < 1e-15);
        assert!((dir.dot(&Vector3::x()).abs() - 1.0).abs() < 1e-15);

        let (t, u) = (0.4, -0.15);
        let bc = BlochCorrelation {
            s: Vector3::z(),
            t: Matrix3::new(t, u, 0.0, u, t, 0.0, 0.0, 0.0, 1.0),
        };
        let (v, dir) = tperp_min(&bc, &tri);
        assert!((v - (t - u.abs())).abs() < 1e-15);
        assert!((dir.dot(&(bc.t * dir)) - v).abs() < 1e-14);
    }

    #[test]
    fn k1_expression_matches_generic() {
        let p = family(20, 1, 0.6);
        let r = reduced_k1(&p).unwrap();
        let printed = 2.0 * (r.A * r.A * r.D - 2.0 * r.B * r.B) / (4.0 * r.B * r.B + r.A * r.A);
        let report = xi(&p).unwrap();
        assert!((report.tperp_min.unwrap() - printed).abs() < 1e-12);
    }

    #[test]
    fn coherent_and_dicke_values() {
        for (n, k) in [(2, 1), (4, 2), (17, 5)] {
            let r = xi(&family(n, k, 1.0)).unwrap();
            assert!((r.xi.unwrap() - 1.0).abs() < 1e-12);
            assert!(!r.squeezed);
        }
        // N = 2, k = 1, a = 0 is the zero-mean-spin Bell state.
        for n in [3usize, 4, 9, 50] {
            let want = ((3.0 * n as f64 - 2.0) / n as f64).sqrt();
            let r = xi(&family(n, 1, 0.0)).unwrap();
            assert!((r.xi.unwrap() - want).abs() < 1e-10, "N={n}");
        }
        assert!((xi(&family(4, 1, 0.0)).unwrap().xi.unwrap() - 2.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn squeezed_point() {
        let r = xi(&family(20, 1, 0.6)).unwrap();
        assert!(r.squeezed && r.xi.unwrap() < 1.0);
    }

    #[test]
    fn degenerate_is_flagged() {
        let r = xi(&family(4, 2, 0.0)).unwrap();
        assert!(r.degenerate && r.xi.is_none() && !r.squeezed);
        assert!(matches!(
            r.xi_value(),
            Err(Error::DegenerateMeanSpin { .. })
        ));
        let c = xi_closed_form_family(&family(4, 2, 0.0)).unwrap();
        assert!(c.degenerate);
    }

    #[test]
    fn closed_form_family_agrees() {
        for (n, k, a) in [(100, 5, 0.3), (20, 1, 0.6), (7, 3, 0.9), (2, 1, 0.5)] {
            let p = family(n, k, a);
            let g = xi(&p).unwrap();
            let c = xi_closed_form_family(&p).unwrap();
            assert!((g.xi.unwrap() - c.xi.unwrap()).abs() < 1e-12);
        }
        assert!(
            (xi_closed_form_family(&family(30, 4, 1.0))
                .unwrap()
                .xi
                .unwrap()
                - 1.0)
                .abs()
                < 1e-12
        );
    }

    #[test]
    fn negative_radicand_is_an_error() {
        let bc = BlochCorrelation {
            s: Vector3::z(),
            t: Matrix3::from_diagonal(&Vector3::new(-1.0, -1.0, 1.0)),
        };
        assert!(matches!(
            xi_from_bloch(&bc, 10),
            Err(Error::NegativeRadicand { .. })
        ));
    }

    #[test]
    fn report_json_fields() {
        let r = xi(&family(4, 1, 1.0)).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        for k in [
            "xi",
            "tperp_min",
            "n_min",
            "mean_spin_len",
            "squeezed",
            "degenerate",
        ] {
            assert!(keys.contains(&k));
        }
    }
}
