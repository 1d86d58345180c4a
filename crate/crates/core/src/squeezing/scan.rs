use nalgebra::{Complex, DVector, Vector3};

use crate::angular::{collective_spin, CollectiveSpinSet};
use crate::error::{Error, Result};
use crate::state::DickeVector;

use super::{SqueezingReport, DEGENERACY_THRESHOLD};

type C64 = Complex<f64>;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanOptions {
    /// Coarse grid points over `θ ∈ [0, π)`.
    pub grid_points: usize,
    /// Bracket width at which golden-section refinement stops.
    pub tolerance: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            grid_points: 720,
            tolerance: 1e-9,
        }
    }
}

/// Golden-section minimization of a unimodal `f` on `[lo, hi]`.
pub fn golden_section_min<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// ξ from the minimum variance of the collective spin perpendicular to
/// `<J⃗>`, found by scanning the transverse angle.
pub fn xi_direction_scan(state: &DickeVector, tolerance: f64) -> Result<SqueezingReport> {
    let spin = collective_spin(state.n())?;
    xi_direction_scan_with(
        &spin,
        state,
        ScanOptions {
            tolerance,
            ..ScanOptions::default()
        },
    )
}

/// As [`xi_direction_scan`], reusing prebuilt spin matrices.
pub fn xi_direction_scan_with(
    spin: &CollectiveSpinSet,
    state: &DickeVector,
    opts: ScanOptions,
) -> Result<SqueezingReport> {
    let n = state.n();
    if n < 2 {
        return Err(Error::domain("direction scan needs N >= 2"));
    }
    if spin.n() != n {
        return Err(Error::domain(format!(
            "spin matrices are for N = {}, state has N = {n}",
            spin.n()
        )));
    }
    if opts.grid_points < 3 || !(opts.tolerance > 0.0) {
        return Err(Error::domain(
            "direction scan needs >= 3 grid points and a positive tolerance",
        ));
    }
    let half_n = n as f64 / 2.0;
    let psi = state.to_complex();
    let jpsi = [&spin.jx * &psi, &spin.jy * &psi, &spin.jz * &psi];
    let mean = Vector3::new(
        psi.dotc(&jpsi[0]).re,
        psi.dotc(&jpsi[1]).re,
        psi.dotc(&jpsi[2]).re,
    );
    let mean_len = mean.norm() / half_n;
    if !(mean_len >= DEGENERACY_THRESHOLD) {
        return Ok(SqueezingReport::degenerate(mean_len));
    }

    // Gram–Schmidt against the first coordinate axis not parallel to <J>.
    let n0 = mean.normalize();
    let seed = [Vector3::x(), Vector3::y(), Vector3::z()]
        .into_iter()
        .map(|e| e - n0 * n0.dot(&e))
        .max_by(|p, q| p.norm().total_cmp(&q.norm()))
        .expect("three axes");
    let e1 = seed.normalize();
    let e2 = n0.cross(&e1);

    let project = |dir: &Vector3<f64>| -> DVector<C64> {
        &jpsi[0] * C64::from(dir.x) + &jpsi[1] * C64::from(dir.y) + &jpsi[2] * C64::from(dir.z)
    };
    let u = project(&e1);
    let v = project(&e2);
    // <J⊥²> - <J⊥>² with J⊥ψ = cos θ u + sin θ v, evaluated per angle.
    let variance = |theta: f64| -> f64 {
        let (s, c) = theta.sin_cos();
        let mut second = 0.0;
        let mut first = 0.0;
        for ((ui, vi), pi) in u.iter().zip(v.iter()).zip(psi.iter()) {
            let w = ui * c + vi * s;
            second += w.norm_sqr();
            first += (pi.conj() * w).re;
        }
        second - first * first
    };

    let step = std::f64::consts::PI / opts.grid_points as f64;
    let (best_i, best_var) = (0..opts.grid_points)
        .map(|i| (i, variance(i as f64 * step)))
        .min_by(|p, q| p.1.total_cmp(&q.1))
        .expect("non-empty grid");
    let centre = best_i as f64 * step;
    let (theta_ref, var_ref) =
        golden_section_min(variance, centre - step, centre + step, opts.tolerance);
    let (theta, min_var) = if var_ref <= best_var {
        (theta_ref, var_ref)
    } else {
        (centre, best_var)
    };

    let min_var = min_var.max(0.0);
    let xi = 2.0 * min_var.sqrt() / (n as f64).sqrt();
    let tperp = (4.0 * min_var / n as f64 - 1.0) / (n as f64 - 1.0);
    let (s, c) = theta.sin_cos();
    Ok(SqueezingReport::from_xi(
        xi,
        tperp,
        e1 * c + e2 * s,
        mean_len,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::squeezing::xi_closed_form_family;
    use crate::state::{canonical_amplitudes, FamilyParams};

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, fx) = golden_section_min(|x| (x - 0.3).powi(2), -1.0, 2.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-9);
        assert!(fx < 1e-18);
    }

    #[test]
    fn coherent_state_sits_at_the_limit() {
        for n in [2usize, 5, 40] {
            let r = xi_direction_scan(&DickeVector::basis(n, 0).unwrap(), 1e-9).unwrap();
            assert!((r.xi.unwrap() - 1.0).abs() < 1e-12);
            assert!((r.mean_spin_len - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_excitation_dicke() {
        let r = xi_direction_scan(&DickeVector::basis(4, 1).unwrap(), 1e-9).unwrap();
        assert!((r.xi.unwrap() - 2.5f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn matches_closed_form() {
        let p = FamilyParams::new(50, 3, 0.5).unwrap();
        let scan = xi_direction_scan(&canonical_amplitudes(&p), 1e-9).unwrap();
        let closed = xi_closed_form_family(&p).unwrap();
        assert!((scan.xi.unwrap() - closed.xi.unwrap()).abs() < 1e-6);
        let dot = Vector3::from(scan.n_min.unwrap()).dot(&Vector3::from(closed.n_min.unwrap()));
        assert!((dot.abs() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn zero_mean_spin_is_degenerate() {
        let r = xi_direction_scan(&DickeVector::basis(4, 2).unwrap(), 1e-9).unwrap();
        assert!(r.degenerate && r.xi.is_none());
    }

    #[test]
    fn mismatched_spin_set() {
        let spin = collective_spin(5).unwrap();
        let v = DickeVector::basis(4, 0).unwrap();
        assert!(xi_direction_scan_with(&spin, &v, ScanOptions::default()).is_err());
    }
}
