use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coupling coefficients `<N/2-1, m-m2; 1, m2 | N/2, m>` with `m = N/2 - r`,
/// for `m2 = +1, 0, -1`.
///
/// Each triple is one row of an orthogonal coupling transformation, so the
/// squares sum to one.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CgTriple {
    pub c_plus: f64,
    pub c_zero: f64,
    pub c_minus: f64,
}

impl CgTriple {
    /// Coefficient for `m2 ∈ {1, 0, -1}`.
    pub fn get(&self, m2: i32) -> f64 {
        match m2 {
            1 => self.c_plus,
            0 => self.c_zero,
            -1 => self.c_minus,
            _ => 0.0,
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.c_plus * self.c_plus + self.c_zero * self.c_zero + self.c_minus * self.c_minus
    }
}

/// Closed-form coefficients for the r-th rung of the spin-N/2 ladder. All
/// three are taken non-negative.
pub fn cg_triple(n: usize, r: usize) -> Result<CgTriple> {
    if n < 2 {
        return Err(Error::domain(format!("cg_triple needs N >= 2, got {n}")));
    }
    if r > n {
        return Err(Error::domain(format!(
            "cg_triple needs r <= N = {n}, got {r}"
        )));
    }
    let nf = n as f64;
    let rf = r as f64;
    let denom = nf * (nf - 1.0);
    // (N-r)(N-r-1) is zero, not negative, at r = N.
    let plus = ((n - r) as f64) * ((n - r).saturating_sub(1) as f64);
    let minus = rf * (r.saturating_sub(1) as f64);
    Ok(CgTriple {
        c_plus: (plus / denom).sqrt(),
        c_zero: (2.0 * rf * (nf - rf) / denom).sqrt(),
        c_minus: (minus / denom).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_rung_is_pure() {
        for n in 2..20 {
            let c = cg_triple(n, 0).unwrap();
            assert_eq!((c.c_plus, c.c_zero, c.c_minus), (1.0, 0.0, 0.0));
        }
    }

    #[test]
    fn four_qubit_values() {
        let c = cg_triple(4, 1).unwrap();
        assert!((c.c_plus - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((c.c_zero - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(c.c_minus, 0.0);

        let c = cg_triple(4, 2).unwrap();
        assert!((c.c_plus - (1.0f64 / 6.0).sqrt()).abs() < 1e-15);
        assert!((c.c_zero - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((c.c_minus - (1.0f64 / 6.0).sqrt()).abs() < 1e-15);
        assert!((c.norm_sq() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bottom_rung() {
        let c = cg_triple(5, 5).unwrap();
        assert_eq!(c.c_plus, 0.0);
        assert_eq!(c.c_zero, 0.0);
        assert!((c.c_minus - 1.0).abs() < 1e-15);
    }

    #[test]
    fn row_norm_up_to_500() {
        for n in 2..=500 {
            for r in 0..=n {
                let c = cg_triple(n, r).unwrap();
                assert!((c.norm_sq() - 1.0).abs() < 1e-12, "N={n} r={r}");
                for v in [c.c_plus, c.c_zero, c.c_minus] {
                    assert!((0.0..=1.0).contains(&v));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(matches!(cg_triple(1, 0), Err(Error::Domain(_))));
        assert!(matches!(cg_triple(4, 5), Err(Error::Domain(_))));
    }
}
