//! Where ξ(a) crosses the coherent-state limit for fixed (N, k).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::FamilyParams;

use super::scan::golden_section_min;
use super::{xi_closed_form_family, SQUEEZED_TOL};

const BISECTION_TOL: f64 = 1e-10;
const THRESHOLD_GRID: usize = 201;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Boundary between the Dicke endpoint and the squeezed region.
    Low,
    /// Boundary between the squeezed region and the coherent endpoint.
    High,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "a", rename_all = "snake_case")]
pub enum Threshold {
    /// ξ(a) = 1 at an interior point.
    Crossing(f64),
    /// ξ < 1 all the way to this endpoint.
    Endpoint(f64),
    /// ξ < 1 all the way to an endpoint where the mean spin vanishes.
    DegenerateEndpoint(f64),
}

impl Threshold {
    pub fn value(&self) -> f64 {
        match *self {
            Threshold::Crossing(a) | Threshold::Endpoint(a) | Threshold::DegenerateEndpoint(a) => a,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimumXi {
    pub xi: f64,
    pub a: f64,
}

/// `Some(ξ)` or `None` for a degenerate mean spin.
fn xi_at(n: usize, k: usize, a: f64) -> Result<Option<f64>> {
    Ok(xi_closed_form_family(&FamilyParams::new(n, k, a)?)?.xi)
}

fn grid(points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::domain("a-grid needs at least 2 points"));
    }
    let last = (points - 1) as f64;
    Ok((0..points).map(|i| i as f64 / last).collect())
}

/// Minimum of ξ over `a = i/(points-1)`, skipping degenerate points.
pub fn grid_min_xi(n: usize, k: usize, points: usize) -> Result<MinimumXi> {
    let mut best: Option<MinimumXi> = None;
    for a in grid(points)? {
        if let Some(x) = xi_at(n, k, a)? {
            if best.is_none_or(|b| x < b.xi) {
                best = Some(MinimumXi { xi: x, a });
            }
        }
    }
    best.ok_or_else(|| Error::domain("every grid point is degenerate"))
}

/// Grid minimum polished by golden-section search between its neighbours.
pub fn refined_min_xi(n: usize, k: usize, points: usize) -> Result<MinimumXi> {
    let coarse = grid_min_xi(n, k, points)?;
    let h = 1.0 / (points - 1) as f64;
    let lo = (coarse.a - h).max(0.0);
    let hi = (coarse.a + h).min(1.0);
    let objective = |a: f64| match xi_at(n, k, a.clamp(0.0, 1.0)) {
        Ok(Some(x)) => x,
        _ => f64::INFINITY,
    };
    let (a, x) = golden_section_min(objective, lo, hi, BISECTION_TOL);
    Ok(if x < coarse.xi {
        MinimumXi { xi: x, a }
    } else {
        coarse
    })
}

/// Boundary of the squeezed region on the chosen side of the minimum.
///
/// Bisects on the sign of `ξ(a) - 1`, treating degenerate points as
/// unsqueezed. [`Error::NoRoot`] when no grid point is squeezed.
pub fn squeezing_threshold(n: usize, k: usize, side: Side) -> Result<Threshold> {
    FamilyParams::new(n, k, 1.0)?;
    let a_grid = grid(THRESHOLD_GRID)?;
    let values: Vec<Option<f64>> = a_grid
        .iter()
        .map(|&a| xi_at(n, k, a))
        .collect::<Result<_>>()?;
    let (i_min, x_min) = values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|x| (i, x)))
        .min_by(|p, q| p.1.total_cmp(&q.1))
        .ok_or(Error::NoRoot { n, k })?;
    if x_min >= 1.0 - SQUEEZED_TOL {
        return Err(Error::NoRoot { n, k });
    }

    let below = |a: f64| -> Result<bool> { Ok(matches!(xi_at(n, k, a)?, Some(x) if x < 1.0)) };

    let outside = match side {
        Side::Low => (0..i_min)
            .rev()
            .find(|&i| !matches!(values[i], Some(x) if x < 1.0)),
        Side::High => (i_min + 1..a_grid.len()).find(|&i| !matches!(values[i], Some(x) if x < 1.0)),
    };
    let Some(j) = outside else {
        let end = if side == Side::Low { 0.0 } else { 1.0 };
        return Ok(Threshold::Endpoint(end));
    };
    let inner = match side {
        Side::Low => j + 1,
        Side::High => j - 1,
    };

    let (mut out_a, mut in_a) = (a_grid[j], a_grid[inner]);
    let mut moved = false;
    while (out_a - in_a).abs() > BISECTION_TOL {
        let mid = 0.5 * (out_a + in_a);
        if below(mid)? {
            in_a = mid;
        } else {
            out_a = mid;
            moved = true;
        }
    }
    let endpoint = a_grid[j];
    // Squeezing that persists until the mean spin itself vanishes has no
    // ξ = 1 crossing; the bisection stops at the degeneracy cut instead.
    if values[j].is_none() && xi_at(n, k, out_a)?.is_none() {
        return Ok(Threshold::DegenerateEndpoint(endpoint));
    }
    if !moved && (endpoint == 0.0 || endpoint == 1.0) {
        return Ok(Threshold::Endpoint(endpoint));
    }
    Ok(Threshold::Crossing(0.5 * (out_a + in_a)))
}
