//! Parameter sweeps over (N, k, a) and their tabular output.

mod config;
mod output;
mod plot;

pub use config::{parse_n_list, AGrid, Format, KSelection, Mode, SweepConfig};
pub use output::{
    emit_csv, emit_json, emit_thresholds, format_real, parse_csv, write_csv, write_json,
    write_thresholds_csv, write_thresholds_json,
};
pub use plot::{emit_plot, render_svg};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angular::{collective_spin, CollectiveSpinSet};
use crate::error::{Error, Result};
use crate::squeezing::{
    refined_min_xi, squeezing_threshold, xi, xi_closed_form_family, xi_direction_scan_with,
    ScanOptions, Side, SqueezingReport, Threshold,
};
use crate::state::{canonical_amplitudes, FamilyParams};

/// Grid used for the minimum in threshold tables.
pub const THRESHOLD_MIN_GRID: usize = 201;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    #[serde(rename = "N")]
    pub n: usize,
    pub k: usize,
    pub a: f64,
    pub xi: Option<f64>,
    pub tperp_min: Option<f64>,
    pub mean_spin_len: f64,
    pub squeezed: bool,
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi_oracle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_diff: Option<f64>,
}

/// Sweep rows plus whether the oracle columns are present.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SweepTable {
    pub crosscheck: bool,
    /// The `xi` and `xi_oracle` columns hold ξ².
    pub squared: bool,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// Largest `oracle_diff`, `None` outside crosscheck mode.
    pub fn max_oracle_diff(&self) -> Option<f64> {
        self.crosscheck.then(|| {
            self.rows
                .iter()
                .filter_map(|r| r.oracle_diff)
                .fold(0.0, f64::max)
        })
    }

    /// [`Error::OracleMismatch`] if any oracle difference exceeds `tolerance`.
    pub fn check_oracle(&self, tolerance: f64) -> Result<()> {
        match self.max_oracle_diff() {
            Some(d) if !(d <= tolerance) => Err(Error::OracleMismatch {
                max_diff: d,
                tolerance,
            }),
            _ => Ok(()),
        }
    }

    /// Distinct N values in row order.
    pub fn n_values(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.rows.iter().map(|r| r.n).collect();
        ns.dedup();
        ns
    }

    /// Rows for a single N.
    pub fn for_n(&self, n: usize) -> SweepTable {
        SweepTable {
            crosscheck: self.crosscheck,
            squared: self.squared,
            rows: self.rows.iter().filter(|r| r.n == n).cloned().collect(),
        }
    }
}

fn row_from(n: usize, k: usize, a: f64, rep: &SqueezingReport) -> SweepRow {
    SweepRow {
        n,
        k,
        a,
        xi: rep.xi,
        tperp_min: rep.tperp_min,
        mean_spin_len: rep.mean_spin_len,
        squeezed: rep.squeezed,
        degenerate: rep.degenerate,
        xi_oracle: None,
        oracle_diff: None,
    }
}

fn evaluate(
    config: &SweepConfig,
    spins: &BTreeMap<usize, CollectiveSpinSet>,
    (n, k, a): (usize, usize, f64),
) -> Result<SweepRow> {
    let params = FamilyParams::new(n, k, a)?;
    let scan = |p: &FamilyParams| {
        xi_direction_scan_with(
            &spins[&n],
            &canonical_amplitudes(p),
            ScanOptions {
                tolerance: config.scan_tolerance,
                ..ScanOptions::default()
            },
        )
    };
    let square = |x: Option<f64>| if config.squared { x.map(|v| v * v) } else { x };
    let mut row = match config.mode {
        Mode::Closed | Mode::Crosscheck => row_from(n, k, a, &xi_closed_form_family(&params)?),
        Mode::Generic => row_from(n, k, a, &xi(&params)?),
        Mode::Scan => row_from(n, k, a, &scan(&params)?),
    };
    row.xi = square(row.xi);
    if config.mode == Mode::Crosscheck {
        let oracle = scan(&params)?;
        row.xi_oracle = square(oracle.xi);
        row.oracle_diff = Some(match (row.xi, row.xi_oracle) {
            (Some(x), Some(y)) => (x - y).abs(),
            (None, None) => 0.0,
            _ => f64::INFINITY,
        });
    }
    Ok(row)
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    builder
        .build()
        .map_err(|e| Error::config("jobs", e.to_string()))
}

/// Evaluates every grid point. Rows come out ordered by N, then k, then a,
/// whatever the worker count.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepTable> {
    let pairs = config.pairs()?;
    let a_values = config.a_grid.values();
    let mut spins = BTreeMap::new();
    if matches!(config.mode, Mode::Scan | Mode::Crosscheck) {
        for &(n, _) in &pairs {
            if let std::collections::btree_map::Entry::Vacant(e) = spins.entry(n) {
                e.insert(collective_spin(n)?);
            }
        }
    }
    let points: Vec<(usize, usize, f64)> = pairs
        .iter()
        .flat_map(|&(n, k)| a_values.iter().map(move |&a| (n, k, a)))
        .collect();
    let rows = pool(config.jobs)?.install(|| {
        points
            .par_iter()
            .map(|&p| evaluate(config, &spins, p))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SweepTable {
        crosscheck: config.mode == Mode::Crosscheck,
        squared: config.squared,
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdStatus {
    Ok,
    DegenerateAtZero,
    NoRoot,
}

impl ThresholdStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThresholdStatus::Ok => "ok",
            ThresholdStatus::DegenerateAtZero => "degenerate-at-zero",
            ThresholdStatus::NoRoot => "no-root",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdRow {
    #[serde(rename = "N")]
    pub n: usize,
    pub k: usize,
    pub a_low: Option<f64>,
    pub min_xi: f64,
    pub argmin_a: f64,
    pub status: ThresholdStatus,
}

/// Lower squeezing threshold and refined minimum of ξ for each pair.
/// A missing root is recorded in the row, not raised.
pub fn threshold_table(pairs: &[(usize, usize)], jobs: Option<usize>) -> Result<Vec<ThresholdRow>> {
    pool(jobs)?.install(|| {
        pairs
            .par_iter()
            .map(|&(n, k)| {
                let min = refined_min_xi(n, k, THRESHOLD_MIN_GRID)?;
                let (a_low, status) = match squeezing_threshold(n, k, Side::Low) {
                    Ok(Threshold::DegenerateEndpoint(a)) => {
                        (Some(a), ThresholdStatus::DegenerateAtZero)
                    }
                    Ok(t) => (Some(t.value()), ThresholdStatus::Ok),
                    Err(Error::NoRoot { .. }) => (None, ThresholdStatus::NoRoot),
                    Err(e) => return Err(e),
                };
                Ok(ThresholdRow {
                    n,
                    k,
                    a_low,
                    min_xi: min.xi,
                    argmin_a: min.a,
                    status,
                })
            })
            .collect()
    })
}
