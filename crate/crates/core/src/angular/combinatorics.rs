use crate::error::{Error, Result};

use super::DICKE_N_MAX;

/// Largest n for which `n!` is finite in f64.
const DIRECT_BINOMIAL_MAX: usize = 170;

/// `ln(n!)` for `n = 0..=n_max`.
#[derive(Clone, Debug)]
pub struct LogFactorialTable {
    values: Vec<f64>,
}

impl LogFactorialTable {
    pub fn new(n_max: usize) -> Self {
        let mut values = Vec::with_capacity(n_max + 1);
        let mut acc = 0.0;
        values.push(0.0);
        for i in 1..=n_max {
            acc += (i as f64).ln();
            values.push(acc);
        }
        Self { values }
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `ln(n!)`. Panics if `n` exceeds the table.
    pub fn ln_factorial(&self, n: usize) -> f64 {
        self.values[n]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn ln_binomial(&self, n: usize, k: usize) -> f64 {
        debug_assert!(k <= n);
        self.values[n] - self.values[k] - self.values[n - k]
    }
}

/// `ln C(n, k)`. Exact product up to n = 170, table-backed beyond.
pub fn log_binomial(n: usize, k: usize) -> Result<f64> {
    if k > n {
        return Err(Error::domain(format!(
            "log_binomial needs k <= n, got ({n}, {k})"
        )));
    }
    if n > DICKE_N_MAX {
        return Err(Error::ResourceLimit {
            what: "log_binomial",
            n,
            max: DICKE_N_MAX,
        });
    }
    if n <= DIRECT_BINOMIAL_MAX {
        let k = k.min(n - k);
        let mut c = 1.0f64;
        for i in 0..k {
            c = c * ((n - i) as f64) / ((i + 1) as f64);
        }
        return Ok(c.ln());
    }
    Ok(LogFactorialTable::new(n).ln_binomial(n, k))
}
