use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} requires N <= {max}, got N = {n}")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("spinor is not normalized: |amp0|^2 + |amp1|^2 = {norm_sq}")]
    UnnormalizedSpinor { norm_sq: f64 },

    #[error("Dicke amplitudes are not real after removing the global phase (residue {residue:e})")]
    ComplexAmplitudes { residue: f64 },

    #[error("reduced density matrix does not fit the symmetric template (residual {residual:e})")]
    TemplateViolation { residual: f64 },

    #[error("reduced density matrix has imaginary residue {residue:e}")]
    ImaginaryResidue { residue: f64 },

    #[error("mean spin length {length:e} is below the degeneracy threshold")]
    DegenerateMeanSpin { length: f64 },

    #[error("squeezing radicand 1 + (N-1) t = {value:e} is negative")]
    NegativeRadicand { value: f64 },

    #[error("no squeezing threshold: xi >= 1 on the whole interval for N = {n}, k = {k}")]
    NoRoot { n: usize, k: usize },

    #[error("config error at {location}: {message}")]
    Config { location: String, message: String },

    #[error("oracle mismatch: max |xi - xi_oracle| = {max_diff:e} exceeds {tolerance:e}")]
    OracleMismatch { max_diff: f64, tolerance: f64 },

    #[error("io error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
