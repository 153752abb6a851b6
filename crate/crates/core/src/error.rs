use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// `cos(varphi)` vanishes and the map collapses to the constant zero.
    #[error("degenerate gate angle varphi = {varphi}: |cos varphi| < 1e-12, the map is identically zero")]
    DegenerateParameter { varphi: f64 },

    #[error("point {re}{im:+}i is a pole of the map")]
    Pole { re: f64, im: f64 },

    #[error("points do not close into a cycle (closure defect {defect:e} at index {index})")]
    NotACycle { index: usize, defect: f64 },

    #[error(
        "Fock truncation nmax = {nmax} leaves Poisson tail {tail:e} for nbar = {nbar} (needs < 1e-12)"
    )]
    Truncation { nbar: f64, nmax: usize, tail: f64 },

    #[error("postselection outcome has vanishing norm {norm:e}")]
    NullOutcome { norm: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("usage: {0}")]
    Usage(String),

    /// Help or version text requested on the command line.
    #[error("{0}")]
    Help(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("{path}: malformed file: {reason}")]
    Format { path: PathBuf, reason: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn csv(path: impl Into<PathBuf>, source: csv::Error) -> Self {
        Error::Csv {
            path: path.into(),
            source,
        }
    }
}
