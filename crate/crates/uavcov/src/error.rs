//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by configuration loading, model construction, and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// A required configuration key is absent.
    #[error("config: missing required key `{0}`")]
    MissingKey(&'static str),

    /// A key is present but its value violates an invariant.
    #[error("config: invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },

    /// Exactly one of two mutually exclusive keys must be supplied.
    #[error("config: exactly one of `{a}` and `{b}` must be supplied ({got} given)")]
    ExactlyOneOf {
        a: &'static str,
        b: &'static str,
        got: usize,
    },

    /// The document's schema_version is missing or unsupported.
    #[error("config: unsupported schema_version {found} (expected {expected})")]
    SchemaVersion { found: i64, expected: i64 },

    /// The document could not be parsed at all.
    #[error("config: parse error: {0}")]
    Parse(String),

    /// Filesystem-level failure while reading an input.
    #[error("io: {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// An operation precondition on a scalar argument does not hold.
    #[error("domain: {0}")]
    Domain(String),

    /// Least-squares fit has fewer samples than coefficients.
    #[error("rectenna fit: underdetermined ({samples} samples for {needed} required)")]
    Underdetermined { samples: usize, needed: usize },

    /// A fitted or constructed rectenna is not non-decreasing on its range.
    #[error(
        "rectenna: output not non-decreasing on [p_th, p_sat]; worst violation at \
         {at_watts:.6e} W (drop {drop:.3e} W)"
    )]
    NonMonotone { at_watts: f64, drop: f64 },

    /// Efficiency leaves [0, 1) somewhere on the validated range.
    #[error("rectenna: efficiency {value:.6} outside [0, 1) at {at_watts:.6e} W")]
    EfficiencyRange { at_watts: f64, value: f64 },

    /// Requested DC output exceeds what the rectenna can deliver at saturation.
    #[error("rectenna: target output {target:.6e} W unreachable (max {max:.6e} W)")]
    Unreachable { target: f64, max: f64 },

    /// Adaptive quadrature could not meet its tolerance.
    #[error(
        "quadrature: no convergence on [{lo:.6e}, {hi:.6e}] (error estimate {err:.3e})"
    )]
    QuadratureNonConvergence { lo: f64, hi: f64, err: f64 },

    /// A sweep specification is inconsistent with the config schema.
    #[error("sweep: {0}")]
    Sweep(String),

    /// The figure-reproduction calibration file is absent.
    #[error("calibration file not found: {0} (figure reproduction refuses to run without it)")]
    MissingCalibration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
