//! File formats, checks and command implementations behind the
//! `spherotrop` binary.
//!
//! Exit-code discipline: `0` success, `2` input error, `3` precision loss
//! (an exact decision could not be made at the stored truncation depth or a
//! numeric routine failed to converge), `4` property-check failure from the
//! `check-*` subcommands. Diagnostics go to standard error as single-line
//! JSON objects.

pub mod checks;
pub mod commands;
pub mod schema;
pub mod svg;

use std::fmt;

/// Top-level error with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input, unknown flags/names, singular data: exit 2.
    Input(String),
    /// Honest precision failures (series truncation, SVD non-convergence):
    /// exit 3.
    Precision(String),
    /// A `check` subcommand found a violated property: exit 4.
    CheckFailed(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> CliError {
        CliError::Input(msg.into())
    }

    pub fn precision(msg: impl Into<String>) -> CliError {
        CliError::Precision(msg.into())
    }

    pub fn check_failed(msg: impl Into<String>) -> CliError {
        CliError::CheckFailed(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precision(_) => 3,
            CliError::CheckFailed(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Precision(_) => "precision",
            CliError::CheckFailed(_) => "check-failed",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Precision(m) | CliError::CheckFailed(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind(), self.message())
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("io: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("json: {e}"))
    }
}

impl From<spherotrop_core::exact_arith::ArithError> for CliError {
    fn from(e: spherotrop_core::exact_arith::ArithError) -> Self {
        use spherotrop_core::exact_arith::ArithError;
        match e {
            ArithError::PrecisionLoss { .. } => CliError::Precision(e.to_string()),
            ArithError::DivisionByZero => CliError::Input(e.to_string()),
        }
    }
}

impl From<spherotrop_core::poly_engine::PolyError> for CliError {
    fn from(e: spherotrop_core::poly_engine::PolyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<spherotrop_core::grobner_fan::FanError> for CliError {
    fn from(e: spherotrop_core::grobner_fan::FanError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<spherotrop_core::trop_classical::TropError> for CliError {
    fn from(e: spherotrop_core::trop_classical::TropError) -> Self {
        use spherotrop_core::trop_classical::TropError;
        match &e {
            TropError::Arith(spherotrop_core::exact_arith::ArithError::PrecisionLoss {
                ..
            }) => CliError::Precision(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<spherotrop_core::snf_series::SnfError> for CliError {
    fn from(e: spherotrop_core::snf_series::SnfError) -> Self {
        use spherotrop_core::snf_series::SnfError;
        match e {
            SnfError::PrecisionLoss { .. } => CliError::Precision(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<spherotrop_core::spherical_core::SphError> for CliError {
    fn from(e: spherotrop_core::spherical_core::SphError) -> Self {
        use spherotrop_core::exact_arith::ArithError;
        use spherotrop_core::snf_series::SnfError;
        use spherotrop_core::spherical_core::SphError;
        match &e {
            SphError::Arith(ArithError::PrecisionLoss { .. })
            | SphError::Snf(SnfError::PrecisionLoss { .. }) => CliError::Precision(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<spherotrop_core::spherical_trop::SphTropError> for CliError {
    fn from(e: spherotrop_core::spherical_trop::SphTropError) -> Self {
        use spherotrop_core::spherical_trop::SphTropError;
        match &e {
            SphTropError::Sph(inner) => CliError::from(inner.clone()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<spherotrop_core::numeric_amoeba::AmoebaError> for CliError {
    fn from(e: spherotrop_core::numeric_amoeba::AmoebaError) -> Self {
        use spherotrop_core::numeric_amoeba::AmoebaError;
        match &e {
            AmoebaError::NoConvergence { .. } => CliError::Precision(e.to_string()),
            AmoebaError::Snf(spherotrop_core::snf_series::SnfError::PrecisionLoss { .. }) => {
                CliError::Precision(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Default series truncation depth used when neither the `--precision` flag
/// nor `SPHEROTROP_PRECISION` is given.
pub const DEFAULT_PRECISION: i64 = 20;

/// Resolves the working precision from flag/environment/default.
pub fn resolve_precision(
    flag: Option<&str>,
) -> Result<spherotrop_core::exact_arith::Rational, CliError> {
    if let Some(s) = flag {
        return schema::parse_rational(s);
    }
    if let Ok(s) = std::env::var("SPHEROTROP_PRECISION") {
        return schema::parse_rational(&s);
    }
    Ok(spherotrop_core::exact_arith::rat_int(DEFAULT_PRECISION))
}
