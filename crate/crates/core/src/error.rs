use std::fmt;

use thiserror::Error;

use crate::fuzzy::Level;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Stage of the decision procedure an error was raised in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Parse,
    AggregateWeights,
    AggregateRatings,
    Normalize,
    Weight,
    BorderArea,
    Distances,
    Rank,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::Parse => "parse",
            Stage::AggregateWeights => "Step 1 (criterion weights)",
            Stage::AggregateRatings => "Step 2 (decision matrix)",
            Stage::Normalize => "Step 3 (normalization)",
            Stage::Weight => "Step 4 (weighting)",
            Stage::BorderArea => "Step 5 (border approximation area)",
            Stage::Distances => "Step 6 (distance matrices)",
            Stage::Rank => "Step 7 (ranking)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{level} trapezoid endpoints out of order: {field} ({detail})")]
    EndpointOrder {
        level: Level,
        field: &'static str,
        detail: String,
    },
    #[error("{level} height {value} outside (0, 1]")]
    HeightOutOfRange { level: Level, value: f64 },
    #[error("lower height {lower} exceeds upper height {upper}")]
    HeightOrder { upper: f64, lower: f64 },
    #[error("non-finite {level} endpoint {field}")]
    NonFinite { level: Level, field: &'static str },
    #[error("scalar multiplier {0} is negative")]
    NegativeScalar(f64),
    #[error("operand has negative endpoint {value} (only the non-negative cone is supported)")]
    NegativeOperand { value: f64 },
    #[error("need at least {need} values, got {got}")]
    TooFewValues { need: usize, got: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("rank distance undefined: product of heights is zero")]
    ZeroHeight,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degenerate range in column {column}: every upper endpoint equals {value}")]
    DegenerateRange { column: String, value: f64 },
    #[error("unknown term {term:?} in scale {scale:?}; available: {}", available.join(", "))]
    UnknownTerm {
        scale: String,
        term: String,
        available: Vec<String>,
    },
    #[error("duplicate term {term:?} in scale {scale:?}")]
    DuplicateTerm { scale: String, term: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("{stage}{}: {source}", cell.as_ref().map(|c| format!(" at {c}")).unwrap_or_default())]
    InStage {
        stage: Stage,
        cell: Option<String>,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(self, stage: Stage, cell: impl Into<Option<String>>) -> Error {
        Error::InStage {
            stage,
            cell: cell.into(),
            source: Box::new(self),
        }
    }

    /// Innermost error, with all stage wrappers removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::InStage { source, .. } => source.root(),
            e => e,
        }
    }

    pub fn stage(&self) -> Option<Stage> {
        match self {
            Error::InStage { stage, .. } => Some(*stage),
            _ => None,
        }
    }

    /// True for errors caused by malformed input rather than by the computation.
    pub fn is_validation(&self) -> bool {
        match self {
            Error::InStage { stage, source, .. } => {
                matches!(stage, Stage::Parse) || source.is_validation()
            }
            Error::EndpointOrder { .. }
            | Error::HeightOutOfRange { .. }
            | Error::HeightOrder { .. }
            | Error::NonFinite { .. }
            | Error::UnknownTerm { .. }
            | Error::DuplicateTerm { .. }
            | Error::InvalidParams(_)
            | Error::Syntax(_)
            | Error::DimensionMismatch(_) => true,
            _ => false,
        }
    }
}
