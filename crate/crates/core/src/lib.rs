//! Multi-attributive border approximation area comparison (MABAC) for group
//! decisions expressed with interval type-2 trapezoidal fuzzy numbers.
//!
//! The modules follow the data flow: [`fuzzy`] values are produced from
//! [`linguistic`] scales, averaged across experts by [`aggregation`],
//! turned into crisp comparables by [`rank`], and ranked by [`pipeline`].
//! [`problem`] and [`report`] are the file and output surface.

pub mod aggregation;
pub mod error;
pub mod fuzzy;
pub mod linguistic;
pub mod matrix;
pub mod pipeline;
pub mod problem;
pub mod rank;
pub mod report;

pub use error::{Error, Result, Stage};
pub use fuzzy::{It2TrFn, Level, Trapezoid};
pub use linguistic::LinguisticScale;
pub use matrix::Matrix;
pub use problem::{parse_problem, run, DecisionProblem, PipelineTrace};
