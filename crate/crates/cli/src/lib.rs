//! Run configuration, verification suites, point evaluation and JSON reports.

pub mod config;
pub mod error;
pub mod eval;
pub mod report;
pub mod suites;

pub use config::{Method, ModelTag, Preset, Quadrature, RunConfig, Tier, Tolerances};
pub use error::{CliError, Result};
pub use eval::{eval_grid, eval_point, format_value, parse_complex, EvalArgs, Grid, Target};
pub use report::{Check, Report};
pub use suites::{check_defs, run_suite, verdict, Residual, Suite};
