//! Benchmark harness: MovingAI scenario files, synthetic problem sets,
//! repeated timed runs, speedup-by-path-length reports and CSV output.

mod csv_io;
mod problems;
mod report;
mod runner;
mod scen;

use std::path::PathBuf;

use thiserror::Error;

use crate::grid::GridError;
use crate::search::SearchError;

pub use csv_io::{read_records_csv, read_speedup_csv, write_records_csv, write_speedup_csv};
pub use problems::{empty_map_name, generate_empty_problems, pair_count, sample_problems};
pub use report::{speedup_report, SpeedupRow};
pub use runner::{
    run_benchmark, verify_map, BenchOptions, MapStore, RunRecord, Solver, VerifyReport,
};
pub use scen::{parse_scen, write_scen, Scenario};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("scenario line {line}: {message}")]
    Scen { line: usize, message: String },
    #[error("cannot generate problems: {0}")]
    Geometry(String),
    #[error("map `{name}` not found (looked in {})", .tried.iter().map(|p| p.display().to_string()).collect::<Vec<_>>().join(", "))]
    MissingMap { name: String, tried: Vec<PathBuf> },
    #[error("map `{name}`: {source}")]
    BadMap {
        name: String,
        #[source]
        source: GridError,
    },
    #[error("scenario {scenario}: {message}")]
    ScenarioMismatch { scenario: usize, message: String },
    #[error("scenario {scenario}: {source}")]
    Search {
        scenario: usize,
        #[source]
        source: SearchError,
    },
    #[error("optimality violation on scenario {scenario}: {details}")]
    OptimalityViolation { scenario: usize, details: String },
    #[error("scenario {scenario}, {algorithm}: counters changed between repetitions ({first:?} vs {later:?})")]
    NondeterministicCounters {
        scenario: usize,
        algorithm: String,
        first: [u64; 5],
        later: [u64; 5],
    },
    #[error("{0}")]
    MissingAlgorithm(String),
    #[error("nothing to report: input is empty")]
    EmptyInput,
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl BenchError {
    /// Optimality and determinism failures, as opposed to bad input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            BenchError::OptimalityViolation { .. } | BenchError::NondeterministicCounters { .. }
        )
    }
}
