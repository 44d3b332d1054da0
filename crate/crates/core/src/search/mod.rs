//! Best-first search drivers over a [`GridMap`]: an A* baseline, JPS4 and a
//! breadth-first oracle, all reporting the same [`SearchMetrics`].

mod astar;
mod bfs;
mod jps4;
mod path;
mod workspace;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::grid::{Coord, GridError, GridMap, Path};

pub use astar::astar;
pub use bfs::bfs_oracle;
pub use jps4::{jps4, jps4_traced, Expansion};
pub use path::reconstruct_path;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid start: {0}")]
    InvalidStart(#[source] GridError),
    #[error("invalid goal: {0}")]
    InvalidGoal(#[source] GridError),
    #[error("invalid waypoints: {0}")]
    Waypoints(#[source] GridError),
}

/// One shortest-path query.
#[derive(Debug, Clone, Copy)]
pub struct SearchProblem<'a> {
    pub map: &'a GridMap,
    pub start: Coord,
    pub goal: Coord,
}

impl<'a> SearchProblem<'a> {
    pub fn new(map: &'a GridMap, start: Coord, goal: Coord) -> Result<Self, SearchError> {
        let p = SearchProblem { map, start, goal };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        self.map
            .check_open(self.start)
            .map_err(SearchError::InvalidStart)?;
        self.map
            .check_open(self.goal)
            .map_err(SearchError::InvalidGoal)
    }
}

/// Per-search instrumentation.
///
/// `visited` counts distinct in-bounds cells whose passability was read,
/// including every cell scanned along a jump ray.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchMetrics {
    pub expanded: u64,
    pub open_pushes: u64,
    pub open_pops: u64,
    pub max_open: u64,
    pub visited: u64,
    pub wall_time_ns: u64,
}

impl SearchMetrics {
    /// Pushes plus pops, including the initial push of the start node.
    pub fn open_ops(&self) -> u64 {
        self.open_pushes + self.open_pops
    }

    /// Every field except wall time; identical across repeated runs.
    pub fn counters(&self) -> [u64; 5] {
        [
            self.expanded,
            self.open_pushes,
            self.open_pops,
            self.max_open,
            self.visited,
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Path),
    Unreachable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub metrics: SearchMetrics,
}

impl SearchResult {
    pub fn path(&self) -> Option<&Path> {
        match &self.outcome {
            Outcome::Found(p) => Some(p),
            Outcome::Unreachable => None,
        }
    }

    /// Path length in unit moves, `None` when unreachable.
    pub fn length(&self) -> Option<usize> {
        self.path().map(Path::length)
    }
}

/// The built-in search algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    AStar,
    Jps4,
    Bfs,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::AStar, Algorithm::Jps4, Algorithm::Bfs];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::AStar => "astar",
            Algorithm::Jps4 => "jps4",
            Algorithm::Bfs => "bfs",
        }
    }

    pub fn run(self, problem: &SearchProblem<'_>) -> Result<SearchResult, SearchError> {
        match self {
            Algorithm::AStar => astar(problem),
            Algorithm::Jps4 => jps4(problem),
            Algorithm::Bfs => bfs_oracle(problem),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "astar" | "a*" => Ok(Algorithm::AStar),
            "jps4" | "jps" => Ok(Algorithm::Jps4),
            "bfs" => Ok(Algorithm::Bfs),
            other => Err(format!(
                "unknown algorithm `{other}` (expected astar, jps4 or bfs)"
            )),
        }
    }
}
