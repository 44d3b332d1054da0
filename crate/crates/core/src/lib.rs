//! Jump point search on 4-connected uniform-cost grids.
//!
//! - [`grid`]: coordinates, directions, maps, paths, MovingAI map files and
//!   synthetic map generators.
//! - [`jps`]: neighbour pruning, forced neighbours and jumping.
//! - [`search`]: A*, JPS4 and a BFS oracle with shared instrumentation.
//! - [`canonical`]: horizontal-first path rewriting and checks.
//! - [`bench`]: scenario files, problem generation, benchmark runs and
//!   speedup reports.

pub mod bench;
pub mod canonical;
pub mod grid;
pub mod jps;
pub mod search;

pub use grid::{Coord, Direction, GridMap, Path};
pub use search::{Algorithm, SearchMetrics, SearchProblem, SearchResult};
