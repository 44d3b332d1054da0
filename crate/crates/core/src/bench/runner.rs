use std::collections::HashMap;
use std::fs;
use std::path::{Path as FsPath, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{BenchError, Scenario};
use crate::grid::{parse_map, GridMap};
use crate::search::{Algorithm, SearchError, SearchMetrics, SearchProblem, SearchResult};

/// Anything the harness can time. Implemented by [`Algorithm`]; tests plug in
/// deliberately broken solvers.
pub trait Solver: Sync {
    fn tag(&self) -> &str;
    fn solve(&self, problem: &SearchProblem<'_>) -> Result<SearchResult, SearchError>;
}

impl Solver for Algorithm {
    fn tag(&self) -> &str {
        Algorithm::tag(*self)
    }

    fn solve(&self, problem: &SearchProblem<'_>) -> Result<SearchResult, SearchError> {
        self.run(problem)
    }
}

/// Maps by the name scenarios refer to them with.
#[derive(Debug, Default)]
pub struct MapStore {
    dir: Option<PathBuf>,
    maps: HashMap<String, GridMap>,
}

impl MapStore {
    /// A store that loads `.map` files from `dir` on demand.
    pub fn from_dir(dir: impl Into<PathBuf>) -> Self {
        MapStore {
            dir: Some(dir.into()),
            maps: HashMap::new(),
        }
    }

    pub fn insert(&mut self, name: impl Into<String>, map: GridMap) {
        self.maps.insert(name.into(), map);
    }

    pub fn get(&self, name: &str) -> Option<&GridMap> {
        self.maps.get(name)
    }

    /// Loads every map the scenarios mention. A name is tried as a path
    /// under the store directory, then by its file name alone, since
    /// scenario files often carry a `maps/` prefix.
    pub fn load_for(&mut self, scenarios: &[Scenario]) -> Result<(), BenchError> {
        for s in scenarios {
            if self.maps.contains_key(&s.map_name) {
                continue;
            }
            let mut tried = Vec::new();
            if let Some(dir) = &self.dir {
                tried.push(dir.join(&s.map_name));
                if let Some(base) = FsPath::new(&s.map_name).file_name() {
                    let flat = dir.join(base);
                    if !tried.contains(&flat) {
                        tried.push(flat);
                    }
                }
            }
            let Some(found) = tried.iter().find(|p| p.is_file()) else {
                return Err(BenchError::MissingMap {
                    name: s.map_name.clone(),
                    tried,
                });
            };
            let map =
                parse_map(&fs::read_to_string(found)?).map_err(|source| BenchError::BadMap {
                    name: s.map_name.clone(),
                    source,
                })?;
            self.maps.insert(s.map_name.clone(), map);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchOptions {
    pub repetitions: usize,
    /// One untimed run per (scenario, algorithm) before the recorded ones.
    pub warmup: bool,
    /// Runs scenarios on a thread pool. Each run stays on one worker, so
    /// timed regions never share a thread, but they do compete for memory
    /// bandwidth. Off by default.
    pub parallel: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            repetitions: 1,
            warmup: true,
            parallel: false,
        }
    }
}

/// One timed run. `length` is `None` when the goal is unreachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunRecord {
    pub scenario_id: usize,
    pub map: String,
    pub algorithm: String,
    pub length: Option<u64>,
    pub metrics: SearchMetrics,
}

fn run_scenario(
    id: usize,
    scenario: &Scenario,
    store: &MapStore,
    solvers: &[&dyn Solver],
    options: &BenchOptions,
) -> Result<Vec<RunRecord>, BenchError> {
    let map = store
        .get(&scenario.map_name)
        .ok_or_else(|| BenchError::MissingMap {
            name: scenario.map_name.clone(),
            tried: Vec::new(),
        })?;
    if (map.width(), map.height()) != (scenario.width, scenario.height) {
        return Err(BenchError::ScenarioMismatch {
            scenario: id,
            message: format!(
                "declares {}x{} but `{}` is {}x{}",
                scenario.width,
                scenario.height,
                scenario.map_name,
                map.width(),
                map.height()
            ),
        });
    }
    let problem = SearchProblem::new(map, scenario.start, scenario.goal).map_err(|source| {
        BenchError::Search {
            scenario: id,
            source,
        }
    })?;

    let mut records = Vec::with_capacity(solvers.len() * options.repetitions);
    let mut results: Vec<(&str, SearchResult)> = Vec::with_capacity(solvers.len());
    for solver in solvers {
        let solve = || {
            solver.solve(&problem).map_err(|source| BenchError::Search {
                scenario: id,
                source,
            })
        };
        if options.warmup {
            solve()?;
        }
        let mut first: Option<SearchResult> = None;
        for _ in 0..options.repetitions {
            let result = solve()?;
            match &first {
                Some(f) if f.metrics.counters() != result.metrics.counters() => {
                    return Err(BenchError::NondeterministicCounters {
                        scenario: id,
                        algorithm: solver.tag().to_string(),
                        first: f.metrics.counters(),
                        later: result.metrics.counters(),
                    });
                }
                Some(f) if f.outcome != result.outcome => {
                    return Err(BenchError::OptimalityViolation {
                        scenario: id,
                        details: format!("{} returned different paths across runs", solver.tag()),
                    });
                }
                Some(_) => {}
                None => first = Some(result.clone()),
            }
            records.push(RunRecord {
                scenario_id: id,
                map: scenario.map_name.clone(),
                algorithm: solver.tag().to_string(),
                length: result.length().map(|l| l as u64),
                metrics: result.metrics,
            });
        }
        if let Some(first) = first {
            results.push((solver.tag(), first));
        }
    }
    check_agreement(id, &problem, &results)?;
    Ok(records)
}

/// All solvers must agree on the optimal length (or on unreachability), and
/// every returned path must be a real path between the endpoints.
fn check_agreement(
    id: usize,
    problem: &SearchProblem<'_>,
    results: &[(&str, SearchResult)],
) -> Result<(), BenchError> {
    let lengths: Vec<Option<usize>> = results.iter().map(|(_, r)| r.length()).collect();
    if lengths.windows(2).any(|w| w[0] != w[1]) {
        let details = results
            .iter()
            .map(|(tag, r)| match r.length() {
                Some(l) => format!("{tag}={l}"),
                None => format!("{tag}=unreachable"),
            })
            .collect::<Vec<_>>()
            .join(", ");
        return Err(BenchError::OptimalityViolation {
            scenario: id,
            details: format!("lengths disagree: {details}"),
        });
    }
    for (tag, r) in results {
        if let Some(path) = r.path() {
            let ends_ok = path.start() == problem.start && path.end() == problem.goal;
            if !ends_ok || path.check_on(problem.map).is_err() {
                return Err(BenchError::OptimalityViolation {
                    scenario: id,
                    details: format!("{tag} returned an invalid path"),
                });
            }
        }
    }
    Ok(())
}

/// Runs every solver on every scenario `options.repetitions` times and
/// returns one record per run, ordered by scenario then solver. Maps must
/// already be in `store`.
pub fn run_benchmark(
    scenarios: &[Scenario],
    store: &MapStore,
    solvers: &[&dyn Solver],
    options: &BenchOptions,
) -> Result<Vec<RunRecord>, BenchError> {
    let per_scenario: Vec<Vec<RunRecord>> = if options.parallel {
        scenarios
            .par_iter()
            .enumerate()
            .map(|(id, s)| run_scenario(id, s, store, solvers, options))
            .collect::<Result<_, _>>()?
    } else {
        scenarios
            .iter()
            .enumerate()
            .map(|(id, s)| run_scenario(id, s, store, solvers, options))
            .collect::<Result<_, _>>()?
    };
    Ok(per_scenario.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub trials: usize,
    pub solvable: usize,
    pub unreachable: usize,
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Cross-checks A*, JPS4 and BFS on `trials` random start/goal pairs.
pub fn verify_map(map: &GridMap, trials: usize, seed: u64) -> Result<VerifyReport, BenchError> {
    let cells: Vec<_> = map.passable_cells().collect();
    if cells.is_empty() {
        return Err(BenchError::Geometry("map has no passable cells".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport {
        trials,
        ..VerifyReport::default()
    };
    for trial in 0..trials {
        let start = *cells.choose(&mut rng).expect("non-empty");
        let goal = *cells.choose(&mut rng).expect("non-empty");
        let problem =
            SearchProblem::new(map, start, goal).map_err(|source| BenchError::Search {
                scenario: trial,
                source,
            })?;
        let mut results = Vec::with_capacity(3);
        for alg in Algorithm::ALL {
            let r = alg.run(&problem).map_err(|source| BenchError::Search {
                scenario: trial,
                source,
            })?;
            results.push((alg.tag(), r));
        }
        match check_agreement(trial, &problem, &results) {
            Ok(()) if results[0].1.length().is_some() => report.solvable += 1,
            Ok(()) => report.unreachable += 1,
            Err(e) => report.mismatches.push(format!("{start} -> {goal}: {e}")),
        }
    }
    Ok(report)
}
