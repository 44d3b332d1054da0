use std::collections::BTreeMap;

use super::{BenchError, RunRecord};

/// Mean JPS4 speedup over A* for all solved problems of one optimal length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedupRow {
    pub path_length: u64,
    pub mean_speedup: f64,
    pub problem_count: usize,
}

#[derive(Default)]
struct Timings {
    length: Option<u64>,
    astar: (u128, u64),
    jps4: (u128, u64),
}

impl Timings {
    fn mean(sum: (u128, u64)) -> f64 {
        sum.0 as f64 / sum.1 as f64
    }
}

/// Aggregates raw records into one row per optimal path length.
///
/// A scenario's speedup is its mean A* time over its mean JPS4 time; a row
/// averages those ratios. Unreachable scenarios are skipped. Sums are exact
/// integers, so the result does not depend on record order.
pub fn speedup_report(records: &[RunRecord]) -> Result<Vec<SpeedupRow>, BenchError> {
    if records.is_empty() {
        return Err(BenchError::EmptyInput);
    }
    let mut by_scenario: BTreeMap<usize, Timings> = BTreeMap::new();
    for r in records {
        let t = by_scenario.entry(r.scenario_id).or_default();
        let slot = match r.algorithm.as_str() {
            "astar" => &mut t.astar,
            "jps4" => &mut t.jps4,
            _ => continue,
        };
        slot.0 += u128::from(r.metrics.wall_time_ns);
        slot.1 += 1;
        t.length = t.length.or(r.length);
    }

    let mut by_length: BTreeMap<u64, (Vec<f64>, usize)> = BTreeMap::new();
    for (id, t) in &by_scenario {
        if t.astar.1 == 0 || t.jps4.1 == 0 {
            let missing = if t.astar.1 == 0 { "astar" } else { "jps4" };
            return Err(BenchError::MissingAlgorithm(format!(
                "scenario {id} has no {missing} records"
            )));
        }
        let Some(length) = t.length else { continue };
        // Clamp to 1 ns so sub-resolution timings give a finite ratio.
        let astar = Timings::mean(t.astar).max(1.0);
        let jps4 = Timings::mean(t.jps4).max(1.0);
        let row = by_length.entry(length).or_default();
        row.0.push(astar / jps4);
        row.1 += 1;
    }
    Ok(by_length
        .into_iter()
        .map(|(path_length, (ratios, problem_count))| SpeedupRow {
            path_length,
            mean_speedup: ratios.iter().sum::<f64>() / problem_count as f64,
            problem_count,
        })
        .collect())
}
