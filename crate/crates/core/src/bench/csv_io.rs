//! CSV schemas for raw runs and speedup rows. Unreachable runs are written
//! with length `-1`.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::{BenchError, RunRecord, SpeedupRow};
use crate::search::SearchMetrics;

#[derive(Serialize, Deserialize)]
struct RecordRow {
    scenario_id: usize,
    map: String,
    algorithm: String,
    length: i64,
    time_ns: u64,
    expanded: u64,
    open_pushes: u64,
    open_pops: u64,
    max_open: u64,
    visited: u64,
}

#[derive(Serialize, Deserialize)]
struct SpeedupCsvRow {
    path_length: u64,
    mean_speedup: f64,
    problem_count: usize,
}

impl From<&RunRecord> for RecordRow {
    fn from(r: &RunRecord) -> Self {
        let m = &r.metrics;
        RecordRow {
            scenario_id: r.scenario_id,
            map: r.map.clone(),
            algorithm: r.algorithm.clone(),
            length: r.length.map_or(-1, |l| l as i64),
            time_ns: m.wall_time_ns,
            expanded: m.expanded,
            open_pushes: m.open_pushes,
            open_pops: m.open_pops,
            max_open: m.max_open,
            visited: m.visited,
        }
    }
}

impl From<RecordRow> for RunRecord {
    fn from(r: RecordRow) -> Self {
        RunRecord {
            scenario_id: r.scenario_id,
            map: r.map,
            algorithm: r.algorithm,
            length: u64::try_from(r.length).ok(),
            metrics: SearchMetrics {
                expanded: r.expanded,
                open_pushes: r.open_pushes,
                open_pops: r.open_pops,
                max_open: r.max_open,
                visited: r.visited,
                wall_time_ns: r.time_ns,
            },
        }
    }
}

fn write_rows<T: Serialize>(
    rows: impl Iterator<Item = T>,
    out: impl Write,
) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    let mut any = false;
    for row in rows {
        w.serialize(row)?;
        any = true;
    }
    if !any {
        return Err(BenchError::EmptyInput);
    }
    w.flush()?;
    Ok(())
}

fn read_rows<T: for<'de> Deserialize<'de>>(input: impl Read) -> Result<Vec<T>, BenchError> {
    let rows = csv::Reader::from_reader(input)
        .deserialize()
        .collect::<Result<Vec<T>, _>>()?;
    if rows.is_empty() {
        return Err(BenchError::EmptyInput);
    }
    Ok(rows)
}

/// Header: `scenario_id,map,algorithm,length,time_ns,expanded,open_pushes,open_pops,max_open,visited`.
pub fn write_records_csv(records: &[RunRecord], out: impl Write) -> Result<(), BenchError> {
    write_rows(records.iter().map(RecordRow::from), out)
}

pub fn read_records_csv(input: impl Read) -> Result<Vec<RunRecord>, BenchError> {
    Ok(read_rows::<RecordRow>(input)?
        .into_iter()
        .map(RunRecord::from)
        .collect())
}

/// Header: `path_length,mean_speedup,problem_count`.
pub fn write_speedup_csv(rows: &[SpeedupRow], out: impl Write) -> Result<(), BenchError> {
    write_rows(
        rows.iter().map(|r| SpeedupCsvRow {
            path_length: r.path_length,
            mean_speedup: r.mean_speedup,
            problem_count: r.problem_count,
        }),
        out,
    )
}

pub fn read_speedup_csv(input: impl Read) -> Result<Vec<SpeedupRow>, BenchError> {
    Ok(read_rows::<SpeedupCsvRow>(input)?
        .into_iter()
        .map(|r| SpeedupRow {
            path_length: r.path_length,
            mean_speedup: r.mean_speedup,
            problem_count: r.problem_count,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(length: Option<u64>) -> RunRecord {
        RunRecord {
            scenario_id: 4,
            map: "maps/arena.map".into(),
            algorithm: "jps4".into(),
            length,
            metrics: SearchMetrics {
                expanded: 12,
                open_pushes: 30,
                open_pops: 29,
                max_open: 7,
                visited: 410,
                wall_time_ns: 123_456,
            },
        }
    }

    #[test]
    fn speedup_row_text() {
        let mut out = Vec::new();
        write_speedup_csv(
            &[SpeedupRow {
                path_length: 8,
                mean_speedup: 2.0,
                problem_count: 2,
            }],
            &mut out,
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "path_length,mean_speedup,problem_count\n8,2.0,2\n"
        );
    }

    #[test]
    fn unreachable_written_as_minus_one() {
        let mut out = Vec::new();
        write_records_csv(&[record(None)], &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text,
            "scenario_id,map,algorithm,length,time_ns,expanded,open_pushes,open_pops,max_open,visited\n\
             4,maps/arena.map,jps4,-1,123456,12,30,29,7,410\n"
        );
    }

    #[test]
    fn records_round_trip() {
        let records = vec![record(Some(17)), record(None), record(Some(0))];
        let mut out = Vec::new();
        write_records_csv(&records, &mut out).unwrap();
        assert_eq!(read_records_csv(out.as_slice()).unwrap(), records);
    }

    #[test]
    fn speedup_round_trip_is_exact() {
        let rows = vec![
            SpeedupRow {
                path_length: 1,
                mean_speedup: 0.1 + 0.2,
                problem_count: 100,
            },
            SpeedupRow {
                path_length: 400,
                mean_speedup: 1.0 / 3.0,
                problem_count: 1,
            },
        ];
        let mut out = Vec::new();
        write_speedup_csv(&rows, &mut out).unwrap();
        assert_eq!(read_speedup_csv(out.as_slice()).unwrap(), rows);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(
            write_records_csv(&[], Vec::new()),
            Err(BenchError::EmptyInput)
        ));
        let header_only = "path_length,mean_speedup,problem_count\n";
        assert!(matches!(
            read_speedup_csv(header_only.as_bytes()),
            Err(BenchError::EmptyInput)
        ));
        assert!(read_records_csv("scenario_id\nx\n".as_bytes()).is_err());
    }
}
