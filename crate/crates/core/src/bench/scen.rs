use std::fmt::Write as _;

use super::BenchError;
use crate::grid::Coord;

/// One row of a MovingAI `.scen` file.
///
/// `declared_length` is the file's (8-connected) optimum and is kept for
/// reference only; 4-connected lengths are always recomputed.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub bucket: u32,
    pub map_name: String,
    pub width: usize,
    pub height: usize,
    pub start: Coord,
    pub goal: Coord,
    pub declared_length: f64,
}

impl Scenario {
    fn contains(&self, c: Coord) -> bool {
        c.x >= 0 && c.y >= 0 && (c.x as usize) < self.width && (c.y as usize) < self.height
    }
}

/// Parses a `.scen` file: an optional `version` line, then rows of
/// `bucket map width height start-x start-y goal-x goal-y optimal-length`
/// separated by tabs or spaces.
pub fn parse_scen(text: &str) -> Result<Vec<Scenario>, BenchError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let no = i + 1;
        let line = line.trim();
        if line.is_empty() || (out.is_empty() && line.starts_with("version")) {
            continue;
        }
        let err = |message: String| BenchError::Scen { line: no, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 9 {
            return Err(err(format!("expected 9 columns, found {}", fields.len())));
        }
        fn num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, String>
        where
            T::Err: std::fmt::Display,
        {
            s.parse().map_err(|e| format!("bad {what} `{s}`: {e}"))
        }
        let parsed = (|| -> Result<Scenario, String> {
            Ok(Scenario {
                bucket: num(fields[0], "bucket")?,
                map_name: fields[1].to_string(),
                width: num(fields[2], "width")?,
                height: num(fields[3], "height")?,
                start: Coord::new(num(fields[4], "start x")?, num(fields[5], "start y")?),
                goal: Coord::new(num(fields[6], "goal x")?, num(fields[7], "goal y")?),
                declared_length: num(fields[8], "optimal length")?,
            })
        })()
        .map_err(err)?;
        for (what, c) in [("start", parsed.start), ("goal", parsed.goal)] {
            if !parsed.contains(c) {
                return Err(err(format!(
                    "{what} {c} outside the declared {}x{} map",
                    parsed.width, parsed.height
                )));
            }
        }
        if parsed.start == parsed.goal && parsed.declared_length != 0.0 {
            return Err(err(
                "start equals goal but the declared length is not 0".into()
            ));
        }
        out.push(parsed);
    }
    Ok(out)
}

pub fn write_scen(scenarios: &[Scenario]) -> String {
    let mut out = String::from("version 1\n");
    for s in scenarios {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            s.bucket,
            s.map_name,
            s.width,
            s.height,
            s.start.x,
            s.start.y,
            s.goal.x,
            s.goal.y,
            s.declared_length
        );
    }
    out
}
