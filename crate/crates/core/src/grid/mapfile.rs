//! MovingAI `.map` reader and writer.
//!
//! ```text
//! type octile
//! height 2
//! width 3
//! map
//! ..@
//! .T.
//! ```
//!
//! Only `.` and `G` are passable; every other terrain code is treated as
//! blocked.

use std::fmt::Write as _;

use super::{Coord, GridError, GridMap};

fn format_err(line: usize, message: impl Into<String>) -> GridError {
    GridError::MapFormat {
        line,
        message: message.into(),
    }
}

pub fn parse_map(text: &str) -> Result<GridMap, GridError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    let mut height: Option<usize> = None;
    let mut width: Option<usize> = None;
    let mut saw_type = false;

    loop {
        let Some((no, line)) = lines.next() else {
            return Err(format_err(0, "missing `map` line"));
        };
        let mut fields = line.split_whitespace();
        match fields.next() {
            None => continue,
            Some("map") => break,
            Some("type") => saw_type = true,
            Some(key @ ("height" | "width")) => {
                let value = fields
                    .next()
                    .ok_or_else(|| format_err(no, format!("`{key}` has no value")))?
                    .parse::<usize>()
                    .map_err(|e| format_err(no, format!("bad {key}: {e}")))?;
                if key == "height" {
                    height = Some(value);
                } else {
                    width = Some(value);
                }
            }
            Some(other) => return Err(format_err(no, format!("unknown header key `{other}`"))),
        }
    }

    if !saw_type {
        return Err(format_err(0, "missing `type` header"));
    }
    let height = height.ok_or_else(|| format_err(0, "missing `height` header"))?;
    let width = width.ok_or_else(|| format_err(0, "missing `width` header"))?;
    if width == 0 || height == 0 {
        return Err(GridError::ZeroDimension { width, height });
    }

    let mut cells = Vec::with_capacity(width * height);
    let mut rows = 0;
    for (no, line) in lines {
        if rows == height {
            if line.is_empty() {
                continue;
            }
            return Err(format_err(no, format!("more than {height} map rows")));
        }
        if line.len() != width {
            return Err(format_err(
                no,
                format!("row has {} cells, header says {width}", line.len()),
            ));
        }
        cells.extend(line.bytes().map(|b| matches!(b, b'.' | b'G')));
        rows += 1;
    }
    if rows != height {
        return Err(format_err(
            0,
            format!("found {rows} map rows, header says {height}"),
        ));
    }
    GridMap::from_cells(width, height, &cells)
}

/// Writes `.` for passable cells and `@` for blocked ones.
pub fn write_map(map: &GridMap) -> String {
    let mut out = String::with_capacity(map.area() + map.height() + 48);
    let _ = write!(
        out,
        "type octile\nheight {}\nwidth {}\nmap\n",
        map.height(),
        map.width()
    );
    for y in 0..map.height() {
        for x in 0..map.width() {
            out.push(if map.is_passable(Coord::new(x as i32, y as i32)) {
                '.'
            } else {
                '@'
            });
        }
        out.push('\n');
    }
    out
}
