//! Grid primitives: coordinates, the four cardinal directions, the occupancy
//! map and unit-step paths.
//!
//! Coordinates are `x` to the right and `y` downward, so row 0 of a map file
//! is `y = 0`.

mod generate;
mod mapfile;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use generate::{generate_empty, generate_rooms, ROOM_BENCHMARK_SIZES};
pub use mapfile::{parse_map, write_map};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("{from} and {to} are not 4-adjacent")]
    NotAdjacent { from: Coord, to: Coord },
    #[error("{0} is outside the map")]
    OutOfBounds(Coord),
    #[error("{0} is blocked")]
    Blocked(Coord),
    #[error("map dimensions must be positive (got {width}x{height})")]
    ZeroDimension { width: usize, height: usize },
    #[error("room size {room_size} does not fit in a {width}x{height} grid")]
    RoomTooLarge {
        room_size: usize,
        width: usize,
        height: usize,
    },
    #[error("a path needs at least one node")]
    EmptyPath,
    #[error("path visits {0} more than once")]
    RepeatedNode(Coord),
    #[error("map line {line}: {message}")]
    MapFormat { line: usize, message: String },
}

/// A cell position: `x` is the column, `y` the row (0 = top).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub x: i32,
    pub y: i32,
}

impl Coord {
    pub const fn new(x: i32, y: i32) -> Self {
        Coord { x, y }
    }

    /// The cell `k` unit moves away in direction `d`.
    pub fn step(self, d: Direction, k: i32) -> Coord {
        let (dx, dy) = d.offset();
        Coord::new(self.x + dx * k, self.y + dy * k)
    }

    pub fn manhattan(self, other: Coord) -> u32 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl FromStr for Coord {
    type Err = String;

    /// Parses `X,Y`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (x, y) = inner
            .split_once(',')
            .ok_or_else(|| format!("expected X,Y but got {s:?}"))?;
        let x = x
            .trim()
            .parse()
            .map_err(|e| format!("bad x in {s:?}: {e}"))?;
        let y = y
            .trim()
            .parse()
            .map_err(|e| format!("bad y in {s:?}: {e}"))?;
        Ok(Coord::new(x, y))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
    Left,
    Right,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::Up,
        Direction::Down,
        Direction::Left,
        Direction::Right,
    ];
    pub const HORIZONTAL: [Direction; 2] = [Direction::Left, Direction::Right];
    pub const VERTICAL: [Direction; 2] = [Direction::Up, Direction::Down];

    pub const fn offset(self) -> (i32, i32) {
        match self {
            Direction::Up => (0, -1),
            Direction::Down => (0, 1),
            Direction::Left => (-1, 0),
            Direction::Right => (1, 0),
        }
    }

    pub const fn opposite(self) -> Direction {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }

    pub const fn is_horizontal(self) -> bool {
        matches!(self, Direction::Left | Direction::Right)
    }

    pub const fn is_vertical(self) -> bool {
        !self.is_horizontal()
    }

    /// The two directions perpendicular to `self`.
    pub const fn sides(self) -> [Direction; 2] {
        if self.is_horizontal() {
            Direction::VERTICAL
        } else {
            Direction::HORIZONTAL
        }
    }
}

/// The direction of the unit move `from -> to`.
pub fn direction(from: Coord, to: Coord) -> Result<Direction, GridError> {
    match (to.x - from.x, to.y - from.y) {
        (0, -1) => Ok(Direction::Up),
        (0, 1) => Ok(Direction::Down),
        (-1, 0) => Ok(Direction::Left),
        (1, 0) => Ok(Direction::Right),
        _ => Err(GridError::NotAdjacent { from, to }),
    }
}

/// The direction from `from` toward a co-linear `to` at any distance.
pub(crate) fn ray_direction(from: Coord, to: Coord) -> Option<Direction> {
    match ((to.x - from.x).signum(), (to.y - from.y).signum()) {
        (0, -1) => Some(Direction::Up),
        (0, 1) => Some(Direction::Down),
        (-1, 0) => Some(Direction::Left),
        (1, 0) => Some(Direction::Right),
        _ => None,
    }
}

/// Immutable occupancy grid. Cells are packed row-major into a bit set
/// (bit set = passable). Every query outside the grid reports blocked.
#[derive(Clone, PartialEq, Eq)]
pub struct GridMap {
    width: usize,
    height: usize,
    bits: Vec<u64>,
}

impl GridMap {
    pub fn from_fn(
        width: usize,
        height: usize,
        mut passable: impl FnMut(Coord) -> bool,
    ) -> Result<Self, GridError> {
        if width == 0 || height == 0 {
            return Err(GridError::ZeroDimension { width, height });
        }
        let mut bits = vec![0u64; (width * height).div_ceil(64)];
        for y in 0..height {
            for x in 0..width {
                if passable(Coord::new(x as i32, y as i32)) {
                    let i = y * width + x;
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
        }
        Ok(GridMap {
            width,
            height,
            bits,
        })
    }

    /// Builds a map from a row-major passability vector.
    pub fn from_cells(width: usize, height: usize, cells: &[bool]) -> Result<Self, GridError> {
        if cells.len() != width * height {
            return Err(GridError::MapFormat {
                line: 0,
                message: format!(
                    "expected {} cells for {width}x{height}, got {}",
                    width * height,
                    cells.len()
                ),
            });
        }
        Self::from_fn(width, height, |c| {
            cells[c.y as usize * width + c.x as usize]
        })
    }

    /// Builds a map from rows of `.` (passable) and anything else (blocked).
    /// Handy for small hand-drawn fixtures.
    pub fn from_ascii(rows: &[&str]) -> Result<Self, GridError> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.chars().count());
        let grid: Vec<Vec<char>> = rows.iter().map(|r| r.chars().collect()).collect();
        if let Some(bad) = grid.iter().position(|r| r.len() != width) {
            return Err(GridError::MapFormat {
                line: bad + 1,
                message: format!("row has {} cells, expected {width}", grid[bad].len()),
            });
        }
        Self::from_fn(width, height, |c| grid[c.y as usize][c.x as usize] == '.')
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }

    #[inline]
    pub fn in_bounds(&self, c: Coord) -> bool {
        c.x >= 0 && c.y >= 0 && (c.x as usize) < self.width && (c.y as usize) < self.height
    }

    /// Row-major index of an in-bounds cell.
    #[inline]
    pub fn index(&self, c: Coord) -> usize {
        c.y as usize * self.width + c.x as usize
    }

    #[inline]
    pub fn coord(&self, index: usize) -> Coord {
        Coord::new((index % self.width) as i32, (index / self.width) as i32)
    }

    #[inline]
    pub fn is_passable(&self, c: Coord) -> bool {
        if !self.in_bounds(c) {
            return false;
        }
        let i = self.index(c);
        self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn passable_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Fails unless `c` is inside the map and passable.
    pub fn check_open(&self, c: Coord) -> Result<(), GridError> {
        if !self.in_bounds(c) {
            Err(GridError::OutOfBounds(c))
        } else if !self.is_passable(c) {
            Err(GridError::Blocked(c))
        } else {
            Ok(())
        }
    }

    /// All passable cells, row-major.
    pub fn passable_cells(&self) -> impl Iterator<Item = Coord> + '_ {
        (0..self.area())
            .map(|i| self.coord(i))
            .filter(|&c| self.is_passable(c))
    }

    /// A copy with the given cells' passability overridden.
    pub fn with_cells(&self, overrides: &[(Coord, bool)]) -> GridMap {
        let mut out = self.clone();
        for &(c, open) in overrides {
            if self.in_bounds(c) {
                let i = self.index(c);
                if open {
                    out.bits[i / 64] |= 1 << (i % 64);
                } else {
                    out.bits[i / 64] &= !(1 << (i % 64));
                }
            }
        }
        out
    }
}

impl fmt::Debug for GridMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GridMap {}x{}", self.width, self.height)?;
        for y in 0..self.height {
            for x in 0..self.width {
                let open = self.is_passable(Coord::new(x as i32, y as i32));
                f.write_str(if open { "." } else { "@" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Passable cells one unit move from `x`, in [`Direction::ALL`] order.
///
/// `x` itself must be inside the map and passable.
pub fn neighbors(map: &GridMap, x: Coord) -> Result<Vec<Coord>, GridError> {
    map.check_open(x)?;
    Ok(Direction::ALL
        .iter()
        .map(|&d| x.step(d, 1))
        .filter(|&n| map.is_passable(n))
        .collect())
}

/// A cycle-free walk of unit moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    nodes: Vec<Coord>,
}

impl Path {
    pub fn new(nodes: Vec<Coord>) -> Result<Self, GridError> {
        if nodes.is_empty() {
            return Err(GridError::EmptyPath);
        }
        for w in nodes.windows(2) {
            direction(w[0], w[1])?;
        }
        let mut seen = HashSet::with_capacity(nodes.len());
        for &n in &nodes {
            if !seen.insert(n) {
                return Err(GridError::RepeatedNode(n));
            }
        }
        Ok(Path { nodes })
    }

    pub fn single(c: Coord) -> Self {
        Path { nodes: vec![c] }
    }

    /// Number of unit moves.
    pub fn length(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[Coord] {
        &self.nodes
    }

    pub fn into_nodes(self) -> Vec<Coord> {
        self.nodes
    }

    pub fn start(&self) -> Coord {
        self.nodes[0]
    }

    pub fn end(&self) -> Coord {
        *self.nodes.last().expect("paths are never empty")
    }

    /// The move sequence; `moves().len() == length()`.
    pub fn moves(&self) -> Vec<Direction> {
        self.nodes
            .windows(2)
            .map(|w| direction(w[0], w[1]).expect("validated on construction"))
            .collect()
    }

    /// Checks that every node is passable on `map`.
    pub fn check_on(&self, map: &GridMap) -> Result<(), GridError> {
        self.nodes.iter().try_for_each(|&c| map.check_open(c))
    }
}
