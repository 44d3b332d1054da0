//! Horizontal-first paths.
//!
//! A path is horizontal-first when none of its vertical-then-horizontal
//! corners can be flipped to horizontal-then-vertical. Flipping replaces
//! `<a, b, c>` (a→b vertical, b→c horizontal) by `<a, b', c>` where
//! `b' = a + (c - b)`, which keeps the length. [`to_horizontal_first`]
//! applies flips until none is possible; every turning point of the result
//! is then reached horizontally or has a forced neighbour, so the search
//! expands it.
//!
//! This module is test infrastructure for the optimality argument and is
//! not used by the search drivers.

use std::collections::HashSet;

use crate::grid::{direction, Coord, GridMap, Path};
use crate::jps::is_jump_point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TurnKind {
    HorizontalToVertical,
    VerticalToHorizontal,
}

/// An interior path node where the move direction changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TurningPoint {
    pub index: usize,
    pub kind: TurnKind,
}

pub fn turning_points(path: &Path) -> Vec<TurningPoint> {
    let moves = path.moves();
    moves
        .windows(2)
        .enumerate()
        .filter(|(_, m)| m[0] != m[1])
        .map(|(i, m)| TurningPoint {
            index: i + 1,
            kind: if m[0].is_vertical() {
                TurnKind::VerticalToHorizontal
            } else {
                TurnKind::HorizontalToVertical
            },
        })
        .collect()
}

/// The replacement node for the corner at `nodes[i + 1]`, if moves `i` and
/// `i + 1` are vertical-then-horizontal and the flip keeps the path valid.
fn flip_at(map: &GridMap, nodes: &[Coord], on_path: &HashSet<Coord>, i: usize) -> Option<Coord> {
    let (a, b, c) = (nodes[i], nodes[i + 1], nodes[i + 2]);
    let first = direction(a, b).ok()?;
    let second = direction(b, c).ok()?;
    if !(first.is_vertical() && second.is_horizontal()) {
        return None;
    }
    let flipped = a.step(second, 1);
    (map.is_passable(flipped) && !on_path.contains(&flipped)).then_some(flipped)
}

pub fn is_horizontal_first(map: &GridMap, path: &Path) -> bool {
    let nodes = path.nodes();
    let on_path: HashSet<Coord> = nodes.iter().copied().collect();
    (0..nodes.len().saturating_sub(2)).all(|i| flip_at(map, nodes, &on_path, i).is_none())
}

/// Flips vertical-then-horizontal corners, scanning from the front and
/// restarting after every flip, until none applies.
///
/// Each flip moves one horizontal move one slot earlier in the move
/// sequence, so the sum of horizontal-move indices strictly decreases and
/// the loop terminates.
pub fn to_horizontal_first(map: &GridMap, path: &Path) -> Path {
    let mut nodes = path.nodes().to_vec();
    let mut on_path: HashSet<Coord> = nodes.iter().copied().collect();
    'scan: loop {
        for i in 0..nodes.len().saturating_sub(2) {
            if let Some(flipped) = flip_at(map, &nodes, &on_path, i) {
                on_path.remove(&nodes[i + 1]);
                on_path.insert(flipped);
                nodes[i + 1] = flipped;
                continue 'scan;
            }
        }
        break;
    }
    Path::new(nodes).expect("flips preserve adjacency and simplicity")
}

/// Turning points that are not jump points for the move that enters them.
/// Empty for every optimal horizontal-first path.
pub fn non_jump_turning_points(map: &GridMap, path: &Path) -> Vec<TurningPoint> {
    let nodes = path.nodes();
    turning_points(path)
        .into_iter()
        .filter(|tp| {
            let node = nodes[tp.index];
            let incoming = direction(nodes[tp.index - 1], node).expect("valid path");
            !is_jump_point(map, node, incoming, path.end())
        })
        .collect()
}
