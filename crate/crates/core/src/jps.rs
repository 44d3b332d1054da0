//! Neighbour pruning and jumping for 4-connected uniform-cost grids.
//!
//! The canonical ordering is horizontal-first: after a horizontal move every
//! neighbour except the one behind is kept, after a vertical move only the
//! cell straight ahead is kept, plus any *forced* side neighbour. A side
//! neighbour `x + s` is forced when the cell beside the parent, `p + s`, is
//! blocked, because the only detour that avoids `x` is then strictly longer.
//!
//! Vertical rays keep going until they reach the goal, a cell with a forced
//! neighbour, or an obstacle. Horizontal rays stop after a single step.

use crate::grid::{ray_direction, Coord, Direction, GridError, GridMap};

/// Where the search stands when expanding `node`.
///
/// The parent is the *effective* parent: the cell one unit step behind
/// `node` along the arrival direction, even when the search jumped in from
/// further away. Pruning only ever looks at the last unit step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveContext {
    parent: Option<Coord>,
    node: Coord,
    arrival: Option<Direction>,
}

impl MoveContext {
    /// The start node: nothing is pruned.
    pub fn start(node: Coord) -> Self {
        MoveContext {
            parent: None,
            node,
            arrival: None,
        }
    }

    /// `node` entered by a unit move in direction `arrival`.
    pub fn arrived(node: Coord, arrival: Direction) -> Self {
        MoveContext {
            parent: Some(node.step(arrival.opposite(), 1)),
            node,
            arrival: Some(arrival),
        }
    }

    /// `node` reached along a straight ray from `from` (adjacent or not).
    pub fn from_parent(from: Coord, node: Coord) -> Result<Self, GridError> {
        ray_direction(from, node)
            .map(|d| Self::arrived(node, d))
            .ok_or(GridError::NotAdjacent { from, to: node })
    }

    pub fn parent(&self) -> Option<Coord> {
        self.parent
    }

    pub fn node(&self) -> Coord {
        self.node
    }

    pub fn arrival(&self) -> Option<Direction> {
        self.arrival
    }
}

/// Cell passability oracle used by the pruning and jumping code. The search
/// drivers wrap the map to count probed cells.
pub(crate) trait CellProbe {
    fn passable(&mut self, c: Coord) -> bool;
}

impl CellProbe for &GridMap {
    #[inline]
    fn passable(&mut self, c: Coord) -> bool {
        self.is_passable(c)
    }
}

/// A set of directions packed into four bits.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct DirSet(u8);

impl DirSet {
    fn bit(d: Direction) -> u8 {
        match d {
            Direction::Up => 1,
            Direction::Down => 2,
            Direction::Left => 4,
            Direction::Right => 8,
        }
    }

    fn insert(&mut self, d: Direction) {
        self.0 |= Self::bit(d);
    }

    pub(crate) fn iter(self) -> impl Iterator<Item = Direction> {
        Direction::ALL
            .into_iter()
            .filter(move |&d| self.0 & Self::bit(d) != 0)
    }
}

/// Sides of a vertical move `parent -> node` whose neighbour is forced.
#[inline]
fn forced_sides<P: CellProbe>(
    probe: &mut P,
    parent: Coord,
    node: Coord,
    arrival: Direction,
) -> DirSet {
    let mut out = DirSet::default();
    if arrival.is_horizontal() {
        return out;
    }
    for s in Direction::HORIZONTAL {
        if probe.passable(node.step(s, 1)) && !probe.passable(parent.step(s, 1)) {
            out.insert(s);
        }
    }
    out
}

fn natural_dirs<P: CellProbe>(probe: &mut P, ctx: &MoveContext) -> DirSet {
    let mut out = DirSet::default();
    match ctx.arrival {
        Some(a) if a.is_vertical() => {
            if probe.passable(ctx.node.step(a, 1)) {
                out.insert(a);
            }
        }
        arrival => {
            let back = arrival.map(Direction::opposite);
            for d in Direction::ALL {
                if Some(d) != back && probe.passable(ctx.node.step(d, 1)) {
                    out.insert(d);
                }
            }
        }
    }
    out
}

pub(crate) fn prune_dirs<P: CellProbe>(probe: &mut P, ctx: &MoveContext) -> DirSet {
    let mut out = natural_dirs(probe, ctx);
    if let (Some(parent), Some(arrival)) = (ctx.parent, ctx.arrival) {
        out.0 |= forced_sides(probe, parent, ctx.node, arrival).0;
    }
    out
}

/// Neighbours of `ctx.node` that survive pruning in an obstacle-free
/// neighbourhood.
pub fn natural_neighbors(map: &GridMap, ctx: &MoveContext) -> Vec<Coord> {
    natural_dirs(&mut &*map, ctx)
        .iter()
        .map(|d| ctx.node.step(d, 1))
        .collect()
}

/// Side neighbours that must be kept after a vertical move because the cell
/// beside the parent is blocked. Always empty for horizontal moves and for
/// the start node.
pub fn forced_neighbors(map: &GridMap, ctx: &MoveContext) -> Vec<Coord> {
    match (ctx.parent, ctx.arrival) {
        (Some(parent), Some(arrival)) => forced_sides(&mut &*map, parent, ctx.node, arrival)
            .iter()
            .map(|d| ctx.node.step(d, 1))
            .collect(),
        _ => Vec::new(),
    }
}

/// Natural plus forced neighbours; every passable neighbour at the start.
pub fn prune(map: &GridMap, ctx: &MoveContext) -> Vec<Coord> {
    prune_dirs(&mut &*map, ctx)
        .iter()
        .map(|d| ctx.node.step(d, 1))
        .collect()
}

pub(crate) fn jump_with<P: CellProbe>(
    probe: &mut P,
    origin: Coord,
    d: Direction,
    goal: Coord,
) -> Option<Coord> {
    let first = origin.step(d, 1);
    if !probe.passable(first) {
        return None;
    }
    if d.is_horizontal() {
        return Some(first);
    }

    // Passability of the left/right cells beside the previous ray cell,
    // carried forward so each step probes three cells.
    let [l, r] = Direction::HORIZONTAL;
    let mut prev_left = probe.passable(origin.step(l, 1));
    let mut prev_right = probe.passable(origin.step(r, 1));
    let mut x = first;
    loop {
        let left = probe.passable(x.step(l, 1));
        let right = probe.passable(x.step(r, 1));
        if (left && !prev_left) || (right && !prev_right) {
            return Some(x);
        }
        if x == goal {
            return Some(x);
        }
        let next = x.step(d, 1);
        if !probe.passable(next) {
            return None;
        }
        prev_left = left;
        prev_right = right;
        x = next;
    }
}

/// The jump point from `origin` in direction `d`: the nearest cell
/// `origin + k*d` (k >= 1) that is the goal, is reached horizontally, or has
/// a forced neighbour. `None` if an obstacle or the map edge comes first.
pub fn jump(map: &GridMap, origin: Coord, d: Direction, goal: Coord) -> Option<Coord> {
    jump_with(&mut &*map, origin, d, goal)
}

/// Whether `y`, entered by a unit move in direction `d`, stops a jump.
pub fn is_jump_point(map: &GridMap, y: Coord, d: Direction, goal: Coord) -> bool {
    y == goal || d.is_horizontal() || !forced_neighbors(map, &MoveContext::arrived(y, d)).is_empty()
}

pub(crate) fn successors_with<P: CellProbe>(
    probe: &mut P,
    ctx: &MoveContext,
    goal: Coord,
    mut emit: impl FnMut(Coord, Direction),
) {
    for d in prune_dirs(probe, ctx).iter() {
        if let Some(y) = jump_with(probe, ctx.node, d, goal) {
            emit(y, d);
        }
    }
}

/// Jump points reachable from `ctx.node`: one jump per pruned neighbour,
/// each ray starting at `ctx.node` so the neighbour itself is the first
/// candidate.
pub fn identify_successors(map: &GridMap, ctx: &MoveContext, goal: Coord) -> Vec<Coord> {
    let mut out = Vec::with_capacity(4);
    successors_with(&mut &*map, ctx, goal, |y, _| out.push(y));
    out
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::grid::generate_empty;

    fn c(x: i32, y: i32) -> Coord {
        Coord::new(x, y)
    }

    fn set(v: Vec<Coord>) -> HashSet<Coord> {
        v.into_iter().collect()
    }

    fn up_from_below() -> MoveContext {
        MoveContext::from_parent(c(1, 2), c(1, 1)).unwrap()
    }

    #[test]
    fn context_constructors() {
        let ctx = MoveContext::from_parent(c(1, 9), c(1, 1)).unwrap();
        assert_eq!(ctx.parent(), Some(c(1, 2)));
        assert_eq!(ctx.arrival(), Some(Direction::Up));
        assert_eq!(MoveContext::start(c(0, 0)).parent(), None);
        assert!(MoveContext::from_parent(c(0, 0), c(1, 1)).is_err());
        assert!(MoveContext::from_parent(c(1, 1), c(1, 1)).is_err());
    }

    #[test]
    fn natural_neighbors_vertical_horizontal_start() {
        let m = generate_empty(3, 3).unwrap();
        assert_eq!(natural_neighbors(&m, &up_from_below()), vec![c(1, 0)]);
        let right = MoveContext::from_parent(c(0, 1), c(1, 1)).unwrap();
        assert_eq!(
            set(natural_neighbors(&m, &right)),
            set(vec![c(2, 1), c(1, 0), c(1, 2)])
        );
        assert_eq!(natural_neighbors(&m, &MoveContext::start(c(1, 1))).len(), 4);
    }

    #[test]
    fn natural_neighbor_ahead_blocked() {
        let m = GridMap::from_ascii(&[".@.", "...", "..."]).unwrap();
        assert!(natural_neighbors(&m, &up_from_below()).is_empty());
    }

    #[test]
    fn forced_neighbors_from_obstacles() {
        let one = GridMap::from_ascii(&["...", "...", "@.."]).unwrap();
        assert_eq!(forced_neighbors(&one, &up_from_below()), vec![c(0, 1)]);
        let two = GridMap::from_ascii(&["...", "...", "@.@"]).unwrap();
        assert_eq!(
            set(forced_neighbors(&two, &up_from_below())),
            set(vec![c(0, 1), c(2, 1)])
        );
        let free = generate_empty(3, 3).unwrap();
        assert!(forced_neighbors(&free, &up_from_below()).is_empty());
    }

    #[test]
    fn forced_needs_open_side_cell() {
        // Beside the parent blocked, but beside x blocked too: nothing forced.
        let m = GridMap::from_ascii(&["...", "@..", "@.."]).unwrap();
        assert!(forced_neighbors(&m, &up_from_below()).is_empty());
    }

    #[test]
    fn map_edge_counts_as_obstacle_for_forcing() {
        // Parent at the right edge column: nothing beside it on the right.
        let m = GridMap::from_ascii(&["..", "..", ".@"]).unwrap();
        let ctx = MoveContext::from_parent(c(0, 2), c(0, 1)).unwrap();
        assert_eq!(forced_neighbors(&m, &ctx), vec![c(1, 1)]);
    }

    #[test]
    fn horizontal_moves_never_force() {
        let m = GridMap::from_ascii(&["@.@", "...", "@.@"]).unwrap();
        for (p, x) in [(c(0, 1), c(1, 1)), (c(2, 1), c(1, 1))] {
            let ctx = MoveContext::from_parent(p, x).unwrap();
            assert!(forced_neighbors(&m, &ctx).is_empty());
        }
    }

    #[test]
    fn prune_examples() {
        let free = generate_empty(3, 3).unwrap();
        assert_eq!(prune(&free, &MoveContext::start(c(1, 1))).len(), 4);
        assert_eq!(prune(&free, &up_from_below()), vec![c(1, 0)]);
        let one = GridMap::from_ascii(&["...", "...", "@.."]).unwrap();
        assert_eq!(
            set(prune(&one, &up_from_below())),
            set(vec![c(1, 0), c(0, 1)])
        );
    }

    #[test]
    fn jump_examples() {
        let m = generate_empty(5, 5).unwrap();
        assert_eq!(jump(&m, c(0, 4), Direction::Right, c(4, 0)), Some(c(1, 4)));
        assert_eq!(jump(&m, c(4, 4), Direction::Up, c(4, 0)), Some(c(4, 0)));
        assert_eq!(jump(&m, c(0, 4), Direction::Up, c(4, 0)), None);

        let post = m.with_cells(&[(c(2, 3), false)]);
        assert_eq!(jump(&post, c(3, 4), Direction::Up, c(2, 1)), Some(c(3, 2)));

        let wall = generate_empty(3, 3)
            .unwrap()
            .with_cells(&[(c(1, 0), false)]);
        assert_eq!(jump(&wall, c(1, 1), Direction::Up, c(2, 2)), None);
    }

    #[test]
    fn jump_from_origin_beside_obstacle() {
        // The origin's own side cells count as the parent's for the first step.
        let m = GridMap::from_ascii(&["...", "...", "@.."]).unwrap();
        assert_eq!(jump(&m, c(1, 2), Direction::Up, c(2, 2)), Some(c(1, 1)));
    }

    #[test]
    fn successor_examples() {
        let m = generate_empty(5, 5).unwrap();
        let succ = identify_successors(&m, &MoveContext::start(c(0, 4)), c(4, 0));
        assert_eq!(succ, vec![c(1, 4)]);

        let next_to_goal = identify_successors(&m, &MoveContext::start(c(2, 2)), c(2, 1));
        assert!(next_to_goal.contains(&c(2, 1)));

        let boxed = GridMap::from_ascii(&["@@@", "@.@", "@@@"]).unwrap();
        assert!(identify_successors(&boxed, &MoveContext::start(c(1, 1)), c(0, 0)).is_empty());
    }

    #[test]
    fn is_jump_point_conditions() {
        let m = generate_empty(5, 5).unwrap();
        assert!(is_jump_point(&m, c(2, 2), Direction::Left, c(0, 0)));
        assert!(is_jump_point(&m, c(0, 0), Direction::Up, c(0, 0)));
        assert!(!is_jump_point(&m, c(2, 2), Direction::Up, c(0, 0)));
        let post = m.with_cells(&[(c(2, 3), false)]);
        assert!(is_jump_point(&post, c(3, 2), Direction::Up, c(0, 0)));
    }
}
