//! Per-thread scratch state shared by A* and JPS4: the open list and a
//! generation-stamped node table, so a search never clears a map-sized
//! array.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::grid::{Coord, Direction, GridMap};
use crate::jps::CellProbe;

/// Open-list entry. The heap pops the smallest `f`, then the largest `g`,
/// then the earliest insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct OpenEntry {
    pub f: u32,
    pub g: u32,
    pub seq: u32,
    pub node: u32,
}

impl Ord for OpenEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .f
            .cmp(&self.f)
            .then(self.g.cmp(&other.g))
            .then(other.seq.cmp(&self.seq))
    }
}

impl PartialOrd for OpenEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct NodeState {
    stamp: u32,
    pub g: u32,
    pub parent: u32,
    pub closed: bool,
    pub arrival: Option<Direction>,
}

#[derive(Default)]
pub(crate) struct Workspace {
    generation: u32,
    nodes: Vec<NodeState>,
    visited: Vec<u32>,
    pub open: OpenList,
}

impl Workspace {
    /// Starts a new search over a map with `area` cells.
    fn begin(&mut self, area: usize) {
        if self.nodes.len() < area {
            self.nodes.resize(area, NodeState::default());
            self.visited.resize(area, 0);
        }
        if self.generation == u32::MAX {
            self.nodes.iter_mut().for_each(|n| n.stamp = 0);
            self.visited.iter_mut().for_each(|v| *v = 0);
            self.generation = 0;
        }
        self.generation += 1;
        self.open.clear();
    }

    /// Splits the workspace into the node table, a counting probe over `map`
    /// and the open list, so they can be borrowed independently.
    pub fn parts<'a>(
        &'a mut self,
        map: &'a GridMap,
    ) -> (NodeTable<'a>, TrackingProbe<'a>, &'a mut OpenList) {
        self.begin(map.area());
        let generation = self.generation;
        (
            NodeTable {
                generation,
                nodes: &mut self.nodes,
            },
            TrackingProbe {
                map,
                generation,
                visited: &mut self.visited,
                count: 0,
            },
            &mut self.open,
        )
    }
}

thread_local! {
    static WORKSPACE: RefCell<Workspace> = RefCell::new(Workspace::default());
}

/// Runs `f` with this thread's workspace (or a fresh one when re-entered).
pub(crate) fn with_workspace<R>(f: impl FnOnce(&mut Workspace) -> R) -> R {
    WORKSPACE.with(|ws| match ws.try_borrow_mut() {
        Ok(mut ws) => f(&mut ws),
        Err(_) => f(&mut Workspace::default()),
    })
}

pub(crate) struct NodeTable<'a> {
    generation: u32,
    nodes: &'a mut [NodeState],
}

impl NodeTable<'_> {
    /// The node's state if it has been reached in this search.
    #[inline]
    pub fn get(&self, index: usize) -> Option<&NodeState> {
        let n = &self.nodes[index];
        (n.stamp == self.generation).then_some(n)
    }

    #[inline]
    pub fn reach(&mut self, index: usize, g: u32, parent: u32, arrival: Option<Direction>) {
        self.nodes[index] = NodeState {
            stamp: self.generation,
            g,
            parent,
            closed: false,
            arrival,
        };
    }

    #[inline]
    pub fn close(&mut self, index: usize) {
        self.nodes[index].closed = true;
    }

    /// Whether `g` would improve on the node's best known cost.
    #[inline]
    pub fn improves(&self, index: usize, g: u32) -> bool {
        match self.get(index) {
            Some(n) => !n.closed && g < n.g,
            None => true,
        }
    }

    /// Follows parent links from `goal` back to `start`, returned start-first.
    pub fn chain(&self, map: &GridMap, start: usize, goal: usize) -> Vec<Coord> {
        let mut out = vec![map.coord(goal)];
        let mut at = goal;
        while at != start {
            at = self.nodes[at].parent as usize;
            out.push(map.coord(at));
        }
        out.reverse();
        out
    }
}

/// Reads passability through the map and records every distinct in-bounds
/// cell it touches.
pub(crate) struct TrackingProbe<'a> {
    map: &'a GridMap,
    generation: u32,
    visited: &'a mut [u32],
    count: u64,
}

impl TrackingProbe<'_> {
    pub fn visited(&self) -> u64 {
        self.count
    }
}

impl CellProbe for TrackingProbe<'_> {
    #[inline]
    fn passable(&mut self, c: Coord) -> bool {
        if !self.map.in_bounds(c) {
            return false;
        }
        let i = self.map.index(c);
        if self.visited[i] != self.generation {
            self.visited[i] = self.generation;
            self.count += 1;
        }
        self.map.is_passable(c)
    }
}

/// Binary min-heap with push/pop/peak-size counters.
#[derive(Default)]
pub(crate) struct OpenList {
    heap: BinaryHeap<OpenEntry>,
    seq: u32,
    pub pushes: u64,
    pub pops: u64,
    pub max_len: u64,
}

impl OpenList {
    fn clear(&mut self) {
        self.heap.clear();
        self.seq = 0;
        self.pushes = 0;
        self.pops = 0;
        self.max_len = 0;
    }

    #[inline]
    pub fn push(&mut self, f: u32, g: u32, node: u32) {
        self.heap.push(OpenEntry {
            f,
            g,
            seq: self.seq,
            node,
        });
        self.seq = self.seq.wrapping_add(1);
        self.pushes += 1;
        self.max_len = self.max_len.max(self.heap.len() as u64);
    }

    #[inline]
    pub fn pop(&mut self) -> Option<OpenEntry> {
        let e = self.heap.pop()?;
        self.pops += 1;
        Some(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_order_f_then_larger_g_then_fifo() {
        let mut open = OpenList::default();
        open.push(10, 2, 0);
        open.push(9, 1, 1);
        open.push(10, 5, 2);
        open.push(10, 5, 3);
        open.push(11, 9, 4);
        let order: Vec<u32> = std::iter::from_fn(|| open.pop().map(|e| e.node)).collect();
        assert_eq!(order, vec![1, 2, 3, 0, 4]);
        assert_eq!((open.pushes, open.pops, open.max_len), (5, 5, 5));
    }

    #[test]
    fn generations_isolate_searches() {
        let map = crate::grid::generate_empty(4, 4).unwrap();
        let mut ws = Workspace::default();
        {
            let (mut nodes, mut probe, _) = ws.parts(&map);
            nodes.reach(3, 7, 0, None);
            probe.passable(Coord::new(1, 1));
            probe.passable(Coord::new(1, 1));
            probe.passable(Coord::new(-1, 1));
            assert_eq!(probe.visited(), 1);
            assert_eq!(nodes.get(3).map(|n| n.g), Some(7));
        }
        let (nodes, probe, _) = ws.parts(&map);
        assert!(nodes.get(3).is_none());
        assert_eq!(probe.visited(), 0);
    }
}
