use std::time::Instant;

use super::workspace::with_workspace;
use super::{Outcome, SearchError, SearchMetrics, SearchProblem, SearchResult};
use crate::grid::{Direction, Path};
use crate::jps::CellProbe;

/// A* with the Manhattan heuristic over unit moves.
///
/// Stale heap entries (superseded by a cheaper push, or for a node already
/// closed) are discarded when popped: they count as pops, not expansions.
pub fn astar(problem: &SearchProblem<'_>) -> Result<SearchResult, SearchError> {
    problem.validate()?;
    let timer = Instant::now();
    let map = problem.map;
    let (start, goal) = (problem.start, problem.goal);
    let start_i = map.index(start);
    let goal_i = map.index(goal);

    with_workspace(|ws| {
        let (mut nodes, mut probe, open) = ws.parts(map);
        nodes.reach(start_i, 0, start_i as u32, None);
        open.push(start.manhattan(goal), 0, start_i as u32);

        let mut expanded = 0;
        let mut found = false;
        while let Some(entry) = open.pop() {
            let i = entry.node as usize;
            match nodes.get(i) {
                Some(n) if !n.closed && n.g == entry.g => {}
                _ => continue,
            }
            nodes.close(i);
            expanded += 1;
            if i == goal_i {
                found = true;
                break;
            }
            let c = map.coord(i);
            let g = entry.g + 1;
            for d in Direction::ALL {
                let n = c.step(d, 1);
                if !probe.passable(n) {
                    continue;
                }
                let ni = map.index(n);
                if nodes.improves(ni, g) {
                    nodes.reach(ni, g, i as u32, Some(d));
                    open.push(g + n.manhattan(goal), g, ni as u32);
                }
            }
        }

        let outcome = if found {
            let nodes = nodes.chain(map, start_i, goal_i);
            Outcome::Found(Path::new(nodes).expect("parent links form a unit-step path"))
        } else {
            Outcome::Unreachable
        };
        let metrics = SearchMetrics {
            expanded,
            open_pushes: open.pushes,
            open_pops: open.pops,
            max_open: open.max_len,
            visited: probe.visited(),
            wall_time_ns: timer.elapsed().as_nanos() as u64,
        };
        Ok(SearchResult { outcome, metrics })
    })
}
