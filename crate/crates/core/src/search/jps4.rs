use std::time::Instant;

use super::workspace::with_workspace;
use super::{reconstruct_path, Outcome, SearchError, SearchMetrics, SearchProblem, SearchResult};
use crate::grid::{Coord, Direction};
use crate::jps::{successors_with, MoveContext};

/// One node taken off the open list by JPS4, with the direction of the ray
/// that reached it (`None` for the start node).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expansion {
    pub node: Coord,
    pub arrival: Option<Direction>,
}

/// Jump point search: best-first search whose successors are the jump
/// points returned by [`crate::jps::identify_successors`]. Jump points are
/// co-linear with the node that found them, so the edge cost is their
/// Manhattan distance.
pub fn jps4(problem: &SearchProblem<'_>) -> Result<SearchResult, SearchError> {
    search(problem, |_| {})
}

/// [`jps4`], also returning every expansion in order.
pub fn jps4_traced(
    problem: &SearchProblem<'_>,
) -> Result<(SearchResult, Vec<Expansion>), SearchError> {
    let mut trace = Vec::new();
    let result = search(problem, |e| trace.push(e))?;
    Ok((result, trace))
}

fn search(
    problem: &SearchProblem<'_>,
    mut on_expand: impl FnMut(Expansion),
) -> Result<SearchResult, SearchError> {
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
            let arrival = match nodes.get(i) {
                Some(n) if !n.closed && n.g == entry.g => n.arrival,
                _ => continue,
            };
            nodes.close(i);
            expanded += 1;
            let node = map.coord(i);
            on_expand(Expansion { node, arrival });
            if i == goal_i {
                found = true;
                break;
            }
            let ctx = match arrival {
                Some(d) => MoveContext::arrived(node, d),
                None => MoveContext::start(node),
            };
            successors_with(&mut probe, &ctx, goal, |y, d| {
                let yi = map.index(y);
                let g = entry.g + node.manhattan(y);
                if nodes.improves(yi, g) {
                    nodes.reach(yi, g, i as u32, Some(d));
                    open.push(g + y.manhattan(goal), g, yi as u32);
                }
            });
        }

        let outcome = if found {
            let waypoints = nodes.chain(map, start_i, goal_i);
            Outcome::Found(reconstruct_path(&waypoints).expect("jump points are co-linear"))
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
