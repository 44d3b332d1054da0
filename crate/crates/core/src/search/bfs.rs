use std::collections::VecDeque;
use std::time::Instant;

use super::{Outcome, SearchError, SearchMetrics, SearchProblem, SearchResult};
use crate::grid::{Direction, Path};

/// Plain breadth-first search. Deliberately shares no code with the
/// best-first drivers so it can serve as their ground truth.
pub fn bfs_oracle(problem: &SearchProblem<'_>) -> Result<SearchResult, SearchError> {
    problem.validate()?;
    let timer = Instant::now();
    let map = problem.map;
    let mut parent: Vec<Option<usize>> = vec![None; map.area()];
    let mut probed = vec![false; map.area()];
    let mut metrics = SearchMetrics::default();

    let start_i = map.index(problem.start);
    let goal_i = map.index(problem.goal);
    parent[start_i] = Some(start_i);
    probed[start_i] = true;
    let mut queue = VecDeque::from([start_i]);
    metrics.open_pushes = 1;
    metrics.max_open = 1;

    let mut found = false;
    while let Some(i) = queue.pop_front() {
        metrics.open_pops += 1;
        metrics.expanded += 1;
        if i == goal_i {
            found = true;
            break;
        }
        let c = map.coord(i);
        for d in Direction::ALL {
            let n = c.step(d, 1);
            if !map.in_bounds(n) {
                continue;
            }
            let ni = map.index(n);
            probed[ni] = true;
            if map.is_passable(n) && parent[ni].is_none() {
                parent[ni] = Some(i);
                queue.push_back(ni);
                metrics.open_pushes += 1;
                metrics.max_open = metrics.max_open.max(queue.len() as u64);
            }
        }
    }

    let outcome = if found {
        let mut nodes = vec![problem.goal];
        let mut at = goal_i;
        while at != start_i {
            at = parent[at].expect("reached cells have parents");
            nodes.push(map.coord(at));
        }
        nodes.reverse();
        Outcome::Found(Path::new(nodes).expect("BFS tree paths are simple"))
    } else {
        Outcome::Unreachable
    };
    metrics.visited = probed.iter().filter(|&&p| p).count() as u64;
    metrics.wall_time_ns = timer.elapsed().as_nanos() as u64;
    Ok(SearchResult { outcome, metrics })
}
