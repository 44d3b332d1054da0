use super::SearchError;
use crate::grid::Coord;
use crate::grid::{ray_direction, GridError, Path};

/// Expands a chain of co-linear waypoints into unit steps.
pub fn reconstruct_path(waypoints: &[Coord]) -> Result<Path, SearchError> {
    let Some(&first) = waypoints.first() else {
        return Err(SearchError::Waypoints(GridError::EmptyPath));
    };
    let mut nodes = vec![first];
    for w in waypoints.windows(2) {
        let (from, to) = (w[0], w[1]);
        let d = ray_direction(from, to)
            .ok_or(SearchError::Waypoints(GridError::NotAdjacent { from, to }))?;
        let gap = from.manhattan(to) as i32;
        nodes.extend((1..=gap).map(|k| from.step(d, k)));
    }
    Path::new(nodes).map_err(SearchError::Waypoints)
}
