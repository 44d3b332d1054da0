//! Brute-force oracles for the pruning and jumping rules, and exhaustive
//! optimality checks on tiny grids.

use std::collections::VecDeque;

use jps4::grid::{Coord, Direction, GridMap};
use jps4::jps::{forced_neighbors, identify_successors, is_jump_point, jump, MoveContext};
use jps4::search::{astar, bfs_oracle, jps4, jps4_traced, SearchProblem};

/// Shortest unit-move distance from `from` to `to` avoiding `removed` and
/// blocked cells. `from` itself may be blocked.
fn distance_avoiding(map: &GridMap, from: Coord, to: Coord, removed: Coord) -> Option<u32> {
    let mut dist = vec![u32::MAX; map.area()];
    dist[map.index(from)] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(c) = queue.pop_front() {
        if c == to {
            return Some(dist[map.index(c)]);
        }
        for d in Direction::ALL {
            let n = c.step(d, 1);
            if n == removed || !map.is_passable(n) || dist[map.index(n)] != u32::MAX {
                continue;
            }
            dist[map.index(n)] = dist[map.index(c)] + 1;
            queue.push_back(n);
        }
    }
    None
}

const RING: [(i32, i32); 8] = [
    (-1, -1),
    (0, -1),
    (1, -1),
    (-1, 0),
    (1, 0),
    (-1, 1),
    (0, 1),
    (1, 1),
];

/// Every obstacle pattern of the 8 cells around the centre of a 7×7 open
/// frame, for both vertical arrivals: a side neighbour is forced exactly when
/// going through x (length 2) beats every route that avoids x.
#[test]
fn forced_neighbors_match_path_length_definition() {
    let x = Coord::new(3, 3);
    let mut checked = 0;
    for mask in 0u32..256 {
        let blocked: Vec<(Coord, bool)> = RING
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &(dx, dy))| (Coord::new(x.x + dx, x.y + dy), false))
            .collect();
        let map = jps4::grid::generate_empty(7, 7)
            .unwrap()
            .with_cells(&blocked);
        for arrival in Direction::VERTICAL {
            let ctx = MoveContext::arrived(x, arrival);
            let parent = ctx.parent().unwrap();
            let forced = forced_neighbors(&map, &ctx);
            for side in Direction::HORIZONTAL {
                let n = x.step(side, 1);
                let expected = map.is_passable(n)
                    && distance_avoiding(&map, parent, n, x).is_none_or(|len| len > 2);
                assert_eq!(
                    forced.contains(&n),
                    expected,
                    "mask {mask:08b} arrival {arrival:?} side {side:?}"
                );
                checked += 1;
            }
            // Straight ahead and behind are never forced.
            assert!(!forced.contains(&x.step(arrival, 1)));
            assert!(!forced.contains(&parent));
        }
    }
    assert_eq!(checked, 256 * 2 * 2);
}

/// Small deterministic xorshift so the oracle tests carry no RNG dependency.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_map(rng: &mut XorShift, w: usize, h: usize, density_pct: u64) -> GridMap {
    GridMap::from_fn(w, h, |_| rng.below(100) >= density_pct).unwrap()
}

#[test]
fn jump_returns_the_nearest_jump_point() {
    let mut rng = XorShift(0x9e3779b97f4a7c15);
    for _ in 0..300 {
        let map = random_map(&mut rng, 9, 8, 30);
        let cells: Vec<Coord> = map.passable_cells().collect();
        if cells.is_empty() {
            continue;
        }
        let goal = cells[rng.below(cells.len() as u64) as usize];
        for &origin in &cells {
            for d in Direction::ALL {
                // Rescan the ray cell by cell.
                let mut expected = None;
                for k in 1.. {
                    let y = origin.step(d, k);
                    if !map.is_passable(y) {
                        break;
                    }
                    if is_jump_point(&map, y, d, goal) {
                        expected = Some(y);
                        break;
                    }
                }
                assert_eq!(
                    jump(&map, origin, d, goal),
                    expected,
                    "{origin} {d:?}\n{map:?}"
                );
            }
        }
    }
}

#[test]
fn successors_are_colinear_open_and_distinct_from_node() {
    let mut rng = XorShift(12345);
    for _ in 0..200 {
        let map = random_map(&mut rng, 10, 10, 35);
        let cells: Vec<Coord> = map.passable_cells().collect();
        if cells.len() < 2 {
            continue;
        }
        let goal = cells[rng.below(cells.len() as u64) as usize];
        for &node in &cells {
            let mut contexts = vec![MoveContext::start(node)];
            for d in Direction::ALL {
                if map.is_passable(node.step(d.opposite(), 1)) {
                    contexts.push(MoveContext::arrived(node, d));
                }
            }
            for ctx in contexts {
                for y in identify_successors(&map, &ctx, goal) {
                    assert!(map.is_passable(y));
                    assert_ne!(y, node);
                    assert!(y.x == node.x || y.y == node.y);
                    let d = if y.x == node.x {
                        if y.y < node.y {
                            Direction::Up
                        } else {
                            Direction::Down
                        }
                    } else if y.x < node.x {
                        Direction::Left
                    } else {
                        Direction::Right
                    };
                    for k in 1..=node.manhattan(y) as i32 {
                        assert!(map.is_passable(node.step(d, k)));
                    }
                }
            }
        }
    }
}

/// All 4096 maps of size 4×3, every ordered pair of open cells.
#[test]
fn exhaustive_small_grids_agree_with_bfs() {
    let (w, h) = (4usize, 3usize);
    let mut instances = 0;
    for mask in 0u32..(1 << (w * h)) {
        let map = GridMap::from_fn(w, h, |c| {
            mask & (1 << (c.y as usize * w + c.x as usize)) == 0
        })
        .unwrap();
        let cells: Vec<Coord> = map.passable_cells().collect();
        for &s in &cells {
            for &g in &cells {
                let p = SearchProblem::new(&map, s, g).unwrap();
                let truth = bfs_oracle(&p).unwrap().length();
                assert_eq!(jps4(&p).unwrap().length(), truth, "{s}->{g}\n{map:?}");
                assert_eq!(astar(&p).unwrap().length(), truth, "{s}->{g}\n{map:?}");
                instances += 1;
            }
        }
    }
    assert!(instances > 100_000);
}

/// Every node JPS4 expands is the start, or a jump point for the ray that
/// reached it.
#[test]
fn expanded_nodes_are_jump_points() {
    let mut rng = XorShift(777);
    for _ in 0..500 {
        let density = rng.below(40);
        let map = random_map(&mut rng, 16, 16, density);
        let cells: Vec<Coord> = map.passable_cells().collect();
        if cells.len() < 2 {
            continue;
        }
        let s = cells[rng.below(cells.len() as u64) as usize];
        let g = cells[rng.below(cells.len() as u64) as usize];
        let (_, trace) = jps4_traced(&SearchProblem::new(&map, s, g).unwrap()).unwrap();
        assert_eq!(trace[0].node, s);
        assert_eq!(trace[0].arrival, None);
        for e in &trace[1..] {
            let d = e.arrival.expect("only the start lacks an arrival");
            assert!(is_jump_point(&map, e.node, d, g), "{e:?}\n{map:?}");
        }
    }
}
