use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BenchError, Scenario};
use crate::grid::{Coord, Direction, GridMap};

/// File name used in generated scenario files for the empty `side`×`side` map.
pub fn empty_map_name(side: usize) -> String {
    format!("empty_{side}x{side}.map")
}

/// Number of ordered (start, goal) pairs at Manhattan distance `length` on
/// an empty `side`×`side` map.
pub fn pair_count(side: usize, length: usize) -> u64 {
    let side = side as i64;
    let length = length as i64;
    let mut total = 0;
    for dx in -length..=length {
        let dy = length - dx.abs();
        if dx.abs() >= side || dy >= side {
            continue;
        }
        let signs = if dy == 0 { 1 } else { 2 };
        total += signs * (side - dx.abs()) * (side - dy);
    }
    total as u64
}

fn offsets(side: i32, length: i32) -> impl Iterator<Item = (i32, i32)> {
    (-length..=length).flat_map(move |dx| {
        let dy = length - dx.abs();
        let dys = if dy == 0 { vec![0] } else { vec![-dy, dy] };
        dys.into_iter()
            .filter(move |dy| dx.abs() < side && dy.abs() < side)
            .map(move |dy| (dx, dy))
    })
}

/// `per_length` start/goal pairs at each exact Manhattan distance
/// `1..=max_length` on an empty `side`×`side` map. Pairs within one length
/// are distinct unless fewer than `per_length` exist, in which case the
/// available pairs are cycled.
pub fn generate_empty_problems(
    side: usize,
    per_length: usize,
    max_length: usize,
    seed: u64,
) -> Result<Vec<Scenario>, BenchError> {
    if side == 0 || per_length == 0 || max_length == 0 {
        return Err(BenchError::Geometry(
            "side, per-length and max-length must be positive".into(),
        ));
    }
    if max_length > 2 * (side - 1) {
        return Err(BenchError::Geometry(format!(
            "length {max_length} does not fit on a {side}x{side} map (max {})",
            2 * (side - 1)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = side as i32;
    let map_name = empty_map_name(side);
    let mut out = Vec::with_capacity(per_length * max_length);

    for length in 1..=max_length {
        let l = length as i32;
        let available = pair_count(side, length);
        let pairs: Vec<(Coord, Coord)> = if available <= 4 * per_length as u64 {
            let mut all: Vec<(Coord, Coord)> = offsets(s, l)
                .flat_map(|(dx, dy)| {
                    let xs = 0.max(-dx)..s.min(s - dx);
                    let ys = 0.max(-dy)..s.min(s - dy);
                    xs.flat_map(move |x| {
                        ys.clone()
                            .map(move |y| (Coord::new(x, y), Coord::new(x + dx, y + dy)))
                    })
                })
                .collect();
            all.shuffle(&mut rng);
            all.into_iter().cycle().take(per_length).collect()
        } else {
            let mut seen = HashSet::with_capacity(per_length);
            let mut picked = Vec::with_capacity(per_length);
            while picked.len() < per_length {
                let dx = rng.gen_range(-l..=l);
                let dy = (l - dx.abs()) * if rng.gen::<bool>() { 1 } else { -1 };
                if dx.abs() >= s || dy.abs() >= s {
                    continue;
                }
                let start = Coord::new(
                    rng.gen_range(0.max(-dx)..s.min(s - dx)),
                    rng.gen_range(0.max(-dy)..s.min(s - dy)),
                );
                let goal = Coord::new(start.x + dx, start.y + dy);
                if seen.insert((start, goal)) {
                    picked.push((start, goal));
                }
            }
            picked
        };
        out.extend(pairs.into_iter().map(|(start, goal)| Scenario {
            bucket: (length / 4) as u32,
            map_name: map_name.clone(),
            width: side,
            height: side,
            start,
            goal,
            declared_length: length as f64,
        }));
    }
    Ok(out)
}

/// Unit-move distances from `from` to every cell (`u32::MAX` = unreachable).
fn distance_field(map: &GridMap, from: Coord) -> Vec<u32> {
    let mut dist = vec![u32::MAX; map.area()];
    dist[map.index(from)] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(c) = queue.pop_front() {
        let next = dist[map.index(c)] + 1;
        for d in Direction::ALL {
            let n = c.step(d, 1);
            if map.is_passable(n) && dist[map.index(n)] == u32::MAX {
                dist[map.index(n)] = next;
                queue.push_back(n);
            }
        }
    }
    dist
}

/// `count` random solvable problems on `map` whose 4-connected optimum is at
/// least `min_length`. The declared length is that optimum.
pub fn sample_problems(
    map: &GridMap,
    map_name: &str,
    count: usize,
    min_length: u32,
    seed: u64,
) -> Result<Vec<Scenario>, BenchError> {
    let cells: Vec<Coord> = map.passable_cells().collect();
    if cells.is_empty() {
        return Err(BenchError::Geometry("map has no passable cells".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut barren_starts = 0;
    while out.len() < count {
        let start = *cells.choose(&mut rng).expect("non-empty");
        let dist = distance_field(map, start);
        let far: Vec<Coord> = cells
            .iter()
            .copied()
            .filter(|&c| {
                let d = dist[map.index(c)];
                d != u32::MAX && d >= min_length
            })
            .collect();
        let Some(&goal) = far.choose(&mut rng) else {
            barren_starts += 1;
            if barren_starts > 1000 {
                return Err(BenchError::Geometry(format!(
                    "no pairs at distance >= {min_length} found"
                )));
            }
            continue;
        };
        out.push(Scenario {
            bucket: dist[map.index(goal)] / 4,
            map_name: map_name.to_string(),
            width: map.width(),
            height: map.height(),
            start,
            goal,
            declared_length: dist[map.index(goal)] as f64,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::generate_rooms;

    fn brute_pair_count(side: i32, length: u32) -> u64 {
        let mut n = 0;
        for a in 0..side * side {
            for b in 0..side * side {
                let (p, q) = (
                    Coord::new(a % side, a / side),
                    Coord::new(b % side, b / side),
                );
                if p.manhattan(q) == length {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn pair_count_matches_enumeration() {
        for side in 1..6 {
            for length in 1..(2 * side as u32) {
                assert_eq!(
                    pair_count(side as usize, length as usize),
                    brute_pair_count(side, length),
                    "side {side} length {length}"
                );
            }
        }
    }

    #[test]
    fn length_one_on_three_by_three_is_adjacent_pairs() {
        let s = generate_empty_problems(3, 100, 1, 5).unwrap();
        assert_eq!(s.len(), 100);
        assert!(s.iter().all(|p| p.start.manhattan(p.goal) == 1));
        // Only 24 distinct pairs exist, so they repeat.
        let distinct: HashSet<_> = s.iter().map(|p| (p.start, p.goal)).collect();
        assert_eq!(distinct.len(), 24);
    }

    #[test]
    fn full_size_count_and_exact_lengths() {
        let s = generate_empty_problems(500, 100, 400, 1).unwrap();
        assert_eq!(s.len(), 40_000);
        for (i, p) in s.iter().enumerate() {
            let length = i / 100 + 1;
            assert_eq!(p.start.manhattan(p.goal) as usize, length);
            assert!(p.start.x >= 0 && p.goal.x < 500 && p.start.y >= 0 && p.goal.y < 500);
        }
        for chunk in s.chunks(100).skip(10) {
            let distinct: HashSet<_> = chunk.iter().map(|p| (p.start, p.goal)).collect();
            assert_eq!(distinct.len(), 100);
        }
    }

    #[test]
    fn problems_are_seed_deterministic() {
        let a = generate_empty_problems(20, 5, 30, 9).unwrap();
        assert_eq!(a, generate_empty_problems(20, 5, 30, 9).unwrap());
        assert_ne!(a, generate_empty_problems(20, 5, 30, 10).unwrap());
    }

    #[test]
    fn impossible_geometry() {
        assert!(generate_empty_problems(3, 1, 5, 0).is_err());
        assert!(generate_empty_problems(3, 1, 4, 0).is_ok());
        assert!(generate_empty_problems(0, 1, 1, 0).is_err());
    }

    #[test]
    fn sampled_problems_meet_min_length() {
        let map = generate_rooms(60, 60, 8, 2).unwrap();
        let s = sample_problems(&map, "rooms.map", 20, 40, 3).unwrap();
        assert_eq!(s.len(), 20);
        for p in &s {
            let d = distance_field(&map, p.start)[map.index(p.goal)];
            assert!(d >= 40);
            assert_eq!(p.declared_length, d as f64);
        }
        assert!(sample_problems(&map, "rooms.map", 1, 10_000, 3).is_err());
    }
}
