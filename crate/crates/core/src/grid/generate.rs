//! Synthetic benchmark maps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Coord, GridError, GridMap};

/// Room sizes used by the rooms benchmark set.
pub const ROOM_BENCHMARK_SIZES: [usize; 4] = [8, 16, 32, 64];

/// An obstacle-free map.
pub fn generate_empty(width: usize, height: usize) -> Result<GridMap, GridError> {
    GridMap::from_fn(width, height, |_| true)
}

/// A lattice of `room_size`×`room_size` rooms separated by one-cell walls.
///
/// Walls sit on every row and column that is a multiple of `room_size + 1`.
/// Space left over at the far edges after the last whole room is filled with
/// wall. Every wall shared by two neighbouring rooms gets exactly one door,
/// placed uniformly along the wall from a `seed`-driven RNG, so the passable
/// cells always form one connected component.
pub fn generate_rooms(
    width: usize,
    height: usize,
    room_size: usize,
    seed: u64,
) -> Result<GridMap, GridError> {
    if width == 0 || height == 0 {
        return Err(GridError::ZeroDimension { width, height });
    }
    let pitch = room_size + 1;
    let too_large = GridError::RoomTooLarge {
        room_size,
        width,
        height,
    };
    if room_size == 0 || width < pitch + 1 || height < pitch + 1 {
        return Err(too_large);
    }
    let rooms_x = (width - 1) / pitch;
    let rooms_y = (height - 1) / pitch;
    let inner_w = rooms_x * pitch;
    let inner_h = rooms_y * pitch;

    let mut cells = vec![false; width * height];
    for y in 0..height {
        for x in 0..width {
            let in_lattice = x < inner_w && y < inner_h;
            cells[y * width + x] = in_lattice && x % pitch != 0 && y % pitch != 0;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Vertical walls between horizontally adjacent rooms.
    for ry in 0..rooms_y {
        for rx in 1..rooms_x {
            let x = rx * pitch;
            let y = ry * pitch + 1 + rng.gen_range(0..room_size);
            cells[y * width + x] = true;
        }
    }
    // Horizontal walls between vertically adjacent rooms.
    for ry in 1..rooms_y {
        for rx in 0..rooms_x {
            let y = ry * pitch;
            let x = rx * pitch + 1 + rng.gen_range(0..room_size);
            cells[y * width + x] = true;
        }
    }

    GridMap::from_fn(width, height, |c: Coord| {
        cells[c.y as usize * width + c.x as usize]
    })
}
