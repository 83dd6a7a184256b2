//! Small hand-checked objects shared by unit tests.

use crate::cuboid::{Hypercuboid, EMPTY};
use crate::shape::CuboidShape;

/// The (3,2,2) class-2 cuboid with layers (1 2 3 / 4 5 6) and
/// (5 6 4 / 2 3 1), stored 0-based.
pub fn example_cuboid() -> Hypercuboid {
    let shape = CuboidShape::new(vec![3, 2, 2], 2).unwrap();
    let one_based = [1u16, 2, 3, 4, 5, 6, 5, 6, 4, 2, 3, 1];
    Hypercuboid::new(shape, 6, one_based.iter().map(|s| s - 1).collect()).unwrap()
}

/// The (2,2,2) partial cube of order 6 with one empty cell.
pub fn partial_cube() -> Hypercuboid {
    let shape = CuboidShape::new(vec![2, 2, 2], 2).unwrap();
    Hypercuboid::new(shape, 6, vec![EMPTY, 2, 4, 5, 5, 3, 2, 0]).unwrap()
}

pub fn cyclic_square(n: usize) -> Hypercuboid {
    let shape = CuboidShape::new(vec![n, n], 1).unwrap();
    Hypercuboid::from_fn(shape, |x| ((x[0] + x[1]) % n) as u16).unwrap()
}

/// Six words over HS(3,3,2), read as (symbol, column, row).
pub fn six_word_code() -> crate::codes::MixedCode {
    let one_based = [
        [1, 1, 1],
        [2, 3, 1],
        [3, 2, 1],
        [1, 2, 2],
        [2, 1, 2],
        [3, 3, 2],
    ];
    let words = one_based
        .iter()
        .map(|w| w.iter().map(|x| x - 1).collect())
        .collect();
    crate::codes::MixedCode::new(vec![3, 3, 2], words).unwrap()
}
