//! Printed tables of the worked example, used as fixtures.
#![allow(dead_code)]

use it2mabac::It2TrFn;

/// `[[u1, u2, u3, u4, hu], [l1, l2, l3, l4, hl]]`
pub type Cell = [[f64; 5]; 2];

pub const EXAMPLE: &str = include_str!("../../examples/system-analyst.problem");

pub const ALTERNATIVES: [&str; 3] = ["A1", "A2", "A3"];

/// Aggregated weights, per criterion.
pub const AGGREGATED_WEIGHTS: [Cell; 5] = [
    [[0.7, 0.87, 0.87, 0.97, 1.0], [0.7, 0.87, 0.87, 0.97, 0.9]],
    [[0.9, 1.0, 1.0, 1.0, 1.0], [0.9, 1.0, 1.0, 1.0, 0.9]],
    [[0.77, 0.93, 0.93, 1.0, 1.0], [0.77, 0.93, 0.93, 1.0, 0.9]],
    [[0.9, 1.0, 1.0, 1.0, 1.0], [0.9, 1.0, 1.0, 1.0, 0.9]],
    [[0.43, 0.63, 0.63, 0.83, 1.0], [0.43, 0.63, 0.63, 0.83, 0.9]],
];

/// Aggregated decision matrix, indexed `[alternative][criterion]`.
pub const AGGREGATED_DECISIONS: [[Cell; 5]; 3] = [
    [
        [[5.67, 7.67, 7.67, 9.33, 1.0], [6.67, 7.67, 7.67, 8.5, 0.9]],
        [[5.0, 7.0, 7.0, 8.67, 1.0], [6.0, 7.0, 7.0, 7.83, 0.9]],
        [[5.67, 7.67, 7.67, 9.0, 1.0], [6.67, 7.67, 7.67, 8.33, 0.9]],
        [[8.33, 9.67, 9.67, 10.0, 1.0], [9.0, 9.67, 9.67, 9.83, 0.9]],
        [[3.0, 5.0, 5.0, 7.0, 1.0], [4.0, 5.0, 5.0, 6.0, 0.9]],
    ],
    [
        [[6.33, 8.33, 8.33, 9.67, 1.0], [7.33, 8.33, 8.33, 9.0, 0.9]],
        [[9.0, 10.0, 10.0, 10.0, 1.0], [9.5, 10.0, 10.0, 10.0, 0.9]],
        [[9.0, 10.0, 10.0, 10.0, 1.0], [9.5, 10.0, 10.0, 10.0, 0.9]],
        [[7.67, 9.0, 9.0, 9.67, 1.0], [8.33, 9.0, 9.0, 9.33, 0.9]],
        [[6.33, 8.0, 8.0, 9.33, 1.0], [7.17, 8.0, 8.0, 8.67, 0.9]],
    ],
    [
        [[6.33, 8.0, 8.0, 9.0, 1.0], [7.17, 8.0, 8.0, 8.5, 0.9]],
        [[7.0, 8.67, 8.67, 9.67, 1.0], [7.83, 8.67, 8.67, 9.17, 0.9]],
        [[7.0, 8.67, 8.67, 9.67, 1.0], [7.83, 8.67, 8.67, 9.17, 0.9]],
        [[7.0, 8.67, 8.67, 9.67, 1.0], [7.83, 8.67, 8.67, 9.17, 0.9]],
        [[6.33, 8.33, 8.33, 9.67, 1.0], [7.33, 8.33, 8.33, 9.0, 0.9]],
    ],
];

/// Weighted decision matrix, indexed `[alternative][criterion]`.
pub const WEIGHTED: [[Cell; 5]; 3] = [
    [
        [[0.7, 1.3, 1.3, 2.0, 1.0], [0.88, 1.3, 1.3, 1.94, 0.9]],
        [[0.9, 1.4, 1.4, 1.73, 1.0], [1.08, 1.4, 1.4, 1.57, 0.9]],
        [[0.77, 1.36, 1.36, 1.77, 1.0], [0.95, 1.36, 1.36, 1.62, 0.9]],
        [[1.3, 1.89, 1.89, 2.0, 1.0], [1.5, 1.89, 1.89, 1.94, 0.9]],
        [[0.43, 0.82, 0.82, 1.33, 1.0], [0.49, 0.82, 0.82, 1.2, 0.9]],
    ],
    [
        [[0.82, 1.44, 1.44, 1.89, 1.0], [0.99, 1.44, 1.44, 1.78, 0.9]],
        [[1.62, 2.0, 2.0, 2.0, 1.0], [1.71, 2.0, 2.0, 2.0, 0.9]],
        [[1.36, 1.87, 1.87, 2.0, 1.0], [1.45, 1.86, 1.86, 2.0, 0.9]],
        [[1.1, 1.67, 1.67, 1.89, 1.0], [1.3, 1.67, 1.67, 1.78, 0.9]],
        [[0.65, 1.11, 1.11, 1.63, 1.0], [0.7, 1.1, 1.1, 1.54, 0.9]],
    ],
    [
        [[0.82, 1.37, 1.37, 1.89, 1.0], [0.96, 1.37, 1.37, 1.72, 0.9]],
        [[1.26, 1.73, 1.73, 1.93, 1.0], [1.41, 1.73, 1.73, 1.83, 0.9]],
        [[1.0, 1.58, 1.58, 1.92, 1.0], [1.16, 1.57, 1.57, 1.81, 0.9]],
        [[0.9, 1.56, 1.56, 1.89, 1.0], [1.15, 1.56, 1.56, 1.72, 0.9]],
        [[0.65, 1.14, 1.14, 1.67, 1.0], [0.71, 1.13, 1.13, 1.58, 0.9]],
    ],
];

/// Border approximation area, per criterion.
pub const BORDER: [Cell; 5] = [
    [[0.78, 1.37, 1.37, 1.85, 1.0], [0.94, 1.37, 1.37, 1.7, 0.9]],
    [[1.22, 1.69, 1.69, 1.89, 1.0], [1.38, 1.69, 1.69, 1.79, 0.9]],
    [[1.01, 1.59, 1.59, 1.89, 1.0], [1.17, 1.58, 1.58, 1.8, 0.9]],
    [[1.09, 1.7, 1.7, 1.93, 1.0], [1.31, 1.7, 1.7, 1.81, 0.9]],
    [[0.57, 1.01, 1.01, 1.53, 1.0], [0.63, 1.01, 1.01, 1.43, 0.9]],
];

/// Printed distance matrix Q, `[alternative][criterion]`.
pub const DISTANCES: [[f64; 5]; 3] = [
    [1.75, 1.94, 1.85, 2.90, 0.75],
    [2.03, 3.11, 2.81, 2.46, 1.32],
    [1.87, 2.60, 2.27, 2.26, 1.39],
];

/// Final rank of each alternative.
pub const RANKS: [usize; 3] = [3, 1, 2];

pub fn it2(c: &Cell) -> It2TrFn {
    It2TrFn::from_arrays(c[0], c[1]).expect("fixture cell is a valid IT2TrFN")
}

pub fn endpoints(c: &Cell) -> [f64; 8] {
    [c[0][0], c[0][1], c[0][2], c[0][3], c[1][0], c[1][1], c[1][2], c[1][3]]
}

/// Indices sorting `col` ascending, or `None` when two values tie.
pub fn strict_order(col: &[f64]) -> Option<Vec<usize>> {
    let mut idx: Vec<usize> = (0..col.len()).collect();
    idx.sort_by(|&a, &b| col[a].total_cmp(&col[b]));
    idx.windows(2).all(|w| col[w[0]] < col[w[1]]).then_some(idx)
}

pub mod gen;
