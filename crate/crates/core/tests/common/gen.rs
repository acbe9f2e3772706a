//! Proptest strategies shared by the integration suites.

use proptest::prelude::*;

use super::Cell;

/// A valid IT2TrFN with every endpoint in `[0, hi]`.
///
/// Lower endpoints lie inside the upper support; the lower height is a
/// fraction of the upper one.
pub fn cell_in(hi: f64) -> impl Strategy<Value = Cell> {
    (
        prop::array::uniform4(0.0..=hi),
        prop::array::uniform4(0.0..=1.0f64),
        0.1..=1.0f64,
        0.05..=1.0f64,
    )
        .prop_map(|(mut u, t, hu, frac)| {
            u.sort_by(f64::total_cmp);
            let mut l = t.map(|t| u[0] + t * (u[3] - u[0]));
            l.sort_by(f64::total_cmp);
            // interpolation can overshoot u[3] by an ulp
            l[3] = l[3].min(u[3]);
            [[u[0], u[1], u[2], u[3], hu], [l[0], l[1], l[2], l[3], hu * frac]]
        })
}

/// Between `min` and `max` cells from [`cell_in`].
pub fn cells(hi: f64, min: usize, max: usize) -> impl Strategy<Value = Vec<Cell>> {
    prop::collection::vec(cell_in(hi), min..=max)
}

/// An `m x n` grid of cells.
pub fn grid(hi: f64, m: usize, n: usize) -> impl Strategy<Value = Vec<Vec<Cell>>> {
    prop::collection::vec(prop::collection::vec(cell_in(hi), n), m)
}
