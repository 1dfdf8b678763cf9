//! Dynamic program over bounded rooted families.
//!
//! Four families are tracked for every `i` vertices and `j` multiple edges,
//! bounding the root statistics `(max_v, max_m, max_l)` by `(w, u, v)`:
//!
//! * `LLL`: all three upper-bounded,
//! * `ELL`: `max_v == w`, others upper-bounded,
//! * `EEL`: `max_v == w`, `max_m == u`, `max_l <= v`,
//! * `EEE`: all three fixed.
//!
//! `EEE` cells come from the residual recursion in [`recurrence`]; the other
//! three are prefix sums of the next one along `v`, `u` and `w` respectively.
//!
//! [`DpTables`] keeps every cell and answers arbitrary bounded queries.
//! [`RootedTotals`] keeps only `m(i, j, w<=, j<=, j<=)`, which is all the
//! free-count assembly needs, and scales to a few hundred vertices.

mod compact;
mod dense;
pub(crate) mod recurrence;

pub use compact::RootedTotals;
pub use dense::{count_bounded, DpTables};

use crate::count::BigCount;

/// Upper bound on cells a single table may hold before allocation is refused.
pub const MAX_TABLE_CELLS: usize = 60_000_000;

/// Read access to `m(i, j, w<=, j<=, j<=)`: rooted multigraphs with `i`
/// vertices, `j` multiple edges and every child subtree of at most `w`
/// vertices.
pub trait RootedTable {
    fn n_cap(&self) -> usize;
    fn delta_cap(&self) -> usize;

    /// `m(i, j, w<=, j<=, j<=)` with `w` clamped to `i - 1`.
    ///
    /// Panics unless `1 <= i <= n_cap` and `j <= delta_cap`.
    fn bounded_by_child_size(&self, i: usize, j: usize, w: usize) -> &BigCount;

    /// `m(i, j)`: all rooted multigraphs with `i` vertices and `j` multiple edges.
    fn rooted_total(&self, i: usize, j: usize) -> &BigCount {
        self.bounded_by_child_size(i, j, i - 1)
    }

    fn covers(&self, n: usize, delta: usize) -> bool {
        n <= self.n_cap() && delta <= self.delta_cap()
    }
}
