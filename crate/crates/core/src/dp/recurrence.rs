//! The residual recursion for `m(i, j, w=, u=, v=)`.
//!
//! A member of the family has `p >= 1` children that are `w`-vertex subtrees
//! with exactly `u` multiple edges attached by an edge of multiplicity `v`.
//! Those children form a multiset over all rooted multigraphs with `w`
//! vertices and `u` multiple edges. What is left (the residual) keeps the
//! root and falls into one of three disjoint families:
//!
//! 1. more `(w, u)` children, all with root multiplicity below `v`,
//! 2. more `w`-vertex children, all with fewer than `u` multiple edges,
//! 3. only children smaller than `w`.
//!
//! Family 1 only exists when `v >= 1`, family 2 only when `u >= 1`.

use num_traits::{One, Zero};

use crate::count::{multiset_coefficient_step, BigCount};

/// Cell reads needed by the recursion. All callers guarantee `w <= i - 1`,
/// `u <= j` and `v <= j`.
pub(crate) trait RecurrenceSource {
    /// `m(i, j, w<=, j<=, j<=)`
    fn lll_full(&self, i: usize, j: usize, w: usize) -> &BigCount;
    /// `m(i, j, w=, u<=, j<=)`
    fn ell_full(&self, i: usize, j: usize, w: usize, u: usize) -> &BigCount;
    /// `m(i, j, w=, u=, v<=)`
    fn eel(&self, i: usize, j: usize, w: usize, u: usize, v: usize) -> &BigCount;
}

/// `m(i, j, w=, u=, v=)` for `i >= 2`, `1 <= w <= i - 1`, `u + v <= j`.
pub(crate) fn exact_family_count<S: RecurrenceSource>(
    src: &S,
    i: usize,
    j: usize,
    w: usize,
    u: usize,
    v: usize,
) -> BigCount {
    debug_assert!(w >= 1 && w < i && u + v <= j);
    // every rooted multigraph with w vertices and u multiple edges
    let kinds = src.lll_full(w, u, w - 1);
    let per_child = u + v;
    // each child also takes per_child multiple edges, if any
    let p_max = match j.checked_div(per_child) {
        Some(by_edges) => ((i - 1) / w).min(by_edges),
        None => (i - 1) / w,
    };

    let mut total = BigCount::zero();
    let mut choices = BigCount::one();
    let mut residual = BigCount::zero();
    for p in 1..=p_max {
        choices = multiset_coefficient_step(&choices, kinds, p);
        if choices.is_zero() {
            break;
        }
        let ri = i - p * w;
        assert!(ri >= 1, "residual lost its root: i={i}, p={p}, w={w}");
        let rj = j - p * per_child;

        residual.clone_from(src.lll_full(ri, rj, (ri - 1).min(w - 1)));
        if w < ri {
            if u >= 1 {
                residual += src.ell_full(ri, rj, w, rj.min(u - 1));
            }
            if v >= 1 && u <= rj {
                residual += src.eel(ri, rj, w, u, rj.min(v - 1));
            }
        }
        if !residual.is_zero() {
            total += &choices * &residual;
        }
    }
    total
}

/// `m(2, j, 1=, u=, v=)`: a single child joined by an edge carrying all `j`
/// multiple edges.
pub(crate) fn two_vertex_exact(j: usize, u: usize, v: usize) -> bool {
    u == 0 && v == j
}
