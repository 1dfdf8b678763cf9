use num_traits::{One, Zero};

use super::recurrence::{exact_family_count, two_vertex_exact, RecurrenceSource};
use super::{RootedTable, MAX_TABLE_CELLS};
use crate::count::BigCount;
use crate::error::{Error, Result};

/// `m(i, j, w<=, j<=, j<=)` for every `1 <= i <= n_cap`, `j <= delta_cap`,
/// `w < i`, without keeping the full four-table state.
///
/// The fill runs with `w` as the outermost loop. Every `EEL`/`ELL` read made
/// by the recursion for child size `w` targets the same `w`, and every `LLL`
/// read targets `w' < w` with full `(u, v)` bounds, so only one `w`-slice of
/// the intermediate tables is live at a time.
#[derive(Debug, Clone)]
pub struct RootedTotals {
    n_cap: usize,
    delta_cap: usize,
    totals: Vec<BigCount>,
}

/// One `w`-slice of the intermediate tables plus the finished totals.
struct Slice<'a> {
    n_cap: usize,
    delta_cap: usize,
    totals: &'a [BigCount],
    /// `m(i, j, w=, u=, v<=)`, `(j + 1)^2` cells per `(i, j)`
    eel: &'a [BigCount],
    /// `m(i, j, w=, u<=, j<=)`, `j + 1` cells per `(i, j)`
    ell: &'a [BigCount],
    eel_start: &'a [usize],
    ell_start: &'a [usize],
}

fn totals_idx(delta_cap: usize, i: usize, j: usize, w: usize) -> usize {
    (i - 1) * i / 2 * (delta_cap + 1) + j * i + w
}

impl Slice<'_> {
    fn block(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.n_cap).contains(&i) && j <= self.delta_cap);
        (i - 1) * (self.delta_cap + 1) + j
    }
}

impl RecurrenceSource for Slice<'_> {
    fn lll_full(&self, i: usize, j: usize, w: usize) -> &BigCount {
        assert!(w < i && j <= self.delta_cap);
        &self.totals[totals_idx(self.delta_cap, i, j, w)]
    }

    fn ell_full(&self, i: usize, j: usize, _w: usize, u: usize) -> &BigCount {
        assert!(u <= j);
        &self.ell[self.ell_start[self.block(i, j)] + u]
    }

    fn eel(&self, i: usize, j: usize, _w: usize, u: usize, v: usize) -> &BigCount {
        assert!(u <= j && v <= j);
        &self.eel[self.eel_start[self.block(i, j)] + u * (j + 1) + v]
    }
}

fn check_cells(cells: usize) -> Result<()> {
    if cells > MAX_TABLE_CELLS {
        return Err(Error::Resource {
            what: "rooted totals",
            cells,
        });
    }
    Ok(())
}

fn zeroed(cells: usize) -> Result<Vec<BigCount>> {
    check_cells(cells)?;
    let mut t = Vec::new();
    t.try_reserve_exact(cells).map_err(|_| Error::Resource {
        what: "rooted totals",
        cells,
    })?;
    t.resize(cells, BigCount::zero());
    Ok(t)
}

impl RootedTotals {
    pub fn build(n_cap: usize, delta_cap: usize) -> Result<Self> {
        if n_cap == 0 {
            return Err(Error::Domain("rooted totals need n_cap >= 1".into()));
        }
        // sizes first, so absurd caps are refused before anything is allocated
        let side = delta_cap.saturating_add(1);
        let total_cells = n_cap
            .saturating_mul(n_cap.saturating_add(1))
            .saturating_div(2)
            .saturating_mul(side);
        // sum of (j + 1)^2 and of (j + 1) over j <= delta_cap, per vertex count
        let squares = side
            .checked_add(1)
            .and_then(|s1| side.checked_mul(s1))
            .and_then(|a| a.checked_mul(side.checked_mul(2)?.checked_add(1)?))
            .map(|x| x / 6);
        let eel_cells = squares.and_then(|q| q.checked_mul(n_cap)).unwrap_or(usize::MAX);
        let ell_cells = (side.saturating_mul(side.saturating_add(1)) / 2).saturating_mul(n_cap);
        let row_cells = side.saturating_mul(side);
        for cells in [total_cells, eel_cells, ell_cells, row_cells] {
            check_cells(cells)?;
        }
        let blocks = n_cap * side;
        let mut eel_start = Vec::with_capacity(blocks);
        let mut ell_start = Vec::with_capacity(blocks);
        let (mut eel_off, mut ell_off) = (0usize, 0usize);
        for _ in 1..=n_cap {
            for j in 0..=delta_cap {
                eel_start.push(eel_off);
                ell_start.push(ell_off);
                eel_off += (j + 1) * (j + 1);
                ell_off += j + 1;
            }
        }
        let mut totals = zeroed(total_cells)?;
        let mut eel = zeroed(eel_cells)?;
        let mut ell = zeroed(ell_cells)?;
        totals[totals_idx(delta_cap, 1, 0, 0)] = BigCount::one();

        let mut row_eel = vec![BigCount::zero(); side * side];
        let mut row_ell = vec![BigCount::zero(); side * side];
        for w in 1..n_cap {
            for i in (w + 1)..=n_cap {
                for j in 0..=delta_cap {
                    let stride = j + 1;
                    {
                        let slice = Slice {
                            n_cap,
                            delta_cap,
                            totals: &totals,
                            eel: &eel,
                            ell: &ell,
                            eel_start: &eel_start,
                            ell_start: &ell_start,
                        };
                        for u in 0..=j {
                            for v in 0..=j {
                                let exact = if u + v > j {
                                    BigCount::zero()
                                } else if i == 2 {
                                    if two_vertex_exact(j, u, v) {
                                        BigCount::one()
                                    } else {
                                        BigCount::zero()
                                    }
                                } else {
                                    exact_family_count(&slice, i, j, w, u, v)
                                };
                                let at = u * stride + v;
                                let mut e = exact;
                                if v > 0 {
                                    e += &row_eel[at - 1];
                                }
                                let mut l = e.clone();
                                if u > 0 {
                                    l += &row_ell[at - stride];
                                }
                                row_eel[at] = e;
                                row_ell[at] = l;
                            }
                        }
                    }
                    let block = (i - 1) * (delta_cap + 1) + j;
                    let es = eel_start[block];
                    eel[es..es + stride * stride].clone_from_slice(&row_eel[..stride * stride]);
                    let ls = ell_start[block];
                    for u in 0..=j {
                        ell[ls + u].clone_from(&row_ell[u * stride + j]);
                    }
                    let prev = totals[totals_idx(delta_cap, i, j, w - 1)].clone();
                    totals[totals_idx(delta_cap, i, j, w)] = prev + &row_ell[j * stride + j];
                }
            }
        }
        Ok(Self {
            n_cap,
            delta_cap,
            totals,
        })
    }
}

impl RootedTable for RootedTotals {
    fn n_cap(&self) -> usize {
        self.n_cap
    }

    fn delta_cap(&self) -> usize {
        self.delta_cap
    }

    fn bounded_by_child_size(&self, i: usize, j: usize, w: usize) -> &BigCount {
        assert!((1..=self.n_cap).contains(&i) && j <= self.delta_cap);
        &self.totals[totals_idx(self.delta_cap, i, j, w.min(i - 1))]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::DpTables;

    #[test]
    fn rooted_tree_counts() {
        let t = RootedTotals::build(8, 0).unwrap();
        let got: Vec<u64> = (1..=8)
            .map(|i| t.rooted_total(i, 0).to_u64_digits().first().copied().unwrap_or(0))
            .collect();
        assert_eq!(got, vec![1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn refuses_oversized_caps() {
        for (n, d) in [(100_000, 100_000), (usize::MAX, 3), (3, usize::MAX), (2_000, 200)] {
            assert!(
                matches!(RootedTotals::build(n, d), Err(Error::Resource { .. })),
                "({n}, {d})"
            );
        }
    }

    #[test]
    fn agrees_with_dense_tables() {
        let dense = DpTables::build(9, 4).unwrap();
        let compact = RootedTotals::build(9, 4).unwrap();
        for i in 1..=9 {
            for j in 0..=4 {
                for w in 0..i {
                    assert_eq!(
                        dense.bounded_by_child_size(i, j, w),
                        compact.bounded_by_child_size(i, j, w),
                        "i={i} j={j} w={w}"
                    );
                }
            }
        }
    }
}
