use num_traits::{One, Zero};

use super::recurrence::{exact_family_count, two_vertex_exact, RecurrenceSource};
use super::{RootedTable, MAX_TABLE_CELLS};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::family::{BoundMode, FamilyKey};

/// All four bounded-family tables up to `n_cap` vertices and `delta_cap`
/// multiple edges.
///
/// Each table is one flat buffer. The `(i, j)` block holds `i * (j + 1)^2`
/// cells laid out row-major over `(w, u, v)` with `w < i`, `u <= j`, `v <= j`.
#[derive(Debug, Clone)]
pub struct DpTables {
    n_cap: usize,
    delta_cap: usize,
    block_start: Vec<usize>,
    lll: Vec<BigCount>,
    ell: Vec<BigCount>,
    eel: Vec<BigCount>,
    eee: Vec<BigCount>,
    filled: bool,
}

fn zeroed(cells: usize) -> Result<Vec<BigCount>> {
    let mut t = Vec::new();
    t.try_reserve_exact(cells).map_err(|_| Error::Resource {
        what: "dense DP table",
        cells,
    })?;
    t.resize(cells, BigCount::zero());
    Ok(t)
}

impl DpTables {
    /// Allocate the tables and seed the one- and two-vertex blocks.
    pub fn init(n_cap: usize, delta_cap: usize) -> Result<Self> {
        if n_cap == 0 {
            return Err(Error::Domain("dense tables need n_cap >= 1".into()));
        }
        // every block holds at least one cell
        let blocks = n_cap.saturating_mul(delta_cap.saturating_add(1));
        if blocks > MAX_TABLE_CELLS {
            return Err(Error::Resource {
                what: "dense DP table",
                cells: blocks,
            });
        }
        let mut block_start = Vec::with_capacity(blocks);
        let mut cells = 0usize;
        for i in 1..=n_cap {
            for j in 0..=delta_cap {
                block_start.push(cells);
                cells = (j + 1)
                    .checked_mul(j + 1)
                    .and_then(|s| s.checked_mul(i))
                    .and_then(|s| s.checked_add(cells))
                    .ok_or(Error::Resource {
                        what: "dense DP table",
                        cells: usize::MAX,
                    })?;
            }
        }
        if cells > MAX_TABLE_CELLS {
            return Err(Error::Resource {
                what: "dense DP table",
                cells,
            });
        }
        let mut t = DpTables {
            n_cap,
            delta_cap,
            block_start,
            lll: zeroed(cells)?,
            ell: zeroed(cells)?,
            eel: zeroed(cells)?,
            eee: zeroed(cells)?,
            filled: false,
        };

        // a lone root: only with no multiple edges
        let at = t.idx(1, 0, 0, 0, 0);
        for table in [&mut t.lll, &mut t.ell, &mut t.eel, &mut t.eee] {
            table[at] = BigCount::one();
        }

        // one child carrying every multiple edge on its root edge
        if n_cap >= 2 {
            for j in 0..=delta_cap {
                for u in 0..=j {
                    for v in 0..=j {
                        let at = t.idx(2, j, 1, u, v);
                        if two_vertex_exact(j, u, v) {
                            t.eee[at] = BigCount::one();
                        }
                        if u == 0 && v == j {
                            t.eel[at] = BigCount::one();
                        }
                        if v == j {
                            t.ell[at] = BigCount::one();
                            t.lll[at] = BigCount::one();
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    /// Allocate, seed and fill.
    pub fn build(n_cap: usize, delta_cap: usize) -> Result<Self> {
        let mut t = Self::init(n_cap, delta_cap)?;
        t.fill();
        Ok(t)
    }

    /// Fill every cell for `i >= 3`, in ascending `(i, j, w, u, v)` order.
    pub fn fill(&mut self) {
        for i in 3..=self.n_cap {
            for j in 0..=self.delta_cap {
                for w in 1..i {
                    for u in 0..=j {
                        for v in 0..=j {
                            let exact = if u + v > j {
                                BigCount::zero()
                            } else {
                                exact_family_count(&*self, i, j, w, u, v)
                            };
                            let at = self.idx(i, j, w, u, v);

                            let mut eel = exact.clone();
                            if v > 0 {
                                eel += &self.eel[self.idx(i, j, w, u, v - 1)];
                            }
                            let mut ell = eel.clone();
                            if u > 0 {
                                ell += &self.ell[self.idx(i, j, w, u - 1, v)];
                            }
                            let mut lll = ell.clone();
                            lll += &self.lll[self.idx(i, j, w - 1, u, v)];

                            self.eee[at] = exact;
                            self.eel[at] = eel;
                            self.ell[at] = ell;
                            self.lll[at] = lll;
                        }
                    }
                }
            }
        }
        self.filled = true;
    }

    pub fn is_filled(&self) -> bool {
        self.filled
    }

    pub fn n_cap(&self) -> usize {
        self.n_cap
    }

    pub fn delta_cap(&self) -> usize {
        self.delta_cap
    }

    /// Total cells per table.
    pub fn cells(&self) -> usize {
        self.lll.len()
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, w: usize, u: usize, v: usize) -> usize {
        assert!(
            (1..=self.n_cap).contains(&i) && j <= self.delta_cap && w < i && u <= j && v <= j,
            "DP read out of bounds: (i={i}, j={j}, w={w}, u={u}, v={v}) with caps ({}, {})",
            self.n_cap,
            self.delta_cap
        );
        self.block_start[(i - 1) * (self.delta_cap + 1) + j] + (w * (j + 1) + u) * (j + 1) + v
    }

    fn table(&self, mode: BoundMode) -> &[BigCount] {
        match mode {
            BoundMode::Lll => &self.lll,
            BoundMode::Ell => &self.ell,
            BoundMode::Eel => &self.eel,
            BoundMode::Eee => &self.eee,
        }
    }

    /// The stored cell at a validated key. Panics if the key lies outside the
    /// table caps.
    pub fn cell(&self, key: FamilyKey) -> &BigCount {
        let FamilyKey { i, j, w, u, v, mode } = key;
        &self.table(mode)[self.idx(i, j, w, u, v)]
    }

    /// Overwrite one stored cell. Only meant for fault-injection checks.
    #[doc(hidden)]
    pub fn poke(&mut self, key: FamilyKey, value: BigCount) {
        let FamilyKey { i, j, w, u, v, mode } = key;
        let at = self.idx(i, j, w, u, v);
        match mode {
            BoundMode::Lll => self.lll[at] = value,
            BoundMode::Ell => self.ell[at] = value,
            BoundMode::Eel => self.eel[at] = value,
            BoundMode::Eee => self.eee[at] = value,
        }
    }

    /// Family size for arbitrary non-negative bounds.
    ///
    /// Upper bounds beyond their natural range are clamped (`w` to `i - 1`,
    /// `u` and `v` to `j`); equality bounds beyond it give an empty family.
    pub fn value(&self, mode: BoundMode, i: usize, j: usize, w: usize, u: usize, v: usize) -> Result<BigCount> {
        if i > self.n_cap || j > self.delta_cap {
            return Err(Error::Domain(format!(
                "({i}, {j}) exceeds table caps ({}, {})",
                self.n_cap, self.delta_cap
            )));
        }
        if i == 0 {
            return Ok(BigCount::zero());
        }
        let (w, u, v) = match mode {
            BoundMode::Lll => (w.min(i - 1), u.min(j), v.min(j)),
            BoundMode::Ell if w < i => (w, u.min(j), v.min(j)),
            BoundMode::Eel if w < i && u <= j => (w, u, v.min(j)),
            BoundMode::Eee if w < i && u <= j && v <= j => (w, u, v),
            _ => return Ok(BigCount::zero()),
        };
        Ok(self.table(mode)[self.idx(i, j, w, u, v)].clone())
    }

    /// `m(n, delta, k<=, d<=, l<=)`.
    pub fn count_bounded(&self, n: usize, delta: usize, k: usize, d: usize, l: usize) -> Result<BigCount> {
        if n == 0 || (n >= 2 && k == 0) {
            return Ok(BigCount::zero());
        }
        self.value(BoundMode::Lll, n, delta, k, d, l)
    }
}

/// `m(n, delta, k<=, d<=, l<=)` from freshly built tables sized `(n, delta)`.
pub fn count_bounded(n: usize, delta: usize, k: usize, d: usize, l: usize) -> Result<BigCount> {
    if n == 0 || (n >= 2 && k == 0) {
        return Ok(BigCount::zero());
    }
    DpTables::build(n, delta)?.count_bounded(n, delta, k, d, l)
}

impl RecurrenceSource for DpTables {
    fn lll_full(&self, i: usize, j: usize, w: usize) -> &BigCount {
        &self.lll[self.idx(i, j, w, j, j)]
    }

    fn ell_full(&self, i: usize, j: usize, w: usize, u: usize) -> &BigCount {
        &self.ell[self.idx(i, j, w, u, j)]
    }

    fn eel(&self, i: usize, j: usize, w: usize, u: usize, v: usize) -> &BigCount {
        &self.eel[self.idx(i, j, w, u, v)]
    }
}

impl RootedTable for DpTables {
    fn n_cap(&self) -> usize {
        self.n_cap
    }

    fn delta_cap(&self) -> usize {
        self.delta_cap
    }

    fn bounded_by_child_size(&self, i: usize, j: usize, w: usize) -> &BigCount {
        &self.lll[self.idx(i, j, w.min(i - 1), j, j)]
    }
}
