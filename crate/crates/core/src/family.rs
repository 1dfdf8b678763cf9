//! Parameters and keys addressing the bounded rooted families.

use std::fmt;

use crate::error::{Error, Result};

/// A top-level query: `n` vertices, `delta` multiple edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QueryParams {
    pub n: usize,
    pub delta: usize,
}

impl QueryParams {
    pub fn new(n: usize, delta: usize) -> Self {
        Self { n, delta }
    }
}

/// Which of the three statistics bounds are equalities (`E`) and which are
/// upper bounds (`L`), in the order (max_v, max_m, max_l).
///
/// Only these four combinations are ever used by the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundMode {
    /// max_v <= w, max_m <= u, max_l <= v
    Lll,
    /// max_v == w, max_m <= u, max_l <= v
    Ell,
    /// max_v == w, max_m == u, max_l <= v
    Eel,
    /// max_v == w, max_m == u, max_l == v
    Eee,
}

impl BoundMode {
    pub const ALL: [BoundMode; 4] = [BoundMode::Lll, BoundMode::Ell, BoundMode::Eel, BoundMode::Eee];

    /// Whether a rooted multigraph with the given statistics belongs to the
    /// family `(w, u, v)` under this mode.
    pub fn admits(self, stats: StatsTriple, w: usize, u: usize, v: usize) -> bool {
        let StatsTriple { max_v, max_m, max_l } = stats;
        match self {
            BoundMode::Lll => max_v <= w && max_m <= u && max_l <= v,
            BoundMode::Ell => max_v == w && max_m <= u && max_l <= v,
            BoundMode::Eel => max_v == w && max_m == u && max_l <= v,
            BoundMode::Eee => max_v == w && max_m == u && max_l == v,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundMode::Lll => "LLL",
            BoundMode::Ell => "ELL",
            BoundMode::Eel => "EEL",
            BoundMode::Eee => "EEE",
        }
    }
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Address of one DP cell: `i` vertices, `j` multiple edges, bounds
/// `(w, u, v)` on `(max_v, max_m, max_l)` under `mode`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyKey {
    pub i: usize,
    pub j: usize,
    pub w: usize,
    pub u: usize,
    pub v: usize,
    pub mode: BoundMode,
}

impl FamilyKey {
    /// Validates `1 <= i`, `w <= i - 1`, `u <= j`, `v <= j`.
    pub fn new(mode: BoundMode, i: usize, j: usize, w: usize, u: usize, v: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::Domain("family key needs i >= 1".into()));
        }
        if w > i - 1 || u > j || v > j {
            return Err(Error::Domain(format!(
                "family key ({i}, {j}, {w}, {u}, {v}) out of range: need w <= i-1, u <= j, v <= j"
            )));
        }
        Ok(Self { i, j, w, u, v, mode })
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}(i={}, j={}, w={}, u={}, v={})",
            self.mode, self.i, self.j, self.w, self.u, self.v
        )
    }
}

/// `(Max_v, Max_m, Max_l)` of a rooted multigraph: the largest child subtree
/// size, the most multiple edges among the largest children, and the largest
/// root-edge multiplicity among children attaining both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StatsTriple {
    pub max_v: usize,
    pub max_m: usize,
    pub max_l: usize,
}
