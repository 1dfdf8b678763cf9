use std::collections::HashSet;
use std::io::{self, Write};

use super::multigraph::{CanonicalCode, CentroidType, RootedMultigraph};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::family::BoundMode;

/// Refuse to hold more than this many classes for any single `(n, delta)`.
pub const DEFAULT_CLASS_BUDGET: usize = 10_000_000;

/// Every rooted class with at most `n_cap` vertices and `delta_cap` multiple
/// edges, one canonical representative each.
#[derive(Debug, Clone)]
pub struct Oracle {
    n_cap: usize,
    delta_cap: usize,
    classes: Vec<Vec<RootedMultigraph>>,
    codes: Vec<Vec<CanonicalCode>>,
}

/// Sort key of a child slot: (vertices, multiple edges, root multiplicity,
/// index of the class within its `(vertices, multiple edges)` list).
type Slot = (usize, usize, usize, usize);

impl Oracle {
    pub fn build(n_cap: usize, delta_cap: usize) -> Result<Self> {
        Self::build_with_budget(n_cap, delta_cap, DEFAULT_CLASS_BUDGET)
    }

    pub fn build_with_budget(n_cap: usize, delta_cap: usize, budget: usize) -> Result<Self> {
        if n_cap == 0 {
            return Err(Error::Domain("oracle needs n >= 1".into()));
        }
        let mut oracle = Oracle {
            n_cap,
            delta_cap,
            classes: Vec::with_capacity(n_cap * (delta_cap + 1)),
            codes: Vec::with_capacity(n_cap * (delta_cap + 1)),
        };
        for n in 1..=n_cap {
            for delta in 0..=delta_cap {
                let mut found = Vec::new();
                let mut picked = Vec::new();
                oracle.extend(n - 1, delta, None, &mut picked, &mut found, budget, (n, delta))?;
                let codes: Vec<CanonicalCode> = found.iter().map(RootedMultigraph::canonical_code).collect();
                let distinct: HashSet<&CanonicalCode> = codes.iter().collect();
                if distinct.len() != codes.len() {
                    return Err(Error::Internal(format!(
                        "generator produced isomorphic duplicates at (n={n}, delta={delta})"
                    )));
                }
                oracle.classes.push(found);
                oracle.codes.push(codes);
            }
        }
        Ok(oracle)
    }

    fn slot(&self, n: usize, delta: usize) -> usize {
        assert!(
            (1..=self.n_cap).contains(&n) && delta <= self.delta_cap,
            "({n}, {delta}) outside oracle caps ({}, {})",
            self.n_cap,
            self.delta_cap
        );
        (n - 1) * (self.delta_cap + 1) + delta
    }

    /// Append every way to finish a child multiset using `rem_v` vertices and
    /// `rem_e` multiple edges with slots no greater than `max`.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        rem_v: usize,
        rem_e: usize,
        max: Option<Slot>,
        picked: &mut Vec<Slot>,
        out: &mut Vec<RootedMultigraph>,
        budget: usize,
        at: (usize, usize),
    ) -> Result<()> {
        if rem_v == 0 {
            if rem_e == 0 {
                if out.len() >= budget {
                    return Err(Error::Budget {
                        n: at.0,
                        delta: at.1,
                        classes: out.len() + 1,
                        limit: budget,
                    });
                }
                let children = picked
                    .iter()
                    .map(|&(cv, ce, m, idx)| (self.classes[self.slot(cv, ce)][idx].clone(), m))
                    .collect();
                out.push(RootedMultigraph::new(children));
            }
            return Ok(());
        }
        for cv in (1..=rem_v).rev() {
            for ce in (0..=rem_e).rev() {
                let kinds = self.classes[self.slot(cv, ce)].len();
                for m in (0..=rem_e - ce).rev() {
                    for idx in (0..kinds).rev() {
                        let s = (cv, ce, m, idx);
                        if max.is_some_and(|mx| s > mx) {
                            continue;
                        }
                        picked.push(s);
                        self.extend(rem_v - cv, rem_e - ce - m, Some(s), picked, out, budget, at)?;
                        picked.pop();
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_cap(&self) -> usize {
        self.n_cap
    }

    pub fn delta_cap(&self) -> usize {
        self.delta_cap
    }

    /// Rooted classes with `n` vertices and `delta` multiple edges.
    pub fn rooted(&self, n: usize, delta: usize) -> &[RootedMultigraph] {
        &self.classes[self.slot(n, delta)]
    }

    pub fn codes(&self, n: usize, delta: usize) -> &[CanonicalCode] {
        &self.codes[self.slot(n, delta)]
    }

    /// Classes whose root statistics satisfy `mode` against `(k, d, l)`.
    pub fn count_rooted_bounded(&self, n: usize, delta: usize, k: usize, d: usize, l: usize, mode: BoundMode) -> usize {
        self.rooted(n, delta)
            .iter()
            .filter(|g| mode.admits(g.stats(), k, d, l))
            .count()
    }

    /// Free classes counted by centroid rooting: rooted classes whose root is
    /// the unicentroid, plus unordered pairs of `n/2`-vertex halves joined by
    /// an edge of every possible multiplicity.
    pub fn free_by_centroid(&self, n: usize, delta: usize) -> usize {
        let uni = self
            .rooted(n, delta)
            .iter()
            .filter(|g| g.centroid_type() == CentroidType::UnicentroidAtRoot)
            .count();
        if n % 2 == 1 {
            return uni;
        }
        let half = n / 2;
        let halves: Vec<(usize, &CanonicalCode)> = (0..=delta)
            .flat_map(|e| self.codes(half, e).iter().map(move |c| (e, c)))
            .collect();
        let mut bi = 0;
        for l in 0..=delta {
            for &(ex, cx) in &halves {
                for &(ey, cy) in &halves {
                    if ex + ey + l == delta && cx <= cy {
                        bi += 1;
                    }
                }
            }
        }
        uni + bi
    }

    /// Free classes counted by forgetting the root of every rooted class and
    /// deduplicating.
    pub fn free_by_rerooting(&self, n: usize, delta: usize) -> usize {
        self.rooted(n, delta)
            .iter()
            .map(RootedMultigraph::free_code)
            .collect::<HashSet<_>>()
            .len()
    }

    /// Free classes, cross-checked by both methods.
    pub fn count_free(&self, n: usize, delta: usize) -> Result<usize> {
        let a = self.free_by_centroid(n, delta);
        let b = self.free_by_rerooting(n, delta);
        if a != b {
            return Err(Error::Internal(format!(
                "oracle free counts disagree at (n={n}, delta={delta}): centroid {a}, re-rooting {b}"
            )));
        }
        Ok(a)
    }

    /// Write one canonical code per line.
    pub fn dump<W: Write>(&self, n: usize, delta: usize, mut out: W) -> io::Result<()> {
        for c in self.codes(n, delta) {
            writeln!(out, "{c}")?;
        }
        Ok(())
    }
}

/// One representative per rooted class with `n` vertices and `delta`
/// multiple edges.
pub fn enumerate_rooted(n: usize, delta: usize) -> Result<Vec<RootedMultigraph>> {
    Ok(Oracle::build(n, delta)?.rooted(n, delta).to_vec())
}

/// Rooted classes whose statistics satisfy `mode` against `(k, d, l)`.
pub fn enumerate_rooted_bounded(
    n: usize,
    delta: usize,
    k: usize,
    d: usize,
    l: usize,
    mode: BoundMode,
) -> Result<BigCount> {
    let oracle = Oracle::build(n, delta)?;
    Ok(BigCount::from(oracle.count_rooted_bounded(n, delta, k, d, l, mode)))
}

/// Free classes with `n` vertices and `delta` multiple edges.
pub fn enumerate_free(n: usize, delta: usize) -> Result<BigCount> {
    if n == 0 {
        return Ok(BigCount::from(0u8));
    }
    let oracle = Oracle::build(n, delta)?;
    Ok(BigCount::from(oracle.count_free(n, delta)?))
}
