//! Free (unrooted) counts from rooted ones, by rooting every multigraph at
//! the centroid of its underlying tree.
//!
//! A tree with a unicentroid is counted once as a rooted multigraph whose
//! children all have at most `(n - 1) / 2` vertices. A tree with a
//! bicentroid splits into two `n / 2`-vertex halves joined by the centroid
//! edge; it is an unordered pair of rooted halves plus the multiplicity on
//! that edge.

use num_traits::Zero;

use crate::count::{pairs_with_repetition, BigCount};
use crate::dp::{RootedTable, RootedTotals};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeCountResult {
    pub n: usize,
    pub delta: usize,
    pub total: BigCount,
    pub unicentroid_part: BigCount,
    /// Zero for odd `n`.
    pub bicentroid_part: BigCount,
}

fn require_cover<T: RootedTable>(tables: &T, n: usize, delta: usize) -> Result<()> {
    if tables.covers(n, delta) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tables ({}, {}) too small for ({n}, {delta})",
            tables.n_cap(),
            tables.delta_cap()
        )))
    }
}

/// `m(n, delta, (n-1)/2 <=, delta <=, delta <=)`.
pub fn count_unicentroid<T: RootedTable>(n: usize, delta: usize, tables: &T) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::Domain("unicentroid count needs n >= 1".into()));
    }
    require_cover(tables, n, delta)?;
    if n >= 2 && (n - 1) / 2 == 0 {
        return Ok(BigCount::zero());
    }
    Ok(tables.bounded_by_child_size(n, delta, (n - 1) / 2).clone())
}

/// Multigraphs whose underlying tree has a bicentroid.
///
/// Sums over the extra multiplicity `l` on the centroid edge and over
/// unordered splits `a <= b` of the remaining `delta - l` multiple edges
/// between the halves. When `a == b` both halves come from the same family
/// and are counted as unordered pairs with repetition.
pub fn count_bicentroid<T: RootedTable>(n: usize, delta: usize, tables: &T) -> Result<BigCount> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Domain(format!("bicentroid count needs even n >= 2, got {n}")));
    }
    let half = n / 2;
    require_cover(tables, half, delta)?;
    let mut total = BigCount::zero();
    for l in 0..=delta {
        let rest = delta - l;
        for a in 0..=rest / 2 {
            let b = rest - a;
            let x = tables.rooted_total(half, a);
            if a == b {
                total += pairs_with_repetition(x);
            } else {
                total += x * tables.rooted_total(half, b);
            }
        }
    }
    Ok(total)
}

/// The bicentroid sum exactly as it is usually printed: every split `a <= b`
/// multiplies the two half counts, and only the `l = 0`, `a == b` term is
/// taken as unordered pairs.
///
/// This overcounts. For `l >= 1` with `a == b` the halves still swap, so the
/// ordered product counts each asymmetric pair twice. It exists so that
/// published tables computed this way can be reproduced and compared;
/// [`count_bicentroid`] is the correct count.
pub fn count_bicentroid_as_published<T: RootedTable>(n: usize, delta: usize, tables: &T) -> Result<BigCount> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Domain(format!("bicentroid count needs even n >= 2, got {n}")));
    }
    let half = n / 2;
    require_cover(tables, half, delta)?;
    let mut total = BigCount::zero();
    for l in 0..=delta {
        let rest = delta - l;
        for a in 0..=rest / 2 {
            let b = rest - a;
            let x = tables.rooted_total(half, a);
            if l == 0 && a == b {
                total += pairs_with_repetition(x);
            } else {
                total += x * tables.rooted_total(half, b);
            }
        }
    }
    Ok(total)
}

/// Free total with [`count_bicentroid_as_published`] in place of the
/// correct bicentroid part.
pub fn count_free_as_published<T: RootedTable>(n: usize, delta: usize, tables: &T) -> Result<BigCount> {
    let mut r = count_free_with(n, delta, tables)?;
    if n >= 2 && n.is_multiple_of(2) {
        r.bicentroid_part = count_bicentroid_as_published(n, delta, tables)?;
    }
    Ok(r.unicentroid_part + r.bicentroid_part)
}

/// Free count using already-filled tables.
pub fn count_free_with<T: RootedTable>(n: usize, delta: usize, tables: &T) -> Result<FreeCountResult> {
    let (unicentroid_part, bicentroid_part) = match n {
        0 => (BigCount::zero(), BigCount::zero()),
        1 => (BigCount::from(u8::from(delta == 0)), BigCount::zero()),
        _ => {
            let uni = count_unicentroid(n, delta, tables)?;
            let bi = if n.is_multiple_of(2) {
                count_bicentroid(n, delta, tables)?
            } else {
                BigCount::zero()
            };
            (uni, bi)
        }
    };
    Ok(FreeCountResult {
        n,
        delta,
        total: &unicentroid_part + &bicentroid_part,
        unicentroid_part,
        bicentroid_part,
    })
}

/// Number of non-isomorphic tree-like multigraphs with `n` vertices and
/// `delta` multiple edges.
pub fn count_free(n: usize, delta: usize) -> Result<FreeCountResult> {
    if n <= 1 {
        return count_free_with(n, delta, &RootedTotals::build(1, 0)?);
    }
    let tables = RootedTotals::build(n, delta)?;
    count_free_with(n, delta, &tables)
}

/// Reuses one table fill for a whole `(n, delta)` grid.
#[derive(Debug, Clone)]
pub struct FreeCounter {
    tables: RootedTotals,
}

impl FreeCounter {
    pub fn new(n_max: usize, delta_max: usize) -> Result<Self> {
        Ok(Self {
            tables: RootedTotals::build(n_max.max(1), delta_max)?,
        })
    }

    pub fn tables(&self) -> &RootedTotals {
        &self.tables
    }

    pub fn free(&self, n: usize, delta: usize) -> Result<FreeCountResult> {
        if n <= 1 {
            // does not depend on the tables
            return count_free_with(n, delta, &RootedTotals::build(1, 0)?);
        }
        count_free_with(n, delta, &self.tables)
    }

    /// `m(n, delta)`: rooted at an arbitrary vertex.
    pub fn rooted(&self, n: usize, delta: usize) -> Result<BigCount> {
        if n == 0 {
            return Ok(BigCount::zero());
        }
        require_cover(&self.tables, n, delta)?;
        Ok(self.tables.rooted_total(n, delta).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigCount {
        BigCount::from(x)
    }

    #[test]
    fn tiny_cases() {
        let t = RootedTotals::build(4, 3).unwrap();
        assert_eq!(count_unicentroid(1, 0, &t).unwrap(), big(1));
        assert_eq!(count_unicentroid(2, 1, &t).unwrap(), big(0));
        assert_eq!(count_unicentroid(3, 2, &t).unwrap(), big(2));
        assert_eq!(count_bicentroid(2, 0, &t).unwrap(), big(1));
        assert_eq!(count_bicentroid(2, 3, &t).unwrap(), big(1));
        // path P4 with the extra edge on an end edge or the middle edge
        assert_eq!(count_bicentroid(4, 1, &t).unwrap(), big(2));
        assert!(count_bicentroid(3, 1, &t).is_err());
        assert!(count_unicentroid(5, 1, &t).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(count_free(0, 3).unwrap().total, big(0));
        assert_eq!(count_free(1, 0).unwrap().total, big(1));
        assert_eq!(count_free(1, 2).unwrap().total, big(0));
        for d in 0..6 {
            assert_eq!(count_free(2, d).unwrap().total, big(1));
        }
        assert_eq!(count_free(3, 2).unwrap().total, big(2));
        assert_eq!(count_free(7, 0).unwrap().total, big(11));
    }

    #[test]
    fn published_sum_overcounts_symmetric_splits() {
        let t = RootedTotals::build(8, 5).unwrap();
        assert_eq!(count_bicentroid(8, 5, &t).unwrap(), big(2190));
        assert_eq!(count_bicentroid_as_published(8, 5, &t).unwrap(), big(2385));
        assert_eq!(count_free_as_published(8, 5, &t).unwrap(), big(4406));
        // smallest disagreement
        assert_eq!(count_bicentroid(6, 1, &t).unwrap(), big(9));
        assert_eq!(count_bicentroid_as_published(6, 1, &t).unwrap(), big(10));
        for n in 1..=5 {
            for d in 0..=5 {
                assert_eq!(
                    count_free_as_published(n, d, &t).unwrap(),
                    count_free_with(n, d, &t).unwrap().total
                );
            }
        }
        // a one-vertex half has a single class, so x * x equals C(x + 1, 2)
        assert_eq!(count_free_as_published(2, 1, &t).unwrap(), big(1));
        assert_eq!(
            count_free_as_published(7, 3, &t).unwrap(),
            count_free_with(7, 3, &t).unwrap().total
        );
    }

    #[test]
    fn odd_n_has_no_bicentroid_part() {
        let c = FreeCounter::new(9, 3).unwrap();
        for n in (1..=9).step_by(2) {
            for d in 0..=3 {
                let r = c.free(n, d).unwrap();
                assert!(r.bicentroid_part.is_zero());
                assert_eq!(r.total, &r.unicentroid_part + &r.bicentroid_part);
            }
        }
    }
}
