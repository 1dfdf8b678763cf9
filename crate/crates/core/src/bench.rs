//! Published reference counts and a timing harness around them.

use std::time::Instant;

use crate::dp::RootedTotals;
use crate::error::Result;
use crate::free::{count_free_as_published, count_free_with};
use crate::report::OutputRecord;
use crate::sci::Sci3;

/// A published `(n, delta)` count, rounded to three significant figures,
/// with the reported running time of a Python implementation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub n: usize,
    pub delta: usize,
    pub published: &'static str,
    pub published_seconds: f64,
}

const fn row(n: usize, delta: usize, published: &'static str, published_seconds: f64) -> ReferenceRow {
    ReferenceRow {
        n,
        delta,
        published,
        published_seconds,
    }
}

pub const TABLE1: [ReferenceRow; 21] = [
    row(8, 5, "4.41e3", 0.0115),
    row(15, 10, "2.93e+9", 0.2371),
    row(18, 13, "2.40e+12", 0.5885),
    row(22, 15, "4.41e+15", 1.6876),
    row(25, 18, "4.21e+18", 3.2512),
    row(30, 20, "4.05e+22", 5.9189),
    row(35, 15, "4.43e+23", 3.4999),
    row(40, 20, "8.54e+28", 10.6742),
    row(43, 33, "6.61e+35", 49.2939),
    row(45, 36, "1.56e+38", 69.7175),
    row(50, 44, "1.77e+44", 175.0787),
    row(66, 48, "5.17e+56", 407.9641),
    row(72, 50, "3.16e+61", 549.2499),
    row(80, 40, "4.52e+62", 342.5029),
    row(84, 45, "2.35e+67", 549.1110),
    row(90, 50, "2.14e+73", 821.8740),
    row(95, 50, "3.32e+76", 932.2500),
    row(100, 40, "7.83e+74", 557.7977),
    row(120, 35, "5.95e+83", 522.7298),
    row(150, 30, "1.11e+97", 545.3231),
    row(170, 25, "5.92e+103", 426.8230),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// All 21 rows.
    Table1,
    /// Rows with `n <= 40` and `delta <= 20`.
    Quick,
}

impl Suite {
    pub fn rows(self) -> impl Iterator<Item = ReferenceRow> {
        TABLE1
            .into_iter()
            .filter(move |r| self == Suite::Table1 || (r.n <= 40 && r.delta <= 20))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchOutcome {
    pub row: ReferenceRow,
    pub record: OutputRecord,
    pub matches: bool,
    /// Same tables, but with the bicentroid sum as printed alongside the
    /// published values (see [`count_bicentroid_as_published`]).
    ///
    /// [`count_bicentroid_as_published`]: crate::free::count_bicentroid_as_published
    pub as_published_sci: String,
    pub as_published_matches: bool,
}

/// Compute one row and compare by value at three significant figures.
pub fn run_row(row: ReferenceRow) -> Result<BenchOutcome> {
    let expected: Sci3 = row.published.parse()?;
    let start = Instant::now();
    let tables = RootedTotals::build(row.n, row.delta)?;
    let result = count_free_with(row.n, row.delta, &tables)?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let record = OutputRecord::new(row.n, row.delta, &result.total, millis);
    let matches = Sci3::from_count(&result.total) == expected;
    let alt = Sci3::from_count(&count_free_as_published(row.n, row.delta, &tables)?);
    Ok(BenchOutcome {
        row,
        record,
        matches,
        as_published_sci: alt.to_string(),
        as_published_matches: alt == expected,
    })
}
