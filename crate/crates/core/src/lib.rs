//! Exact counts of tree-like multigraphs: connected, acyclic in the
//! underlying simple graph, parallel edges allowed, no self-loops.
//!
//! [`free::count_free`] answers "how many such multigraphs have `n`
//! vertices and `delta` multiple edges, up to isomorphism". The rooted
//! bounded families behind it live in [`dp`], and [`oracle`] is an
//! independent brute-force enumerator used to check them.

pub mod bench;
pub mod count;
pub mod dp;
pub mod error;
pub mod family;
pub mod free;
pub mod oracle;
pub mod report;
pub mod sci;
pub mod verify;

pub use count::{multiset_coefficient, multiset_coefficient_step, BigCount};
pub use dp::{count_bounded, DpTables, RootedTable, RootedTotals};
pub use error::{Error, Result};
pub use family::{BoundMode, FamilyKey, QueryParams, StatsTriple};
pub use free::{
    count_bicentroid, count_bicentroid_as_published, count_free, count_free_as_published, count_free_with,
    count_unicentroid, FreeCountResult, FreeCounter,
};
