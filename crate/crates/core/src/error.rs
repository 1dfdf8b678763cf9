use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Arguments outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Table allocation refused or failed.
    #[error("resource error: cannot allocate {what} ({cells} cells)")]
    Resource { what: &'static str, cells: usize },

    /// The brute-force enumerator refused an instance that is too large.
    #[error("enumeration budget exceeded at (n={n}, delta={delta}): {classes} classes > {limit}")]
    Budget {
        n: usize,
        delta: usize,
        classes: usize,
        limit: usize,
    },

    /// A broken internal invariant. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
