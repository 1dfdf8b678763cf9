//! C ABI over `mgcount`.
//!
//! Counts cross the boundary as NUL-terminated decimal strings owned by this
//! library; release them with `mg_string_free`. Handles are opaque and must
//! be released with their matching `*_free`. Every entry point returns an
//! [`MgStatus`]; on failure `mg_last_error_message` describes the error on
//! the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mgcount::{BoundMode, DpTables, Error, FreeCounter};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MgStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Arguments outside the supported domain, or beyond a handle's capacity.
    Domain = 2,
    /// Tables too large to allocate.
    Resource = 3,
    /// Broken invariant inside the library.
    Internal = 4,
    /// A panic was caught at the boundary.
    Panic = 5,
}

/// Which of the child-size, extra-edge and root-edge bounds are equalities
/// (`E`) rather than upper bounds (`L`).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MgBoundMode {
    Lll = 0,
    Ell = 1,
    Eel = 2,
    Eee = 3,
}

impl From<MgBoundMode> for BoundMode {
    fn from(m: MgBoundMode) -> Self {
        match m {
            MgBoundMode::Lll => BoundMode::Lll,
            MgBoundMode::Ell => BoundMode::Ell,
            MgBoundMode::Eel => BoundMode::Eel,
            MgBoundMode::Eee => BoundMode::Eee,
        }
    }
}

/// Filled rooted totals for all `(n, delta)` up to its capacity; answers
/// free and rooted counts.
pub struct MgCounter {
    inner: FreeCounter,
}

/// The full four-family tables, for bounded rooted counts. Memory grows
/// as `n^2 delta^2`, so keep capacities small.
pub struct MgDpTables {
    inner: DpTables,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MgStatus {
    match e {
        Error::Domain(_) => MgStatus::Domain,
        Error::Resource { .. } | Error::Budget { .. } => MgStatus::Resource,
        Error::Internal(_) => MgStatus::Internal,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MgStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer passed as {what}"));
            MgStatus::NullArgument
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            MgStatus::Panic
        }
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    // decimal digits never contain NUL
    *out = CString::new(s).expect("digits").into_raw();
    Ok(())
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn mg_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(s) => s,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Free count for a single `(n, delta)`, filling temporary tables.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn mg_free_count(n: usize, delta: usize, out: *mut *mut c_char) -> MgStatus {
    guard(|| write_string(out, mgcount::count_free(n, delta)?.total.to_string()))
}

/// Fill tables covering every `n <= n_max`, `delta <= delta_max`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn mg_counter_new(n_max: usize, delta_max: usize, out: *mut *mut MgCounter) -> MgStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let inner = FreeCounter::new(n_max, delta_max)?;
        *out = Box::into_raw(Box::new(MgCounter { inner }));
        Ok(())
    })
}

/// # Safety
/// `counter` must be null or a handle from `mg_counter_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mg_counter_free(counter: *mut MgCounter) {
    if !counter.is_null() {
        drop(Box::from_raw(counter));
    }
}

/// Free (unrooted) count from a filled counter.
///
/// # Safety
/// `counter` must be a live handle and `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn mg_counter_free_count(
    counter: *const MgCounter,
    n: usize,
    delta: usize,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let c = counter.as_ref().ok_or(Fail::Null("counter"))?;
        write_string(out, c.inner.free(n, delta)?.total.to_string())
    })
}

/// Rooted count `m(n, delta)` from a filled counter.
///
/// # Safety
/// `counter` must be a live handle and `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn mg_counter_rooted_count(
    counter: *const MgCounter,
    n: usize,
    delta: usize,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let c = counter.as_ref().ok_or(Fail::Null("counter"))?;
        write_string(out, c.inner.rooted(n, delta)?.to_string())
    })
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn mg_dp_tables_new(n_cap: usize, delta_cap: usize, out: *mut *mut MgDpTables) -> MgStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let inner = DpTables::build(n_cap, delta_cap)?;
        *out = Box::into_raw(Box::new(MgDpTables { inner }));
        Ok(())
    })
}

/// # Safety
/// `tables` must be null or a handle from `mg_dp_tables_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mg_dp_tables_free(tables: *mut MgDpTables) {
    if !tables.is_null() {
        drop(Box::from_raw(tables));
    }
}

/// Number of rooted multigraphs with `i` vertices and `j` multiple edges
/// whose largest child subtree size, extra edges within the largest
/// children, and root-edge multiplicity among those, are bounded by
/// `w`, `u`, `v` as `mode` says.
///
/// # Safety
/// `tables` must be a live handle and `out` valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn mg_dp_tables_count(
    tables: *const MgDpTables,
    mode: MgBoundMode,
    i: usize,
    j: usize,
    w: usize,
    u: usize,
    v: usize,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let t = tables.as_ref().ok_or(Fail::Null("tables"))?;
        write_string(out, t.inner.value(mode.into(), i, j, w, u, v)?.to_string())
    })
}
