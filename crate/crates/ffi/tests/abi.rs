use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use mgcount_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mg_string_free(s);
    owned
}

fn last_error() -> String {
    let p = mg_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn one_shot_free_count() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(mg_free_count(8, 5, &mut s), MgStatus::Ok);
        assert_eq!(take(s), "4211");
        assert_eq!(mg_free_count(10, 0, &mut s), MgStatus::Ok);
        assert_eq!(take(s), "106");
    }
}

#[test]
fn counter_handle_lifecycle() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(mg_counter_new(9, 4, &mut c), MgStatus::Ok);
        assert!(!c.is_null());
        let mut s = ptr::null_mut();
        assert_eq!(mg_counter_free_count(c, 4, 1, &mut s), MgStatus::Ok);
        assert_eq!(take(s), "3");
        assert_eq!(mg_counter_rooted_count(c, 3, 2, &mut s), MgStatus::Ok);
        assert_eq!(take(s), "5");
        assert_eq!(mg_counter_free_count(c, 10, 0, &mut s), MgStatus::Domain);
        assert!(last_error().contains("too small"), "{}", last_error());
        mg_counter_free(c);
        mg_counter_free(ptr::null_mut());
    }
}

#[test]
fn dp_tables_handle() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(mg_dp_tables_new(4, 2, &mut t), MgStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(
            mg_dp_tables_count(t, MgBoundMode::Lll, 4, 0, 3, 0, 0, &mut s),
            MgStatus::Ok
        );
        assert_eq!(take(s), "4");
        assert_eq!(
            mg_dp_tables_count(t, MgBoundMode::Eee, 3, 0, 1, 0, 0, &mut s),
            MgStatus::Ok
        );
        assert_eq!(take(s), "1");
        assert_eq!(
            mg_dp_tables_count(t, MgBoundMode::Eee, 5, 0, 1, 0, 0, &mut s),
            MgStatus::Domain
        );
        mg_dp_tables_free(t);
    }
}

#[test]
fn null_and_resource_errors() {
    unsafe {
        assert_eq!(mg_free_count(3, 1, ptr::null_mut()), MgStatus::NullArgument);
        assert!(last_error().contains("out"));
        let mut s = ptr::null_mut();
        assert_eq!(mg_counter_free_count(ptr::null(), 3, 1, &mut s), MgStatus::NullArgument);
        let mut t = ptr::null_mut();
        assert_eq!(mg_dp_tables_new(5000, 5000, &mut t), MgStatus::Resource);
        assert!(t.is_null());
        assert_eq!(mg_dp_tables_new(0, 0, &mut t), MgStatus::Domain);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(mg_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_abi() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/mgcount.h")).unwrap();
    for name in [
        "MgStatus",
        "MG_STATUS_NULL_ARGUMENT",
        "MgBoundMode",
        "typedef struct MgCounter MgCounter",
        "typedef struct MgDpTables MgDpTables",
        "mg_free_count",
        "mg_counter_new",
        "mg_counter_free_count",
        "mg_counter_rooted_count",
        "mg_dp_tables_count",
        "mg_string_free",
        "mg_last_error_message",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
    // the header must be self-contained C
    let _ = CString::new(header).unwrap();
}
