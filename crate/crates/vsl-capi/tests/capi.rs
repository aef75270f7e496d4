//! Exercises the C surface from Rust: handle lifecycle, status codes, error
//! reporting, and JSON payloads.

use std::ffi::{CStr, CString};

use vsl_capi::*;

fn take_string(p: *mut libc::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { vsl_string_free(p) };
    s
}

#[test]
fn group_handle_lifecycle() {
    let family = CString::new("sz").unwrap();
    let mut handle: *mut VslGroup = std::ptr::null_mut();
    let st = unsafe { vsl_group_build(family.as_ptr(), 8, 0, &mut handle) };
    assert_eq!(st, VslStatus::Ok);
    let mut degree = 0u64;
    let mut order = 0u64;
    let mut dim = 0u64;
    unsafe {
        assert_eq!(vsl_group_degree(handle, &mut degree), VslStatus::Ok);
        assert_eq!(vsl_group_order(handle, &mut order), VslStatus::Ok);
        assert_eq!(vsl_group_module_dim(handle, &mut dim), VslStatus::Ok);
        vsl_group_free(handle);
    }
    assert_eq!(degree, 65);
    assert_eq!(order, 29120);
    assert_eq!(dim, 64);
}

#[test]
fn build_reports_errors() {
    let family = CString::new("sl2").unwrap();
    let mut handle: *mut VslGroup = std::ptr::null_mut();
    // q = 7 is not a power of two
    let st = unsafe { vsl_group_build(family.as_ptr(), 7, 0, &mut handle) };
    assert_eq!(st, VslStatus::Failed);
    let msg = take_string(vsl_last_error_message());
    assert!(msg.contains("power of 2"), "{msg}");

    let bogus = CString::new("nonsense").unwrap();
    let st = unsafe { vsl_group_build(bogus.as_ptr(), 0, 0, &mut handle) };
    assert_eq!(st, VslStatus::InvalidArgument);
    let _ = take_string(vsl_last_error_message());

    let st = unsafe { vsl_group_build(std::ptr::null(), 0, 0, &mut handle) };
    assert_eq!(st, VslStatus::InvalidArgument);
}

#[test]
fn certify_through_the_c_surface() {
    let family = CString::new("sl2").unwrap();
    let mut verdict = VslVerdict::Undecided;
    let mut json: *mut libc::c_char = std::ptr::null_mut();
    let st = unsafe { vsl_certify(family.as_ptr(), 8, 0, true, &mut verdict, &mut json) };
    assert_eq!(st, VslStatus::Ok);
    assert_eq!(verdict, VslVerdict::VerySimpleModuloLedger);
    let text = take_string(json);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["result"]["enveloping_dim"], 64);

    // without the ledger the verdict degrades
    let mut verdict2 = VslVerdict::VerySimple;
    let st = unsafe {
        vsl_certify(family.as_ptr(), 8, 0, false, &mut verdict2, std::ptr::null_mut())
    };
    assert_eq!(st, VslStatus::Ok);
    assert_eq!(verdict2, VslVerdict::Undecided);
}

#[test]
fn oracle_through_the_c_surface() {
    let family = CString::new("cyclic").unwrap();
    let mut very_simple = true;
    let st = unsafe {
        vsl_oracle(family.as_ptr(), 0, 5, &mut very_simple, std::ptr::null_mut())
    };
    assert_eq!(st, VslStatus::Ok);
    assert!(!very_simple);
}

#[test]
fn jacobian_through_the_c_surface() {
    let coeffs: Vec<u64> = vec![0, 2, 5, 2, 1, 1];
    let mut all_pass = false;
    let mut json: *mut libc::c_char = std::ptr::null_mut();
    let st = unsafe {
        vsl_jac_two_torsion(11, coeffs.as_ptr(), coeffs.len(), 64, &mut all_pass, &mut json)
    };
    assert_eq!(st, VslStatus::Ok);
    assert!(all_pass);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["result"]["class_count"], 16);

    // a non-squarefree polynomial fails with a diagnostic
    let bad: Vec<u64> = vec![0, 0, 0, 0, 0, 1];
    let st = unsafe {
        vsl_jac_two_torsion(11, bad.as_ptr(), bad.len(), 64, &mut all_pass, std::ptr::null_mut())
    };
    assert_eq!(st, VslStatus::Failed);
    let msg = take_string(vsl_last_error_message());
    assert!(msg.contains("squarefree"), "{msg}");
}

#[test]
fn generated_header_covers_the_surface() {
    let header = include_str!("../include/vsl.h");
    for symbol in [
        "vsl_group_build",
        "vsl_group_free",
        "vsl_group_order",
        "vsl_certify",
        "vsl_oracle",
        "vsl_jac_two_torsion",
        "vsl_string_free",
        "vsl_last_error_message",
        "VslStatus",
        "VslVerdict",
        "VslGroup",
    ] {
        assert!(header.contains(symbol), "header must declare {symbol}");
    }
}

#[test]
fn version_string_round_trips() {
    let v = take_string(vsl_version());
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
