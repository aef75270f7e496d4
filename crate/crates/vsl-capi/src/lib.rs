//! C interface to the very-simplicity certification library.
//!
//! Conventions: every function returns a `VslStatus`; results come back
//! through out-pointers. Groups are opaque handles created by
//! `vsl_group_build` and released with `vsl_group_free`. Strings returned
//! through out-pointers are NUL-terminated, allocated by this library, and
//! must be released with `vsl_string_free`. On any non-OK status,
//! `vsl_last_error_message` returns a description of what went wrong.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::c_char;

use vsl::pipeline::{
    certify, jacobian, oracle, CertifyOptions, Family, FamilySpec,
};
use vsl::report::{to_sorted_json, Envelope};

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VslStatus {
    /// success
    Ok = 0,
    /// bad arguments (null pointers, unknown family, malformed input)
    InvalidArgument = 1,
    /// the computation itself reported an error
    Failed = 2,
    /// a panic was caught at the boundary
    Panic = 3,
}

/// Verdict codes mirroring the library's verdict statuses.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VslVerdict {
    VerySimple = 0,
    VerySimpleModuloLedger = 1,
    NotVerySimple = 2,
    Undecided = 3,
}

/// An opaque built group together with its heart module data.
pub struct VslGroup {
    built: vsl::groups::BuiltGroup,
    module_dim: usize,
}

fn guard<F: FnOnce() -> VslStatus>(f: F) -> VslStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("panic: {msg}"));
            VslStatus::Panic
        }
    }
}

unsafe fn parse_spec(
    family: *const c_char,
    q: u64,
    n: u64,
) -> Result<FamilySpec, VslStatus> {
    if family.is_null() {
        set_error("family is null".into());
        return Err(VslStatus::InvalidArgument);
    }
    let name = match unsafe { CStr::from_ptr(family) }.to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("family is not valid UTF-8".into());
            return Err(VslStatus::InvalidArgument);
        }
    };
    let family = match Family::parse(name) {
        Ok(f) => f,
        Err(e) => {
            set_error(e.to_string());
            return Err(VslStatus::InvalidArgument);
        }
    };
    Ok(FamilySpec {
        family,
        q: (q != 0).then_some(q),
        n: (n != 0).then_some(n as usize),
    })
}

fn string_out(s: String, out: *mut *mut c_char) -> VslStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            VslStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL".into());
            VslStatus::Failed
        }
    }
}

/// Returns the library version as a string; free with `vsl_string_free`.
#[no_mangle]
pub extern "C" fn vsl_version() -> *mut c_char {
    CString::new(env!("CARGO_PKG_VERSION")).unwrap().into_raw()
}

/// Returns and clears the last error message on this thread, or NULL when
/// none is pending; free with `vsl_string_free`.
#[no_mangle]
pub extern "C" fn vsl_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow_mut().take() {
        Some(c) => c.into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by a vsl function, not yet
/// freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn vsl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Builds a group from a family name ("sl2", "sz", "m11", "m11on12", "m12",
/// "l2_11", "symmetric", "alternating", "cyclic", "dihedral") and its
/// parameter: q for the Lie-type families, n for the series, 0 when unused.
///
/// # Safety
/// `family` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsl_group_build(
    family: *const c_char,
    q: u64,
    n: u64,
    out: *mut *mut VslGroup,
) -> VslStatus {
    guard(|| {
        if out.is_null() {
            set_error("out pointer is null".into());
            return VslStatus::InvalidArgument;
        }
        let spec = match unsafe { parse_spec(family, q, n) } {
            Ok(s) => s,
            Err(st) => return st,
        };
        match vsl::pipeline::heart_of(&spec) {
            Ok((built, module)) => {
                let handle = Box::new(VslGroup {
                    built,
                    module_dim: module.dim,
                });
                unsafe { *out = Box::into_raw(handle) };
                VslStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                VslStatus::Failed
            }
        }
    })
}

/// Releases a group handle.
///
/// # Safety
/// `g` must come from `vsl_group_build` and not have been freed, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn vsl_group_free(g: *mut VslGroup) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of points the group acts on.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsl_group_degree(g: *const VslGroup, out: *mut u64) -> VslStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null pointer".into());
            return VslStatus::InvalidArgument;
        }
        unsafe { *out = (*g).built.group.degree() as u64 };
        VslStatus::Ok
    })
}

/// Group order computed from the base and strong generating set.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsl_group_order(g: *const VslGroup, out: *mut u64) -> VslStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null pointer".into());
            return VslStatus::InvalidArgument;
        }
        unsafe { *out = (*g).built.bsgs.order() };
        VslStatus::Ok
    })
}

/// Dimension of the heart module of the action.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vsl_group_module_dim(g: *const VslGroup, out: *mut u64) -> VslStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            set_error("null pointer".into());
            return VslStatus::InvalidArgument;
        }
        unsafe { *out = (*g).module_dim as u64 };
        VslStatus::Ok
    })
}

/// Runs the very-simplicity criterion. `use_ledger = false` drops every
/// cited fact, downgrading ledger-dependent verdicts to undecided. On
/// success writes the verdict code and, when `out_json` is non-NULL, the
/// full JSON report.
///
/// # Safety
/// `family` must be a NUL-terminated string; `out_verdict` must be valid;
/// `out_json` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn vsl_certify(
    family: *const c_char,
    q: u64,
    n: u64,
    use_ledger: bool,
    out_verdict: *mut VslVerdict,
    out_json: *mut *mut c_char,
) -> VslStatus {
    guard(|| {
        if out_verdict.is_null() {
            set_error("out_verdict is null".into());
            return VslStatus::InvalidArgument;
        }
        let spec = match unsafe { parse_spec(family, q, n) } {
            Ok(s) => s,
            Err(st) => return st,
        };
        let opts = CertifyOptions {
            use_ledger,
            ..Default::default()
        };
        match certify(&spec, &opts) {
            Ok(outcome) => {
                let code = match outcome.verdict.status {
                    vsl::repcheck::VerdictStatus::VerySimple => VslVerdict::VerySimple,
                    vsl::repcheck::VerdictStatus::VerySimpleModuloLedger => {
                        VslVerdict::VerySimpleModuloLedger
                    }
                    vsl::repcheck::VerdictStatus::NotVerySimple => VslVerdict::NotVerySimple,
                    vsl::repcheck::VerdictStatus::Undecided => VslVerdict::Undecided,
                };
                unsafe { *out_verdict = code };
                if !out_json.is_null() {
                    return string_out(
                        to_sorted_json(&Envelope::new("certify", &outcome)),
                        out_json,
                    );
                }
                VslStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                VslStatus::Failed
            }
        }
    })
}

/// Runs the brute-force definitional oracle (module dimension at most 5).
/// Writes whether the module is very simple; optionally the JSON report.
///
/// # Safety
/// `family` must be a NUL-terminated string; `out_very_simple` must be
/// valid; `out_json` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn vsl_oracle(
    family: *const c_char,
    q: u64,
    n: u64,
    out_very_simple: *mut bool,
    out_json: *mut *mut c_char,
) -> VslStatus {
    guard(|| {
        if out_very_simple.is_null() {
            set_error("out_very_simple is null".into());
            return VslStatus::InvalidArgument;
        }
        let spec = match unsafe { parse_spec(family, q, n) } {
            Ok(s) => s,
            Err(st) => return st,
        };
        match oracle(&spec) {
            Ok((_, _, outcome)) => {
                unsafe { *out_very_simple = outcome.very_simple };
                if !out_json.is_null() {
                    return string_out(
                        to_sorted_json(&Envelope::new("oracle", &outcome)),
                        out_json,
                    );
                }
                VslStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                VslStatus::Failed
            }
        }
    })
}

/// Verifies the 2-torsion of y² = f(x) over F_p. `f_coeffs` lists the
/// coefficients ascending (constant term first). Writes whether every check
/// passed; optionally the JSON report.
///
/// # Safety
/// `f_coeffs` must point to `f_len` readable u64 values; `out_all_pass`
/// must be valid; `out_json` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn vsl_jac_two_torsion(
    p: u64,
    f_coeffs: *const u64,
    f_len: usize,
    pair_cap: usize,
    out_all_pass: *mut bool,
    out_json: *mut *mut c_char,
) -> VslStatus {
    guard(|| {
        if f_coeffs.is_null() || out_all_pass.is_null() {
            set_error("null pointer".into());
            return VslStatus::InvalidArgument;
        }
        let coeffs = unsafe { std::slice::from_raw_parts(f_coeffs, f_len) };
        match jacobian(p, coeffs, pair_cap) {
            Ok(report) => {
                unsafe { *out_all_pass = report.all_pass() };
                if !out_json.is_null() {
                    return string_out(
                        to_sorted_json(&Envelope::new("jac-2tors", &report)),
                        out_json,
                    );
                }
                VslStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                VslStatus::Failed
            }
        }
    })
}
