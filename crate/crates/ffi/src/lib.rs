//! C ABI over `spin_chains`.
//!
//! Every function returns a [`SpinStatus`]. Results go through out-pointers.
//! On failure, [`spin_last_error_message`] describes the most recent error
//! on the calling thread. Weights are written in doubled coordinates.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spin_chains::lr::{lr_coefficient, Partition};
use spin_chains::scattered::{build_record, count, generate};
use spin_chains::spin::{spin_lowest_k_type, verify_spin_identity};
use spin_chains::{ChainSet, Error, SpinResult};

/// Status codes. Values 0 to 4 match the `spin-chains` exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinStatus {
    Ok = 0,
    VerificationFailed = 1,
    ParseError = 2,
    InvalidChainSet = 3,
    BoundExceeded = 4,
    NullPointer = 10,
    BufferTooSmall = 11,
    InvalidArgument = 12,
    Panic = 13,
}

/// Opaque chain set handle.
pub struct SpinChainSet(ChainSet);

/// Opaque result of the spin-lowest K-type computation.
pub struct SpinComputation(SpinResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: SpinStatus, msg: impl Into<String>) -> SpinStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> SpinStatus {
    let status = match e.exit_code() {
        2 => SpinStatus::ParseError,
        3 => SpinStatus::InvalidChainSet,
        4 => SpinStatus::BoundExceeded,
        _ => SpinStatus::VerificationFailed,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> SpinStatus) -> SpinStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SpinStatus::Panic, "internal panic"),
    }
}

macro_rules! deref {
    ($p:expr) => {
        match unsafe { $p.as_ref() } {
            Some(v) => v,
            None => return fail(SpinStatus::NullPointer, concat!(stringify!($p), " is null")),
        }
    };
}

macro_rules! out {
    ($p:expr) => {
        match unsafe { $p.as_mut() } {
            Some(v) => v,
            None => return fail(SpinStatus::NullPointer, concat!(stringify!($p), " is null")),
        }
    };
}

unsafe fn write_slice<T: Copy>(src: &[T], buf: *mut T, cap: usize, len: *mut usize) -> SpinStatus {
    let len = out!(len);
    *len = src.len();
    if cap < src.len() {
        return fail(
            SpinStatus::BufferTooSmall,
            format!("buffer holds {cap}, need {}", src.len()),
        );
    }
    if !src.is_empty() {
        if buf.is_null() {
            return fail(SpinStatus::NullPointer, "buf is null");
        }
        ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    SpinStatus::Ok
}

unsafe fn read_slice<'a, T>(p: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if p.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(p, len))
    }
}

fn into_c_string(s: String, out: &mut *mut c_char) -> SpinStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            SpinStatus::Ok
        }
        Err(_) => fail(SpinStatus::Panic, "string contains NUL"),
    }
}

/// Message for the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn spin_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn spin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"chains": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spin_chain_set_from_json(
    json: *const c_char,
    out: *mut *mut SpinChainSet,
) -> SpinStatus {
    guard(|| {
        let out = out!(out);
        *out = ptr::null_mut();
        if json.is_null() {
            return fail(SpinStatus::NullPointer, "json is null");
        }
        let text = match CStr::from_ptr(json).to_str() {
            Ok(t) => t,
            Err(e) => return fail(SpinStatus::ParseError, e.to_string()),
        };
        match ChainSet::from_json(text) {
            Ok(cs) => {
                *out = Box::into_raw(Box::new(SpinChainSet(cs)));
                SpinStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `cs` must come from [`spin_chain_set_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn spin_chain_set_free(cs: *mut SpinChainSet) {
    if !cs.is_null() {
        drop(Box::from_raw(cs));
    }
}

/// Serializes the chain set; free the result with [`spin_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn spin_chain_set_to_json(
    cs: *const SpinChainSet,
    out: *mut *mut c_char,
) -> SpinStatus {
    guard(|| {
        let cs = deref!(cs);
        into_c_string(cs.0.to_json(), out!(out))
    })
}

/// Rank n of the ambient SL(n), i.e. the number of entries.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn spin_chain_set_rank(
    cs: *const SpinChainSet,
    out: *mut usize,
) -> SpinStatus {
    guard(|| {
        *out!(out) = deref!(cs).0.n();
        SpinStatus::Ok
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn spin_chain_set_is_interlaced(
    cs: *const SpinChainSet,
    out: *mut bool,
) -> SpinStatus {
    guard(|| {
        *out!(out) = deref!(cs).0.is_interlaced();
        SpinStatus::Ok
    })
}

/// One-line notation of s, 1-based. `*len` receives n even when `cap` is too small.
///
/// # Safety
/// `buf` must hold `cap` elements.
#[no_mangle]
pub unsafe extern "C" fn spin_chain_set_involution(
    cs: *const SpinChainSet,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> SpinStatus {
    guard(|| {
        let s = deref!(cs).0.extract_involution();
        write_slice(s.images(), buf, cap, len)
    })
}

/// Runs the spin-lowest K-type algorithm.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn spin_compute(
    cs: *const SpinChainSet,
    out: *mut *mut SpinComputation,
) -> SpinStatus {
    guard(|| {
        let out = out!(out);
        *out = ptr::null_mut();
        match spin_lowest_k_type(&deref!(cs).0) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(SpinComputation(r)));
                SpinStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `r` must come from [`spin_compute`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn spin_computation_free(r: *mut SpinComputation) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// τ, doubled.
///
/// # Safety
/// `buf` must hold `cap` elements.
#[no_mangle]
pub unsafe extern "C" fn spin_computation_tau(
    r: *const SpinComputation,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> SpinStatus {
    guard(|| write_slice(deref!(r).0.tau.coords(), buf, cap, len))
}

/// {τ−ρ}, doubled.
///
/// # Safety
/// `buf` must hold `cap` elements.
#[no_mangle]
pub unsafe extern "C" fn spin_computation_gamma(
    r: *const SpinComputation,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> SpinStatus {
    guard(|| write_slice(deref!(r).0.gamma.coords(), buf, cap, len))
}

/// Whether {τ−ρ} = 2λ−ρ.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn spin_computation_identity_holds(
    r: *const SpinComputation,
    out: *mut bool,
) -> SpinStatus {
    guard(|| {
        *out!(out) = verify_spin_identity(&deref!(r).0);
        SpinStatus::Ok
    })
}

/// Number of scattered representations of SL(n).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spin_scattered_count(n: usize, out: *mut usize) -> SpinStatus {
    guard(|| {
        let out = out!(out);
        if n > 20 {
            return from_error(Error::BoundExceeded { n, min: 2, max: 20 });
        }
        match count(n) {
            Ok(c) => {
                *out = c;
                SpinStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Newline-separated JSON records for SL(n); free with [`spin_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spin_scattered_enumerate_json(
    n: usize,
    with_multiplicity: bool,
    out: *mut *mut c_char,
) -> SpinStatus {
    guard(|| {
        let out = out!(out);
        *out = ptr::null_mut();
        let max = if with_multiplicity { 8 } else { 16 };
        if n > max {
            return from_error(Error::BoundExceeded { n, min: 2, max });
        }
        let mut sets = match generate(n) {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        sets.dedup();
        let mut text = String::new();
        for cs in &sets {
            match build_record(cs, with_multiplicity) {
                Ok(r) => {
                    text.push_str(&serde_json::to_string(&r).expect("record serializes"));
                    text.push('\n');
                }
                Err(e) => return from_error(e),
            }
        }
        into_c_string(text, out)
    })
}

/// c^{outer}_{inner, weight}. Partitions are weakly decreasing part arrays.
///
/// # Safety
/// Each array must hold its stated length.
#[no_mangle]
pub unsafe extern "C" fn spin_lr_coefficient(
    outer: *const usize,
    outer_len: usize,
    inner: *const usize,
    inner_len: usize,
    weight: *const usize,
    weight_len: usize,
    out: *mut u64,
) -> SpinStatus {
    guard(|| {
        let out = out!(out);
        let (Some(o), Some(i), Some(w)) = (
            read_slice(outer, outer_len),
            read_slice(inner, inner_len),
            read_slice(weight, weight_len),
        ) else {
            return fail(SpinStatus::NullPointer, "partition array is null");
        };
        let parts = (
            Partition::new(o.to_vec()),
            Partition::new(i.to_vec()),
            Partition::new(w.to_vec()),
        );
        let (o, i, w) = match parts {
            (Ok(o), Ok(i), Ok(w)) => (o, i, w),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                return fail(SpinStatus::InvalidArgument, e.to_string())
            }
        };
        match lr_coefficient(&o, &i, &w) {
            Ok(c) => {
                *out = c;
                SpinStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}
