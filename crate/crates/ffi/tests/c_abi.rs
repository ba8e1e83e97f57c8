use std::ffi::{CStr, CString};
use std::ptr;

use spin_chains_ffi::*;

fn parse(json: &str) -> (SpinStatus, *mut SpinChainSet) {
    let c = CString::new(json).unwrap();
    let mut cs = ptr::null_mut();
    let status = unsafe { spin_chain_set_from_json(c.as_ptr(), &mut cs) };
    (status, cs)
}

fn last_error() -> String {
    let p = spin_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

const EXAMPLE: &str = r#"{"chains":[[10,8],[9,7,5,3,1],[6],[4]]}"#;

#[test]
fn worked_example_through_handles() {
    let (status, cs) = parse(EXAMPLE);
    assert_eq!(status, SpinStatus::Ok);
    unsafe {
        let mut n = 0;
        assert_eq!(spin_chain_set_rank(cs, &mut n), SpinStatus::Ok);
        assert_eq!(n, 9);

        let mut interlaced = false;
        assert_eq!(
            spin_chain_set_is_interlaced(cs, &mut interlaced),
            SpinStatus::Ok
        );
        assert!(interlaced);

        let mut s = [0usize; 9];
        let mut len = 0;
        assert_eq!(
            spin_chain_set_involution(cs, s.as_mut_ptr(), s.len(), &mut len),
            SpinStatus::Ok
        );
        assert_eq!(s, [3, 9, 1, 8, 5, 6, 7, 4, 2]);

        let mut r = ptr::null_mut();
        assert_eq!(spin_compute(cs, &mut r), SpinStatus::Ok);
        let mut tau = [0i64; 9];
        assert_eq!(
            spin_computation_tau(r, tau.as_mut_ptr(), 9, &mut len),
            SpinStatus::Ok
        );
        assert_eq!(tau, [20, 18, 16, 14, 10, 10, 8, 6, 4]);
        let mut gamma = [0i64; 9];
        assert_eq!(
            spin_computation_gamma(r, gamma.as_mut_ptr(), 9, &mut len),
            SpinStatus::Ok
        );
        assert_eq!(gamma, [12, 12, 12, 12, 12, 12, 12, 12, 10]);
        let mut holds = false;
        assert_eq!(
            spin_computation_identity_holds(r, &mut holds),
            SpinStatus::Ok
        );
        assert!(holds);

        let mut json = ptr::null_mut();
        assert_eq!(spin_chain_set_to_json(cs, &mut json), SpinStatus::Ok);
        let back = CStr::from_ptr(json).to_str().unwrap().to_owned();
        spin_string_free(json);
        let (status, again) = parse(&back);
        assert_eq!(status, SpinStatus::Ok);
        spin_chain_set_free(again);

        spin_computation_free(r);
        spin_chain_set_free(cs);
    }
}

#[test]
fn small_buffer_reports_required_length() {
    let (_, cs) = parse(EXAMPLE);
    let mut buf = [0usize; 3];
    let mut len = 0;
    let status = unsafe { spin_chain_set_involution(cs, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(status, SpinStatus::BufferTooSmall);
    assert_eq!(len, 9);
    unsafe { spin_chain_set_free(cs) };
}

#[test]
fn status_codes_match_cli_exit_codes() {
    let (status, cs) = parse("not json");
    assert_eq!(status as i32, 2);
    assert!(cs.is_null());
    assert!(last_error().starts_with("malformed input"));

    let (status, _) = parse(r#"{"chains":[[5,2]]}"#);
    assert_eq!(status as i32, 3);

    let (status, _) = parse(r#"{"chains":[[5,3,1],[3]]}"#);
    assert_eq!(status as i32, 3);

    let mut out = 0;
    assert_eq!(unsafe { spin_scattered_count(30, &mut out) } as i32, 4);
    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { spin_scattered_enumerate_json(9, true, &mut text) } as i32,
        4
    );
    assert!(text.is_null());
}

#[test]
fn null_pointers_are_rejected() {
    let mut cs = ptr::null_mut();
    assert_eq!(
        unsafe { spin_chain_set_from_json(ptr::null(), &mut cs) },
        SpinStatus::NullPointer
    );
    let mut n = 0;
    assert_eq!(
        unsafe { spin_chain_set_rank(ptr::null(), &mut n) },
        SpinStatus::NullPointer
    );
    let (_, cs) = parse(EXAMPLE);
    assert_eq!(
        unsafe { spin_chain_set_rank(cs, ptr::null_mut()) },
        SpinStatus::NullPointer
    );
    unsafe {
        spin_chain_set_free(cs);
        spin_chain_set_free(ptr::null_mut());
        spin_computation_free(ptr::null_mut());
        spin_string_free(ptr::null_mut());
    }
}

#[test]
fn last_error_clears_on_success() {
    let _ = parse("[");
    assert!(!spin_last_error_message().is_null());
    let (status, cs) = parse(EXAMPLE);
    assert_eq!(status, SpinStatus::Ok);
    assert!(spin_last_error_message().is_null());
    unsafe { spin_chain_set_free(cs) };
}

#[test]
fn counts_and_enumeration() {
    for n in 2..=12 {
        let mut c = 0;
        assert_eq!(unsafe { spin_scattered_count(n, &mut c) }, SpinStatus::Ok);
        assert_eq!(c, 1 << (n - 2));
    }
    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { spin_scattered_enumerate_json(4, true, &mut text) },
        SpinStatus::Ok
    );
    let body = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_owned();
    unsafe { spin_string_free(text) };
    let lines: Vec<_> = body.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.contains(
        &r#"{"n":4,"chains":[[5,3,1],[4]],"lambda2_fund":[1,1,2],"s":[4,2,3,1],"tau_fund":[2,0,1],"gamma":[7,7,7,5],"u_small":true,"multiplicity":1}"#
    ));
}

#[test]
fn lr_coefficients() {
    let outer = [3usize, 2, 1];
    let inner = [2usize, 1];
    let weight = [2usize, 1];
    let mut c = 0;
    let status = unsafe {
        spin_lr_coefficient(
            outer.as_ptr(),
            3,
            inner.as_ptr(),
            2,
            weight.as_ptr(),
            2,
            &mut c,
        )
    };
    assert_eq!(status, SpinStatus::Ok);
    assert_eq!(c, 2);

    let bad = [1usize, 2];
    let status =
        unsafe { spin_lr_coefficient(bad.as_ptr(), 2, ptr::null(), 0, weight.as_ptr(), 2, &mut c) };
    assert_eq!(status, SpinStatus::InvalidArgument);
}

#[test]
fn header_is_current() {
    let header = include_str!("../include/spin_chains.h");
    for name in [
        "spin_chain_set_from_json",
        "spin_compute",
        "spin_computation_tau",
        "spin_lr_coefficient",
        "spin_last_error_message",
        "SPIN_STATUS_BOUND_EXCEEDED = 4",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
