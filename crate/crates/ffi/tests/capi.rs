use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use liaison_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(liaison_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn hypersurface_module_through_handles() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(liaison_ring_new(c("x, y").as_ptr(), c("x*y").as_ptr(), &mut r), LiaisonStatus::Ok);
        assert_eq!(liaison_ring_nvars(r), 2);
        let mut gor = false;
        assert_eq!(liaison_ring_is_gorenstein(r, &mut gor), LiaisonStatus::Ok);
        assert!(gor);

        let mut m = ptr::null_mut();
        assert_eq!(liaison_module_cyclic(r, c("x").as_ptr(), &mut m), LiaisonStatus::Ok);
        let mut linked = false;
        assert_eq!(liaison_module_is_linked(m, &mut linked), LiaisonStatus::Ok);
        assert!(linked);

        let mut l = ptr::null_mut();
        assert_eq!(liaison_module_lambda(m, &mut l), LiaisonStatus::Ok);
        let mut dims = [0u64; 4];
        assert_eq!(liaison_module_hilbert(l, 0, 3, dims.as_mut_ptr(), dims.len()), LiaisonStatus::Ok);
        assert_eq!(dims, [1, 1, 1, 1]);
        assert_eq!(liaison_module_hilbert(l, 0, 3, dims.as_mut_ptr(), 2), LiaisonStatus::BufferTooSmall);

        liaison_module_free(l);
        liaison_module_free(m);
        liaison_ring_free(r);
    }
}

#[test]
fn failures_return_codes_and_messages() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(liaison_ring_new(ptr::null(), c("").as_ptr(), &mut r), LiaisonStatus::NullArgument);
        assert_eq!(liaison_ring_new(c("x").as_ptr(), c("").as_ptr(), ptr::null_mut()), LiaisonStatus::NullArgument);
        assert_ne!(liaison_ring_new(c("x, y").as_ptr(), c("x*w").as_ptr(), &mut r), LiaisonStatus::Ok);
        assert!(r.is_null());
        assert!(last_error().contains('w'), "{}", last_error());
        let bad = [0xffu8, 0];
        assert_eq!(liaison_ring_new(bad.as_ptr().cast(), c("").as_ptr(), &mut r), LiaisonStatus::InvalidUtf8);
        liaison_ring_free(ptr::null_mut());
        liaison_module_free(ptr::null_mut());
        liaison_report_free(ptr::null_mut());
        liaison_string_free(ptr::null_mut());
        assert_eq!(liaison_report_exit_code(ptr::null()), -1);
    }
}

#[test]
fn worksheets_run_and_report_json() {
    let ws = "ring S = poly(vars=[x, y])\nring R = quotient(S, gens=[x*y])\ntask gorenstein R expect=true\n";
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(liaison_run(c(ws).as_ptr(), 0, 24, &mut rep), LiaisonStatus::Ok);
        assert_eq!(liaison_report_exit_code(rep), 0);
        let mut s = ptr::null_mut();
        assert_eq!(liaison_report_json(rep, &mut s), LiaisonStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(json["tasks"][0]["verdict"], "Pass");
        liaison_string_free(s);
        liaison_report_free(rep);

        let mut rep = ptr::null_mut();
        assert_eq!(liaison_run(c("task cm M\n").as_ptr(), 0, 24, &mut rep), LiaisonStatus::Parse);
        assert!(rep.is_null());
    }
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(liaison_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn generated_header_compiles_as_c_and_cxx() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/liaison.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["liaison_ring_new", "liaison_run", "LIAISON_STATUS_CAP", "typedef struct LiaisonModule LiaisonModule"] {
        assert!(text.contains(name), "{name}");
    }
    for (cc, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(out) = Command::new(cc).args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang]).arg(&header).output() else {
            eprintln!("{cc} not available, skipping");
            continue;
        };
        assert!(out.status.success(), "{cc}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
