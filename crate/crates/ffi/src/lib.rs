//! C ABI over the liaison engine.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`LiaisonStatus`]; the message of the last failure on the calling thread
//! is available from [`liaison_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liaison::error::Error;
use liaison::gb::{Ideal, QuotientRing, Ring};
use liaison::linkverify::is_horizontally_linked;
use liaison::modops::{lambda, ModulePres};
use liaison::shell::{parse_worksheet, run, RunFlags, RunReport};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiaisonStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Cap = 4,
    Engine = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// A graded quotient of a polynomial ring.
pub struct LiaisonRing(Ring);

/// A finitely presented graded module.
pub struct LiaisonModule(ModulePres);

/// The report of a worksheet run.
pub struct LiaisonReport(RunReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    let c = CString::new(bytes).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(e: Error) -> LiaisonStatus {
    let code = match e {
        Error::Parse { .. } | Error::UndefinedName(_) | Error::Arity { .. } => LiaisonStatus::Parse,
        Error::Truncation { .. } => LiaisonStatus::Cap,
        _ => LiaisonStatus::Engine,
    };
    set_error(e.to_string());
    code
}

fn guard(f: impl FnOnce() -> LiaisonStatus) -> LiaisonStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            LiaisonStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, LiaisonStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(LiaisonStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not UTF-8");
        LiaisonStatus::InvalidUtf8
    })
}

fn list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect()
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! engine {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> LiaisonStatus {
    *out = Box::into_raw(Box::new(v));
    LiaisonStatus::Ok
}

macro_rules! nonnull {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null argument");
            return LiaisonStatus::NullArgument;
        }
    };
}

/// Engine version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn liaison_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn liaison_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// `k[vars]/(relations)` over `F_32003`; both lists comma separated.
///
/// # Safety
/// `vars` and `relations` are NUL-terminated strings, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn liaison_ring_new(
    vars: *const c_char,
    relations: *const c_char,
    out: *mut *mut LiaisonRing,
) -> LiaisonStatus {
    guard(|| {
        nonnull!(out);
        let v = tri!(text(vars));
        let r = tri!(text(relations));
        let ring = engine!(QuotientRing::build(&list(v), &list(r)));
        put(out, LiaisonRing(ring))
    })
}

/// # Safety
/// `ring` is null or came from [`liaison_ring_new`] and was not freed.
#[no_mangle]
pub unsafe extern "C" fn liaison_ring_free(ring: *mut LiaisonRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of variables of the ring, or 0 for a null handle.
///
/// # Safety
/// `ring` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn liaison_ring_nvars(ring: *const LiaisonRing) -> usize {
    ring.as_ref().map_or(0, |r| r.0.nvars())
}

/// Whether the ring is Gorenstein.
///
/// # Safety
/// `ring` is a live handle, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn liaison_ring_is_gorenstein(ring: *const LiaisonRing, out: *mut bool) -> LiaisonStatus {
    guard(|| {
        nonnull!(ring, out);
        *out = engine!(liaison::homlat::is_gorenstein_ring(&(*ring).0));
        LiaisonStatus::Ok
    })
}

/// The cyclic module `R/(gens)`; `gens` comma separated.
///
/// # Safety
/// `ring` is a live handle, `gens` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liaison_module_cyclic(
    ring: *const LiaisonRing,
    gens: *const c_char,
    out: *mut *mut LiaisonModule,
) -> LiaisonStatus {
    guard(|| {
        nonnull!(ring, out);
        let g = tri!(text(gens));
        let ideal = engine!(Ideal::parse(&(*ring).0, &list(g)));
        put(out, LiaisonModule(ModulePres::cyclic(&ideal)))
    })
}

/// # Safety
/// `module` is null or a handle that was not freed.
#[no_mangle]
pub unsafe extern "C" fn liaison_module_free(module: *mut LiaisonModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

/// The horizontal link `λM`.
///
/// # Safety
/// `module` is a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liaison_module_lambda(
    module: *const LiaisonModule,
    out: *mut *mut LiaisonModule,
) -> LiaisonStatus {
    guard(|| {
        nonnull!(module, out);
        let l = engine!(lambda(&(*module).0));
        put(out, LiaisonModule(l))
    })
}

/// `dim_k M_d` for `d = lo..=hi`, written to `dims[0..=hi-lo]`.
///
/// # Safety
/// `module` is a live handle and `dims` has room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn liaison_module_hilbert(
    module: *const LiaisonModule,
    lo: i32,
    hi: i32,
    dims: *mut u64,
    len: usize,
) -> LiaisonStatus {
    guard(|| {
        nonnull!(module, dims);
        if hi < lo {
            set_error("empty window");
            return LiaisonStatus::Engine;
        }
        let need = (hi - lo + 1) as usize;
        if len < need {
            set_error(format!("need room for {need} values"));
            return LiaisonStatus::BufferTooSmall;
        }
        let t = engine!((*module).0.hilbert(lo, hi));
        ptr::copy_nonoverlapping(t.dims.as_ptr(), dims, need);
        LiaisonStatus::Ok
    })
}

/// Whether `M` is horizontally linked, by the stable-and-Ext criterion.
///
/// # Safety
/// `module` is a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liaison_module_is_linked(module: *const LiaisonModule, out: *mut bool) -> LiaisonStatus {
    guard(|| {
        nonnull!(module, out);
        *out = engine!(is_horizontally_linked(&(*module).0, None)).verdict;
        LiaisonStatus::Ok
    })
}

/// Parses and runs a worksheet with the default window and one job.
///
/// # Safety
/// `worksheet` is a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liaison_run(
    worksheet: *const c_char,
    seed: u64,
    max_degree: u32,
    out: *mut *mut LiaisonReport,
) -> LiaisonStatus {
    guard(|| {
        nonnull!(out);
        let w = tri!(text(worksheet));
        let ws = engine!(parse_worksheet(w));
        let flags = RunFlags { seed, max_degree, ..RunFlags::default() };
        put(out, LiaisonReport(run(&ws, &flags)))
    })
}

/// 0 all pass, 1 some task failed, 2 engine error or cap; -1 for null.
///
/// # Safety
/// `report` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn liaison_report_exit_code(report: *const LiaisonReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.0.exit_code())
}

/// The machine-readable report as a string to release with
/// [`liaison_string_free`].
///
/// # Safety
/// `report` is a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liaison_report_json(report: *const LiaisonReport, out: *mut *mut c_char) -> LiaisonStatus {
    guard(|| {
        nonnull!(report, out);
        let s = CString::new((*report).0.to_machine()).unwrap_or_default();
        *out = s.into_raw();
        LiaisonStatus::Ok
    })
}

/// # Safety
/// `report` is null or a handle that was not freed.
#[no_mangle]
pub unsafe extern "C" fn liaison_report_free(report: *mut LiaisonReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` is null or came from this library and was not freed.
#[no_mangle]
pub unsafe extern "C" fn liaison_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
