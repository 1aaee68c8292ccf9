//! C ABI over `orecheb`.
//!
//! Fallible functions return an [`OrechebStatus`] and write results through
//! out-pointers. On failure, [`orecheb_last_error_message`] describes the
//! most recent error on the calling thread. Strings returned by the library
//! must be released with [`orecheb_string_free`], handles with
//! [`orecheb_recurrence_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Instant;

use orecheb::chebrec::{compute, reduce_order, Algorithm, RecurrenceResult};
use orecheb::cli::{parse_operator, RecurrenceDocument};
use orecheb::field::ops;
use orecheb::series::{lookup, verify_function};
use orecheb::Error;

/// Result codes.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OrechebStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownAlgorithm = 4,
    UnknownFunction = 5,
    /// The input violates a precondition (zero operator, singular leading
    /// coefficient, bad sizes, ...).
    Math = 6,
    /// `orecheb_verify` ran but the residual exceeded the tolerance.
    VerifyFailed = 7,
    Internal = 8,
    Panic = 9,
}

/// A computed recurrence.
pub struct OrechebRecurrence {
    result: RecurrenceResult,
    input: String,
    reduced: bool,
    timing_ms: f64,
    op_count: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> OrechebStatus {
    match e {
        Error::Parse { .. } => OrechebStatus::Parse,
        Error::UnknownAlgorithm(_) => OrechebStatus::UnknownAlgorithm,
        Error::UnknownFunction(_) => OrechebStatus::UnknownFunction,
        Error::Internal(_) => OrechebStatus::Internal,
        _ => OrechebStatus::Math,
    }
}

struct Fail(OrechebStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> OrechebStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrechebStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("panic inside orecheb");
            OrechebStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(OrechebStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(OrechebStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(OrechebStatus::NullArgument, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn algorithm(s: &str) -> Result<Algorithm, Fail> {
    Ok(s.parse::<Algorithm>()?)
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(OrechebStatus::Internal, "output contains NUL".into()))
}

/// Computes the recurrence of the operator `op` (e.g. `"Dx - 1"`) with
/// `algo` (`"lewanowicz"`, `"paszkowski"`, `"rebillard"` or `"dac"`).
/// With `reduce`, the common left factor with the denominator is removed.
///
/// # Safety
/// `op` and `algo` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orecheb_recurrence_compute(
    op: *const c_char,
    algo: *const c_char,
    reduce: bool,
    out: *mut *mut OrechebRecurrence,
) -> OrechebStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let input = text(op, "op")?;
        let a = algorithm(text(algo, "algo")?)?;
        let l = parse_operator(input)?;
        let start = Instant::now();
        let (r, op_count) = ops::measure(|| {
            let r = compute(a, &l)?;
            if reduce {
                reduce_order(&r)
            } else {
                Ok(r)
            }
        });
        let handle = OrechebRecurrence {
            result: r?,
            input: input.to_string(),
            reduced: reduce,
            timing_ms: start.elapsed().as_secs_f64() * 1e3,
            op_count,
        };
        *out = Box::into_raw(Box::new(handle));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `rec` must come from `orecheb_recurrence_compute` and not be used again.
#[no_mangle]
pub unsafe extern "C" fn orecheb_recurrence_free(rec: *mut OrechebRecurrence) {
    if !rec.is_null() {
        drop(Box::from_raw(rec));
    }
}

/// Order of the recurrence, or `(size_t)-1` for a null handle.
///
/// # Safety
/// `rec` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orecheb_recurrence_order(rec: *const OrechebRecurrence) -> usize {
    match rec.as_ref() {
        Some(r) => r.result.order,
        None => usize::MAX,
    }
}

unsafe fn render(
    rec: *const OrechebRecurrence,
    centered: bool,
    out: *mut *mut c_char,
    f: fn(&RecurrenceDocument) -> String,
) -> OrechebStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let r = rec
            .as_ref()
            .ok_or_else(|| Fail(OrechebStatus::NullArgument, "rec is null".into()))?;
        let doc = RecurrenceDocument::new(
            &r.result,
            &r.input,
            centered,
            r.reduced,
            r.timing_ms,
            r.op_count,
        )?;
        *out = c_string(f(&doc))?;
        Ok(())
    })
}

/// Writes the JSON document for `rec` to `*out`.
///
/// # Safety
/// `rec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orecheb_recurrence_to_json(
    rec: *const OrechebRecurrence,
    centered: bool,
    out: *mut *mut c_char,
) -> OrechebStatus {
    render(rec, centered, out, RecurrenceDocument::to_json)
}

/// Writes the human-readable report for `rec` to `*out`.
///
/// # Safety
/// `rec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orecheb_recurrence_to_text(
    rec: *const OrechebRecurrence,
    centered: bool,
    out: *mut *mut c_char,
) -> OrechebStatus {
    render(rec, centered, out, RecurrenceDocument::to_text)
}

/// Checks the recurrence computed by `algo` for the catalog function
/// `function` on its first `n + 1` Chebyshev coefficients. Writes the
/// largest scaled residual to `*residual` when non-null. Returns
/// `ORECHEB_STATUS_VERIFY_FAILED` if it exceeds `tol`.
///
/// # Safety
/// `function` and `algo` must be NUL-terminated strings; `residual` must be
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn orecheb_verify(
    function: *const c_char,
    algo: *const c_char,
    n: usize,
    tol: f64,
    residual: *mut f64,
) -> OrechebStatus {
    guard(|| {
        let f = lookup(text(function, "function")?)?;
        let a = algorithm(text(algo, "algo")?)?;
        let rep = verify_function(&f, a, n, tol)?.annihilation;
        if !residual.is_null() {
            *residual = rep.max_residual;
        }
        if rep.pass {
            Ok(())
        } else {
            Err(Fail(
                OrechebStatus::VerifyFailed,
                format!("residual {:.3e} exceeds {tol:.1e} at n = {}", rep.max_residual, rep.worst_n),
            ))
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn orecheb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn orecheb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn orecheb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
