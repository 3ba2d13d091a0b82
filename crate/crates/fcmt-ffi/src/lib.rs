//! C interface to `fcmt`.
//!
//! Every fallible function returns an [`FcmtStatus`] and writes its result
//! through an out pointer. On failure a message is kept per thread and can be
//! read with [`fcmt_last_error_message`]. Strings returned through out
//! pointers are owned by the caller and must be released with
//! [`fcmt_string_free`]; handles are released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fcmt::catalog::{monoid_presentation, GlueSpec, RingType};
use fcmt::factor::{elasticity_monoid, is_factorial, length_set};
use fcmt::lattice::{class_group, hilbert_basis, IntMatrix, MonoidPresentation};
use fcmt::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcmtStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    NullOrInvalidArgument = 1,
    InputError = 2,
    ParseError = 3,
    PreconditionViolated = 4,
    Unsupported = 5,
    LimitExceeded = 6,
    /// The computation finished but one of its checks failed.
    VerificationFailed = 7,
    Panic = 8,
}

/// A monoid `ker(A) ∩ ℕᵗ ⊕ ℕᵘ`.
pub struct FcmtPresentation {
    inner: MonoidPresentation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> FcmtStatus {
    match e {
        Error::Input(_) => FcmtStatus::InputError,
        Error::Parse { .. } => FcmtStatus::ParseError,
        Error::Precondition(_) => FcmtStatus::PreconditionViolated,
        Error::Unsupported(_) => FcmtStatus::Unsupported,
        Error::LimitExceeded(_) => FcmtStatus::LimitExceeded,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), FcmtStatus>) -> FcmtStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FcmtStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            FcmtStatus::Panic
        }
    }
}

fn fail(e: Error) -> FcmtStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn invalid(msg: &str) -> FcmtStatus {
    set_error(msg);
    FcmtStatus::NullOrInvalidArgument
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, FcmtStatus> {
    if p.is_null() {
        return Err(invalid(&format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(&format!("{name} is not valid UTF-8")))
}

unsafe fn presentation<'a>(p: *const FcmtPresentation) -> Result<&'a MonoidPresentation, FcmtStatus> {
    p.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| invalid("presentation handle is null"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), FcmtStatus> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    let c = CString::new(s).map_err(|_| invalid("result contains a NUL byte"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_handle(out: *mut *mut FcmtPresentation, p: MonoidPresentation) -> Result<(), FcmtStatus> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    *out = Box::into_raw(Box::new(FcmtPresentation { inner: p }));
    Ok(())
}

/// The message of the last failed call on this thread, or null. The pointer
/// stays valid until the next `fcmt_` call on the same thread.
#[no_mangle]
pub extern "C" fn fcmt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fcmt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn fcmt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a presentation from the text format `1 -1 0; 0 1 -1` with
/// `free_rank` extra free coordinates. `constrained` gives the column count
/// when `equations` is empty and is ignored otherwise.
///
/// # Safety
/// `equations` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_presentation_parse(
    equations: *const c_char,
    constrained: usize,
    free_rank: usize,
    out: *mut *mut FcmtPresentation,
) -> FcmtStatus {
    guard(|| {
        let text = str_arg(equations, "equations")?;
        let m = IntMatrix::parse(text, constrained).map_err(fail)?;
        let p = MonoidPresentation::new(m, free_rank).map_err(fail)?;
        write_handle(out, p)
    })
}

/// Builds a presentation from `{"equations": [[...]], "free_rank": u}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_presentation_from_json(
    json: *const c_char,
    out: *mut *mut FcmtPresentation,
) -> FcmtStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let p = MonoidPresentation::from_json(text).map_err(fail)?;
        write_handle(out, p)
    })
}

/// The monoid of MCM modules of a catalog ring such as `D6` with `m`
/// identified primes. `glue_case` is 1 or 2 when three primes carry one
/// identification and 0 otherwise.
///
/// # Safety
/// `ring` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_presentation_from_ring(
    ring: *const c_char,
    m: usize,
    glue_case: u8,
    out: *mut *mut FcmtPresentation,
) -> FcmtStatus {
    guard(|| {
        let ring: RingType = str_arg(ring, "ring")?.parse().map_err(fail)?;
        let case = (glue_case != 0).then_some(glue_case);
        let glue = GlueSpec::from_m(ring.num_primes(), m, case).map_err(fail)?;
        let c = monoid_presentation(ring, &glue).map_err(fail)?;
        write_handle(out, c.presentation)
    })
}

/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn fcmt_presentation_free(p: *mut FcmtPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Ambient dimension `t + u`, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_presentation_dim(p: *const FcmtPresentation) -> usize {
    p.as_ref().map_or(0, |h| h.inner.dim())
}

/// The atoms as a JSON array of arrays, in canonical order.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_hilbert_basis_json(
    p: *const FcmtPresentation,
    out: *mut *mut c_char,
) -> FcmtStatus {
    guard(|| {
        let p = presentation(p)?;
        let atoms = hilbert_basis(p);
        write_string(out, serde_json::to_string(&atoms).expect("plain data"))
    })
}

/// The class group with its justification flags as JSON. When the
/// hypotheses behind the computation fail the JSON is still written and the
/// status is `VerificationFailed`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_class_group_json(
    p: *const FcmtPresentation,
    out: *mut *mut c_char,
) -> FcmtStatus {
    guard(|| {
        let p = presentation(p)?;
        let cg = class_group(p, true).map_err(fail)?;
        let value = serde_json::json!({
            "class_group": cg.group.to_string(),
            "invariants": cg.group,
            "justification": cg.justification,
            "zbasis": cg.zbasis,
            "divisor_theory": cg.divisor_theory,
        });
        write_string(out, value.to_string())?;
        if cg.justification == fcmt::lattice::Justification::Unjustified {
            set_error("class group hypotheses not satisfied");
            return Err(FcmtStatus::VerificationFailed);
        }
        Ok(())
    })
}

/// Elasticity as a string `p/q` (or an integer).
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_elasticity(p: *const FcmtPresentation, out: *mut *mut c_char) -> FcmtStatus {
    guard(|| {
        let p = presentation(p)?;
        write_string(out, fcmt::json::rational_string(&elasticity_monoid(p)))
    })
}

/// Writes whether the monoid is factorial and half-factorial.
///
/// # Safety
/// `p` must be a live handle; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fcmt_factoriality(
    p: *const FcmtPresentation,
    factorial: *mut bool,
    half_factorial: *mut bool,
) -> FcmtStatus {
    guard(|| {
        let p = presentation(p)?;
        if factorial.is_null() || half_factorial.is_null() {
            return Err(invalid("output pointer is null"));
        }
        *factorial = is_factorial(p);
        *half_factorial = num_traits::One::is_one(&elasticity_monoid(p));
        Ok(())
    })
}

/// The set of lengths of `element` (of length `len`, which must equal the
/// ambient dimension) as a sorted JSON array.
///
/// # Safety
/// `p` must be a live handle, `element` must point to `len` readable values
/// and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fcmt_length_set_json(
    p: *const FcmtPresentation,
    element: *const u64,
    len: usize,
    out: *mut *mut c_char,
) -> FcmtStatus {
    guard(|| {
        let p = presentation(p)?;
        if element.is_null() {
            return Err(invalid("element is null"));
        }
        let v = std::slice::from_raw_parts(element, len);
        if len != p.dim() {
            return Err(fail(Error::Input(format!("element has {len} coordinates, expected {}", p.dim()))));
        }
        let set = length_set(p, v).map_err(fail)?;
        write_string(out, serde_json::to_string(&set).expect("plain data"))
    })
}

/// Runs one command-line invocation, for example
/// `{"ring", "D6", "--m", "2"}`, and writes its JSON report. `exit_code`
/// receives the command's exit code. A report with a failed check returns
/// `VerificationFailed`; invalid arguments return `InputError` with the
/// usage text as the last error.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `out` and `exit_code`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn fcmt_run(
    argv: *const *const c_char,
    argc: usize,
    out: *mut *mut c_char,
    exit_code: *mut i32,
) -> FcmtStatus {
    guard(|| {
        if exit_code.is_null() || (argv.is_null() && argc > 0) {
            return Err(invalid("null argument"));
        }
        let mut args = vec!["fcmt".to_string()];
        for i in 0..argc {
            args.push(str_arg(*argv.add(i), "argument")?.to_string());
        }
        let outcome = fcmt::cli::run(args);
        *exit_code = outcome.code;
        match outcome.code {
            fcmt::cli::EXIT_OK => write_string(out, outcome.stdout.trim_end().to_string()),
            fcmt::cli::EXIT_VERIFICATION_FAILED if !outcome.stdout.is_empty() => {
                write_string(out, outcome.stdout.trim_end().to_string())?;
                set_error("a verification check failed");
                Err(FcmtStatus::VerificationFailed)
            }
            _ => {
                set_error(outcome.stderr.trim_end());
                Err(FcmtStatus::InputError)
            }
        }
    })
}
