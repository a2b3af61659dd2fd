//! C ABI over the `nilpair` library.
//!
//! Conventions:
//! - Every fallible call returns an [`NpStatus`]; results go through out-pointers.
//! - Strings returned to the caller are NUL-terminated UTF-8 and must be released with
//!   [`np_string_free`]. Pair handles must be released with [`np_pair_free`].
//! - After a non-OK status, [`np_last_error`] returns the message for the calling thread.
//! - Panics never cross the boundary; they surface as `NP_STATUS_PANIC`.

use nilpair::multiplicity::PositiveRule;
use nilpair::nilpairs::{
    biexponents, centralizer, classify, parse_pair, Ambient, NilPair, SemisimplePair,
};
use nilpair::rectangular::{decompose_g, is_rectangular_pnpair, EmbeddingSpec};
use nilpair::{suites, Error};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result code of every fallible call. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NpStatus {
    Ok = 0,
    Parse = 1,
    Shape = 2,
    Classification = 3,
    Stability = 4,
    Hypothesis = 5,
    Regularity = 6,
    Bound = 7,
    Resource = 8,
    Form = 9,
    Evenness = 10,
    Symmetry = 11,
    Precondition = 12,
    Internal = 13,
    NullPointer = 20,
    InvalidUtf8 = 21,
    UnknownSuite = 22,
    Panic = 30,
}

impl From<&Error> for NpStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => NpStatus::Parse,
            Error::Shape(_) => NpStatus::Shape,
            Error::Classification(_) => NpStatus::Classification,
            Error::Stability(_) => NpStatus::Stability,
            Error::Hypothesis(_) => NpStatus::Hypothesis,
            Error::Regularity(_) => NpStatus::Regularity,
            Error::Bound { .. } => NpStatus::Bound,
            Error::Resource(_) => NpStatus::Resource,
            Error::Form(_) => NpStatus::Form,
            Error::Evenness(_) => NpStatus::Evenness,
            Error::Symmetry(_) => NpStatus::Symmetry,
            Error::Precondition(_) => NpStatus::Precondition,
            Error::Internal(_) => NpStatus::Internal,
        }
    }
}

/// Opaque handle to a nilpotent pair built from a diagram, together with its grading pair.
pub struct NpPair {
    pair: NilPair,
    h: SemisimplePair,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    // Interior NULs cannot be represented; replace them so the message survives.
    let c = CString::new(msg.replace('\0', "?")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(NpStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(NpStatus::from(&e), e.to_string())
    }
}

/// Runs `f`, recording its error message and mapping panics to `NpStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> NpStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NpStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            NpStatus::Panic
        }
    }
}

/// # Safety
/// `s` must be null or point to a NUL-terminated string valid for the call.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(NpStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(NpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` must be null or valid for one pointer write.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(NpStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Fail(NpStatus::Internal, "result contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// # Safety
/// `p` must be null or a live handle from [`np_pair_new`].
unsafe fn pair_ref<'a>(p: *const NpPair) -> Result<&'a NpPair, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(NpStatus::NullPointer, "pair handle is null".into()))
}

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> Result<String, Fail> {
    serde_json::to_string(v).map_err(|e| Fail(NpStatus::Internal, e.to_string()))
}

/// Library version as a static NUL-terminated string. Do not free.
#[no_mangle]
pub extern "C" fn np_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last non-OK status on this thread, or null. Valid until the next call on
/// this thread. Do not free.
#[no_mangle]
pub extern "C" fn np_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn np_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the pair for a diagram spec such as `"3,2,1"`, `"3,2/1"` or `"2+1"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn np_pair_new(spec: *const c_char, out: *mut *mut NpPair) -> NpStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail(NpStatus::NullPointer, "output pointer is null".into()));
        }
        let spec = read_str(spec, "spec")?;
        let (pair, h) = parse_pair(spec)?;
        *out = Box::into_raw(Box::new(NpPair { pair, h }));
        Ok(())
    })
}

/// Releases a pair handle. Null is a no-op.
///
/// # Safety
/// `p` must be null or a handle from [`np_pair_new`] that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn np_pair_free(p: *mut NpPair) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Matrix size n of the pair (the number of boxes).
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn np_pair_size(p: *const NpPair, out: *mut usize) -> NpStatus {
    guard(|| {
        let p = pair_ref(p)?;
        if out.is_null() {
            return Err(Fail(NpStatus::NullPointer, "output pointer is null".into()));
        }
        *out = p.pair.n;
        Ok(())
    })
}

/// Dimension of the centralizer of the pair in sl_n.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn np_pair_centralizer_dim(p: *const NpPair, out: *mut usize) -> NpStatus {
    guard(|| {
        let p = pair_ref(p)?;
        if out.is_null() {
            return Err(Fail(NpStatus::NullPointer, "output pointer is null".into()));
        }
        *out = centralizer(&p.pair, Ambient::Sl).dim();
        Ok(())
    })
}

/// The pair (e₁, e₂, h₁, h₂) as JSON.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn np_pair_json(p: *const NpPair, out: *mut *mut c_char) -> NpStatus {
    guard(|| {
        let p = pair_ref(p)?;
        write_string(out, p.pair.to_json(Some(&p.h)).to_string())
    })
}

/// Classification (principal, distinguished, ...) as JSON.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn np_pair_classify_json(
    p: *const NpPair,
    out: *mut *mut c_char,
) -> NpStatus {
    guard(|| {
        let p = pair_ref(p)?;
        write_string(out, to_json(&classify(&p.pair, Some(&p.h)))?)
    })
}

/// Bi-exponents as a JSON list of [p, q]. Fails with `NP_STATUS_CLASSIFICATION` unless the
/// pair is principal.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn np_pair_biexponents_json(
    p: *const NpPair,
    out: *mut *mut c_char,
) -> NpStatus {
    guard(|| {
        let p = pair_ref(p)?;
        write_string(out, to_json(&biexponents(&p.pair, &p.h)?)?)
    })
}

/// Rectangular verdict and sl₂×sl₂ decomposition of g for a spec such as `"so:3x1,1x3"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn np_rect_json(spec: *const c_char, out: *mut *mut c_char) -> NpStatus {
    guard(|| {
        let spec: EmbeddingSpec = read_str(spec, "spec")?.parse()?;
        let verdict = is_rectangular_pnpair(&spec)?;
        let decomposition = decompose_g(&spec)?;
        let v = serde_json::json!({ "verdict": verdict, "decomposition": decomposition });
        write_string(out, v.to_string())
    })
}

/// Runs a verification suite and returns its report as pretty JSON.
///
/// `suite` is one of structure, skew, cohomology, multiplicity, harmonics, rectangular,
/// strictness. `bound` is the diagram size (or the dimension bound for rectangular); it is
/// ignored by multiplicity and strictness. `passed` (optional) receives 1 when every counted
/// check passed.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `out` must be valid for one pointer write;
/// `passed` must be null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn np_verify_json(
    suite: *const c_char,
    bound: usize,
    out: *mut *mut c_char,
    passed: *mut i32,
) -> NpStatus {
    guard(|| {
        let name = read_str(suite, "suite")?;
        let (json, ok) = match name {
            "strictness" => {
                let r = suites::strictness_witness()?;
                (to_json(&r)?, r.strict)
            }
            _ => {
                let r = match name {
                    "structure" => suites::structure_suite(bound)?,
                    "skew" => suites::skew_suite(bound)?,
                    "cohomology" => suites::cohomology_suite(bound)?,
                    "multiplicity" => suites::multiplicity_suite(PositiveRule::Standard)?,
                    "harmonics" => suites::harmonics_suite(bound, bound)?,
                    "rectangular" => suites::rectangular_suite(bound)?,
                    other => {
                        return Err(Fail(
                            NpStatus::UnknownSuite,
                            format!("unknown suite {other:?}"),
                        ))
                    }
                };
                (r.to_json(), r.passed)
            }
        };
        write_string(out, json)?;
        if !passed.is_null() {
            *passed = i32::from(ok);
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_codes_are_distinct() {
        let errs = [
            Error::Parse(String::new()),
            Error::Shape(String::new()),
            Error::Classification(String::new()),
            Error::Stability(String::new()),
            Error::Hypothesis(String::new()),
            Error::Regularity(String::new()),
            Error::Bound { needed: 0, have: 0 },
            Error::Resource(String::new()),
            Error::Form(String::new()),
            Error::Evenness(String::new()),
            Error::Symmetry(String::new()),
            Error::Precondition(String::new()),
            Error::Internal(String::new()),
        ];
        let mut codes: Vec<i32> = errs.iter().map(|e| NpStatus::from(e) as i32).collect();
        codes.sort_unstable();
        codes.dedup();
        assert_eq!(codes.len(), errs.len());
        assert!(!codes.contains(&0));
    }

    #[test]
    fn guard_catches_panics() {
        let s = guard(|| panic!("boom"));
        assert_eq!(s, NpStatus::Panic);
        let msg = unsafe { CStr::from_ptr(np_last_error()) }.to_str().unwrap();
        assert!(msg.contains("boom"));
    }
}
