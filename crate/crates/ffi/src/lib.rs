//! C interface to the `capelli` crate.
//!
//! Elements and polynomials are opaque heap handles owned by the caller and
//! released with the matching `*_free` function. Every call returns a
//! [`CapStatus`]; on failure, [`cap_last_error`] describes the problem.
//! Strings returned through out-parameters are released with
//! [`cap_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use capelli::bitableaux::{capelli_bitableau_of_kind, BiTableau, BitabKind, YoungTableau};
use capelli::center::{self, CenterError};
use capelli::suite::{run_suite, run_suites, Suite, SuiteConfig, SuiteError};
use capelli::uea::is_central;
use capelli::{Rational, SymPolynomial, UeaElement};

/// An element of U(gl(n)).
pub struct CapElement(UeaElement);

/// A polynomial in x1, x2, ….
pub struct CapSymPoly(SymPolynomial);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ParseError = 4,
    InternalError = 5,
    Panic = 6,
}

/// Determinantal or permanental Capelli bitableau.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapBitabKind {
    Det = 0,
    Per = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("interior nul removed"));
}

struct Fail(CapStatus, String);

impl Fail {
    fn arg(e: impl ToString) -> Self {
        Fail(CapStatus::InvalidArgument, e.to_string())
    }
}

impl From<SuiteError> for Fail {
    fn from(e: SuiteError) -> Self {
        let status = match e {
            SuiteError::Internal(_) => CapStatus::InternalError,
            _ => CapStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

impl From<CenterError> for Fail {
    fn from(e: CenterError) -> Self {
        Fail::arg(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CapStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            CapStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CapStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(CapStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(CapStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(CapStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(CapStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(CapStatus::InternalError, "string contains nul".into()))?;
    put(out, c.into_raw())
}

unsafe fn put_element(out: *mut *mut CapElement, u: UeaElement) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(CapElement(u))))
}

/// Message describing the last failure on this thread. Valid until the next
/// call into this library on the same thread; never null.
#[no_mangle]
pub extern "C" fn cap_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Constructs a catalog element of U(gl(n)).
///
/// `key` is one of `Hk` (index k), `K`, `C` (index p), `Ht` (value p),
/// `Cs` (coefficient h) or `P` (index r).
///
/// # Safety
/// `key` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_compute(key: *const c_char, n: u32, index: u32, out: *mut *mut CapElement) -> CapStatus {
    guard(|| {
        let u = match str_arg(key, "key")? {
            "Hk" => center::capelli_generator(n, index)?,
            "K" => center::deruyts(n, index)?,
            "C" => center::c_n(n, index)?,
            "Ht" => center::h_n_value(n, &Rational::from_int(index as i64)),
            "Cs" => center::c_coefficient(n, index)?,
            "P" => center::permanental_generator(n, index)?,
            other => return Err(Fail::arg(format!("unknown key {other:?}"))),
        };
        put_element(out, u)
    })
}

/// Capelli bitableau of two tableaux given as JSON arrays of rows.
///
/// # Safety
/// `s_json`, `t_json` must be valid C strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_bitableau(
    kind: CapBitabKind,
    s_json: *const c_char,
    t_json: *const c_char,
    n: u32,
    out: *mut *mut CapElement,
) -> CapStatus {
    guard(|| {
        let parse = |p, what| -> Result<YoungTableau, Fail> {
            YoungTableau::from_json(str_arg(p, what)?).map_err(|e| Fail(CapStatus::ParseError, e.to_string()))
        };
        let bt = BiTableau::new(parse(s_json, "s_json")?, parse(t_json, "t_json")?).map_err(Fail::arg)?;
        let kind = match kind {
            CapBitabKind::Det => BitabKind::Det,
            CapBitabKind::Per => BitabKind::Per,
        };
        put_element(out, capelli_bitableau_of_kind(&bt, n, kind).map_err(Fail::arg)?)
    })
}

/// Parses the canonical text form, e.g. `-e[2,1]e[1,2] + e[2,2]`.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_element_parse(text: *const c_char, out: *mut *mut CapElement) -> CapStatus {
    guard(|| {
        let u: UeaElement =
            str_arg(text, "text")?.parse().map_err(|e: capelli::uea::UeaError| Fail(CapStatus::ParseError, e.to_string()))?;
        put_element(out, u)
    })
}

/// Parses the JSON form produced by [`cap_element_to_json`].
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_element_from_json(json: *const c_char, out: *mut *mut CapElement) -> CapStatus {
    guard(|| {
        let parsed = serde_json::from_str(str_arg(json, "json")?).map_err(|e| Fail(CapStatus::ParseError, e.to_string()))?;
        put_element(out, UeaElement::from_json(&parsed).map_err(|e| Fail(CapStatus::ParseError, e.to_string()))?)
    })
}

/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_element_to_text(e: *const CapElement, out: *mut *mut c_char) -> CapStatus {
    guard(|| put_string(out, ref_arg(e, "element")?.0.to_string()))
}

/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_element_to_json(e: *const CapElement, out: *mut *mut c_char) -> CapStatus {
    guard(|| {
        let json = serde_json::to_string(&ref_arg(e, "element")?.0.to_json())
            .map_err(|e| Fail(CapStatus::InternalError, e.to_string()))?;
        put_string(out, json)
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_element_add(a: *const CapElement, b: *const CapElement, out: *mut *mut CapElement) -> CapStatus {
    guard(|| put_element(out, ref_arg(a, "a")?.0.add(&ref_arg(b, "b")?.0)))
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_element_mul(a: *const CapElement, b: *const CapElement, out: *mut *mut CapElement) -> CapStatus {
    guard(|| put_element(out, ref_arg(a, "a")?.0.mul(&ref_arg(b, "b")?.0)))
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_element_equal(a: *const CapElement, b: *const CapElement, out: *mut bool) -> CapStatus {
    guard(|| put(out, ref_arg(a, "a")?.0 == ref_arg(b, "b")?.0))
}

/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_element_is_central(e: *const CapElement, n: u32, out: *mut bool) -> CapStatus {
    guard(|| put(out, is_central(&ref_arg(e, "element")?.0, n as usize).map_err(Fail::arg)?))
}

/// Harish-Chandra image of a central element of U(gl(n)).
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_harish_chandra(e: *const CapElement, n: u32, out: *mut *mut CapSymPoly) -> CapStatus {
    guard(|| {
        let f = center::harish_chandra(&ref_arg(e, "element")?.0, n)?;
        put(out, Box::into_raw(Box::new(CapSymPoly(f))))
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cap_sympoly_to_text(p: *const CapSymPoly, out: *mut *mut c_char) -> CapStatus {
    guard(|| put_string(out, ref_arg(p, "polynomial")?.0.to_string()))
}

/// Runs a verification suite (or `all`) with default bounds and writes the
/// JSON report, with elapsed times zeroed, to `report_json`.
///
/// # Safety
/// `name` must be a valid C string; `report_json` and `pass` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cap_run_suite(
    name: *const c_char,
    n: u32,
    seed: u64,
    report_json: *mut *mut c_char,
    pass: *mut bool,
) -> CapStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let cfg = SuiteConfig { n, seed, timing: false, ..SuiteConfig::default() };
        let report = if name.eq_ignore_ascii_case("all") {
            run_suites("all", &Suite::ALL, &cfg)?
        } else {
            run_suite(name.parse()?, &cfg)?
        };
        if pass.is_null() {
            return Err(Fail(CapStatus::NullPointer, "pass is null".into()));
        }
        put_string(report_json, report.to_json())?;
        put(pass, report.pass)
    })
}

/// # Safety
/// `e` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cap_element_free(e: *mut CapElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cap_sympoly_free(p: *mut CapSymPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

