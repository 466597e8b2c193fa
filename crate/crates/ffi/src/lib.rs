//! C interface. Objects are opaque handles released with their `_free`
//! function; strings returned through `char **` are released with
//! `hf_string_free`. Every entry point returns an [`HfStatus`]; on failure
//! `hf_last_error` describes the problem.

use hyperfield::census::{self, parse_height, CensusConfig};
use hyperfield::family::{witness_report, HyperellipticCurve, RecipeId};
use hyperfield::padic::newton_polygon;
use hyperfield::perm::{certify_polynomial, good_primes};
use hyperfield::poly::{discriminant, factor_over_q};
use hyperfield::{Error, ErrorKind, IntPolynomial};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};


/// Result codes. The nonzero codes from 2 to 5 match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HfStatus {
    Ok = 0,
    NullArgument = 1,
    Parse = 2,
    Inadmissible = 3,
    Hypothesis = 4,
    ResourceCap = 5,
    Other = 6,
    Panic = 7,
}

/// Integer polynomial handle.
pub struct HfPoly(IntPolynomial);

/// Hyperelliptic curve handle.
pub struct HfCurve(HyperellipticCurve);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> HfStatus {
    match e.kind() {
        ErrorKind::Parse => HfStatus::Parse,
        ErrorKind::Inadmissible => HfStatus::Inadmissible,
        ErrorKind::Hypothesis => HfStatus::Hypothesis,
        ErrorKind::ResourceCap => HfStatus::ResourceCap,
        ErrorKind::Other => HfStatus::Other,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HfStatus::Ok
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(&format!("null argument: {what}"));
            HfStatus::NullArgument
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            HfStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Lib(Error::Parse(format!("{what} is not UTF-8"))))
}

unsafe fn obj<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    *out = CString::new(s).map_err(|_| Fail::Lib(Error::Io("interior NUL".into())))?.into_raw();
    Ok(())
}

unsafe fn put_json<T: serde::Serialize>(out: *mut *mut c_char, v: &T) -> Result<(), Fail> {
    let s = serde_json::to_string(v).map_err(|e| Fail::Lib(Error::Io(e.to_string())))?;
    put_string(out, s)
}

/// Message for the last failing call on this thread; empty after success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the comma-separated ascending coefficient format, e.g. `"1,1,0,1"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_poly_parse(text: *const c_char, out: *mut *mut HfPoly) -> HfStatus {
    guard(|| {
        let p: IntPolynomial = str_arg(text, "text")?.parse()?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = Box::into_raw(Box::new(HfPoly(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must come from `hf_poly_parse` or be null.
#[no_mangle]
pub unsafe extern "C" fn hf_poly_free(p: *mut HfPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree, or -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hf_poly_degree(p: *const HfPoly) -> i64 {
    p.as_ref().map_or(-1, |p| p.0.degree_i() as i64)
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_poly_to_string(p: *const HfPoly, out: *mut *mut c_char) -> HfStatus {
    guard(|| put_string(out, obj(p, "poly")?.0.to_string()))
}

/// Discriminant as a decimal string.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_discriminant(p: *const HfPoly, out: *mut *mut c_char) -> HfStatus {
    guard(|| put_string(out, discriminant(&obj(p, "poly")?.0).to_string()))
}

/// Factorization over Q as JSON `{"content": ..., "factors": [...]}`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_factor_json(p: *const HfPoly, out: *mut *mut c_char) -> HfStatus {
    guard(|| {
        let f = factor_over_q(&obj(p, "poly")?.0)?;
        let factors: Vec<String> = f.factors.iter().map(|g| g.to_string()).collect();
        put_json(out, &serde_json::json!({ "content": f.content.to_string(), "factors": factors }))
    })
}

/// Newton polygon certificate as JSON.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_newton_polygon_json(p: *const HfPoly, prime: u64, out: *mut *mut c_char) -> HfStatus {
    guard(|| {
        let p = &obj(p, "poly")?.0;
        put_json(out, &newton_polygon(p, prime)?.certificate(p))
    })
}

/// Galois certificate from the first `prime_count` good primes, as JSON.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_certify_json(p: *const HfPoly, prime_count: usize, out: *mut *mut c_char) -> HfStatus {
    guard(|| {
        let p = &obj(p, "poly")?.0;
        put_json(out, &certify_polynomial(p, &good_primes(p, prime_count))?)
    })
}

/// # Safety
/// `f` must be a live handle and `out` writable. The curve copies `f`.
#[no_mangle]
pub unsafe extern "C" fn hf_curve_new(f: *const HfPoly, out: *mut *mut HfCurve) -> HfStatus {
    guard(|| {
        let c = HyperellipticCurve::new(obj(f, "f")?.0.clone())?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = Box::into_raw(Box::new(HfCurve(c)));
        Ok(())
    })
}

/// # Safety
/// `c` must come from `hf_curve_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn hf_curve_free(c: *mut HfCurve) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Genus, or -1 for a null handle.
///
/// # Safety
/// `c` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hf_curve_genus(c: *const HfCurve) -> i64 {
    c.as_ref().map_or(-1, |c| c.0.genus() as i64)
}

/// Witness report for one recipe as JSON; `prime == 0` searches for one.
///
/// # Safety
/// `c` must be a live handle, `recipe` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hf_witness_json(
    c: *const HfCurve,
    n: usize,
    recipe: *const c_char,
    prime: u64,
    seed: u64,
    out: *mut *mut c_char,
) -> HfStatus {
    guard(|| {
        let c = &obj(c, "curve")?.0;
        let r: RecipeId = str_arg(recipe, "recipe")?.parse()?;
        put_json(out, &witness_report(c, n, r, (prime != 0).then_some(prime), seed)?)
    })
}

/// Exponent report as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_exponents_json(g: u64, d: u64, n: u64, out: *mut *mut c_char) -> HfStatus {
    guard(|| put_json(out, &census::exponents(g, d, n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_ev_threshold(g: u64, out: *mut u64) -> HfStatus {
    guard(|| {
        let t = census::ev_threshold_search(g)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = t;
        Ok(())
    })
}

/// Census summary for height `y` (e.g. `"8"` or `"5/2"`) as JSON.
///
/// # Safety
/// `c` must be a live handle, `y` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hf_census_summary_json(
    c: *const HfCurve,
    n: usize,
    y: *const c_char,
    out: *mut *mut c_char,
) -> HfStatus {
    guard(|| {
        let c = &obj(c, "curve")?.0;
        let cfg = CensusConfig::new(parse_height(str_arg(y, "y")?)?);
        put_json(out, &census::run_census(c, n, &cfg)?.summary)
    })
}

