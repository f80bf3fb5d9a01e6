//! C ABI over the semcensus engine.
//!
//! Every function returns a `SemStatus`; results come back through out
//! pointers. Maps and census results are opaque handles owned by the caller
//! and released with the matching `*_free`. Strings returned through
//! `char **` must be released with `semcensus_string_free`. After a failure,
//! `semcensus_last_error` describes it until the next call on the same
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use semcensus::enumerate::{enumerate_with, EnumOptions};
use semcensus::error::EnumError;
use semcensus::io::{map_to_json, parse_map, MapFile};
use semcensus::{
    are_isomorphic, automorphism_group, euler_characteristic, identify_group, is_sem, orientability, validate,
    FaceSequence, Orientability, PolyhedralMap,
};

/// Result code of every exported function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Input text could not be parsed.
    Parse = 3,
    /// Parsed, but not a valid polyhedral map of the declared type.
    InvalidMap = 4,
    BudgetExhausted = 5,
    OutOfRange = 6,
    /// An internal panic was caught at the boundary.
    Internal = 7,
}

/// A validated polyhedral map.
pub struct SemMap {
    inner: MapFile,
}

/// The maps found by one enumeration, one per isomorphism class.
pub struct SemCensus {
    maps: Vec<PolyhedralMap>,
    face_type: FaceSequence,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: SemStatus, msg: impl Into<String>) -> SemStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into `SemStatus::Internal`.
fn guard(f: impl FnOnce() -> SemStatus) -> SemStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SemStatus::Internal, "internal error"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SemStatus> {
    if p.is_null() {
        return Err(fail(SemStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SemStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the most recent failure on this thread, or NULL. The
/// pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn semcensus_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn semcensus_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a JSON map file (`faces`, `vertices`, optional
/// `name` and `type`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_map_from_json(json: *const c_char, out: *mut *mut SemMap) -> SemStatus {
    guard(|| {
        if out.is_null() {
            return fail(SemStatus::NullPointer, "null out pointer");
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let mf = match parse_map(text, "<ffi>") {
            Ok(mf) => mf,
            Err(e) => return fail(SemStatus::Parse, e.to_string()),
        };
        let report = validate(&mf.map);
        if !report.is_ok() {
            return fail(SemStatus::InvalidMap, report.to_string());
        }
        if let Some(t) = &mf.face_type {
            if !is_sem(&mf.map, t) {
                return fail(SemStatus::InvalidMap, format!("not every vertex has face sequence {t}"));
            }
        }
        *out = Box::into_raw(Box::new(SemMap { inner: mf }));
        SemStatus::Ok
    })
}

/// # Safety
/// `map` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn semcensus_map_free(map: *mut SemMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

unsafe fn map_ref<'a>(map: *const SemMap) -> Result<&'a SemMap, SemStatus> {
    map.as_ref().ok_or_else(|| fail(SemStatus::NullPointer, "null map handle"))
}

macro_rules! with_map {
    ($map:expr, $out:expr, |$m:ident| $body:expr) => {
        guard(|| {
            if $out.is_null() {
                return fail(SemStatus::NullPointer, "null out pointer");
            }
            let $m = match map_ref($map) {
                Ok(m) => &m.inner.map,
                Err(s) => return s,
            };
            *$out = $body;
            SemStatus::Ok
        })
    };
}

/// # Safety
/// `map` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_map_vertex_count(map: *const SemMap, out: *mut usize) -> SemStatus {
    with_map!(map, out, |m| m.n_vertices)
}

/// # Safety
/// `map` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_map_euler_characteristic(map: *const SemMap, out: *mut i64) -> SemStatus {
    with_map!(map, out, |m| euler_characteristic(m))
}

/// # Safety
/// `map` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_map_is_orientable(map: *const SemMap, out: *mut bool) -> SemStatus {
    with_map!(map, out, |m| orientability(m) == Orientability::Orientable)
}

/// Order of the automorphism group.
///
/// # Safety
/// `map` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_map_aut_order(map: *const SemMap, out: *mut u64) -> SemStatus {
    with_map!(map, out, |m| automorphism_group(m).order_u64())
}

/// Name of the automorphism group, e.g. `"Z2xZ2"` or `"D6(order 12)"`.
///
/// # Safety
/// `map` must be a live handle and `out` writable. Free the result with
/// `semcensus_string_free`.
#[no_mangle]
pub unsafe extern "C" fn semcensus_map_group_name(map: *const SemMap, out: *mut *mut c_char) -> SemStatus {
    guard(|| {
        if out.is_null() {
            return fail(SemStatus::NullPointer, "null out pointer");
        }
        let m = match map_ref(map) {
            Ok(m) => &m.inner.map,
            Err(s) => return s,
        };
        match identify_group(&automorphism_group(m)) {
            Ok(id) => {
                *out = to_c(id.to_string());
                SemStatus::Ok
            }
            Err(e) => fail(SemStatus::OutOfRange, e.to_string()),
        }
    })
}

/// The map as JSON in the file format.
///
/// # Safety
/// `map` must be a live handle and `out` writable. Free the result with
/// `semcensus_string_free`.
#[no_mangle]
pub unsafe extern "C" fn semcensus_map_to_json(map: *const SemMap, out: *mut *mut c_char) -> SemStatus {
    guard(|| {
        if out.is_null() {
            return fail(SemStatus::NullPointer, "null out pointer");
        }
        match map_ref(map) {
            Ok(m) => {
                *out = to_c(map_to_json(&m.inner));
                SemStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Sets `*out` to whether the maps are isomorphic. If they are and
/// `witness` is not NULL, `*witness` receives the vertex bijection in cycle
/// notation (free with `semcensus_string_free`); otherwise it is set to
/// NULL.
///
/// # Safety
/// Both handles must be live; `out` writable; `witness` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_maps_isomorphic(
    a: *const SemMap,
    b: *const SemMap,
    out: *mut bool,
    witness: *mut *mut c_char,
) -> SemStatus {
    guard(|| {
        if out.is_null() {
            return fail(SemStatus::NullPointer, "null out pointer");
        }
        let (ma, mb) = match (map_ref(a), map_ref(b)) {
            (Ok(x), Ok(y)) => (&x.inner.map, &y.inner.map),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let w = are_isomorphic(ma, mb);
        *out = w.is_some();
        if !witness.is_null() {
            *witness = w.map_or(ptr::null_mut(), |p| to_c(p.to_string()));
        }
        SemStatus::Ok
    })
}

/// Enumerates all maps of `face_type` (e.g. `"3,4,4,4,4"`) on `vertices`
/// vertices. `budget` caps search nodes; 0 means unlimited. `jobs` is the
/// worker count; 0 means all cores.
///
/// # Safety
/// `face_type` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_enumerate(
    face_type: *const c_char,
    vertices: usize,
    budget: u64,
    jobs: usize,
    out: *mut *mut SemCensus,
) -> SemStatus {
    guard(|| {
        if out.is_null() {
            return fail(SemStatus::NullPointer, "null out pointer");
        }
        let text = match read_str(face_type) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let t: FaceSequence = match text.parse() {
            Ok(t) => t,
            Err(e) => return fail(SemStatus::Parse, format!("{e}")),
        };
        let opts = EnumOptions { budget: (budget > 0).then_some(budget), jobs, ..EnumOptions::default() };
        match enumerate_with(&t, vertices, &opts) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(SemCensus { maps: r.representatives, face_type: t }));
                SemStatus::Ok
            }
            Err(e @ EnumError::BudgetExhausted(_)) => fail(SemStatus::BudgetExhausted, e.to_string()),
        }
    })
}

/// # Safety
/// `census` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_census_len(census: *const SemCensus, out: *mut usize) -> SemStatus {
    guard(|| {
        if out.is_null() {
            return fail(SemStatus::NullPointer, "null out pointer");
        }
        match census.as_ref() {
            Some(c) => {
                *out = c.maps.len();
                SemStatus::Ok
            }
            None => fail(SemStatus::NullPointer, "null census handle"),
        }
    })
}

/// A new map handle for class `index`; free it with `semcensus_map_free`.
///
/// # Safety
/// `census` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn semcensus_census_map(census: *const SemCensus, index: usize, out: *mut *mut SemMap) -> SemStatus {
    guard(|| {
        if out.is_null() {
            return fail(SemStatus::NullPointer, "null out pointer");
        }
        let Some(c) = census.as_ref() else { return fail(SemStatus::NullPointer, "null census handle") };
        let Some(m) = c.maps.get(index) else {
            return fail(SemStatus::OutOfRange, format!("index {index} out of range for {} classes", c.maps.len()));
        };
        let inner = MapFile { name: None, face_type: Some(c.face_type.clone()), map: m.clone() };
        *out = Box::into_raw(Box::new(SemMap { inner }));
        SemStatus::Ok
    })
}

/// # Safety
/// `census` must come from this library and not be freed twice. NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn semcensus_census_free(census: *mut SemCensus) {
    if !census.is_null() {
        drop(Box::from_raw(census));
    }
}
