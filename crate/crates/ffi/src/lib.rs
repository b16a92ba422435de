//! C ABI for `orientcount`.
//!
//! Graphs and families are opaque heap handles released with
//! [`oc_graph_free`] and [`oc_family_free`]. Every fallible call returns an
//! [`OcStatus`]; on failure [`oc_last_error`] describes the error for the
//! calling thread. Strings handed out by the library are NUL-terminated and
//! must be released with [`oc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use orientcount::canon::canonical_graph;
use orientcount::count::{count_backtrack, Method};
use orientcount::graph::{complete_multipartite, turan_edges, turan_graph};
use orientcount::search::{search, SearchMode, SearchOptions};
use orientcount::tournament::count_sc_orientations;
use orientcount::{graph6, Error, ForbiddenFamily, PartitionSpec, SmallGraph};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Budget = 5,
    Overflow = 6,
    Io = 7,
    Panic = 8,
}

/// A simple graph on at most 16 vertices.
pub struct OcGraph(SmallGraph);

/// A forbidden tournament family.
pub struct OcFamily(ForbiddenFamily);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).expect("NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

struct Failure(OcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Graph6 { .. } | Error::OrientationText(_) | Error::UnknownFamily(_) | Error::Partition(_) => OcStatus::Parse,
            Error::Budget { .. } => OcStatus::Budget,
            Error::Io(_) | Error::Checkpoint(_) => OcStatus::Io,
            _ => OcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: OcStatus, message: &str) -> Failure {
    Failure(status, message.to_owned())
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> OcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => OcStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            OcStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(OcStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(OcStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| fail(OcStatus::NullPointer, "null handle"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(OcStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| fail(OcStatus::InvalidArgument, "string contains NUL"))?;
    put(out, c.into_raw())
}

unsafe fn put_graph(out: *mut *mut OcGraph, g: SmallGraph) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(OcGraph(g))))
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn oc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static.
#[no_mangle]
pub extern "C" fn oc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn oc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph6 string.
///
/// # Safety
/// `code` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_from_graph6(code: *const c_char, out: *mut *mut OcGraph) -> OcStatus {
    guard(|| put_graph(out, graph6::decode(text(code)?)?))
}

/// Complete multipartite graph with the given part sizes.
///
/// # Safety
/// `sizes` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_from_parts(sizes: *const usize, len: usize, out: *mut *mut OcGraph) -> OcStatus {
    guard(|| {
        if sizes.is_null() && len > 0 {
            return Err(fail(OcStatus::NullPointer, "null part sizes"));
        }
        let parts = if len == 0 { &[][..] } else { std::slice::from_raw_parts(sizes, len) };
        put_graph(out, complete_multipartite(&PartitionSpec::new(parts.to_vec())?)?)
    })
}

/// Balanced complete `r`-partite graph on `n` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_turan(n: usize, r: usize, out: *mut *mut OcGraph) -> OcStatus {
    guard(|| put_graph(out, turan_graph(n, r)?))
}

/// Canonical relabeling of `g` as a new handle.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_canonical(g: *const OcGraph, out: *mut *mut OcGraph) -> OcStatus {
    guard(|| put_graph(out, canonical_graph(&get(g)?.0)))
}

/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_free(g: *mut OcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_order(g: *const OcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_edge_count(g: *const OcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_to_graph6(g: *const OcGraph, out: *mut *mut c_char) -> OcStatus {
    guard(|| put_string(out, graph6::encode(&get(g)?.0)))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_is_complete_multipartite(g: *const OcGraph, out: *mut bool) -> OcStatus {
    guard(|| put(out, get(g)?.0.is_complete_multipartite()))
}

/// Parses a family name: `s<k>`, `r<k>`, `u<k>` or `c3`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_family_parse(name: *const c_char, out: *mut *mut OcFamily) -> OcStatus {
    guard(|| put(out, Box::into_raw(Box::new(OcFamily(ForbiddenFamily::parse(text(name)?)?)))))
}

/// # Safety
/// `f` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn oc_family_free(f: *mut OcFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of family-free orientations as a decimal string.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_count(g: *const OcGraph, f: *const OcFamily, out: *mut *mut c_char) -> OcStatus {
    guard(|| put_string(out, count_backtrack(&get(g)?.0, &get(f)?.0)?.to_string()))
}

/// Same as [`oc_count`] with a method name: `naive`, `backtrack` or
/// `independent-set` (largest independent set).
///
/// # Safety
/// Handles and `method` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_count_with_method(
    g: *const OcGraph,
    f: *const OcFamily,
    method: *const c_char,
    out: *mut *mut c_char,
) -> OcStatus {
    guard(|| {
        let report = orientcount::count::count(&get(g)?.0, &get(f)?.0, Method::parse(text(method)?)?, None)?;
        put_string(out, report.count.to_string())
    })
}

/// Number of family-free orientations; `Overflow` if it exceeds 64 bits.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_count_u64(g: *const OcGraph, f: *const OcFamily, out: *mut u64) -> OcStatus {
    guard(|| {
        let d = count_backtrack(&get(g)?.0, &get(f)?.0)?;
        let value = u64::try_from(&d).map_err(|_| Failure(OcStatus::Overflow, format!("{d} does not fit in 64 bits")))?;
        put(out, value)
    })
}

/// Edge count of the Turán graph `T_r(n)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_turan_edges(n: u64, r: u64, out: *mut u64) -> OcStatus {
    guard(|| put(out, turan_edges(n, r)?))
}

/// Strongly connected tournaments on `k` labeled vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_sc_count(k: usize, out: *mut u64) -> OcStatus {
    guard(|| put(out, count_sc_orientations(k)?))
}

/// Extremal search over all graphs (`all`) or complete multipartite graphs
/// (`multipartite`) on `n` vertices; the report is a JSON object.
///
/// # Safety
/// `f` must be live, `mode` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn oc_search_json(n: usize, f: *const OcFamily, mode: *const c_char, out: *mut *mut c_char) -> OcStatus {
    guard(|| {
        let report = search(n, &get(f)?.0, SearchMode::parse(text(mode)?)?, &SearchOptions::default())?;
        let json = serde_json::to_string(&report).map_err(|e| fail(OcStatus::Io, &e.to_string()))?;
        put_string(out, json)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn error_message_is_thread_local() {
        let mut g = ptr::null_mut();
        let code = CString::new("B").unwrap();
        assert_eq!(unsafe { oc_graph_from_graph6(code.as_ptr(), &mut g) }, OcStatus::Parse);
        let here = unsafe { CStr::from_ptr(oc_last_error()) }.to_str().unwrap().to_owned();
        assert!(here.contains("graph6"));
        let there = std::thread::spawn(|| unsafe { CStr::from_ptr(oc_last_error()) }.to_str().unwrap().to_owned())
            .join()
            .unwrap();
        assert!(there.is_empty());
    }

    #[test]
    fn null_arguments_are_reported() {
        let mut out = 0u64;
        assert_eq!(unsafe { oc_count_u64(ptr::null(), ptr::null(), &mut out) }, OcStatus::NullPointer);
        assert_eq!(unsafe { oc_graph_from_graph6(ptr::null(), ptr::null_mut()) }, OcStatus::NullPointer);
        assert_eq!(unsafe { oc_graph_order(ptr::null()) }, 0);
    }
}
