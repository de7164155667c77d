//! C ABI over the `pairframe` canonizer.
//!
//! Graphs and canonization results are opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns a
//! [`PfStatus`]; on failure, `pf_last_error_message` describes the error for
//! the calling thread. Strings returned by the library are freed with
//! `pf_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use pairframe::graphio::{emit_graph6, emit_weighted, parse_graph6, parse_weighted};
use pairframe::{canonical_form, is_isomorphic_with, CanonResult, EdgeVector, Engine, Error, Limits, Scalar};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    SizeLimit = 4,
    DimensionMismatch = 5,
    Utf8 = 6,
    Overflow = 7,
    NotIsomorphic = 8,
    Panic = 99,
}

/// Which search to run in `pf_canonize`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfEngine {
    Pruned = 0,
    Brute = 1,
}

/// An edge-weighted graph.
pub struct PfEdgeVector(EdgeVector);

/// Canonical vector, frame and automorphism group of a graph.
pub struct PfCanonResult(CanonResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(err: &Error) -> PfStatus {
    match err {
        Error::SizeLimit { .. } => PfStatus::SizeLimit,
        Error::DimensionMismatch { .. } => PfStatus::DimensionMismatch,
        Error::Parse { .. } | Error::Graph6(_) | Error::Literal(_) | Error::NotSimple { .. } => PfStatus::Parse,
        _ => PfStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (PfStatus, String)>) -> PfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PfStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PfStatus::Panic
        }
    }
}

fn core(err: Error) -> (PfStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (PfStatus, String) {
    (PfStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, (PfStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, (PfStatus, String)> {
    if text.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(text).to_str().map_err(|e| (PfStatus::Utf8, e.to_string()))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (PfStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn to_i64_pair(w: &Scalar) -> Result<(i64, i64), (PfStatus, String)> {
    match (w.numer().to_i64(), w.denom().to_i64()) {
        (Some(p), Some(q)) => Ok((p, q)),
        _ => Err((PfStatus::Overflow, format!("weight {w} does not fit in 64 bits"))),
    }
}

/// Parses the weighted edge-list text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_parse_weighted(text: *const c_char, out: *mut *mut PfEdgeVector) -> PfStatus {
    guard(|| {
        let x = parse_weighted(read_str(text)?).map_err(core)?;
        write_out(out, Box::into_raw(Box::new(PfEdgeVector(x))), "out")
    })
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_parse_graph6(text: *const c_char, out: *mut *mut PfEdgeVector) -> PfStatus {
    guard(|| {
        let x = parse_graph6(read_str(text)?.trim()).map_err(core)?;
        write_out(out, Box::into_raw(Box::new(PfEdgeVector(x))), "out")
    })
}

/// Builds a graph on `n` vertices from `C(n,2)` weights `nums[s] / dens[s]` in
/// lexicographic pair order. `dens` may be null, meaning all denominators are 1.
///
/// # Safety
/// `nums` (and `dens` if non-null) must point to `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_from_i64(
    n: usize,
    nums: *const i64,
    dens: *const i64,
    len: usize,
    out: *mut *mut PfEdgeVector,
) -> PfStatus {
    guard(|| {
        if nums.is_null() {
            return Err(null("nums"));
        }
        let nums = std::slice::from_raw_parts(nums, len);
        let dens = if dens.is_null() { None } else { Some(std::slice::from_raw_parts(dens, len)) };
        let mut weights = Vec::with_capacity(len);
        for (s, &p) in nums.iter().enumerate() {
            let q = dens.map_or(1, |d| d[s]);
            if q == 0 {
                return Err((PfStatus::InvalidArgument, format!("zero denominator at slot {}", s + 1)));
            }
            weights.push(Scalar::new(BigInt::from(p), BigInt::from(q)));
        }
        let x = EdgeVector::new(n, weights).map_err(core)?;
        write_out(out, Box::into_raw(Box::new(PfEdgeVector(x))), "out")
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `v` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_n(v: *const PfEdgeVector) -> usize {
    v.as_ref().map_or(0, |v| v.0.n())
}

/// Number of edge slots `C(n,2)`, or 0 for a null handle.
///
/// # Safety
/// `v` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_len(v: *const PfEdgeVector) -> usize {
    v.as_ref().map_or(0, |v| v.0.len())
}

/// # Safety
/// `v` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_free(v: *mut PfEdgeVector) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Writes the graph in the weighted edge-list format; free with `pf_string_free`.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_emit_weighted(v: *const PfEdgeVector, out: *mut *mut c_char) -> PfStatus {
    guard(|| {
        let v = borrow(v, "graph")?;
        write_out(out, into_c_string(emit_weighted(&v.0)), "out")
    })
}

/// Writes a simple graph as graph6; free with `pf_string_free`.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_emit_graph6(v: *const PfEdgeVector, out: *mut *mut c_char) -> PfStatus {
    guard(|| {
        let v = borrow(v, "graph")?;
        let g6 = emit_graph6(&v.0).map_err(core)?;
        write_out(out, into_c_string(g6), "out")
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Canonizes `v`. `max_n` bounds the brute-force engine; 0 selects the default.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_canonize(
    v: *const PfEdgeVector,
    engine: PfEngine,
    max_n: usize,
    out: *mut *mut PfCanonResult,
) -> PfStatus {
    guard(|| {
        let v = borrow(v, "graph")?;
        let engine = match engine {
            PfEngine::Pruned => Engine::Pruned,
            PfEngine::Brute => Engine::Brute,
        };
        let limits = if max_n == 0 { Limits::default() } else { Limits::new(max_n) };
        let r = canonical_form(&v.0, engine, limits).map_err(core)?;
        write_out(out, Box::into_raw(Box::new(PfCanonResult(r))), "out")
    })
}

/// Returns the canonical vector as a new graph handle.
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_canon_result_canonical(r: *const PfCanonResult, out: *mut *mut PfEdgeVector) -> PfStatus {
    guard(|| {
        let r = borrow(r, "result")?;
        write_out(out, Box::into_raw(Box::new(PfEdgeVector(r.0.canonical.clone()))), "out")
    })
}

/// Reads weight `slot` (1-based, lexicographic pair order) as `num / den`.
///
/// # Safety
/// `v` must be a live handle; `num` and `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pf_edge_vector_weight(
    v: *const PfEdgeVector,
    slot: usize,
    num: *mut i64,
    den: *mut i64,
) -> PfStatus {
    guard(|| {
        let v = borrow(v, "graph")?;
        let w = slot
            .checked_sub(1)
            .and_then(|s| v.0.weights().get(s))
            .ok_or_else(|| (PfStatus::InvalidArgument, format!("slot {slot} out of range 1..={}", v.0.len())))?;
        let (p, q) = to_i64_pair(w)?;
        write_out(num, p, "num")?;
        write_out(den, q, "den")
    })
}

/// Copies the frame into `out` (1-based one-line notation, `n` entries).
///
/// # Safety
/// `r` must be a live handle and `out` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn pf_canon_result_frame(r: *const PfCanonResult, out: *mut usize, cap: usize) -> PfStatus {
    guard(|| {
        let r = borrow(r, "result")?;
        copy_permutation(&r.0.frame.one_line(), out, cap)
    })
}

/// Order of the automorphism group, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_canon_result_aut_order(r: *const PfCanonResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.aut_order())
}

/// Copies automorphism `index` (0-based, lexicographic order) into `out`.
///
/// # Safety
/// `r` must be a live handle and `out` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn pf_canon_result_automorphism(
    r: *const PfCanonResult,
    index: usize,
    out: *mut usize,
    cap: usize,
) -> PfStatus {
    guard(|| {
        let r = borrow(r, "result")?;
        let a = r.0.automorphisms.get(index).ok_or_else(|| {
            (PfStatus::InvalidArgument, format!("automorphism {index} out of range 0..{}", r.0.aut_order()))
        })?;
        copy_permutation(&a.one_line(), out, cap)
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pf_canon_result_free(r: *mut PfCanonResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

unsafe fn copy_permutation(images: &[usize], out: *mut usize, cap: usize) -> Result<(), (PfStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    if cap < images.len() {
        return Err((PfStatus::InvalidArgument, format!("buffer holds {cap}, need {}", images.len())));
    }
    ptr::copy_nonoverlapping(images.as_ptr(), out, images.len());
    Ok(())
}

/// Returns `Ok` and writes a witness `sigma` with `relabel(sigma, a) = b` into
/// `witness` (which may be null), or `NotIsomorphic`.
///
/// # Safety
/// `a` and `b` must be live handles; `witness`, if non-null, must have room
/// for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn pf_is_isomorphic(
    a: *const PfEdgeVector,
    b: *const PfEdgeVector,
    witness: *mut usize,
    cap: usize,
) -> PfStatus {
    guard(|| {
        let (a, b) = (borrow(a, "a")?, borrow(b, "b")?);
        match is_isomorphic_with(&a.0, &b.0, Engine::Pruned, Limits::default()).map_err(core)? {
            None => Err((PfStatus::NotIsomorphic, "graphs are not isomorphic".into())),
            Some(_) if witness.is_null() => Ok(()),
            Some(sigma) => copy_permutation(&sigma.one_line(), witness, cap),
        }
    })
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
