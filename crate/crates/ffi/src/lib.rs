//! C ABI over `secdom`.
//!
//! Graphs live behind the opaque [`SdGraph`] handle. Vertex sets cross the
//! boundary as 64-bit masks (bit `v` set means vertex `v` is in the set).
//! Every function returns an [`SdStatus`]; on failure a message is kept for
//! the calling thread and can be read with [`sd_last_error`]. Strings
//! returned by the library must be released with [`sd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use secdom::extremal::{build_extremal, detect_extremal_structural, partition_profile};
use secdom::graph::EdgeList;
use secdom::outerplanar::is_outerplanar;
use secdom::solver::{gamma, gamma_s, SolveResult};
use secdom::{secure, Error, Graph, VertexSet};

/// Opaque graph handle.
pub struct SdGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    TooLarge = 4,
    VertexOutOfRange = 5,
    NotSecure = 6,
    NotOuterplanarInput = 7,
    Utf8 = 8,
    Panic = 99,
}

/// Counts describing a secure dominating set; see `partition_profile`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SdPartitionProfile {
    pub s2: u64,
    pub s1: u64,
    pub s0: u64,
    pub c_set: u64,
    pub x2: usize,
    pub x1: usize,
    pub x0: usize,
    pub c: usize,
    pub x: usize,
    pub y: usize,
    pub extremal_count_holds: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::EdgeList { .. } | Error::Graph6(_) => SdStatus::ParseError,
        Error::TooLarge { .. } => SdStatus::TooLarge,
        Error::VertexOutOfRange { .. } => SdStatus::VertexOutOfRange,
        Error::NotSecure => SdStatus::NotSecure,
        Error::EpnTooLarge { .. } => SdStatus::NotOuterplanarInput,
        _ => SdStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> SdStatus {
    set_error(&e.to_string());
    status_of(&e)
}

/// Runs `f`, converting panics into `SdStatus::Panic`.
fn guard(f: impl FnOnce() -> SdStatus) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == SdStatus::Ok {
                set_error("");
            }
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("internal error: {msg}"));
            SdStatus::Panic
        }
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error(concat!("null pointer: ", stringify!($p)));
            return SdStatus::NullPointer;
        })+
    };
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, SdStatus> {
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        SdStatus::Utf8
    })
}

fn give_graph(g: Graph, out: *mut *mut SdGraph) -> SdStatus {
    unsafe { *out = Box::into_raw(Box::new(SdGraph { inner: g })) };
    SdStatus::Ok
}

fn give_string(s: String, out: *mut *mut c_char) -> SdStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SdStatus::Ok
        }
        Err(_) => {
            set_error("string contains NUL");
            SdStatus::InvalidArgument
        }
    }
}

fn mask(g: &Graph, bits: u64) -> Result<VertexSet, SdStatus> {
    let s = VertexSet::from_bits(bits);
    g.check_set(s).map_err(fail)?;
    Ok(s)
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`edges[2i]`, `edges[2i+1]`). `edges` may be null when
/// `edge_count` is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut SdGraph,
) -> SdStatus {
    guard(|| {
        non_null!(out);
        if edge_count > 0 {
            non_null!(edges);
        }
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        match Graph::new(n, pairs) {
            Ok(g) => give_graph(g, out),
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_from_graph6(text: *const c_char, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| {
        non_null!(text, out);
        let s = match c_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match Graph::from_graph6(s.trim()) {
            Ok(g) => give_graph(g, out),
            Err(e) => fail(e),
        }
    })
}

/// Parses the `n m` header plus `m` edge lines format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_from_edge_list(text: *const c_char, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| {
        non_null!(text, out);
        let s = match c_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match EdgeList::parse_edge_list(s).and_then(|l| l.to_graph()) {
            Ok(g) => give_graph(g, out),
            Err(e) => fail(e),
        }
    })
}

/// Releases a graph; null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_free(g: *mut SdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_vertex_count(g: *const SdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_edge_count(g: *const SdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.m())
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_graph_to_graph6(g: *const SdGraph, out: *mut *mut c_char) -> SdStatus {
    guard(|| {
        non_null!(g, out);
        give_string((*g).inner.to_graph6(), out)
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_is_dominating(g: *const SdGraph, set: u64, out: *mut bool) -> SdStatus {
    guard(|| {
        non_null!(g, out);
        let g = &(*g).inner;
        match mask(g, set) {
            Ok(s) => {
                *out = secure::is_dominating(g, s);
                SdStatus::Ok
            }
            Err(st) => st,
        }
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_is_secure_dominating(g: *const SdGraph, set: u64, out: *mut bool) -> SdStatus {
    guard(|| {
        non_null!(g, out);
        let g = &(*g).inner;
        match secure::is_secure_dominating(g, VertexSet::from_bits(set)) {
            Ok(c) => {
                *out = c.is_some();
                SdStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

unsafe fn solve_into(
    g: *const SdGraph,
    value: *mut usize,
    set: *mut u64,
    f: fn(&Graph) -> secdom::Result<SolveResult>,
) -> SdStatus {
    guard(|| {
        non_null!(g, value);
        match f(&(*g).inner) {
            Ok(r) => {
                *value = r.value;
                if !set.is_null() {
                    *set = r.set.bits();
                }
                SdStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Domination number; `set` (may be null) receives the lexicographically
/// smallest minimum dominating set.
///
/// # Safety
/// `g` must be a live handle, `value` writable, `set` null or writable.
#[no_mangle]
pub unsafe extern "C" fn sd_gamma(g: *const SdGraph, value: *mut usize, set: *mut u64) -> SdStatus {
    solve_into(g, value, set, gamma)
}

/// Secure domination number; `set` (may be null) receives the
/// lexicographically smallest minimum secure dominating set.
///
/// # Safety
/// `g` must be a live handle, `value` writable, `set` null or writable.
#[no_mangle]
pub unsafe extern "C" fn sd_gamma_s(g: *const SdGraph, value: *mut usize, set: *mut u64) -> SdStatus {
    solve_into(g, value, set, gamma_s)
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_is_outerplanar(g: *const SdGraph, out: *mut bool) -> SdStatus {
    guard(|| {
        non_null!(g, out);
        *out = is_outerplanar(&(*g).inner);
        SdStatus::Ok
    })
}

/// The extremal graph `G_k` (`k >= 2`) with hub 0 and spokes `1..=k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_build_extremal(k: usize, out: *mut *mut SdGraph) -> SdStatus {
    guard(|| {
        non_null!(out);
        match build_extremal(k) {
            Ok((g, _)) => give_graph(g, out),
            Err(e) => fail(e),
        }
    })
}

/// JSON object describing a spanning `G_k` labeling, or `null` if none
/// exists. Fails with `InvalidArgument` unless `n = 5k + 1`, `k >= 2`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_detect_extremal(g: *const SdGraph, out: *mut *mut c_char) -> SdStatus {
    guard(|| {
        non_null!(g, out);
        match detect_extremal_structural(&(*g).inner) {
            Ok(w) => give_string(serde_json::to_string(&w).expect("witness serializes"), out),
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_partition_profile(
    g: *const SdGraph,
    set: u64,
    out: *mut SdPartitionProfile,
) -> SdStatus {
    guard(|| {
        non_null!(g, out);
        match partition_profile(&(*g).inner, VertexSet::from_bits(set)) {
            Ok(p) => {
                *out = SdPartitionProfile {
                    s2: p.s2.bits(),
                    s1: p.s1.bits(),
                    s0: p.s0.bits(),
                    c_set: p.c_set.bits(),
                    x2: p.x2,
                    x1: p.x1,
                    x0: p.x0,
                    c: p.c,
                    x: p.x,
                    y: p.y,
                    extremal_count_holds: p.extremal_count_holds,
                };
                SdStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sd_version() -> *const c_char {
    static V: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}
