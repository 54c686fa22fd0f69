//! C ABI for `connlap`.
//!
//! Complexes and matrices are opaque handles owned by the caller and
//! released with their `_free` functions. Every fallible call returns a
//! [`ClStatus`]; on failure [`cl_last_error`] describes the most recent error
//! on the calling thread. Strings returned by the library are released with
//! [`cl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use connlap::complex::SimplicialComplex;
use connlap::energy::{green_matrix, total_energy};
use connlap::error::Error;
use connlap::facets::parse_facet_file;
use connlap::incidence::connection_matrix;
use connlap::linalg::{determinant, inertia, IntMatrix};
use connlap::report::Report;
use num_bigint::BigInt;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    TooLarge = 4,
    Overflow = 5,
    BufferTooSmall = 6,
    Internal = 7,
    Panic = 8,
}

/// Opaque simplicial complex.
pub struct ClComplex {
    inner: SimplicialComplex,
}

/// Opaque integer matrix.
pub struct ClMatrix {
    inner: IntMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: ClStatus, msg: impl Into<String>) -> ClStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> ClStatus {
    let status = match e {
        Error::Parse { .. } => ClStatus::Parse,
        Error::TooLarge { .. } => ClStatus::TooLarge,
        Error::Internal(_) => ClStatus::Internal,
        _ => ClStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> ClStatus) -> ClStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ClStatus::Panic, "panic inside connlap"),
    }
}

fn to_i64(v: &BigInt) -> Result<i64, ClStatus> {
    i64::try_from(v).map_err(|_| fail(ClStatus::Overflow, format!("{v} does not fit in 64 bits")))
}

unsafe fn complex_ref<'a>(c: *const ClComplex) -> Result<&'a SimplicialComplex, ClStatus> {
    c.as_ref()
        .map(|c| &c.inner)
        .ok_or_else(|| fail(ClStatus::NullPointer, "null complex handle"))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> ClStatus {
    if out.is_null() {
        return fail(ClStatus::NullPointer, "null output pointer");
    }
    out.write(v);
    ClStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a facet file (UTF-8, one comma-separated set per line) into a new
/// complex.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cl_complex_from_facet_text(text: *const c_char, out: *mut *mut ClComplex) -> ClStatus {
    guard(|| {
        if text.is_null() {
            return fail(ClStatus::NullPointer, "null text");
        }
        let s = tri!(CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(ClStatus::InvalidArgument, "text is not UTF-8")));
        let c = tri!(parse_facet_file(s).map_err(from_error));
        write_out(out, Box::into_raw(Box::new(ClComplex { inner: c })))
    })
}

/// Builds the complex generated by integer-labelled sets. `vertices` holds
/// the sets back to back; `set_sizes[k]` is the length of set `k`.
///
/// # Safety
/// `vertices` must hold the sum of `set_sizes` entries, `set_sizes` must
/// hold `n_sets` entries and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_complex_from_sets(
    vertices: *const i64,
    set_sizes: *const usize,
    n_sets: usize,
    out: *mut *mut ClComplex,
) -> ClStatus {
    guard(|| {
        if n_sets > 0 && (vertices.is_null() || set_sizes.is_null()) {
            return fail(ClStatus::NullPointer, "null set arrays");
        }
        let sizes = if n_sets == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(set_sizes, n_sets)
        };
        let total: usize = sizes.iter().sum();
        let flat = if total == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(vertices, total)
        };
        let mut sets = Vec::with_capacity(n_sets);
        let mut at = 0;
        for &k in sizes {
            sets.push(flat[at..at + k].to_vec());
            at += k;
        }
        let c = if sets.is_empty() {
            SimplicialComplex::empty()
        } else {
            tri!(SimplicialComplex::generate(sets).map_err(from_error))
        };
        write_out(out, Box::into_raw(Box::new(ClComplex { inner: c })))
    })
}

/// Releases a complex. Null is ignored.
///
/// # Safety
/// `c` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cl_complex_free(c: *mut ClComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of simplices.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_complex_len(c: *const ClComplex, out: *mut usize) -> ClStatus {
    guard(|| write_out(out, tri!(complex_ref(c)).len()))
}

/// Copies the f-vector into `buf`. `out_len` receives its length; if `cap`
/// is too small nothing is copied and `BufferTooSmall` is returned.
///
/// # Safety
/// `buf` must hold `cap` entries; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_complex_f_vector(
    c: *const ClComplex,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> ClStatus {
    guard(|| {
        let f = tri!(complex_ref(c)).f_vector().0;
        let s = write_out(out_len, f.len());
        if s != ClStatus::Ok {
            return s;
        }
        if f.len() > cap {
            return fail(ClStatus::BufferTooSmall, format!("f-vector needs {} entries", f.len()));
        }
        if !f.is_empty() {
            if buf.is_null() {
                return fail(ClStatus::NullPointer, "null buffer");
            }
            ptr::copy_nonoverlapping(f.as_ptr(), buf, f.len());
        }
        ClStatus::Ok
    })
}

/// Euler characteristic.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_complex_euler(c: *const ClComplex, out: *mut i64) -> ClStatus {
    guard(|| write_out(out, tri!(complex_ref(c)).euler_characteristic()))
}

/// Fermi characteristic, the product of `(-1)^dim` over all simplices.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_complex_fermi(c: *const ClComplex, out: *mut i64) -> ClStatus {
    guard(|| write_out(out, tri!(complex_ref(c)).fermi_characteristic()))
}

/// Exact determinant of the connection Laplacian.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_connection_determinant(c: *const ClComplex, out: *mut i64) -> ClStatus {
    guard(|| {
        let d = tri!(determinant(&connection_matrix(tri!(complex_ref(c)))).map_err(from_error));
        write_out(out, tri!(to_i64(&d)))
    })
}

/// Sum of all entries of the inverse connection Laplacian.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_total_energy(c: *const ClComplex, out: *mut i64) -> ClStatus {
    guard(|| {
        let e = tri!(total_energy(tri!(complex_ref(c))).map_err(from_error));
        write_out(out, tri!(to_i64(&e)))
    })
}

/// Counts of positive, negative and zero eigenvalues of the connection
/// Laplacian.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_inertia(
    c: *const ClComplex,
    positive: *mut usize,
    negative: *mut usize,
    zero: *mut usize,
) -> ClStatus {
    guard(|| {
        if positive.is_null() || negative.is_null() || zero.is_null() {
            return fail(ClStatus::NullPointer, "null output pointer");
        }
        let i = tri!(inertia(&connection_matrix(tri!(complex_ref(c)))).map_err(from_error));
        positive.write(i.positive);
        negative.write(i.negative);
        zero.write(i.zero);
        ClStatus::Ok
    })
}

/// The connection Laplacian, rows in canonical simplex order.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_connection_matrix(c: *const ClComplex, out: *mut *mut ClMatrix) -> ClStatus {
    guard(|| {
        let m = connection_matrix(tri!(complex_ref(c)));
        write_out(out, Box::into_raw(Box::new(ClMatrix { inner: m })))
    })
}

/// The exact inverse of the connection Laplacian. Fails on the empty
/// complex.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_green_matrix(c: *const ClComplex, out: *mut *mut ClMatrix) -> ClStatus {
    guard(|| {
        let g = tri!(green_matrix(tri!(complex_ref(c))).map_err(from_error));
        write_out(out, Box::into_raw(Box::new(ClMatrix { inner: g.into_matrix() })))
    })
}

unsafe fn matrix_ref<'a>(m: *const ClMatrix) -> Result<&'a IntMatrix, ClStatus> {
    m.as_ref()
        .map(|m| &m.inner)
        .ok_or_else(|| fail(ClStatus::NullPointer, "null matrix handle"))
}

/// Number of rows, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn cl_matrix_rows(m: *const ClMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.rows())
}

/// Number of columns, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn cl_matrix_cols(m: *const ClMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.cols())
}

/// Entry `(i, j)`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_matrix_get(m: *const ClMatrix, i: usize, j: usize, out: *mut i64) -> ClStatus {
    guard(|| {
        let m = tri!(matrix_ref(m));
        if i >= m.rows() || j >= m.cols() {
            return fail(
                ClStatus::InvalidArgument,
                format!("index ({i}, {j}) outside {}x{}", m.rows(), m.cols()),
            );
        }
        write_out(out, tri!(to_i64(m.get(i, j))))
    })
}

/// Releases a matrix. Null is ignored.
///
/// # Safety
/// `m` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cl_matrix_free(m: *mut ClMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// The full report as JSON, refusing complexes with more than `max_n`
/// simplices. Release the string with [`cl_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cl_report_json(c: *const ClComplex, max_n: usize, out: *mut *mut c_char) -> ClStatus {
    guard(|| {
        let r = tri!(Report::build(tri!(complex_ref(c)), max_n).map_err(from_error));
        let s = CString::new(r.to_json()).expect("JSON has no nul bytes");
        write_out(out, s.into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
