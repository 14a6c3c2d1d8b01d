//! C ABI over the indicator engine: opaque matrix handles, integer error
//! codes, and plain-int accessors. The header is generated into
//! `include/fsind.h` at build time.

// entry points are called from C; null and range checks happen inside
// rather than via `unsafe fn` signatures
#![allow(clippy::not_unsafe_ptr_arg_deref)]

use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::{c_char, c_int, size_t};

use fsind_core::equivalence::{reduce, zero_audit};
use fsind_core::indicator::{indicator_matrix, IndicatorMatrix};
use fsind_core::perm::GroupContext;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsindStatus {
    FsindOk = 0,
    /// a pointer argument was null
    FsindNullArgument = 1,
    /// n outside 3..=8 (larger degrees need the chunked CLI path)
    FsindBadDegree = 2,
    /// row or column index out of range
    FsindOutOfRange = 3,
    /// internal computation failed
    FsindComputeFailed = 4,
}

/// Opaque handle to a computed indicator table.
pub struct FsindMatrix {
    matrix: IndicatorMatrix,
    class_count: usize,
    unexpected_zero_total: usize,
}

/// Computes the full indicator table of `D(S_n)` and returns a handle
/// through `out`. The handle must be released with `fsind_matrix_free`.
#[no_mangle]
pub extern "C" fn fsind_matrix_compute(n: size_t, out: *mut *mut FsindMatrix) -> FsindStatus {
    if out.is_null() {
        return FsindStatus::FsindNullArgument;
    }
    if !(3..=8).contains(&n) {
        return FsindStatus::FsindBadDegree;
    }
    let computed = catch_unwind(AssertUnwindSafe(|| {
        let ctx = GroupContext::new(n);
        let matrix = indicator_matrix(&ctx)?;
        let class_count = reduce(&matrix).len();
        let unexpected_zero_total = zero_audit(&matrix, &ctx).unexpected_total;
        Ok::<_, fsind_core::indicator::EngineError>(FsindMatrix {
            matrix,
            class_count,
            unexpected_zero_total,
        })
    }));
    match computed {
        Ok(Ok(handle)) => {
            unsafe { *out = Box::into_raw(Box::new(handle)) };
            FsindStatus::FsindOk
        }
        _ => FsindStatus::FsindComputeFailed,
    }
}

/// Releases a handle returned by `fsind_matrix_compute`. Null is ignored.
#[no_mangle]
pub extern "C" fn fsind_matrix_free(handle: *mut FsindMatrix) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Number of induced characters (rows) in the table.
#[no_mangle]
pub extern "C" fn fsind_matrix_row_count(handle: *const FsindMatrix) -> size_t {
    match unsafe { handle.as_ref() } {
        Some(h) => h.matrix.rows.len(),
        None => 0,
    }
}

/// Number of divisors of exp(S_n) (columns) in the table.
#[no_mangle]
pub extern "C" fn fsind_matrix_divisor_count(handle: *const FsindMatrix) -> size_t {
    match unsafe { handle.as_ref() } {
        Some(h) => h.matrix.divisors.len(),
        None => 0,
    }
}

/// The divisor heading column `col`.
#[no_mangle]
pub extern "C" fn fsind_matrix_divisor(
    handle: *const FsindMatrix,
    col: size_t,
    out: *mut u64,
) -> FsindStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return FsindStatus::FsindNullArgument;
    };
    if out.is_null() {
        return FsindStatus::FsindNullArgument;
    }
    match h.matrix.divisors.get(col) {
        Some(&m) => {
            unsafe { *out = m };
            FsindStatus::FsindOk
        }
        None => FsindStatus::FsindOutOfRange,
    }
}

/// The 1-based label `(i, j)` of table row `row`: `i` names the conjugacy
/// class of the inducing centralizer, `j` the character of that
/// centralizer.
#[no_mangle]
pub extern "C" fn fsind_matrix_label(
    handle: *const FsindMatrix,
    row: size_t,
    out_i: *mut size_t,
    out_j: *mut size_t,
) -> FsindStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return FsindStatus::FsindNullArgument;
    };
    if out_i.is_null() || out_j.is_null() {
        return FsindStatus::FsindNullArgument;
    }
    match h.matrix.labels.get(row) {
        Some(&(i, j)) => {
            unsafe {
                *out_i = i;
                *out_j = j;
            }
            FsindStatus::FsindOk
        }
        None => FsindStatus::FsindOutOfRange,
    }
}

/// The indicator value at (`row`, `col`).
#[no_mangle]
pub extern "C" fn fsind_matrix_value(
    handle: *const FsindMatrix,
    row: size_t,
    col: size_t,
    out: *mut i64,
) -> FsindStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return FsindStatus::FsindNullArgument;
    };
    if out.is_null() {
        return FsindStatus::FsindNullArgument;
    }
    match h.matrix.rows.get(row).and_then(|r| r.get(col)) {
        Some(&v) => {
            unsafe { *out = v };
            FsindStatus::FsindOk
        }
        None => FsindStatus::FsindOutOfRange,
    }
}

/// Number of I-equivalence classes (characters grouped by identical
/// indicator rows).
#[no_mangle]
pub extern "C" fn fsind_matrix_class_count(handle: *const FsindMatrix) -> size_t {
    match unsafe { handle.as_ref() } {
        Some(h) => h.class_count,
        None => 0,
    }
}

/// Number of unexpectedly vanishing (class, m) incidences.
#[no_mangle]
pub extern "C" fn fsind_matrix_unexpected_zero_total(handle: *const FsindMatrix) -> size_t {
    match unsafe { handle.as_ref() } {
        Some(h) => h.unexpected_zero_total,
        None => 0,
    }
}

/// Writes the CSV report into `buf` (at most `len` bytes including the
/// trailing NUL) and returns the full length through `written`. Call with
/// `buf = NULL` to query the required size.
#[no_mangle]
pub extern "C" fn fsind_matrix_csv(
    handle: *const FsindMatrix,
    buf: *mut c_char,
    len: size_t,
    written: *mut size_t,
) -> FsindStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return FsindStatus::FsindNullArgument;
    };
    if written.is_null() {
        return FsindStatus::FsindNullArgument;
    }
    let csv = fsind_core::report::csv_report(&h.matrix);
    let needed = csv.len() + 1;
    unsafe { *written = needed };
    if buf.is_null() {
        return FsindStatus::FsindOk;
    }
    if len < needed {
        return FsindStatus::FsindOutOfRange;
    }
    unsafe {
        std::ptr::copy_nonoverlapping(csv.as_ptr(), buf as *mut u8, csv.len());
        *buf.add(csv.len()) = 0;
    }
    FsindStatus::FsindOk
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fsind_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

// keep the c_int import used so the header carries the standard typedefs
#[allow(dead_code)]
const _: Option<c_int> = None;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compute_query_free_round_trip() {
        let mut handle: *mut FsindMatrix = std::ptr::null_mut();
        assert_eq!(fsind_matrix_compute(3, &mut handle), FsindStatus::FsindOk);
        assert!(!handle.is_null());
        assert_eq!(fsind_matrix_row_count(handle), 8);
        assert_eq!(fsind_matrix_divisor_count(handle), 4);
        assert_eq!(fsind_matrix_class_count(handle), 4);
        assert_eq!(fsind_matrix_unexpected_zero_total(handle), 0);
        let mut m = 0u64;
        assert_eq!(
            fsind_matrix_divisor(handle, 3, &mut m),
            FsindStatus::FsindOk
        );
        assert_eq!(m, 6);
        let (mut i, mut j) = (0usize, 0usize);
        assert_eq!(
            fsind_matrix_label(handle, 0, &mut i, &mut j),
            FsindStatus::FsindOk
        );
        assert_eq!((i, j), (1, 1));
        let mut v = -1i64;
        assert_eq!(
            fsind_matrix_value(handle, 0, 0, &mut v),
            FsindStatus::FsindOk
        );
        assert_eq!(v, 0);
        assert_eq!(
            fsind_matrix_value(handle, 99, 0, &mut v),
            FsindStatus::FsindOutOfRange
        );
        fsind_matrix_free(handle);
    }

    #[test]
    fn degree_and_null_checks() {
        let mut handle: *mut FsindMatrix = std::ptr::null_mut();
        assert_eq!(
            fsind_matrix_compute(2, &mut handle),
            FsindStatus::FsindBadDegree
        );
        assert_eq!(
            fsind_matrix_compute(3, std::ptr::null_mut()),
            FsindStatus::FsindNullArgument
        );
        assert_eq!(fsind_matrix_row_count(std::ptr::null()), 0);
        fsind_matrix_free(std::ptr::null_mut());
    }

    #[test]
    fn csv_buffer_protocol() {
        let mut handle: *mut FsindMatrix = std::ptr::null_mut();
        assert_eq!(fsind_matrix_compute(3, &mut handle), FsindStatus::FsindOk);
        let mut needed = 0usize;
        assert_eq!(
            fsind_matrix_csv(handle, std::ptr::null_mut(), 0, &mut needed),
            FsindStatus::FsindOk
        );
        assert!(needed > 1);
        let mut buf = vec![0i8; needed];
        assert_eq!(
            fsind_matrix_csv(handle, buf.as_mut_ptr() as *mut c_char, needed, &mut needed),
            FsindStatus::FsindOk
        );
        let text = unsafe { std::ffi::CStr::from_ptr(buf.as_ptr() as *const c_char) };
        assert!(text.to_str().unwrap().starts_with("label,m=1,m=2,m=3,m=6"));
        let mut short = vec![0i8; 4];
        assert_eq!(
            fsind_matrix_csv(handle, short.as_mut_ptr() as *mut c_char, 4, &mut needed),
            FsindStatus::FsindOutOfRange
        );
        fsind_matrix_free(handle);
    }
}
