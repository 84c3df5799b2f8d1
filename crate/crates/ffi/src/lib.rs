//! C ABI over `zss`.
//!
//! Matrices cross the boundary as opaque `ZssMatrix` handles created by
//! `zss_matrix_parse`, `zss_matrix_t_split` or `zss_matrix_canonical` and
//! released with `zss_matrix_free`. Every fallible call returns a
//! [`ZssStatus`]; results are written through out-pointers only on `ZSS_OK`.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr};
use std::ptr;

use zss::search::{enumerate, DiscConstraint, EnumerationQuery};
use zss::{canonical_form, classify_split, make_t_split, BinaryMatrix, SplitVariant};

/// Result codes returned by every fallible function.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ZssStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    Internal = 6,
}

/// Split variant reported by `zss_matrix_classify`.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ZssSplitVariant {
    NonSplit = 0,
    Identity = 1,
    Negation = 2,
    Horizontal = 3,
    Vertical = 4,
}

/// Summary of a counting enumeration.
#[repr(C)]
#[derive(Copy, Clone, Debug, Default)]
pub struct ZssCountReport {
    pub total: u64,
    pub split: u64,
    pub exceptional: u64,
}

/// Opaque matrix handle.
pub struct ZssMatrix {
    inner: BinaryMatrix,
}

fn status_of(e: &zss::Error) -> ZssStatus {
    match e {
        zss::Error::Parse(_) => ZssStatus::ParseError,
        zss::Error::TooLarge { .. } | zss::Error::OracleCap { .. } => ZssStatus::TooLarge,
        zss::Error::Contract(_) => ZssStatus::Internal,
        _ => ZssStatus::InvalidArgument,
    }
}

fn boxed(m: BinaryMatrix) -> *mut ZssMatrix {
    Box::into_raw(Box::new(ZssMatrix { inner: m }))
}

/// Parses the text format (`"<rows> <cols>\n"` then one `+`/`-` line per row).
/// On a parse error the 1-based line and column are written to `err_line` and
/// `err_column` when those are non-null.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_parse(
    text: *const c_char,
    out: *mut *mut ZssMatrix,
    err_line: *mut usize,
    err_column: *mut usize,
) -> ZssStatus {
    if text.is_null() || out.is_null() {
        return ZssStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return ZssStatus::InvalidUtf8;
    };
    match BinaryMatrix::parse(text) {
        Ok(m) => {
            *out = boxed(m);
            ZssStatus::Ok
        }
        Err(e) => {
            if !err_line.is_null() {
                *err_line = e.line;
            }
            if !err_column.is_null() {
                *err_column = e.column;
            }
            ZssStatus::ParseError
        }
    }
}

/// Builds the `rows x cols` t-split matrix.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_t_split(rows: usize, cols: usize, t: i64, out: *mut *mut ZssMatrix) -> ZssStatus {
    if out.is_null() {
        return ZssStatus::NullPointer;
    }
    match make_t_split(rows, cols, t) {
        Ok(m) => {
            *out = boxed(m);
            ZssStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Canonical representative of the symmetry class of `m`, as a new handle.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_canonical(m: *const ZssMatrix, out: *mut *mut ZssMatrix) -> ZssStatus {
    if m.is_null() || out.is_null() {
        return ZssStatus::NullPointer;
    }
    *out = boxed(canonical_form(&(*m).inner));
    ZssStatus::Ok
}

/// Releases a handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_free(m: *mut ZssMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Row count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_rows(m: *const ZssMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.rows())
}

/// Column count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_cols(m: *const ZssMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.cols())
}

/// Entry at 1-based `(i, j)` as -1 or +1.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_get(m: *const ZssMatrix, i: usize, j: usize, out: *mut i32) -> ZssStatus {
    let (Some(m), false) = (m.as_ref(), out.is_null()) else {
        return ZssStatus::NullPointer;
    };
    match m.inner.try_get(i, j) {
        Ok(s) => {
            *out = s.value() as i32;
            ZssStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Sum of all entries.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_discrepancy(m: *const ZssMatrix, out: *mut i64) -> ZssStatus {
    let (Some(m), false) = (m.as_ref(), out.is_null()) else {
        return ZssStatus::NullPointer;
    };
    *out = m.inner.discrepancy();
    ZssStatus::Ok
}

/// Writes whether `m` has no zero-sum square. If it has one and `witness` is
/// non-null, the square's `(i, j, s)` is written to `witness[0..3]`.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_is_zssf(m: *const ZssMatrix, out: *mut bool, witness: *mut usize) -> ZssStatus {
    let (Some(m), false) = (m.as_ref(), out.is_null()) else {
        return ZssStatus::NullPointer;
    };
    let found = m.inner.find_zero_sum_square();
    *out = found.is_none();
    if let (Some(q), false) = (found, witness.is_null()) {
        *witness = q.i;
        *witness.add(1) = q.j;
        *witness.add(2) = q.s;
    }
    ZssStatus::Ok
}

/// Split classification. `t_out` is left untouched for non-split matrices.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_classify(
    m: *const ZssMatrix,
    variant_out: *mut ZssSplitVariant,
    t_out: *mut usize,
) -> ZssStatus {
    let (Some(m), false) = (m.as_ref(), variant_out.is_null()) else {
        return ZssStatus::NullPointer;
    };
    match classify_split(&m.inner) {
        None => *variant_out = ZssSplitVariant::NonSplit,
        Some(d) => {
            *variant_out = match d.variant {
                SplitVariant::Identity => ZssSplitVariant::Identity,
                SplitVariant::Negation => ZssSplitVariant::Negation,
                SplitVariant::Horizontal => ZssSplitVariant::Horizontal,
                SplitVariant::Vertical => ZssSplitVariant::Vertical,
            };
            if !t_out.is_null() {
                *t_out = d.t;
            }
        }
    }
    ZssStatus::Ok
}

/// Writes the text form (including the trailing newline and a NUL) into
/// `buf`. `*len` must hold the buffer capacity on entry; on return it holds
/// the required size including the NUL. Returns `InvalidArgument` when the
/// buffer is too small, which lets callers query the size with a null `buf`.
#[no_mangle]
pub unsafe extern "C" fn zss_matrix_to_text(m: *const ZssMatrix, buf: *mut c_char, len: *mut usize) -> ZssStatus {
    let (Some(m), false) = (m.as_ref(), len.is_null()) else {
        return ZssStatus::NullPointer;
    };
    let text = m.inner.to_text();
    let need = text.len() + 1;
    let cap = *len;
    *len = need;
    if buf.is_null() || cap < need {
        return ZssStatus::InvalidArgument;
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
    *buf.add(text.len()) = 0;
    ZssStatus::Ok
}

/// Counts zero-sum-square-free `rows x cols` matrices with `|disc| <= max_abs_disc`.
/// `jobs` of 0 means one worker.
#[no_mangle]
pub unsafe extern "C" fn zss_count_bounded(
    rows: usize,
    cols: usize,
    max_abs_disc: u64,
    jobs: usize,
    out: *mut ZssCountReport,
) -> ZssStatus {
    count(rows, cols, DiscConstraint::AbsAtMost(max_abs_disc), jobs, out)
}

/// Counts zero-sum-square-free `rows x cols` matrices with discrepancy exactly `disc`.
#[no_mangle]
pub unsafe extern "C" fn zss_count_exact(
    rows: usize,
    cols: usize,
    disc: i64,
    jobs: usize,
    out: *mut ZssCountReport,
) -> ZssStatus {
    count(rows, cols, DiscConstraint::Exact(disc), jobs, out)
}

unsafe fn count(rows: usize, cols: usize, c: DiscConstraint, jobs: usize, out: *mut ZssCountReport) -> ZssStatus {
    if out.is_null() {
        return ZssStatus::NullPointer;
    }
    let q = EnumerationQuery::new(rows, cols, c).count_only().jobs(jobs.max(1));
    match enumerate(&q, |_| {}) {
        Ok(r) => {
            *out = ZssCountReport {
                total: r.total,
                split: r.split_count,
                exceptional: r.exceptional_count,
            };
            ZssStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
