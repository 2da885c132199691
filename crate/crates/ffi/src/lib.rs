//! C ABI over the `charms` library. Every function is panic-safe: panics
//! are caught at the boundary and reported as [`CharmsStatus::Panic`].
//! Callers own any handle returned through an out-pointer and release it
//! with the matching `_free` function.

use std::ffi::{c_char, c_int, c_void};
use std::ops::ControlFlow;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use charms::counting::count_charm_bracelets;
use charms::equiv::EquivalenceGroup;
use charms::generate::{generate_controlled, ClassKind};
use charms::search::{run_search, SearchConfig, SearchReport};
use charms::sds::SupplementaryDifferenceSet;
use charms::sequences::{
    compress, is_golay_number, is_golay_pair, is_periodic_golay_pair, paf, psd, BinaryPair,
    BinarySequence,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharmsStatus {
    /// Success.
    Ok = 0,
    /// A required pointer was null.
    NullArgument = 1,
    /// The inputs violate a documented precondition.
    InvalidInput = 2,
    /// The provided buffer cannot hold the result.
    BufferTooSmall = 3,
    /// An index was past the end of a collection.
    OutOfRange = 4,
    /// The library panicked; the call had no effect.
    Panic = 5,
}

/// Visitor for [`charms_generate`]. Returning nonzero stops the
/// enumeration early.
pub type CharmsVisitor =
    Option<unsafe extern "C" fn(symbols: *const u8, len: usize, ctx: *mut c_void) -> c_int>;

/// Opaque supplementary difference set handle.
pub struct CharmsSds {
    inner: SupplementaryDifferenceSet,
}

/// Opaque report handle returned by [`charms_search_run`].
pub struct CharmsSearchReport {
    inner: SearchReport,
}

fn guard<F: FnOnce() -> CharmsStatus>(f: F) -> CharmsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => CharmsStatus::Panic,
    }
}

/// Returns None when `ptr` is null and `len` is nonzero.
unsafe fn slice_in<'a, T>(ptr: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(slice::from_raw_parts(ptr, len))
    }
}

unsafe fn write_out<T: Copy>(ptr: *mut T, values: &[T]) {
    slice::from_raw_parts_mut(ptr, values.len()).copy_from_slice(values);
}

/// Copies `text` plus a trailing NUL, demanding `buf_len` bytes of room.
unsafe fn write_c_string(text: &str, buf: *mut c_char, buf_len: usize) -> CharmsStatus {
    if text.len() + 1 > buf_len {
        return CharmsStatus::BufferTooSmall;
    }
    let bytes = slice::from_raw_parts_mut(buf.cast::<u8>(), text.len() + 1);
    bytes[..text.len()].copy_from_slice(text.as_bytes());
    bytes[text.len()] = 0;
    CharmsStatus::Ok
}

fn parse_signs(seq: &str) -> Result<BinarySequence, charms::Error> {
    seq.parse()
}

/// Writes the number of charm-bracelet classes of length `n` over `k`
/// symbols as a NUL-terminated decimal string.
///
/// # Safety
/// `buf` must point to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn charms_count_charm_bracelets(
    n: usize,
    k: usize,
    buf: *mut c_char,
    buf_len: usize,
) -> CharmsStatus {
    guard(|| {
        if buf.is_null() {
            return CharmsStatus::NullArgument;
        }
        match count_charm_bracelets(n, k) {
            Ok(count) => unsafe { write_c_string(&count.to_string(), buf, buf_len) },
            Err(_) => CharmsStatus::InvalidInput,
        }
    })
}

/// Enumerates class representatives of length `n` over `k` symbols.
/// `kind` selects the action: 0 rotation, 1 rotation with reversal,
/// 2 affine index maps. A null `visitor` just counts; a null `emitted`
/// discards the count.
///
/// # Safety
/// `visitor`, when provided, must be callable with `ctx`.
#[no_mangle]
pub unsafe extern "C" fn charms_generate(
    n: usize,
    k: usize,
    kind: c_int,
    visitor: CharmsVisitor,
    ctx: *mut c_void,
    emitted: *mut u64,
) -> CharmsStatus {
    guard(|| {
        let kind = match kind {
            0 => ClassKind::Necklace,
            1 => ClassKind::Bracelet,
            2 => ClassKind::CharmBracelet,
            _ => return CharmsStatus::InvalidInput,
        };
        let outcome = generate_controlled(n, k, kind, |word| match visitor {
            Some(cb) => {
                if unsafe { cb(word.as_ptr(), word.len(), ctx) } != 0 {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            }
            None => ControlFlow::Continue(()),
        });
        match outcome {
            Ok(count) => {
                if !emitted.is_null() {
                    unsafe { *emitted = count };
                }
                CharmsStatus::Ok
            }
            Err(_) => CharmsStatus::InvalidInput,
        }
    })
}

/// Writes the periodic autocorrelation of `entries` into `out`.
///
/// # Safety
/// `entries` and `out` must each cover `len` elements.
#[no_mangle]
pub unsafe extern "C" fn charms_paf(
    entries: *const i64,
    len: usize,
    out: *mut i64,
) -> CharmsStatus {
    guard(|| {
        let (Some(entries), false) = (unsafe { slice_in(entries, len) }, out.is_null()) else {
            return CharmsStatus::NullArgument;
        };
        unsafe { write_out(out, paf(entries).values()) };
        CharmsStatus::Ok
    })
}

/// Writes the power spectral density of `entries` into `out`.
///
/// # Safety
/// `entries` and `out` must each cover `len` elements.
#[no_mangle]
pub unsafe extern "C" fn charms_psd(
    entries: *const i64,
    len: usize,
    out: *mut f64,
) -> CharmsStatus {
    guard(|| {
        let (Some(entries), false) = (unsafe { slice_in(entries, len) }, out.is_null()) else {
            return CharmsStatus::NullArgument;
        };
        unsafe { write_out(out, psd(entries).values()) };
        CharmsStatus::Ok
    })
}

/// Writes the `m`-compression of `entries` into `out`, which must cover
/// `len / m` elements. `m` must divide `len`.
///
/// # Safety
/// `entries` covers `len` elements and `out` covers `len / m`.
#[no_mangle]
pub unsafe extern "C" fn charms_compress(
    entries: *const i64,
    len: usize,
    m: usize,
    out: *mut i64,
) -> CharmsStatus {
    guard(|| {
        let (Some(entries), false) = (unsafe { slice_in(entries, len) }, out.is_null()) else {
            return CharmsStatus::NullArgument;
        };
        match compress(entries, m) {
            Ok(compressed) => {
                unsafe { write_out(out, &compressed) };
                CharmsStatus::Ok
            }
            Err(_) => CharmsStatus::InvalidInput,
        }
    })
}

/// Tests whether `a`, `b` form an aperiodic Golay pair.
///
/// # Safety
/// `a` and `b` cover `len` elements; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn charms_is_golay_pair(
    a: *const i64,
    b: *const i64,
    len: usize,
    out: *mut bool,
) -> CharmsStatus {
    guard(|| {
        let (Some(a), Some(b), false) = (
            unsafe { slice_in(a, len) },
            unsafe { slice_in(b, len) },
            out.is_null(),
        ) else {
            return CharmsStatus::NullArgument;
        };
        match is_golay_pair(a, b) {
            Ok(answer) => {
                unsafe { *out = answer };
                CharmsStatus::Ok
            }
            Err(_) => CharmsStatus::InvalidInput,
        }
    })
}

/// Tests whether `a`, `b` form a periodic Golay pair.
///
/// # Safety
/// `a` and `b` cover `len` elements; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn charms_is_periodic_golay_pair(
    a: *const i64,
    b: *const i64,
    len: usize,
    out: *mut bool,
) -> CharmsStatus {
    guard(|| {
        let (Some(a), Some(b), false) = (
            unsafe { slice_in(a, len) },
            unsafe { slice_in(b, len) },
            out.is_null(),
        ) else {
            return CharmsStatus::NullArgument;
        };
        match is_periodic_golay_pair(a, b) {
            Ok(answer) => {
                unsafe { *out = answer };
                CharmsStatus::Ok
            }
            Err(_) => CharmsStatus::InvalidInput,
        }
    })
}

/// Whether `v` is of the form `2^a 10^b 26^c`.
#[no_mangle]
pub extern "C" fn charms_is_golay_number(v: u64) -> bool {
    catch_unwind(|| is_golay_number(v)).unwrap_or(false)
}

/// Builds a supplementary difference set over `Z_v` from the residues in
/// `x` and `y`; the sizes and `lambda` must satisfy the counting identity
/// `r(r-1) + s(s-1) = lambda (v-1)`. On success `*out` owns the handle.
///
/// # Safety
/// `x` covers `x_len` elements, `y` covers `y_len`, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn charms_sds_new(
    v: usize,
    x: *const usize,
    x_len: usize,
    y: *const usize,
    y_len: usize,
    lambda: usize,
    out: *mut *mut CharmsSds,
) -> CharmsStatus {
    guard(|| {
        let (Some(x), Some(y), false) = (
            unsafe { slice_in(x, x_len) },
            unsafe { slice_in(y, y_len) },
            out.is_null(),
        ) else {
            return CharmsStatus::NullArgument;
        };
        match SupplementaryDifferenceSet::new(v, x.to_vec(), y.to_vec(), lambda) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(CharmsSds { inner })) };
                CharmsStatus::Ok
            }
            Err(_) => CharmsStatus::InvalidInput,
        }
    })
}

/// Whether every nonzero residue occurs exactly `lambda` times as an
/// in-block difference.
///
/// # Safety
/// `sds` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn charms_sds_verify(sds: *const CharmsSds, out: *mut bool) -> CharmsStatus {
    guard(|| {
        if sds.is_null() || out.is_null() {
            return CharmsStatus::NullArgument;
        }
        unsafe { *out = (*sds).inner.verify() };
        CharmsStatus::Ok
    })
}

/// Whether the parameters satisfy `v = 2(r + s - lambda)`, the condition
/// for the derived pair to be periodic Golay.
///
/// # Safety
/// `sds` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn charms_sds_golay_condition(
    sds: *const CharmsSds,
    out: *mut bool,
) -> CharmsStatus {
    guard(|| {
        if sds.is_null() || out.is_null() {
            return CharmsStatus::NullArgument;
        }
        unsafe { *out = (*sds).inner.satisfies_golay_condition() };
        CharmsStatus::Ok
    })
}

/// Writes the +/-1 pair encoding of the blocks: entry `-1` exactly at the
/// residues of the block. `a_out` and `b_out` must each cover `v`.
///
/// # Safety
/// `sds` is a live handle; the out buffers cover `v` elements.
#[no_mangle]
pub unsafe extern "C" fn charms_sds_to_pair(
    sds: *const CharmsSds,
    a_out: *mut i64,
    b_out: *mut i64,
) -> CharmsStatus {
    guard(|| {
        if sds.is_null() || a_out.is_null() || b_out.is_null() {
            return CharmsStatus::NullArgument;
        }
        let pair = unsafe { (*sds).inner.to_pair() };
        unsafe {
            write_out(a_out, pair.a().entries());
            write_out(b_out, pair.b().entries());
        }
        CharmsStatus::Ok
    })
}

/// Releases a handle from [`charms_sds_new`]. Null is ignored.
///
/// # Safety
/// `sds` was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn charms_sds_free(sds: *mut CharmsSds) {
    if !sds.is_null() {
        drop(unsafe { Box::from_raw(sds) });
    }
}

fn group(allow_negation: bool, allow_swap: bool) -> EquivalenceGroup {
    EquivalenceGroup {
        allow_negation,
        allow_swap,
    }
}

fn pair_from(a: &[i64], b: &[i64]) -> Result<BinaryPair, charms::Error> {
    BinaryPair::new(
        BinarySequence::new(a.to_vec())?,
        BinarySequence::new(b.to_vec())?,
    )
}

/// Tests two +/-1 pairs of common length `len` for equivalence under
/// simultaneous decimation with per-side rotation and reversal, optionally
/// extended by per-side negation and side swap.
///
/// # Safety
/// The four sequence pointers cover `len` elements; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn charms_pairs_equivalent(
    a1: *const i64,
    b1: *const i64,
    a2: *const i64,
    b2: *const i64,
    len: usize,
    allow_negation: bool,
    allow_swap: bool,
    out: *mut bool,
) -> CharmsStatus {
    guard(|| {
        let (Some(a1), Some(b1), Some(a2), Some(b2), false) = (
            unsafe { slice_in(a1, len) },
            unsafe { slice_in(b1, len) },
            unsafe { slice_in(a2, len) },
            unsafe { slice_in(b2, len) },
            out.is_null(),
        ) else {
            return CharmsStatus::NullArgument;
        };
        let (Ok(first), Ok(second)) = (pair_from(a1, b1), pair_from(a2, b2)) else {
            return CharmsStatus::InvalidInput;
        };
        match group(allow_negation, allow_swap).are_equivalent(&first, &second) {
            Ok(answer) => {
                unsafe { *out = answer };
                CharmsStatus::Ok
            }
            Err(_) => CharmsStatus::InvalidInput,
        }
    })
}

/// Writes the canonical form of a +/-1 pair under the same group as
/// [`charms_pairs_equivalent`] into `a_out`, `b_out` (each `len` slots).
///
/// # Safety
/// All pointers cover `len` elements.
#[no_mangle]
pub unsafe extern "C" fn charms_pair_canonical(
    a: *const i64,
    b: *const i64,
    len: usize,
    allow_negation: bool,
    allow_swap: bool,
    a_out: *mut i64,
    b_out: *mut i64,
) -> CharmsStatus {
    guard(|| {
        let (Some(a), Some(b), false, false) = (
            unsafe { slice_in(a, len) },
            unsafe { slice_in(b, len) },
            a_out.is_null(),
            b_out.is_null(),
        ) else {
            return CharmsStatus::NullArgument;
        };
        let Ok(pair) = pair_from(a, b) else {
            return CharmsStatus::InvalidInput;
        };
        let canon = group(allow_negation, allow_swap).canonical_form(&pair);
        unsafe {
            write_out(a_out, canon.a().entries());
            write_out(b_out, canon.b().entries());
        }
        CharmsStatus::Ok
    })
}

/// Runs the staged periodic Golay pair search at length `v`. `m` of 0
/// selects the default compression factor 2; a negative `psd_tolerance`
/// selects the default filter tolerance. On success `*out` owns the
/// report handle.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn charms_search_run(
    v: usize,
    m: usize,
    psd_tolerance: f64,
    out: *mut *mut CharmsSearchReport,
) -> CharmsStatus {
    guard(|| {
        if out.is_null() {
            return CharmsStatus::NullArgument;
        }
        let mut config = SearchConfig::new(v);
        if m != 0 {
            config.m = m;
        }
        if psd_tolerance >= 0.0 {
            config.psd_tolerance = psd_tolerance;
        }
        match run_search(&config) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(CharmsSearchReport { inner })) };
                CharmsStatus::Ok
            }
            Err(_) => CharmsStatus::InvalidInput,
        }
    })
}

/// Number of distinct pairs in the report; 0 for a null handle.
///
/// # Safety
/// `report` is a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn charms_search_pair_count(report: *const CharmsSearchReport) -> usize {
    if report.is_null() {
        return 0;
    }
    catch_unwind(AssertUnwindSafe(|| unsafe { (*report).inner.pairs.len() })).unwrap_or(0)
}

/// Full sequence length of the searched pairs; 0 for a null handle.
///
/// # Safety
/// `report` is a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn charms_search_pair_len(report: *const CharmsSearchReport) -> usize {
    if report.is_null() {
        return 0;
    }
    catch_unwind(AssertUnwindSafe(|| unsafe { (*report).inner.v })).unwrap_or(0)
}

/// Writes pair `index` of the report into `a_out`, `b_out`, each covering
/// [`charms_search_pair_len`] elements.
///
/// # Safety
/// `report` is a live handle; the out buffers are large enough.
#[no_mangle]
pub unsafe extern "C" fn charms_search_pair(
    report: *const CharmsSearchReport,
    index: usize,
    a_out: *mut i64,
    b_out: *mut i64,
) -> CharmsStatus {
    guard(|| {
        if report.is_null() || a_out.is_null() || b_out.is_null() {
            return CharmsStatus::NullArgument;
        }
        let report = unsafe { &(*report).inner };
        let Some(found) = report.pairs.get(index) else {
            return CharmsStatus::OutOfRange;
        };
        let (Ok(a), Ok(b)) = (parse_signs(&found.a), parse_signs(&found.b)) else {
            return CharmsStatus::InvalidInput;
        };
        unsafe {
            write_out(a_out, a.entries());
            write_out(b_out, b.entries());
        }
        CharmsStatus::Ok
    })
}

/// Serializes the report as JSON. Always stores the required buffer size
/// (including the NUL) in `needed` when it is non-null; writes the text
/// only when `buf` has room.
///
/// # Safety
/// `report` is a live handle; `buf` covers `buf_len` bytes when non-null.
#[no_mangle]
pub unsafe extern "C" fn charms_search_report_json(
    report: *const CharmsSearchReport,
    buf: *mut c_char,
    buf_len: usize,
    needed: *mut usize,
) -> CharmsStatus {
    guard(|| {
        if report.is_null() {
            return CharmsStatus::NullArgument;
        }
        let json = match serde_json::to_string(unsafe { &(*report).inner }) {
            Ok(json) => json,
            Err(_) => return CharmsStatus::InvalidInput,
        };
        if !needed.is_null() {
            unsafe { *needed = json.len() + 1 };
        }
        if buf.is_null() {
            return CharmsStatus::BufferTooSmall;
        }
        unsafe { write_c_string(&json, buf, buf_len) }
    })
}

/// Releases a handle from [`charms_search_run`]. Null is ignored.
///
/// # Safety
/// `report` was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn charms_search_report_free(report: *mut CharmsSearchReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}
