//! C ABI for the ternion library.
//!
//! Callers work with opaque handles (`TnRing`, `TnEnumeration`) and status
//! codes; every failing call stores a human-readable message retrievable via
//! [`tn_last_error_message`] on the same thread. Strings returned through
//! `char **` out-parameters are owned by the caller and must be released with
//! [`tn_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ternion::classify::{decompose, radical_signature};
use ternion::field::{build_field, FieldSpec};
use ternion::projective::{induced_factorization, ordinary_factorization, CoreContext};
use ternion::report;
use ternion::ring::{Elem, FiniteRing};
use ternion::submodule::{enumerate_nonunimodular_free, CyclicSubmodule};
use ternion::ternion::{build_ternions, TernionRing};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TnStatus {
    Ok = 0,
    NullArgument,
    InvalidArgument,
    RingAxiom,
    Field,
    Parse,
    BudgetExceeded,
    Inconsistent,
    CoreUnavailable,
    BufferTooSmall,
    Utf8,
}

/// Report kinds understood by [`tn_report_json`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TnReportKind {
    Ideals = 0,
    Enumerate,
    Classify,
    Factorize,
}

/// Opaque ring handle.
pub struct TnRing {
    ring: FiniteRing,
    ternions: Option<TernionRing>,
}

/// Opaque enumeration handle: the submodules plus each one's radical
/// signature when it is well defined.
pub struct TnEnumeration {
    submodules: Vec<CyclicSubmodule>,
    signatures: Vec<Option<usize>>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("error message had NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: TnStatus, msg: impl std::fmt::Display) -> TnStatus {
    set_error(msg.to_string());
    status
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Crate version as a static string.
#[no_mangle]
pub extern "C" fn tn_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

fn box_out<T>(value: T, out: *mut *mut T) -> TnStatus {
    unsafe { *out = Box::into_raw(Box::new(value)) };
    TnStatus::Ok
}

fn prime_power(q: u32) -> Result<(u16, u32), String> {
    if q < 2 {
        return Err(format!("order {q} must be at least 2"));
    }
    let p = (2..=q).find(|d| q % d == 0).expect("q >= 2 has a divisor");
    let mut k = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(format!("{q} is not a prime power"));
    }
    Ok((p as u16, k))
}

/// Builds the ternion ring T(q) for a prime power q.
///
/// # Safety
/// `out` must be a valid pointer; on success it receives a handle that must
/// be released with [`tn_ring_free`].
#[no_mangle]
pub unsafe extern "C" fn tn_ring_new_ternion(q: u32, out: *mut *mut TnRing) -> TnStatus {
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    let (p, k) = match prime_power(q) {
        Ok(pk) => pk,
        Err(m) => return fail(TnStatus::InvalidArgument, m),
    };
    let field = match build_field(&FieldSpec::new(p, k)) {
        Ok(f) => f,
        Err(e) => return fail(TnStatus::Field, e),
    };
    match build_ternions(&field) {
        Ok(t) => box_out(
            TnRing {
                ring: t.ring().clone(),
                ternions: Some(t),
            },
            out,
        ),
        Err(e) => fail(TnStatus::RingAxiom, e),
    }
}

/// Builds the Galois field GF(p^k).
///
/// # Safety
/// `out` must be a valid pointer; release the handle with [`tn_ring_free`].
#[no_mangle]
pub unsafe extern "C" fn tn_ring_new_field(p: u32, k: u32, out: *mut *mut TnRing) -> TnStatus {
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    if p > u16::MAX as u32 {
        return fail(TnStatus::InvalidArgument, "characteristic too large");
    }
    match build_field(&FieldSpec::new(p as u16, k)) {
        Ok(f) => box_out(
            TnRing {
                ring: f,
                ternions: None,
            },
            out,
        ),
        Err(e) => fail(TnStatus::Field, e),
    }
}

/// Loads a ring from Cayley-table text (the same format the CLI emits).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_from_table_text(
    text: *const c_char,
    out: *mut *mut TnRing,
) -> TnStatus {
    if text.is_null() || out.is_null() {
        return fail(TnStatus::NullArgument, "text or out pointer is null");
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(e) => return fail(TnStatus::Utf8, e),
    };
    match ternion::cayley::load_ring(text) {
        Ok((ring, _perm)) => box_out(
            TnRing {
                ring,
                ternions: None,
            },
            out,
        ),
        Err(ternion::cayley::CayleyError::Parse { .. }) => {
            fail(TnStatus::Parse, "table text does not parse")
        }
        Err(e) => fail(TnStatus::RingAxiom, e),
    }
}

/// Releases a ring handle. Accepts null.
///
/// # Safety
/// `ring` must be null or a pointer previously returned by a constructor,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_free(ring: *mut TnRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_order(ring: *const TnRing) -> usize {
    ring.as_ref().map_or(0, |r| r.ring.order())
}

unsafe fn table_entry(
    ring: *const TnRing,
    a: u16,
    b: u16,
    out: *mut u16,
    op: impl Fn(&FiniteRing, Elem, Elem) -> Elem,
) -> TnStatus {
    let Some(handle) = ring.as_ref() else {
        return fail(TnStatus::NullArgument, "ring handle is null");
    };
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    let n = handle.ring.order();
    if (a as usize) >= n || (b as usize) >= n {
        return fail(
            TnStatus::InvalidArgument,
            format!("element index out of range [0, {n})"),
        );
    }
    *out = op(&handle.ring, Elem(a), Elem(b)).0;
    TnStatus::Ok
}

/// a + b.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_add(
    ring: *const TnRing,
    a: u16,
    b: u16,
    out: *mut u16,
) -> TnStatus {
    table_entry(ring, a, b, out, FiniteRing::add)
}

/// a * b.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_mul(
    ring: *const TnRing,
    a: u16,
    b: u16,
    out: *mut u16,
) -> TnStatus {
    table_entry(ring, a, b, out, FiniteRing::mul)
}

/// Number of units.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_unit_count(ring: *const TnRing, out: *mut usize) -> TnStatus {
    let Some(handle) = ring.as_ref() else {
        return fail(TnStatus::NullArgument, "ring handle is null");
    };
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    *out = handle.ring.units().len();
    TnStatus::Ok
}

/// Number of zero divisors, with or without zero itself.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_zero_divisor_count(
    ring: *const TnRing,
    include_zero: bool,
    out: *mut usize,
) -> TnStatus {
    let Some(handle) = ring.as_ref() else {
        return fail(TnStatus::NullArgument, "ring handle is null");
    };
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    let with_zero = handle.ring.zero_divisors().len();
    *out = if include_zero {
        with_zero
    } else {
        with_zero.saturating_sub(1)
    };
    TnStatus::Ok
}

/// Writes the sorted Jacobson radical into `buf` and its length into `len`.
/// Call with `cap = 0` to query the length alone.
///
/// # Safety
/// `ring` and `len` must be valid; `buf` must point to at least `cap`
/// writable entries unless `cap` is 0.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_radical(
    ring: *const TnRing,
    buf: *mut u16,
    cap: usize,
    len: *mut usize,
) -> TnStatus {
    let Some(handle) = ring.as_ref() else {
        return fail(TnStatus::NullArgument, "ring handle is null");
    };
    if len.is_null() {
        return fail(TnStatus::NullArgument, "len pointer is null");
    }
    let radical = match handle.ring.jacobson_radical() {
        Ok(r) => r.indices(),
        Err(e) => return fail(TnStatus::Inconsistent, e),
    };
    *len = radical.len();
    if cap == 0 {
        return TnStatus::Ok;
    }
    if buf.is_null() {
        return fail(TnStatus::NullArgument, "buf pointer is null");
    }
    if cap < radical.len() {
        return fail(
            TnStatus::BufferTooSmall,
            format!("need {} entries, got {cap}", radical.len()),
        );
    }
    ptr::copy_nonoverlapping(radical.as_ptr(), buf, radical.len());
    TnStatus::Ok
}

/// Emits the Cayley tables in the plain-text file format; free the string
/// with [`tn_string_free`].
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_ring_table_text(
    ring: *const TnRing,
    out: *mut *mut c_char,
) -> TnStatus {
    let Some(handle) = ring.as_ref() else {
        return fail(TnStatus::NullArgument, "ring handle is null");
    };
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    let text = ternion::cayley::write_tables(&handle.ring);
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            TnStatus::Ok
        }
        Err(e) => fail(TnStatus::Utf8, e),
    }
}

/// Releases a string returned by this library. Accepts null.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library, not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn tn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Enumerates the free cyclic submodules of R^rank with only non-unimodular
/// generators.
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer; release the
/// result with [`tn_enumeration_free`].
#[no_mangle]
pub unsafe extern "C" fn tn_enumerate(
    ring: *const TnRing,
    rank: usize,
    budget: u64,
    out: *mut *mut TnEnumeration,
) -> TnStatus {
    let Some(handle) = ring.as_ref() else {
        return fail(TnStatus::NullArgument, "ring handle is null");
    };
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    if rank < 2 {
        return fail(TnStatus::InvalidArgument, "rank must be at least 2");
    }
    let enumeration = match enumerate_nonunimodular_free(&handle.ring, rank, budget) {
        Ok(e) => e,
        Err(e) => return fail(TnStatus::BudgetExceeded, e),
    };
    let signatures: Vec<Option<usize>> = match handle.ring.jacobson_radical() {
        Ok(radical) => enumeration
            .submodules
            .iter()
            .map(|s| {
                let mut sigs = s.generators().iter().map(|g| radical_signature(g, radical));
                let first = sigs.next().expect("at least one generator");
                sigs.all(|sig| sig == first).then_some(first)
            })
            .collect(),
        Err(_) => vec![None; enumeration.submodules.len()],
    };
    box_out(
        TnEnumeration {
            submodules: enumeration.submodules,
            signatures,
        },
        out,
    )
}

/// Releases an enumeration handle. Accepts null.
///
/// # Safety
/// `e` must be null or a pointer returned by [`tn_enumerate`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tn_enumeration_free(e: *mut TnEnumeration) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Number of submodules, or 0 for a null handle.
///
/// # Safety
/// `e` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tn_enumeration_count(e: *const TnEnumeration) -> usize {
    e.as_ref().map_or(0, |e| e.submodules.len())
}

unsafe fn submodule_at<'a>(
    e: *const TnEnumeration,
    index: usize,
) -> Result<(&'a TnEnumeration, &'a CyclicSubmodule), TnStatus> {
    let Some(handle) = e.as_ref() else {
        return Err(fail(TnStatus::NullArgument, "enumeration handle is null"));
    };
    match handle.submodules.get(index) {
        Some(s) => Ok((handle, s)),
        None => Err(fail(
            TnStatus::InvalidArgument,
            format!("index {index} out of range [0, {})", handle.submodules.len()),
        )),
    }
}

/// Orbit size of one submodule.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_enumeration_orbit_size(
    e: *const TnEnumeration,
    index: usize,
    out: *mut usize,
) -> TnStatus {
    match submodule_at(e, index) {
        Ok((_, s)) if !out.is_null() => {
            *out = s.orbit_size();
            TnStatus::Ok
        }
        Ok(_) => fail(TnStatus::NullArgument, "out pointer is null"),
        Err(status) => status,
    }
}

/// Generator count of one submodule.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_enumeration_generator_count(
    e: *const TnEnumeration,
    index: usize,
    out: *mut usize,
) -> TnStatus {
    match submodule_at(e, index) {
        Ok((_, s)) if !out.is_null() => {
            *out = s.generators().len();
            TnStatus::Ok
        }
        Ok(_) => fail(TnStatus::NullArgument, "out pointer is null"),
        Err(status) => status,
    }
}

/// Writes the canonical generator's coordinates into `buf` and the rank into
/// `len`. Call with `cap = 0` to query the rank alone.
///
/// # Safety
/// `e` and `len` must be valid; `buf` must point to at least `cap` writable
/// entries unless `cap` is 0.
#[no_mangle]
pub unsafe extern "C" fn tn_enumeration_canonical_generator(
    e: *const TnEnumeration,
    index: usize,
    buf: *mut u16,
    cap: usize,
    len: *mut usize,
) -> TnStatus {
    let (_, s) = match submodule_at(e, index) {
        Ok(pair) => pair,
        Err(status) => return status,
    };
    if len.is_null() {
        return fail(TnStatus::NullArgument, "len pointer is null");
    }
    let coords = s.canonical_id().indices();
    *len = coords.len();
    if cap == 0 {
        return TnStatus::Ok;
    }
    if buf.is_null() {
        return fail(TnStatus::NullArgument, "buf pointer is null");
    }
    if cap < coords.len() {
        return fail(
            TnStatus::BufferTooSmall,
            format!("need {} entries, got {cap}", coords.len()),
        );
    }
    ptr::copy_nonoverlapping(coords.as_ptr(), buf, coords.len());
    TnStatus::Ok
}

/// Radical signature of one submodule's generators. Fails with
/// `Inconsistent` when the generators disagree or no radical is available.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_enumeration_signature(
    e: *const TnEnumeration,
    index: usize,
    out: *mut usize,
) -> TnStatus {
    let (handle, _) = match submodule_at(e, index) {
        Ok(pair) => pair,
        Err(status) => return status,
    };
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    match handle.signatures[index] {
        Some(sig) => {
            *out = sig;
            TnStatus::Ok
        }
        None => fail(
            TnStatus::Inconsistent,
            "signature is not well defined for this submodule",
        ),
    }
}

/// Number of submodules with the given radical signature.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_enumeration_class_size(
    e: *const TnEnumeration,
    signature: usize,
    out: *mut usize,
) -> TnStatus {
    let Some(handle) = e.as_ref() else {
        return fail(TnStatus::NullArgument, "enumeration handle is null");
    };
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    *out = handle
        .signatures
        .iter()
        .filter(|s| **s == Some(signature))
        .count();
    TnStatus::Ok
}

/// Runs the pipeline for the requested report and returns its canonical JSON;
/// free the string with [`tn_string_free`].
///
/// # Safety
/// `ring` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tn_report_json(
    ring: *const TnRing,
    kind: TnReportKind,
    rank: usize,
    budget: u64,
    out: *mut *mut c_char,
) -> TnStatus {
    let Some(handle) = ring.as_ref() else {
        return fail(TnStatus::NullArgument, "ring handle is null");
    };
    if out.is_null() {
        return fail(TnStatus::NullArgument, "out pointer is null");
    }
    let json = match report_json(handle, kind, rank, budget) {
        Ok(j) => j,
        Err((status, msg)) => return fail(status, msg),
    };
    match CString::new(json) {
        Ok(c) => {
            *out = c.into_raw();
            TnStatus::Ok
        }
        Err(e) => fail(TnStatus::Utf8, e),
    }
}

fn report_json(
    handle: &TnRing,
    kind: TnReportKind,
    rank: usize,
    budget: u64,
) -> Result<String, (TnStatus, String)> {
    let ring = &handle.ring;
    let err = |s: TnStatus, e: &dyn std::fmt::Display| (s, e.to_string());
    match kind {
        TnReportKind::Ideals => {
            let doc = report::IdealsDoc::new(ring).map_err(|e| err(TnStatus::Inconsistent, &e))?;
            Ok(report::to_json(&doc))
        }
        TnReportKind::Enumerate => {
            let e = enumerate_nonunimodular_free(ring, rank, budget)
                .map_err(|e| err(TnStatus::BudgetExceeded, &e))?;
            Ok(report::to_json(&report::submodule_docs(&e.submodules)))
        }
        TnReportKind::Classify => {
            let radical = ring
                .jacobson_radical()
                .map_err(|e| err(TnStatus::Inconsistent, &e))?;
            let e = enumerate_nonunimodular_free(ring, rank, budget)
                .map_err(|e| err(TnStatus::BudgetExceeded, &e))?;
            let classes =
                decompose(&e.submodules, radical).map_err(|e| err(TnStatus::Inconsistent, &e))?;
            Ok(report::to_json(&report::classify_doc(&classes)))
        }
        TnReportKind::Factorize => {
            let radical = ring
                .jacobson_radical()
                .map_err(|e| err(TnStatus::Inconsistent, &e))?;
            let e = enumerate_nonunimodular_free(ring, rank, budget)
                .map_err(|e| err(TnStatus::BudgetExceeded, &e))?;
            let classes =
                decompose(&e.submodules, radical).map_err(|e| err(TnStatus::Inconsistent, &e))?;
            let ctx = match &handle.ternions {
                Some(t) => CoreContext::for_ternions(t),
                None => CoreContext::for_generic(ring),
            }
            .map_err(|e| err(TnStatus::CoreUnavailable, &e))?;
            let induced =
                induced_factorization(&ctx, &classes).map_err(|e| err(TnStatus::CoreUnavailable, &e))?;
            let ordinary = ordinary_factorization(ctx.field(), rank);
            Ok(report::to_json(&report::factorize_doc(&induced, &ordinary)))
        }
    }
}
