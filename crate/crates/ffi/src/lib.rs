//! C ABI over `catalan-poset`.
//!
//! Conventions:
//! * every fallible function returns a [`CpStatus`]; results go through out-pointers;
//! * heavy objects are opaque handles created by `*_new`/`*_build` and released
//!   with the matching `*_free`;
//! * text results are copied into caller buffers. `written` always receives the
//!   length the full text needs (excluding the NUL); when it does not fit, the
//!   call returns `CP_STATUS_BUFFER_TOO_SMALL`, the buffer is left untouched
//!   and the last error message is preserved (so it can itself be sized);
//! * the message of the most recent error on the calling thread is available
//!   from [`cp_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::ptr;

use catalan_poset::census::DescentCensus;
use catalan_poset::partition::NcpIter;
use catalan_poset::perm::Av132Iter;
use catalan_poset::poset::antichain::{max_antichain, max_k_antichain_union};
use catalan_poset::poset::duality::{
    construct_antiautomorphism, verify_antiautomorphism, AntiAutomorphism,
};
use catalan_poset::poset::export::{to_dot, to_json, Family};
use catalan_poset::verify::{run_check, Check};
use catalan_poset::{
    build_poset_p, build_poset_q, count_by_descent_set_lemma, enumerate_av132, enumerate_ncp,
    ncp_to_perm, perm_to_ncp, DescentSet, Error, GradedPoset, NoncrossingPartition, Permutation,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpStatus {
    Ok = 0,
    NullPointer = 1,
    Validation = 2,
    Domain = 3,
    Capacity = 4,
    Overflow = 5,
    Parse = 6,
    Consistency = 7,
    BufferTooSmall = 8,
    InvalidArgument = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpFamily {
    /// 132-avoiding permutations ordered by descent sets.
    P = 0,
    /// Noncrossing partitions ordered by refinement.
    Q = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpKind {
    Av132 = 0,
    Ncp = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpCheck {
    Coarsening = 0,
    Ranks = 1,
    Lemma = 2,
    SelfDual = 3,
    Sperner = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpExportFormat {
    Json = 0,
    Dot = 1,
}

enum AnyPoset {
    P(GradedPoset<Permutation>),
    Q(GradedPoset<NoncrossingPartition>),
}

/// Opaque handle to a built poset.
pub struct CpPoset {
    n: usize,
    inner: AnyPoset,
}

/// Opaque handle to a descent-set census.
pub struct CpCensus {
    inner: DescentCensus,
}

enum AnyIter {
    Av132(Av132Iter),
    Ncp(NcpIter),
}

/// Opaque enumeration cursor.
pub struct CpEnumerator {
    inner: AnyIter,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn fail(e: Error) -> CpStatus {
    let status = match e {
        Error::Validation(_) => CpStatus::Validation,
        Error::Domain(_) => CpStatus::Domain,
        Error::Capacity { .. } => CpStatus::Capacity,
        Error::Overflow(_) => CpStatus::Overflow,
        Error::Parse(_) => CpStatus::Parse,
        Error::Consistency(_) => CpStatus::Consistency,
    };
    set_error(e.to_string());
    status
}

fn null_arg(name: &str) -> CpStatus {
    set_error(format!("{name} is NULL"));
    CpStatus::NullPointer
}

macro_rules! try_cp {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return fail(err),
        }
    };
}

/// # Safety
/// `s` must be NULL or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, name: &str) -> Result<&'a str, CpStatus> {
    if s.is_null() {
        return Err(null_arg(name));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(format!("{name} is not valid UTF-8"));
        CpStatus::Parse
    })
}

/// # Safety
/// `buf` must be NULL or point to `cap` writable bytes; `written` must be NULL or writable.
unsafe fn write_text(text: &str, buf: *mut c_char, cap: usize, written: *mut usize) -> CpStatus {
    if !written.is_null() {
        *written = text.len();
    }
    if buf.is_null() || cap < text.len() + 1 {
        return CpStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
    *buf.add(text.len()) = 0;
    CpStatus::Ok
}

/// Copies the last error message of the calling thread into `buf`.
///
/// # Safety
/// `buf` must point to `cap` writable bytes; `written` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn cp_last_error_message(
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> CpStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    write_text(&msg, buf, cap, written)
}

/// Catalan number `C_n`; `CP_STATUS_OVERFLOW` when it exceeds 64 bits.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cp_catalan(n: u32, out: *mut u64) -> CpStatus {
    if out.is_null() {
        return null_arg("out");
    }
    let v = try_cp!(catalan_poset::catalan(n as u64));
    match u64::try_from(v) {
        Ok(v) => {
            *out = v;
            CpStatus::Ok
        }
        Err(_) => fail(Error::Overflow(format!("catalan({n}) as u64"))),
    }
}

/// Narayana number `N(n, k)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cp_narayana(n: u32, k: u32, out: *mut u64) -> CpStatus {
    if out.is_null() {
        return null_arg("out");
    }
    let v = try_cp!(catalan_poset::narayana(n as u64, k as u64));
    match u64::try_from(v) {
        Ok(v) => {
            *out = v;
            CpStatus::Ok
        }
        Err(_) => fail(Error::Overflow(format!("narayana({n}, {k}) as u64"))),
    }
}

/// Partition text (`{1,4,6}/{2,3}/{5}/{7,8}`) to permutation text.
///
/// # Safety
/// `partition` must be a NUL-terminated string; see the module docs for `buf`/`written`.
#[no_mangle]
pub unsafe extern "C" fn cp_map_f(
    partition: *const c_char,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> CpStatus {
    let s = match read_str(partition, "partition") {
        Ok(s) => s,
        Err(st) => return st,
    };
    let q: NoncrossingPartition = try_cp!(s.parse());
    write_text(&ncp_to_perm(&q).to_string(), buf, cap, written)
}

/// Permutation text (`64573812` or comma-separated) to partition text.
///
/// # Safety
/// `permutation` must be a NUL-terminated string; see the module docs for `buf`/`written`.
#[no_mangle]
pub unsafe extern "C" fn cp_map_finv(
    permutation: *const c_char,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> CpStatus {
    let s = match read_str(permutation, "permutation") {
        Ok(s) => s,
        Err(st) => return st,
    };
    let p: Permutation = try_cp!(s.parse());
    let q = try_cp!(perm_to_ncp(&p));
    write_text(&q.to_string(), buf, cap, written)
}

/// Starts an enumeration of Av132(n) or NC(n) in canonical order.
///
/// # Safety
/// `out` must be writable. Release the cursor with [`cp_enumerator_free`].
#[no_mangle]
pub unsafe extern "C" fn cp_enumerator_new(
    kind: CpKind,
    n: u32,
    out: *mut *mut CpEnumerator,
) -> CpStatus {
    if out.is_null() {
        return null_arg("out");
    }
    let inner = match kind {
        CpKind::Av132 => AnyIter::Av132(try_cp!(enumerate_av132(n as usize))),
        CpKind::Ncp => AnyIter::Ncp(try_cp!(enumerate_ncp(n as usize))),
    };
    *out = Box::into_raw(Box::new(CpEnumerator { inner }));
    CpStatus::Ok
}

/// Writes the next object's text form into `buf` and sets `*has_item`. At the
/// end `*has_item` is false and the buffer is untouched. If the buffer is too
/// small the item is not consumed.
///
/// # Safety
/// `it` must come from [`cp_enumerator_new`]; `has_item` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cp_enumerator_next(
    it: *mut CpEnumerator,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
    has_item: *mut bool,
) -> CpStatus {
    if it.is_null() {
        return null_arg("it");
    }
    if has_item.is_null() {
        return null_arg("has_item");
    }
    let it = &mut *it;
    // Peek on a clone so a short buffer does not lose the item.
    let next = match &it.inner {
        AnyIter::Av132(i) => i.clone().next().map(|p| p.to_string()),
        AnyIter::Ncp(i) => i.clone().next().map(|q| q.to_string()),
    };
    let Some(text) = next else {
        *has_item = false;
        return CpStatus::Ok;
    };
    let st = write_text(&text, buf, cap, written);
    if st == CpStatus::Ok {
        match &mut it.inner {
            AnyIter::Av132(i) => {
                i.next();
            }
            AnyIter::Ncp(i) => {
                i.next();
            }
        }
        *has_item = true;
    }
    st
}

/// # Safety
/// `it` must be NULL or come from [`cp_enumerator_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cp_enumerator_free(it: *mut CpEnumerator) {
    if !it.is_null() {
        drop(Box::from_raw(it));
    }
}

/// Builds P_n or Q_n with its full order matrix and Hasse diagram.
///
/// # Safety
/// `out` must be writable. Release the poset with [`cp_poset_free`].
#[no_mangle]
pub unsafe extern "C" fn cp_poset_build(
    family: CpFamily,
    n: u32,
    out: *mut *mut CpPoset,
) -> CpStatus {
    if out.is_null() {
        return null_arg("out");
    }
    let n = n as usize;
    let inner = match family {
        CpFamily::P => AnyPoset::P(try_cp!(build_poset_p(n))),
        CpFamily::Q => AnyPoset::Q(try_cp!(build_poset_q(n))),
    };
    *out = Box::into_raw(Box::new(CpPoset { n, inner }));
    CpStatus::Ok
}

/// # Safety
/// `poset` must be NULL or come from [`cp_poset_build`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_free(poset: *mut CpPoset) {
    if !poset.is_null() {
        drop(Box::from_raw(poset));
    }
}

macro_rules! with_poset {
    ($poset:expr, |$p:ident| $body:expr) => {
        match &$poset.inner {
            AnyPoset::P($p) => $body,
            AnyPoset::Q($p) => $body,
        }
    };
}

/// # Safety
/// `poset` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_len(poset: *const CpPoset) -> usize {
    poset.as_ref().map_or(0, |ps| with_poset!(ps, |p| p.len()))
}

/// # Safety
/// `poset` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_cover_count(poset: *const CpPoset) -> usize {
    poset
        .as_ref()
        .map_or(0, |ps| with_poset!(ps, |p| p.covers().len()))
}

/// Copies the covers as `(lower, upper)` index pairs into `pairs`, which must
/// hold `2 * cp_poset_cover_count(poset)` entries.
///
/// # Safety
/// `pairs` must point to `cap` writable `size_t`s.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_covers(
    poset: *const CpPoset,
    pairs: *mut usize,
    cap: usize,
) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    let covers = with_poset!(ps, |p| p.covers());
    if pairs.is_null() || cap < 2 * covers.len() {
        set_error(format!("pairs needs {} entries", 2 * covers.len()));
        return CpStatus::BufferTooSmall;
    }
    for (i, &(a, b)) in covers.iter().enumerate() {
        *pairs.add(2 * i) = a;
        *pairs.add(2 * i + 1) = b;
    }
    CpStatus::Ok
}

/// # Safety
/// `poset` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_rank(
    poset: *const CpPoset,
    index: usize,
    out: *mut usize,
) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    if out.is_null() {
        return null_arg("out");
    }
    let len = with_poset!(ps, |p| p.len());
    if index >= len {
        set_error(format!("index {index} out of range 0..{len}"));
        return CpStatus::InvalidArgument;
    }
    *out = with_poset!(ps, |p| p.rank(index));
    CpStatus::Ok
}

/// `*out = element i <= element j`.
///
/// # Safety
/// `poset` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_leq(
    poset: *const CpPoset,
    i: usize,
    j: usize,
    out: *mut bool,
) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    if out.is_null() {
        return null_arg("out");
    }
    let len = with_poset!(ps, |p| p.len());
    if i >= len || j >= len {
        set_error(format!("index out of range 0..{len}"));
        return CpStatus::InvalidArgument;
    }
    *out = with_poset!(ps, |p| p.leq(i, j));
    CpStatus::Ok
}

/// Text form of element `index`.
///
/// # Safety
/// `poset` must be a live handle; see the module docs for `buf`/`written`.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_element(
    poset: *const CpPoset,
    index: usize,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    let text = match &ps.inner {
        AnyPoset::P(p) => p.elements().get(index).map(ToString::to_string),
        AnyPoset::Q(q) => q.elements().get(index).map(ToString::to_string),
    };
    match text {
        Some(t) => write_text(&t, buf, cap, written),
        None => {
            set_error(format!("index {index} out of range"));
            CpStatus::InvalidArgument
        }
    }
}

/// JSON or DOT export of the poset.
///
/// # Safety
/// `poset` must be a live handle; see the module docs for `buf`/`written`.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_export(
    poset: *const CpPoset,
    format: CpExportFormat,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    let text = match (&ps.inner, format) {
        (AnyPoset::P(p), CpExportFormat::Json) => to_json(ps.n, Family::P, p),
        (AnyPoset::P(p), CpExportFormat::Dot) => to_dot(ps.n, Family::P, p),
        (AnyPoset::Q(q), CpExportFormat::Json) => to_json(ps.n, Family::Q, q),
        (AnyPoset::Q(q), CpExportFormat::Dot) => to_dot(ps.n, Family::Q, q),
    };
    write_text(&text, buf, cap, written)
}

/// Size of a largest antichain.
///
/// # Safety
/// `poset` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_width(poset: *const CpPoset, out: *mut usize) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    if out.is_null() {
        return null_arg("out");
    }
    *out = try_cp!(with_poset!(ps, |p| max_antichain(p)));
    CpStatus::Ok
}

/// Largest union of `k` antichains.
///
/// # Safety
/// `poset` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_k_antichain_union(
    poset: *const CpPoset,
    k: usize,
    out: *mut usize,
) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    if out.is_null() {
        return null_arg("out");
    }
    *out = try_cp!(with_poset!(ps, |p| max_k_antichain_union(p, k)));
    CpStatus::Ok
}

/// Writes the order-reversing bijection of P_n (`mapping[i]` is the image of
/// element `i`). Q handles are rejected with `CP_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// `mapping` must point to `cap` writable `size_t`s.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_antiautomorphism(
    poset: *const CpPoset,
    mapping: *mut usize,
    cap: usize,
) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    let AnyPoset::P(p) = &ps.inner else {
        set_error("anti-automorphism construction needs a P poset");
        return CpStatus::InvalidArgument;
    };
    let m = try_cp!(construct_antiautomorphism(p));
    if mapping.is_null() || cap < p.len() {
        set_error(format!("mapping needs {} entries", p.len()));
        return CpStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(m.mapping().as_ptr(), mapping, p.len());
    CpStatus::Ok
}

/// `*out` = whether `mapping` (length `len`) is a bijection reversing the order.
///
/// # Safety
/// `mapping` must point to `len` readable `size_t`s and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn cp_poset_verify_antiautomorphism(
    poset: *const CpPoset,
    mapping: *const usize,
    len: usize,
    out: *mut bool,
) -> CpStatus {
    let Some(ps) = poset.as_ref() else {
        return null_arg("poset");
    };
    if mapping.is_null() && len > 0 {
        return null_arg("mapping");
    }
    if out.is_null() {
        return null_arg("out");
    }
    let m = if len == 0 {
        AntiAutomorphism::new(Vec::new())
    } else {
        AntiAutomorphism::new(std::slice::from_raw_parts(mapping, len).to_vec())
    };
    *out = with_poset!(ps, |p| verify_antiautomorphism(p, &m));
    CpStatus::Ok
}

/// Census of 132-avoiding permutations of `{1..n}` by descent set.
///
/// # Safety
/// `out` must be writable. Release with [`cp_census_free`].
#[no_mangle]
pub unsafe extern "C" fn cp_census_build(n: u32, out: *mut *mut CpCensus) -> CpStatus {
    if out.is_null() {
        return null_arg("out");
    }
    let inner = try_cp!(DescentCensus::build(n as usize));
    *out = Box::into_raw(Box::new(CpCensus { inner }));
    CpStatus::Ok
}

/// Count for the descent set with bit mask `mask` (bit `i-1` = position `i`).
///
/// # Safety
/// `census` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cp_census_count(
    census: *const CpCensus,
    mask: u64,
    out: *mut u64,
) -> CpStatus {
    let Some(c) = census.as_ref() else {
        return null_arg("census");
    };
    if out.is_null() {
        return null_arg("out");
    }
    let s = try_cp!(DescentSet::from_mask(c.inner.n(), mask));
    *out = c.inner.count(&s);
    CpStatus::Ok
}

/// CSV rendering (`descent_set_text,size,count`).
///
/// # Safety
/// `census` must be a live handle; see the module docs for `buf`/`written`.
#[no_mangle]
pub unsafe extern "C" fn cp_census_csv(
    census: *const CpCensus,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> CpStatus {
    let Some(c) = census.as_ref() else {
        return null_arg("census");
    };
    let mut bytes = Vec::new();
    try_cp!(c.inner.write_csv(&mut bytes));
    let text = String::from_utf8(bytes).expect("csv output is ASCII");
    write_text(&text, buf, cap, written)
}

/// # Safety
/// `census` must be NULL or come from [`cp_census_build`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cp_census_free(census: *mut CpCensus) {
    if !census.is_null() {
        drop(Box::from_raw(census));
    }
}

/// Count of 132-avoiding permutations with descent set `mask` via the
/// recursive first-run reduction (no enumeration).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cp_count_by_descent_set(n: u32, mask: u64, out: *mut u64) -> CpStatus {
    if out.is_null() {
        return null_arg("out");
    }
    let s = try_cp!(DescentSet::from_mask(n as usize, mask));
    *out = try_cp!(count_by_descent_set_lemma(n as usize, &s));
    CpStatus::Ok
}

/// Runs one exhaustive check. `*violations == 0` means it passed.
///
/// # Safety
/// `examined` and `violations` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cp_verify(
    check: CpCheck,
    n: u32,
    examined: *mut u64,
    violations: *mut u64,
) -> CpStatus {
    if examined.is_null() || violations.is_null() {
        return null_arg("examined/violations");
    }
    let check = match check {
        CpCheck::Coarsening => Check::Coarsening,
        CpCheck::Ranks => Check::Ranks,
        CpCheck::Lemma => Check::Lemma,
        CpCheck::SelfDual => Check::SelfDual,
        CpCheck::Sperner => Check::Sperner,
    };
    let report = try_cp!(run_check(check, n as usize));
    *examined = report.examined;
    *violations = report.violations.len() as u64;
    CpStatus::Ok
}
