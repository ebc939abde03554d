//! C interface to `semitop`.
//!
//! Spaces are opaque handles created by `semitop_space_from_json` or
//! `semitop_space_from_catalog` and released with `semitop_space_free`.
//! Every fallible call returns a `SemitopStatus`; on failure the message is
//! available from `semitop_last_error` on the same thread. Point sets cross
//! the boundary as 64-bit masks with bit `i` for point index `i`. Strings
//! returned through `char **` are owned by the caller and released with
//! `semitop_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use semitop::io::{read_spec, read_valuation, write_space};
use semitop::logic3::{parse, Model};
use semitop::solvers::{dimacs, dpll};
use semitop::{catalog, soberify, Analysis, Error, PointSet, Semitopology, WitnessFunction};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemitopStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    UnknownPoint = 5,
    UnknownCatalog = 6,
    OutOfRange = 7,
    Precondition = 8,
    Panic = 9,
}

pub const SEMITOP_REGULAR: u32 = 1 << 0;
pub const SEMITOP_WEAKLY_REGULAR: u32 = 1 << 1;
pub const SEMITOP_QUASIREGULAR: u32 = 1 << 2;
pub const SEMITOP_INDIRECTLY_REGULAR: u32 = 1 << 3;
pub const SEMITOP_UNCONFLICTED: u32 = 1 << 4;
pub const SEMITOP_CONFLICTED: u32 = 1 << 5;
pub const SEMITOP_HYPERTRANSITIVE: u32 = 1 << 6;
pub const SEMITOP_HYPERDEFINITE: u32 = 1 << 7;
pub const SEMITOP_MCN: u32 = 1 << 8;

/// Opaque handle to a finite semitopology.
pub struct SemitopSpace {
    space: Semitopology,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SemitopStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => SemitopStatus::Parse,
        Error::UnknownPoint(_) => SemitopStatus::UnknownPoint,
        Error::UnknownCatalog(_) => SemitopStatus::UnknownCatalog,
        Error::OutOfRange(_) | Error::BoundExceeded { .. } => SemitopStatus::OutOfRange,
        Error::Precondition(_) | Error::FreeVariable(_) | Error::NotHorn(_) => SemitopStatus::Precondition,
        Error::DuplicatePoint(_)
        | Error::NotSemitopology(_)
        | Error::InvalidWitness(_)
        | Error::InvalidSemiframe(_)
        | Error::InvalidSemifilter(_) => SemitopStatus::InvalidInput,
    }
}

enum Fail {
    Null(&'static str),
    Utf8,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SemitopStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SemitopStatus::Ok
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null argument `{}`", what));
            SemitopStatus::NullArgument
        }
        Ok(Err(Fail::Utf8)) => {
            set_error("string is not valid UTF-8".into());
            SemitopStatus::InvalidUtf8
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            SemitopStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Utf8)
}

unsafe fn space_arg<'a>(p: *const SemitopSpace) -> Result<&'a Semitopology, Fail> {
    p.as_ref().map(|h| &h.space).ok_or(Fail::Null("space"))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null(what))
}

fn point_arg(s: &Semitopology, p: usize) -> Result<usize, Fail> {
    if p < s.len() {
        Ok(p)
    } else {
        Err(Error::UnknownPoint(format!("#{}", p)).into())
    }
}

fn set_arg(s: &Semitopology, bits: u64) -> Result<PointSet, Fail> {
    let x = PointSet::from_bits(bits);
    if x.is_subset(s.universe()) {
        Ok(x)
    } else {
        Err(Error::OutOfRange(format!("mask {:#x} has bits beyond {} points", bits, s.len())).into())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn boxed(space: Semitopology) -> *mut SemitopSpace {
    Box::into_raw(Box::new(SemitopSpace { space }))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn semitop_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. The pointer stays valid until the next call on this
/// thread.
#[no_mangle]
pub extern "C" fn semitop_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn semitop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Load a space, a witness function or a semiframe from JSON. Witness
/// functions and semiframes are converted to their semitopology.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_space_from_json(json: *const c_char, out: *mut *mut SemitopSpace) -> SemitopStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let space = read_spec(str_arg(json, "json")?)?.space()?;
        *out = boxed(space);
        Ok(())
    })
}

/// A catalogued space. `n` is ignored by fixed figures.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_space_from_catalog(
    name: *const c_char,
    n: usize,
    out: *mut *mut SemitopSpace,
) -> SemitopStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = boxed(catalog(str_arg(name, "name")?, n)?);
        Ok(())
    })
}

/// # Safety
/// `space` must be NULL or a handle from this library that has not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn semitop_space_free(space: *mut SemitopSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of points, or 0 for NULL.
///
/// # Safety
/// `space` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn semitop_space_len(space: *const SemitopSpace) -> usize {
    space.as_ref().map_or(0, |h| h.space.len())
}

/// # Safety
/// `space` must be a live handle, `label` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_space_index_of(
    space: *const SemitopSpace,
    label: *const c_char,
    out: *mut usize,
) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        *out = s.index_of(str_arg(label, "label")?)?;
        Ok(())
    })
}

/// Canonical JSON for the space.
///
/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_space_to_json(space: *const SemitopSpace, out: *mut *mut c_char) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        *out = into_c_string(write_space(s));
        Ok(())
    })
}

/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_is_open(space: *const SemitopSpace, set: u64, out: *mut bool) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        *out = s.is_open(set_arg(s, set)?);
        Ok(())
    })
}

/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_interior(space: *const SemitopSpace, set: u64, out: *mut u64) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        *out = s.interior(set_arg(s, set)?).bits();
        Ok(())
    })
}

/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_closure(space: *const SemitopSpace, set: u64, out: *mut u64) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        *out = s.closure(set_arg(s, set)?).bits();
        Ok(())
    })
}

/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_intertwined(
    space: *const SemitopSpace,
    p: usize,
    q: usize,
    out: *mut bool,
) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        *out = s.intertwined(point_arg(s, p)?, point_arg(s, q)?);
        Ok(())
    })
}

/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_community(space: *const SemitopSpace, p: usize, out: *mut u64) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        *out = Analysis::new(s).community(point_arg(s, p)?).bits();
        Ok(())
    })
}

/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_kernel(space: *const SemitopSpace, p: usize, out: *mut u64) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        *out = Analysis::new(s).kernel(point_arg(s, p)?).bits();
        Ok(())
    })
}

/// Classification flags of a point as an OR of the `SEMITOP_*` bits.
///
/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_classify(space: *const SemitopSpace, p: usize, out: *mut u32) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        let c = Analysis::new(s).classify(point_arg(s, p)?)?;
        let bits = [
            (c.regular, SEMITOP_REGULAR),
            (c.weakly_regular, SEMITOP_WEAKLY_REGULAR),
            (c.quasiregular, SEMITOP_QUASIREGULAR),
            (c.indirectly_regular, SEMITOP_INDIRECTLY_REGULAR),
            (c.unconflicted, SEMITOP_UNCONFLICTED),
            (c.conflicted, SEMITOP_CONFLICTED),
            (c.hypertransitive, SEMITOP_HYPERTRANSITIVE),
            (c.hyperdefinite, SEMITOP_HYPERDEFINITE),
            (c.mcn, SEMITOP_MCN),
        ];
        *out = bits.iter().filter(|(on, _)| *on).fold(0, |acc, (_, b)| acc | b);
        Ok(())
    })
}

/// Soberification of the space as a new handle. `nbhd_out`, when not
/// NULL, receives the abstract point of each original point and must have
/// room for `semitop_space_len(space)` entries.
///
/// # Safety
/// `space` must be a live handle, `out` a valid pointer, and `nbhd_out`
/// NULL or a buffer of the stated length.
#[no_mangle]
pub unsafe extern "C" fn semitop_soberify(
    space: *const SemitopSpace,
    out: *mut *mut SemitopSpace,
    nbhd_out: *mut usize,
) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        let sob = soberify(s)?;
        if !nbhd_out.is_null() {
            std::slice::from_raw_parts_mut(nbhd_out, sob.nbhd.len()).copy_from_slice(&sob.nbhd);
        }
        *out = boxed(sob.space);
        Ok(())
    })
}

/// Evaluate a predicate under a valuation, written either as a string of
/// `T`, `B`, `F` in point order or as a JSON object from labels. The
/// result is the character `'T'`, `'B'` or `'F'`.
///
/// # Safety
/// `space` must be a live handle, `pred` and `valuation` NUL-terminated
/// strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_eval(
    space: *const SemitopSpace,
    pred: *const c_char,
    valuation: *const c_char,
    out: *mut c_char,
) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        let phi = parse(str_arg(pred, "pred")?, s.labels())?;
        let f = read_valuation(str_arg(valuation, "valuation")?, s.labels())?;
        let m = Model::with_witness(WitnessFunction::from_semitopology(s));
        *out = m.eval(&phi, &f)?.as_char() as c_char;
        Ok(())
    })
}

/// Whether a predicate is valid, i.e. designated under every continuous
/// valuation.
///
/// # Safety
/// `space` must be a live handle, `pred` a NUL-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_valid(space: *const SemitopSpace, pred: *const c_char, out: *mut bool) -> SemitopStatus {
    guard(|| {
        let s = space_arg(space)?;
        let out = out_arg(out, "out")?;
        let phi = parse(str_arg(pred, "pred")?, s.labels())?;
        let m = Model::with_witness(WitnessFunction::from_semitopology(s));
        let fs = m.continuous()?;
        *out = m.eval_each(&phi, &fs)?.iter().all(|v| v.designated());
        Ok(())
    })
}

/// Satisfiability of a DIMACS CNF.
///
/// # Safety
/// `dimacs_text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn semitop_sat(dimacs_text: *const c_char, out: *mut bool) -> SemitopStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let cnf = dimacs::parse(str_arg(dimacs_text, "dimacs_text")?)?;
        *out = dpll::solve(&cnf).is_some();
        Ok(())
    })
}

