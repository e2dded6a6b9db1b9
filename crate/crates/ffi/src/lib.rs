//! C ABI for `akcores`.
//!
//! Objects cross the boundary as opaque handles that the caller frees with the
//! matching `*_free` function. Every fallible call returns an [`AkStatus`];
//! on failure [`ak_last_error_message`] describes the problem. Strings handed
//! out by the library must be released with [`ak_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use akcores::blocks::{core_by_ops, CoreDescriptor};
use akcores::table::{BlockTable, Format};
use akcores::uglov::{is_core, tau, tau_inverse};
use akcores::weights::block_weight;
use akcores::{Error, Modulus, Multicharge, Multipartition, Partition};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidModulus = 4,
    LevelMismatch = 5,
    Domain = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AkFormat {
    Json = 0,
    Csv = 1,
    Markdown = 2,
}

/// Opaque multipartition.
pub struct AkMultipartition {
    inner: Multipartition,
}

/// Opaque core descriptor.
pub struct AkCore {
    inner: CoreDescriptor,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(AkStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let status = match err {
            Error::Parse(_) | Error::InvalidPartition(_) => AkStatus::Parse,
            Error::InvalidModulus(_) => AkStatus::InvalidModulus,
            Error::LevelMismatch { .. } => AkStatus::LevelMismatch,
            _ => AkStatus::Domain,
        };
        Failure(status, err.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> AkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            AkStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AkStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(AkStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(AkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_charge(charge: *const i64, len: usize) -> Result<Multicharge, Failure> {
    if len == 0 {
        return Ok(Multicharge::new(Vec::new()));
    }
    if charge.is_null() {
        return Err(null("charge"));
    }
    Ok(Multicharge::new(
        std::slice::from_raw_parts(charge, len).to_vec(),
    ))
}

unsafe fn read_mp<'a>(mp: *const AkMultipartition) -> Result<&'a Multipartition, Failure> {
    mp.as_ref()
        .map(|m| &m.inner)
        .ok_or_else(|| null("multipartition"))
}

fn modulus(e: i64) -> Result<Modulus, Failure> {
    Ok(Modulus::new(e)?)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library output has no nul bytes")
        .into_raw()
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ak_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn ak_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a multipartition written as JSON nested arrays, e.g. `[[3,1],[]]`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ak_multipartition_from_json(
    json: *const c_char,
    out: *mut *mut AkMultipartition,
) -> AkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = Multipartition::from_json(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(AkMultipartition { inner }));
        Ok(())
    })
}

/// # Safety
/// `mp` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn ak_multipartition_free(mp: *mut AkMultipartition) {
    if !mp.is_null() {
        drop(Box::from_raw(mp));
    }
}

/// JSON form of a multipartition, or null if `mp` is null.
///
/// # Safety
/// `mp` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ak_multipartition_to_json(mp: *const AkMultipartition) -> *mut c_char {
    match mp.as_ref() {
        Some(m) => into_c_string(m.inner.to_json()),
        None => ptr::null_mut(),
    }
}

/// Number of components, or 0 if `mp` is null.
///
/// # Safety
/// `mp` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ak_multipartition_level(mp: *const AkMultipartition) -> usize {
    mp.as_ref().map_or(0, |m| m.inner.level())
}

/// Total number of nodes, or 0 if `mp` is null.
///
/// # Safety
/// `mp` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ak_multipartition_rank(mp: *const AkMultipartition) -> u64 {
    mp.as_ref().map_or(0, |m| m.inner.rank())
}

/// Block weight of `mp` for the multicharge `charge[0..len]`.
///
/// # Safety
/// `mp` must be a live handle, `charge` must point to `len` integers and
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ak_block_weight(
    mp: *const AkMultipartition,
    charge: *const i64,
    len: usize,
    e: i64,
    out: *mut u64,
) -> AkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = block_weight(read_mp(mp)?, &read_charge(charge, len)?, modulus(e)?)?;
        Ok(())
    })
}

/// Whether `mp` is a core for the given multicharge.
///
/// # Safety
/// As for [`ak_block_weight`].
#[no_mangle]
pub unsafe extern "C" fn ak_is_core(
    mp: *const AkMultipartition,
    charge: *const i64,
    len: usize,
    e: i64,
    out: *mut bool,
) -> AkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = is_core(read_mp(mp)?, &read_charge(charge, len)?, modulus(e)?)?;
        Ok(())
    })
}

/// Computes the core of `mp`. Free the result with [`ak_core_free`].
///
/// # Safety
/// As for [`ak_block_weight`].
#[no_mangle]
pub unsafe extern "C" fn ak_core(
    mp: *const AkMultipartition,
    charge: *const i64,
    len: usize,
    e: i64,
    out: *mut *mut AkCore,
) -> AkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = core_by_ops(read_mp(mp)?, &read_charge(charge, len)?, modulus(e)?)?;
        *out = Box::into_raw(Box::new(AkCore { inner }));
        Ok(())
    })
}

/// # Safety
/// `core` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn ak_core_free(core: *mut AkCore) {
    if !core.is_null() {
        drop(Box::from_raw(core));
    }
}

/// Number of moves from the input to its core, or 0 if `core` is null.
///
/// # Safety
/// `core` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ak_core_weight(core: *const AkCore) -> u64 {
    core.as_ref().map_or(0, |c| c.inner.weight)
}

/// A new handle holding the core multipartition, or null if `core` is null.
///
/// # Safety
/// `core` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ak_core_multipartition(core: *const AkCore) -> *mut AkMultipartition {
    match core.as_ref() {
        Some(c) => Box::into_raw(Box::new(AkMultipartition {
            inner: c.inner.core.clone(),
        })),
        None => ptr::null_mut(),
    }
}

/// Copies the core charge into `buf`, which must hold `level` entries.
///
/// # Safety
/// `core` must be a live handle and `buf` must point to `cap` writable
/// integers.
#[no_mangle]
pub unsafe extern "C" fn ak_core_charge(
    core: *const AkCore,
    buf: *mut i64,
    cap: usize,
) -> AkStatus {
    guard(|| {
        let c = core.as_ref().ok_or_else(|| null("core"))?;
        copy_out(c.inner.charge.entries(), buf, cap)
    })
}

/// Copies the 1-based normalizing permutation into `buf`.
///
/// # Safety
/// As for [`ak_core_charge`].
#[no_mangle]
pub unsafe extern "C" fn ak_core_sigma(
    core: *const AkCore,
    buf: *mut usize,
    cap: usize,
) -> AkStatus {
    guard(|| {
        let c = core.as_ref().ok_or_else(|| null("core"))?;
        copy_out(&c.inner.sigma_one_based(), buf, cap)
    })
}

unsafe fn copy_out<T: Copy>(src: &[T], buf: *mut T, cap: usize) -> Result<(), Failure> {
    if cap < src.len() {
        return Err(Failure(
            AkStatus::BufferTooSmall,
            format!("need room for {} entries, got {cap}", src.len()),
        ));
    }
    if src.is_empty() {
        return Ok(());
    }
    if buf.is_null() {
        return Err(null("buf"));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    Ok(())
}

/// Uglov image of `mp`: its partition as a JSON string (free with
/// [`ak_string_free`]) and its charge.
///
/// # Safety
/// As for [`ak_block_weight`]; `partition_json` and `charge_out` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn ak_tau(
    mp: *const AkMultipartition,
    charge: *const i64,
    len: usize,
    e: i64,
    partition_json: *mut *mut c_char,
    charge_out: *mut i64,
) -> AkStatus {
    guard(|| {
        if partition_json.is_null() || charge_out.is_null() {
            return Err(null("output pointer"));
        }
        let (p, c) = tau(read_mp(mp)?, &read_charge(charge, len)?, modulus(e)?)?;
        *partition_json = into_c_string(p.to_json());
        *charge_out = c;
        Ok(())
    })
}

/// Preimage of a charged partition under the Uglov map. Writes a new
/// multipartition handle to `out` and the `l` charges to `charge_buf`.
///
/// # Safety
/// `partition_json` must be a nul-terminated string, `out` valid and
/// `charge_buf` must point to `l` writable integers.
#[no_mangle]
pub unsafe extern "C" fn ak_tau_inverse(
    partition_json: *const c_char,
    charge_total: i64,
    l: usize,
    e: i64,
    out: *mut *mut AkMultipartition,
    charge_buf: *mut i64,
) -> AkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = Partition::from_json(read_str(partition_json, "partition_json")?)?;
        let (m, s) = tau_inverse(&p, charge_total, l, modulus(e)?)?;
        copy_out(s.entries(), charge_buf, l)?;
        *out = Box::into_raw(Box::new(AkMultipartition { inner: m }));
        Ok(())
    })
}

/// Block table of all `l`-multipartitions of `n`, rendered in `format`.
///
/// # Safety
/// `charge` must point to `len` integers and `out` must be valid. The string
/// written to `out` must be released with [`ak_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ak_blocks_table(
    n: u32,
    l: usize,
    e: i64,
    charge: *const i64,
    len: usize,
    format: AkFormat,
    out: *mut *mut c_char,
) -> AkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let table = BlockTable::build(n, l, modulus(e)?, &read_charge(charge, len)?)?;
        let format = match format {
            AkFormat::Json => Format::Json,
            AkFormat::Csv => Format::Csv,
            AkFormat::Markdown => Format::Md,
        };
        *out = into_c_string(table.render(format)?);
        Ok(())
    })
}
