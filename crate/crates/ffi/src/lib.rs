//! C interface to the zkrange proof toolkit.
//!
//! Parameters live behind an opaque `ZkrSystem` handle. Proofs come back in a
//! `ZkrBuffer` owned by the library and released with `zkr_buffer_free`.
//! Every entry point returns a `ZkrStatus`; panics are caught at the boundary
//! and reported as `ZKR_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use rand::rngs::OsRng;
use zkrange::harness::{Options, Range, Scheme, System};
use zkrange::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZkrStatus {
    Ok = 0,
    Reject = 1,
    WitnessOutOfRange = 2,
    Malformed = 3,
    NullPointer = 4,
    InvalidParam = 5,
    Internal = 6,
}

impl From<&Error> for ZkrStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::WitnessOutOfRange => ZkrStatus::WitnessOutOfRange,
            Error::Malformed(_) => ZkrStatus::Malformed,
            Error::InvalidParameter(_)
            | Error::NotPowerOfTwo
            | Error::LengthMismatch(..)
            | Error::EmptyInput
            | Error::NegativeInput => ZkrStatus::InvalidParam,
            _ => ZkrStatus::Internal,
        }
    }
}

/// Opaque parameter handle.
pub struct ZkrSystem {
    inner: System,
}

/// Octets owned by the library.
#[repr(C)]
pub struct ZkrBuffer {
    pub data: *mut u8,
    pub len: usize,
}

impl ZkrBuffer {
    fn empty() -> Self {
        Self {
            data: ptr::null_mut(),
            len: 0,
        }
    }

    fn from_vec(v: Vec<u8>) -> Self {
        let boxed = v.into_boxed_slice();
        let len = boxed.len();
        Self {
            data: Box::into_raw(boxed) as *mut u8,
            len,
        }
    }
}

fn guard(f: impl FnOnce() -> ZkrStatus) -> ZkrStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ZkrStatus::Internal)
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, ZkrStatus> {
    if p.is_null() {
        return Err(ZkrStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| ZkrStatus::InvalidParam)
}

/// Builds parameters for `scheme` ("boudot", "sigrange", "bulletproofs" or
/// "bulletproofs-opt") over the half-open `range` "a:b". The same seed gives
/// the same parameters. `modulus_bits` only affects boudot; pass 0 for the
/// default.
///
/// # Safety
/// `scheme` and `range` must be valid NUL-terminated strings and `out` a
/// valid pointer. On success `*out` must later be passed to
/// `zkr_system_free`.
#[no_mangle]
pub unsafe extern "C" fn zkr_system_new(
    scheme: *const c_char,
    range: *const c_char,
    seed: u64,
    modulus_bits: u64,
    out: *mut *mut ZkrSystem,
) -> ZkrStatus {
    guard(|| {
        if out.is_null() {
            return ZkrStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let (scheme, range) = match (read_str(scheme), read_str(range)) {
            (Ok(s), Ok(r)) => (s, r),
            (Err(e), _) | (_, Err(e)) => return e,
        };
        let (Ok(scheme), Ok(range)) = (scheme.parse::<Scheme>(), range.parse::<Range>()) else {
            return ZkrStatus::InvalidParam;
        };
        let mut opts = Options {
            seed,
            ..Options::default()
        };
        if modulus_bits != 0 {
            opts.modulus_bits = modulus_bits;
        }
        match System::setup(scheme, range, &opts) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ZkrSystem { inner }));
                ZkrStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// # Safety
/// `system` must be null or a handle from `zkr_system_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zkr_system_free(system: *mut ZkrSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// Commits to the decimal `witness` and writes the proof file into `*out`.
///
/// # Safety
/// `system` must be a live handle, `witness` a NUL-terminated string and
/// `out` a valid pointer. On success `*out` must be released with
/// `zkr_buffer_free`.
#[no_mangle]
pub unsafe extern "C" fn zkr_prove(
    system: *const ZkrSystem,
    witness: *const c_char,
    out: *mut ZkrBuffer,
) -> ZkrStatus {
    guard(|| {
        if system.is_null() || out.is_null() {
            return ZkrStatus::NullPointer;
        }
        *out = ZkrBuffer::empty();
        let witness = match read_str(witness) {
            Ok(w) => w,
            Err(e) => return e,
        };
        let Ok(witness) = witness.trim().parse::<BigInt>() else {
            return ZkrStatus::InvalidParam;
        };
        match (*system).inner.prove(&witness, &mut OsRng) {
            Ok(bytes) => {
                *out = ZkrBuffer::from_vec(bytes);
                ZkrStatus::Ok
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Returns `ZKR_STATUS_OK` when the proof verifies, `ZKR_STATUS_REJECT` when
/// it parses but fails, and `ZKR_STATUS_MALFORMED` when it does not parse.
///
/// # Safety
/// `system` must be a live handle and `data` must point to `len` readable
/// octets.
#[no_mangle]
pub unsafe extern "C" fn zkr_verify(
    system: *const ZkrSystem,
    data: *const u8,
    len: usize,
) -> ZkrStatus {
    guard(|| {
        if system.is_null() || (data.is_null() && len != 0) {
            return ZkrStatus::NullPointer;
        }
        let bytes = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(data, len)
        };
        match (*system).inner.verify(bytes) {
            Ok(true) => ZkrStatus::Ok,
            Ok(false) => ZkrStatus::Reject,
            Err(e) => (&e).into(),
        }
    })
}

/// Releases a buffer filled by `zkr_prove` and resets it to empty.
///
/// # Safety
/// `buf` must be null or point to a buffer filled by this library.
#[no_mangle]
pub unsafe extern "C" fn zkr_buffer_free(buf: *mut ZkrBuffer) {
    if buf.is_null() || (*buf).data.is_null() {
        return;
    }
    let b = &mut *buf;
    drop(Box::from_raw(ptr::slice_from_raw_parts_mut(b.data, b.len)));
    *b = ZkrBuffer::empty();
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn zkr_status_message(status: ZkrStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        ZkrStatus::Ok => b"ok\0",
        ZkrStatus::Reject => b"proof rejected\0",
        ZkrStatus::WitnessOutOfRange => b"witness out of range\0",
        ZkrStatus::Malformed => b"malformed input\0",
        ZkrStatus::NullPointer => b"null pointer\0",
        ZkrStatus::InvalidParam => b"invalid parameter\0",
        ZkrStatus::Internal => b"internal error\0",
    };
    msg.as_ptr() as *const c_char
}
