//! C ABI for the engine: opaque report handles, integer status codes, and
//! JSON in/out. Every entry point is panic-safe; no Rust type crosses the
//! boundary.
//!
//! Memory contract: strings returned through `char **` out-parameters are
//! owned by the caller and must be released with `artinl_string_free`;
//! report handles must be released with `artinl_report_free`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use artinl::runner::{self, JobSpec, RunContext};
use artinl::Report;

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArtinlStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The job was rejected: schema violation, invalid table, bad index.
    InvalidJob = 3,
    /// The computation itself reported an inconsistency.
    Failed = 4,
    /// An internal invariant was violated (a bug, not a user error).
    Internal = 5,
}

/// Opaque report handle.
pub struct ArtinlReport {
    inner: Report,
}

fn guard<F: FnOnce() -> ArtinlStatus>(f: F) -> ArtinlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => ArtinlStatus::Internal,
    }
}

fn deliver(out: *mut *mut ArtinlReport, report: Report) -> ArtinlStatus {
    let boxed = Box::new(ArtinlReport { inner: report });
    // SAFETY: the caller passed a writable out-pointer; null was rejected
    unsafe {
        *out = Box::into_raw(boxed);
    }
    ArtinlStatus::Ok
}

fn run(out: *mut *mut ArtinlReport, job: &JobSpec) -> ArtinlStatus {
    if out.is_null() {
        return ArtinlStatus::NullPointer;
    }
    let ctx = RunContext::without_cache();
    match runner::run_job(&ctx, job) {
        Ok(report) => deliver(out, report),
        Err(_) => ArtinlStatus::InvalidJob,
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, ArtinlStatus> {
    if ptr.is_null() {
        return Err(ArtinlStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| ArtinlStatus::InvalidUtf8)
}

/// Rank table of odd K-groups for the signature `(r1, r2)`.
#[no_mangle]
pub extern "C" fn artinl_ranks(
    r1: u64,
    r2: u64,
    n_max: u32,
    out: *mut *mut ArtinlReport,
) -> ArtinlStatus {
    guard(|| run(out, &JobSpec::Ranks { r1, r2, n_max }))
}

/// The characters mod `modulus` in their deterministic index order.
#[no_mangle]
pub extern "C" fn artinl_characters(modulus: u64, out: *mut *mut ArtinlReport) -> ArtinlStatus {
    guard(|| run(out, &JobSpec::Characters { modulus }))
}

/// Both order-of-vanishing routes for one character, n = 1..n_max.
#[no_mangle]
pub extern "C" fn artinl_gross(
    modulus: u64,
    char_index: u64,
    n_max: u32,
    out: *mut *mut ArtinlReport,
) -> ArtinlStatus {
    guard(|| {
        run(
            out,
            &JobSpec::Gross {
                modulus,
                char_index,
                n_max,
            },
        )
    })
}

/// Rank table of the cyclotomic field of the given modulus, cross-checked
/// against the trivial-coefficient orders.
#[no_mangle]
pub extern "C" fn artinl_zeta(
    modulus: u64,
    n_max: u32,
    out: *mut *mut ArtinlReport,
) -> ArtinlStatus {
    guard(|| run(out, &JobSpec::Zeta { modulus, n_max }))
}

/// Run a JSON-described job (group table, embedding data, coefficient
/// representation); `include_euler` also computes the Euler factors listed
/// in the job.
///
/// # Safety
/// `job_json` must be a valid NUL-terminated string and `out` a writable
/// pointer; both stay valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn artinl_artin_json(
    job_json: *const c_char,
    include_euler: bool,
    out: *mut *mut ArtinlReport,
) -> ArtinlStatus {
    guard(|| {
        if out.is_null() {
            return ArtinlStatus::NullPointer;
        }
        let json = match read_str(job_json) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match runner::run_artin(json, include_euler) {
            Ok(report) => deliver(out, report),
            Err(_) => ArtinlStatus::InvalidJob,
        }
    })
}

/// Full verification sweep over moduli up to `n_upto` and orders up to
/// `degree_upto`. Returns `Failed` (with no report) only on malformed
/// bounds; failed checks are reported in-band, see
/// `artinl_report_success`.
#[no_mangle]
pub extern "C" fn artinl_verify(
    n_upto: u64,
    degree_upto: u32,
    out: *mut *mut ArtinlReport,
) -> ArtinlStatus {
    guard(|| {
        run(
            out,
            &JobSpec::Verify {
                n_upto,
                degree_upto,
            },
        )
    })
}

/// Run any job described as JSON (the same shape the CLI consumes), e.g.
/// `{"mode":"gross","modulus":4,"char_index":1,"n_max":6}`. Jobs of mode
/// `artin` read their input file from the path in the job.
///
/// # Safety
/// `job_json` must be a valid NUL-terminated string; `cache_dir` may be
/// null or a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn artinl_run_job_json(
    job_json: *const c_char,
    cache_dir: *const c_char,
    out: *mut *mut ArtinlReport,
) -> ArtinlStatus {
    guard(|| {
        if out.is_null() {
            return ArtinlStatus::NullPointer;
        }
        let json = match read_str(job_json) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let job: JobSpec = match serde_json::from_str(json) {
            Ok(job) => job,
            Err(_) => return ArtinlStatus::InvalidJob,
        };
        let ctx = if cache_dir.is_null() {
            RunContext::without_cache()
        } else {
            let dir = match read_str(cache_dir) {
                Ok(s) => s,
                Err(status) => return status,
            };
            match RunContext::with_cache(PathBuf::from(dir)) {
                Ok(ctx) => ctx,
                Err(_) => return ArtinlStatus::InvalidJob,
            }
        };
        match runner::run_job(&ctx, &job) {
            Ok(report) => deliver(out, report),
            Err(_) => ArtinlStatus::InvalidJob,
        }
    })
}

/// Order of vanishing at `s = 1 - n` along the representation-theoretic
/// route, for the given character index mod `modulus`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn artinl_gross_order(
    modulus: u64,
    char_index: u64,
    n: u32,
    out: *mut u64,
) -> ArtinlStatus {
    guard(|| {
        if out.is_null() {
            return ArtinlStatus::NullPointer;
        }
        let result = (|| -> artinl::Result<u64> {
            let chars = artinl::dirichlet::enumerate_characters(modulus);
            let chi = chars
                .get(char_index as usize)
                .ok_or(artinl::Error::CharacterIndexOutOfRange {
                    index: char_index,
                    modulus,
                    phi: chars.len() as u64,
                })?;
            let torsor = artinl::places::EmbeddingSet::cyclotomic_torsor(modulus)?;
            artinl::kmodel::gross_order(&torsor, &chi.to_group_character(), n)
        })();
        match result {
            Ok(v) => {
                *out = v;
                ArtinlStatus::Ok
            }
            Err(_) => ArtinlStatus::InvalidJob,
        }
    })
}

/// Order of vanishing at `s = 1 - n` along the analytic route (the
/// primitive part of the given character).
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn artinl_analytic_order(
    modulus: u64,
    char_index: u64,
    n: u32,
    out: *mut u64,
) -> ArtinlStatus {
    guard(|| {
        if out.is_null() {
            return ArtinlStatus::NullPointer;
        }
        let result = (|| -> artinl::Result<u64> {
            let chars = artinl::dirichlet::enumerate_characters(modulus);
            let chi = chars
                .get(char_index as usize)
                .ok_or(artinl::Error::CharacterIndexOutOfRange {
                    index: char_index,
                    modulus,
                    phi: chars.len() as u64,
                })?;
            artinl::dirichlet::analytic_order(&chi.primitive_part(), n)
        })();
        match result {
            Ok(v) => {
                *out = v;
                ArtinlStatus::Ok
            }
            Err(_) => ArtinlStatus::InvalidJob,
        }
    })
}

/// True when the report contains no mismatch and no failed check.
///
/// # Safety
/// `report` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn artinl_report_success(report: *const ArtinlReport) -> bool {
    if report.is_null() {
        return false;
    }
    (*report).inner.success()
}

fn deliver_string(out: *mut *mut c_char, s: String) -> ArtinlStatus {
    match CString::new(s) {
        Ok(cs) => {
            // SAFETY: out was checked non-null by the caller
            unsafe {
                *out = cs.into_raw();
            }
            ArtinlStatus::Ok
        }
        Err(_) => ArtinlStatus::Internal,
    }
}

/// Serialize a report as pretty-printed JSON. The string must be released
/// with `artinl_string_free`.
///
/// # Safety
/// `report` must be a live handle from this library; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn artinl_report_json(
    report: *const ArtinlReport,
    out: *mut *mut c_char,
) -> ArtinlStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return ArtinlStatus::NullPointer;
        }
        deliver_string(out, (*report).inner.to_json())
    })
}

/// Render a report as an aligned text table. The string must be released
/// with `artinl_string_free`.
///
/// # Safety
/// `report` must be a live handle from this library; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn artinl_report_table(
    report: *const ArtinlReport,
    out: *mut *mut c_char,
) -> ArtinlStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return ArtinlStatus::NullPointer;
        }
        deliver_string(out, (*report).inner.to_table())
    })
}

/// Release a report handle. Null is accepted and ignored.
///
/// # Safety
/// The handle must have come from this library and not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn artinl_report_free(report: *mut ArtinlReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Release a string returned by this library. Null is accepted and ignored.
///
/// # Safety
/// The pointer must have been produced by this library and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn artinl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Version string of the underlying engine; static storage, do not free.
#[no_mangle]
pub extern "C" fn artinl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
