//! C ABI for the bpfib library.
//!
//! Conventions: parameter pairs live behind an opaque handle created by
//! [`bpfib_params_new`]; every function returns a [`BpfibStatus`] code and
//! writes its result through an out-pointer. Exact values travel as
//! NUL-terminated rational text (`-21/2`), structured results as JSON in the
//! library's documented schemas. Strings returned through out-pointers are
//! owned by the caller and must be released with [`bpfib_string_free`].

use std::ffi::{c_char, c_double, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bpfib::audit::{run_audit, ParamGrid, Suite};
use bpfib::bench::matpow_q;
use bpfib::genmatrix::{hadamard_l, hadamard_q, mat_pow, mat_ql, mat_qq, Mat2};
use bpfib::sequences::{bp_fib, bp_fib_poly, bp_lucas, ParamSet};
use bpfib::spectral::{binet_q, binet_q_float, hadamard_spectrum};
use bpfib::{Error, Rational, SeqFamily};

/// Opaque handle around a validated parameter pair.
pub struct BpfibParams {
    inner: ParamSet,
}

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BpfibStatus {
    BpfibOk = 0,
    BpfibNullPointer = 1,
    BpfibInvalidUtf8 = 2,
    BpfibParseError = 3,
    BpfibInvalidParameter = 4,
    BpfibDegenerateParameters = 5,
    BpfibNotInvertible = 6,
    BpfibDivisionByZero = 7,
    BpfibInternalError = 8,
}

/// Selects the Fibonacci-side (`q`) or Lucas-side (`l`) family.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BpfibFamily {
    BpfibFamilyFibonacci = 0,
    BpfibFamilyLucas = 1,
}

impl From<BpfibFamily> for SeqFamily {
    fn from(f: BpfibFamily) -> Self {
        match f {
            BpfibFamily::BpfibFamilyFibonacci => SeqFamily::Fibonacci,
            BpfibFamily::BpfibFamilyLucas => SeqFamily::Lucas,
        }
    }
}

fn status_of(err: &Error) -> BpfibStatus {
    match err {
        Error::DivisionByZero(_) => BpfibStatus::BpfibDivisionByZero,
        Error::MismatchedRadicands { .. } => BpfibStatus::BpfibInvalidParameter,
        Error::InvalidParameter(_) => BpfibStatus::BpfibInvalidParameter,
        Error::DegenerateParameters(_) => BpfibStatus::BpfibDegenerateParameters,
        Error::NotInvertible => BpfibStatus::BpfibNotInvertible,
        Error::Parse(_) => BpfibStatus::BpfibParseError,
        Error::InternalInconsistency(_) => BpfibStatus::BpfibInternalError,
    }
}

/// Run a closure behind a panic guard; panics become `BpfibInternalError`
/// instead of unwinding across the ABI.
fn guarded(f: impl FnOnce() -> BpfibStatus) -> BpfibStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(BpfibStatus::BpfibInternalError)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, BpfibStatus> {
    if s.is_null() {
        return Err(BpfibStatus::BpfibNullPointer);
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| BpfibStatus::BpfibInvalidUtf8)
}

unsafe fn read_params<'a>(p: *const BpfibParams) -> Result<&'a ParamSet, BpfibStatus> {
    if p.is_null() {
        return Err(BpfibStatus::BpfibNullPointer);
    }
    Ok(&(*p).inner)
}

/// Optional evaluation point: null means x = 1.
unsafe fn read_x(x: *const c_char) -> Result<Rational, BpfibStatus> {
    if x.is_null() {
        return Ok(Rational::one());
    }
    let text = read_str(x)?;
    text.parse().map_err(|e: Error| status_of(&e))
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> BpfibStatus {
    if out.is_null() {
        return BpfibStatus::BpfibNullPointer;
    }
    // Rational text and JSON never contain interior NULs.
    match CString::new(value) {
        Ok(cstring) => {
            *out = cstring.into_raw();
            BpfibStatus::BpfibOk
        }
        Err(_) => BpfibStatus::BpfibInternalError,
    }
}

fn matrix_json(m: &Mat2<Rational>) -> String {
    serde_json::to_string(m).expect("matrix serializes")
}

/// Parse `a` and `b` (rational text) into a new handle. On success writes a
/// pointer that must be released with [`bpfib_params_free`].
///
/// # Safety
/// `a` and `b` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_params_new(
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut BpfibParams,
) -> BpfibStatus {
    guarded(|| {
        if out.is_null() {
            return BpfibStatus::BpfibNullPointer;
        }
        let a = match read_str(a) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let b = match read_str(b) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let parsed = a
            .parse::<Rational>()
            .and_then(|a| Ok((a, b.parse::<Rational>()?)))
            .and_then(|(a, b)| ParamSet::new(a, b));
        match parsed {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(BpfibParams { inner }));
                BpfibStatus::BpfibOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Release a handle created by [`bpfib_params_new`]. Null is a no-op.
///
/// # Safety
/// `params` must be a pointer previously returned by [`bpfib_params_new`].
#[no_mangle]
pub unsafe extern "C" fn bpfib_params_free(params: *mut BpfibParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// `n`-th bi-periodic Fibonacci number as rational text.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_fib(
    params: *const BpfibParams,
    n: i64,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| match read_params(params) {
        Ok(p) => write_string(out, bp_fib(n, p).to_string()),
        Err(status) => status,
    })
}

/// `n`-th bi-periodic Lucas number as rational text.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_lucas(
    params: *const BpfibParams,
    n: i64,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| match read_params(params) {
        Ok(p) => write_string(out, bp_lucas(n, p).to_string()),
        Err(status) => status,
    })
}

/// `n`-th Fibonacci polynomial as a JSON array of rational strings in
/// ascending degree.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_fib_poly_json(
    params: *const BpfibParams,
    n: u64,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| match read_params(params) {
        Ok(p) => {
            let poly = bp_fib_poly(n, p);
            write_string(out, serde_json::to_string(&poly).expect("poly serializes"))
        }
        Err(status) => status,
    })
}

/// Exact `q_n` through the generating matrix (fast for huge `n`), as
/// rational text.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_fib_matpow(
    params: *const BpfibParams,
    n: i64,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| match read_params(params) {
        Ok(p) => match matpow_q(n, p) {
            Ok(v) => write_string(out, v.to_string()),
            Err(e) => status_of(&e),
        },
        Err(status) => status,
    })
}

/// `n`-th power of a generating matrix as matrix JSON
/// (`{"e11": "...", "e12": "...", "e21": "...", "e22": "..."}`). The
/// evaluation point `x` (rational text, null for 1) applies to the
/// Fibonacci-side matrix only.
///
/// # Safety
/// `params` must be a live handle; `x` null or NUL-terminated; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_matrix_power_json(
    params: *const BpfibParams,
    family: BpfibFamily,
    n: i64,
    x: *const c_char,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| {
        let p = match read_params(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let result = match family {
            BpfibFamily::BpfibFamilyFibonacci => {
                let x = match read_x(x) {
                    Ok(x) => x,
                    Err(status) => return status,
                };
                mat_pow(&mat_qq(p, &x), n)
            }
            BpfibFamily::BpfibFamilyLucas => {
                if !x.is_null() {
                    return BpfibStatus::BpfibInvalidParameter;
                }
                mat_pow(&mat_ql(p), n)
            }
        };
        match result {
            Ok(m) => write_string(out, matrix_json(&m)),
            Err(e) => status_of(&e),
        }
    })
}

/// Hadamard power product as matrix JSON.
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_hadamard_json(
    params: *const BpfibParams,
    family: BpfibFamily,
    n: i64,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| {
        let p = match read_params(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let result = match family {
            BpfibFamily::BpfibFamilyFibonacci => hadamard_q(n, p),
            BpfibFamily::BpfibFamilyLucas => hadamard_l(n, p),
        };
        match result {
            Ok(m) => write_string(out, matrix_json(&m)),
            Err(e) => status_of(&e),
        }
    })
}

/// Exact spectrum of a Hadamard product as JSON
/// (`{"det", "trace", "eigenvalues", "eigenvectors", "inverse"}`).
///
/// # Safety
/// `params` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_hadamard_spectrum_json(
    params: *const BpfibParams,
    family: BpfibFamily,
    n: i64,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| {
        let p = match read_params(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match hadamard_spectrum(family.into(), n, p) {
            Ok(s) => write_string(out, serde_json::to_string(&s).expect("spectrum serializes")),
            Err(e) => status_of(&e),
        }
    })
}

/// Exact Binet evaluation at `x` (rational text, null for 1), as rational
/// text.
///
/// # Safety
/// `params` must be a live handle; `x` null or NUL-terminated; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_binet(
    params: *const BpfibParams,
    n: i64,
    x: *const c_char,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| {
        let p = match read_params(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let x = match read_x(x) {
            Ok(x) => x,
            Err(status) => return status,
        };
        match binet_q(n, p, &x) {
            Ok(v) => write_string(out, v.to_string()),
            Err(e) => status_of(&e),
        }
    })
}

/// Double-precision Binet evaluation; overflow surfaces as ±infinity.
///
/// # Safety
/// `params` must be a live handle; `x` null or NUL-terminated; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_binet_float(
    params: *const BpfibParams,
    n: i64,
    x: *const c_char,
    out: *mut c_double,
) -> BpfibStatus {
    guarded(|| {
        if out.is_null() {
            return BpfibStatus::BpfibNullPointer;
        }
        let p = match read_params(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let x = match read_x(x) {
            Ok(x) => x,
            Err(status) => return status,
        };
        match binet_q_float(n, p, &x) {
            Ok(v) => {
                *out = v;
                BpfibStatus::BpfibOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Run the identity audit. `grid_json` is a grid in the documented schema
/// (null for the default grid); `suites` is a comma-separated list or `all`
/// (null for `all`). Writes the JSON array of reports; corrections in the
/// findings do not change the status code (inspect the report).
///
/// # Safety
/// Pointer arguments must be null or NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bpfib_audit_json(
    grid_json: *const c_char,
    suites: *const c_char,
    out: *mut *mut c_char,
) -> BpfibStatus {
    guarded(|| {
        let grid = if grid_json.is_null() {
            ParamGrid::default()
        } else {
            let text = match read_str(grid_json) {
                Ok(s) => s,
                Err(status) => return status,
            };
            match serde_json::from_str::<ParamGrid>(text) {
                Ok(grid) => grid,
                Err(_) => return BpfibStatus::BpfibParseError,
            }
        };
        let suites = if suites.is_null() {
            Suite::ALL.to_vec()
        } else {
            let text = match read_str(suites) {
                Ok(s) => s,
                Err(status) => return status,
            };
            match Suite::parse_list(text) {
                Ok(list) => list,
                Err(e) => return status_of(&e),
            }
        };
        match run_audit(&grid, &suites) {
            Ok(reports) => write_string(
                out,
                serde_json::to_string(&reports).expect("reports serialize"),
            ),
            Err(e) => status_of(&e),
        }
    })
}

/// Release a string returned through any out-pointer. Null is a no-op.
///
/// # Safety
/// `s` must be a pointer previously written by this library.
#[no_mangle]
pub unsafe extern "C" fn bpfib_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static name for a status code (never freed by the caller).
#[no_mangle]
pub extern "C" fn bpfib_status_name(status: BpfibStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        BpfibStatus::BpfibOk => b"ok\0",
        BpfibStatus::BpfibNullPointer => b"null pointer\0",
        BpfibStatus::BpfibInvalidUtf8 => b"invalid utf-8\0",
        BpfibStatus::BpfibParseError => b"parse error\0",
        BpfibStatus::BpfibInvalidParameter => b"invalid parameter\0",
        BpfibStatus::BpfibDegenerateParameters => b"degenerate parameters\0",
        BpfibStatus::BpfibNotInvertible => b"not invertible\0",
        BpfibStatus::BpfibDivisionByZero => b"division by zero\0",
        BpfibStatus::BpfibInternalError => b"internal error\0",
    };
    name.as_ptr().cast()
}
