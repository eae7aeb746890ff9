//! C ABI over the `bfsp` library.
//!
//! Handles are opaque and owned by the caller once returned; free them with
//! the matching `*_free` function. Every fallible call returns a
//! [`BfspError`] and, on failure, leaves a message retrievable through
//! [`bfsp_last_error_message`] on the same thread. Vertex ids are 0-based
//! here, unlike the 1-based text format.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use bfsp::cli::{run_solver, RunResult, SolverKind, Status};
use bfsp::graph::{parse_instance, serialize_instance};
use bfsp::kernel::{kernel_nd, kernel_ph_free};
use bfsp::ColoredInstance;

pub const BFSP_SOLVER_DP: u32 = 0;
pub const BFSP_SOLVER_FES: u32 = 1;
pub const BFSP_SOLVER_FVS: u32 = 2;
pub const BFSP_SOLVER_ORACLE: u32 = 3;

pub const BFSP_KERNEL_ND: u32 = 0;
pub const BFSP_KERNEL_PH_FREE: u32 = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfspError {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Io = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfspAnswer {
    Yes = 0,
    No = 1,
    Timeout = 2,
    /// The oracle hit its enumeration cap.
    Capped = 3,
}

/// A colored graph with terminals.
pub struct Instance(ColoredInstance);

/// The outcome of one solver run.
pub struct SolveResult(RunResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

struct Failure(BfspError, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BfspError {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BfspError::Ok,
        Ok(Err(Failure(code, message))) => {
            set_error(message);
            code
        }
        Err(_) => {
            set_error("internal panic");
            BfspError::Panic
        }
    }
}

fn null() -> Failure {
    Failure(BfspError::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(null());
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|e| Failure(BfspError::InvalidUtf8, e.to_string()))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn deref<'a, T>(ptr: *const T) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(null)
}

fn parse(text: &str) -> Result<Instance, Failure> {
    parse_instance(text).map(Instance).map_err(|e| Failure(BfspError::Parse, e.to_string()))
}

/// The message of the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn bfsp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn bfsp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses an instance in the text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bfsp_instance_parse(text: *const c_char, out: *mut *mut Instance) -> BfspError {
    guard(|| write_out(out, parse(read_str(text)?)?))
}

/// Reads and parses an instance file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bfsp_instance_read_file(path: *const c_char, out: *mut *mut Instance) -> BfspError {
    guard(|| {
        let path = read_str(path)?;
        let text = std::fs::read_to_string(path).map_err(|e| Failure(BfspError::Io, format!("{path}: {e}")))?;
        write_out(out, parse(&text)?)
    })
}

/// Builds an instance from arrays. `colors` holds `n` entries below
/// `num_colors`; `edges` holds `2 * m` endpoints.
///
/// # Safety
/// `colors` must point to `n` values, `edges` to `2 * m` values (either may
/// be null when its length is 0), and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bfsp_instance_new(
    n: usize,
    num_colors: usize,
    colors: *const usize,
    m: usize,
    edges: *const usize,
    s: usize,
    t: usize,
    out: *mut *mut Instance,
) -> BfspError {
    guard(|| {
        let colors = slice(colors, n)?;
        let flat = slice(edges, 2 * m)?;
        let edges: Vec<(usize, usize)> = flat.chunks(2).map(|e| (e[0], e[1])).collect();
        let inst = ColoredInstance::new(colors.to_vec(), num_colors, &edges, s, t)
            .map_err(|e| Failure(BfspError::InvalidArgument, e.to_string()))?;
        write_out(out, Instance(inst))
    })
}

unsafe fn slice<'a>(ptr: *const usize, len: usize) -> Result<&'a [usize], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// # Safety
/// `inst` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bfsp_instance_free(inst: *mut Instance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bfsp_instance_num_vertices(inst: *const Instance) -> usize {
    inst.as_ref().map_or(0, |i| i.0.n())
}

/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bfsp_instance_num_edges(inst: *const Instance) -> usize {
    inst.as_ref().map_or(0, |i| i.0.m())
}

/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bfsp_instance_num_colors(inst: *const Instance) -> usize {
    inst.as_ref().map_or(0, |i| i.0.num_colors())
}

/// Renders the instance in the text format. Free the string with
/// [`bfsp_string_free`].
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfsp_instance_serialize(inst: *const Instance, out: *mut *mut c_char) -> BfspError {
    guard(|| {
        let text = serialize_instance(&deref(inst)?.0);
        write_string(out, text)
    })
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(text).map_err(|e| Failure(BfspError::InvalidArgument, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bfsp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Applies a kernel. `h` and `seed` are used by [`BFSP_KERNEL_PH_FREE`]
/// only.
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfsp_kernelize(
    inst: *const Instance,
    kernel: u32,
    h: usize,
    seed: u64,
    out: *mut *mut Instance,
) -> BfspError {
    guard(|| {
        let inst = &deref(inst)?.0;
        let kern = match kernel {
            BFSP_KERNEL_ND => kernel_nd(inst).0,
            BFSP_KERNEL_PH_FREE => {
                kernel_ph_free(inst, h, seed).map_err(|e| Failure(BfspError::InvalidArgument, e.to_string()))?.0
            }
            other => return Err(Failure(BfspError::InvalidArgument, format!("unknown kernel {other}"))),
        };
        write_out(out, Instance(kern))
    })
}

/// Runs one solver. `timeout_ms == 0` means no limit.
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfsp_solve(
    inst: *const Instance,
    solver: u32,
    timeout_ms: u64,
    out: *mut *mut SolveResult,
) -> BfspError {
    guard(|| {
        let inst = &deref(inst)?.0;
        let kind = match solver {
            BFSP_SOLVER_DP => SolverKind::Dp,
            BFSP_SOLVER_FES => SolverKind::Fes,
            BFSP_SOLVER_FVS => SolverKind::Fvs,
            BFSP_SOLVER_ORACLE => SolverKind::Oracle,
            other => return Err(Failure(BfspError::InvalidArgument, format!("unknown solver {other}"))),
        };
        let timeout = (timeout_ms > 0).then(|| Duration::from_millis(timeout_ms));
        write_out(out, SolveResult(run_solver(inst, kind, timeout)))
    })
}

/// # Safety
/// `res` must be null or a handle from [`bfsp_solve`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bfsp_result_free(res: *mut SolveResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// # Safety
/// `res` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfsp_result_answer(res: *const SolveResult, out: *mut BfspAnswer) -> BfspError {
    guard(|| {
        let answer = match deref(res)?.0.status {
            Status::Yes => BfspAnswer::Yes,
            Status::No => BfspAnswer::No,
            Status::Timeout => BfspAnswer::Timeout,
            Status::Capped => BfspAnswer::Capped,
        };
        *out.as_mut().ok_or_else(null)? = answer;
        Ok(())
    })
}

/// Number of witness vertices; 0 unless the answer is yes.
///
/// # Safety
/// `res` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bfsp_result_witness_len(res: *const SolveResult) -> usize {
    res.as_ref().and_then(|r| r.0.witness.as_ref()).map_or(0, Vec::len)
}

/// Copies up to `cap` witness vertices, 0-based and in path order, into
/// `buf` and returns how many were written.
///
/// # Safety
/// `res` must be null or a live handle; `buf` must have room for `cap`
/// values.
#[no_mangle]
pub unsafe extern "C" fn bfsp_result_witness(res: *const SolveResult, buf: *mut usize, cap: usize) -> usize {
    let Some(w) = res.as_ref().and_then(|r| r.0.witness.as_ref()) else {
        return 0;
    };
    copy_out(w.iter().map(|&v| v - 1), buf, cap)
}

/// Number of colors in the witness histogram; 0 unless the answer is yes.
///
/// # Safety
/// `res` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bfsp_result_histogram_len(res: *const SolveResult) -> usize {
    res.as_ref().and_then(|r| r.0.histogram.as_ref()).map_or(0, Vec::len)
}

/// Copies up to `cap` per-color witness counts into `buf`.
///
/// # Safety
/// `res` must be null or a live handle; `buf` must have room for `cap`
/// values.
#[no_mangle]
pub unsafe extern "C" fn bfsp_result_histogram(res: *const SolveResult, buf: *mut usize, cap: usize) -> usize {
    let Some(h) = res.as_ref().and_then(|r| r.0.histogram.as_ref()) else {
        return 0;
    };
    copy_out(h.iter().copied(), buf, cap)
}

unsafe fn copy_out(values: impl Iterator<Item = usize>, buf: *mut usize, cap: usize) -> usize {
    if buf.is_null() {
        return 0;
    }
    let mut written = 0;
    for (i, v) in values.take(cap).enumerate() {
        *buf.add(i) = v;
        written += 1;
    }
    written
}

/// Wall time of the run in milliseconds.
///
/// # Safety
/// `res` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bfsp_result_elapsed_ms(res: *const SolveResult) -> f64 {
    res.as_ref().map_or(0.0, |r| r.0.elapsed_ms)
}

/// The run as one JSON line, as printed by the command-line tool. Free the
/// string with [`bfsp_string_free`].
///
/// # Safety
/// `res` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfsp_result_to_json(res: *const SolveResult, out: *mut *mut c_char) -> BfspError {
    guard(|| write_string(out, deref(res)?.0.to_json_line()))
}
