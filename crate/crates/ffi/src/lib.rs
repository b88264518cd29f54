//! C ABI over `dpdp`.
//!
//! Every function returns a [`DpdpStatus`]. Results come back through out
//! pointers; solutions too large to copy live behind opaque handles that the
//! caller releases with the matching `_free`. After a non-OK status,
//! [`dpdp_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use dpdp::extras::{k_glws, obst, ObstWeights};
use dpdp::gap::{gap_solve, GapInstance, GapSolution};
use dpdp::sequence::{build_match_list, lis, sparse_lcs};
use dpdp::{glws_par, glws_seq, CostSpec, DpError, GlwsSolution};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DpdpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    Internal = 4,
    Panic = 5,
}

/// Solved GLWS instance.
pub struct DpdpGlws {
    sol: GlwsSolution,
}

/// Solved GAP edit-distance instance.
pub struct DpdpGap {
    sol: GapSolution,
}

thread_local! {
    static LAST_ERROR: RefCell<Vec<u8>> = const { RefCell::new(Vec::new()) };
}

fn set_error(msg: &str) {
    LAST_ERROR.with(|e| {
        let mut e = e.borrow_mut();
        e.clear();
        e.extend(msg.bytes().filter(|&b| b != 0));
    });
}

struct Fail(DpdpStatus, String);

impl From<DpError> for Fail {
    fn from(e: DpError) -> Self {
        let code = match e {
            DpError::InvalidInput(_) | DpError::Format(_) => DpdpStatus::InvalidInput,
            DpError::OutOfRange { .. } => DpdpStatus::OutOfRange,
            DpError::Internal(_) | DpError::Io(_) => DpdpStatus::Internal,
        };
        Fail(code, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(DpdpStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> DpdpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DpdpStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(&msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            DpdpStatus::Panic
        }
    }
}

/// A `(ptr, len)` pair as a slice; a null pointer is allowed only when empty.
unsafe fn input<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null(what))
    } else {
        Ok(slice::from_raw_parts(p, len))
    }
}

unsafe fn spec(s: *const c_char) -> Result<CostSpec, Fail> {
    if s.is_null() {
        return Err(null("cost spec"));
    }
    let s = CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(DpdpStatus::InvalidInput, "cost spec is not UTF-8".into()))?;
    Ok(s.parse()?)
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

/// Copies the last error message on this thread into `buf` as a
/// NUL-terminated string, truncating to `len - 1` bytes. Returns the full
/// message length excluding the terminator.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn dpdp_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = e.len().min(len - 1);
            ptr::copy_nonoverlapping(e.as_ptr().cast(), buf, n);
            *buf.add(n) = 0;
        }
        e.len()
    })
}

/// Solves GLWS over strictly ascending `positions` with a cost string such
/// as `quad:C=10`. `parallel` selects the cordon solver.
///
/// # Safety
/// `positions` must point to `n` values; `cost` must be a NUL-terminated
/// string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dpdp_glws_solve(
    positions: *const i64,
    n: usize,
    cost: *const c_char,
    parallel: bool,
    out_handle: *mut *mut DpdpGlws,
) -> DpdpStatus {
    guard(|| {
        let slot = out(out_handle)?;
        let pos = input(positions, n, "positions")?;
        let model = spec(cost)?.build(pos.to_vec())?;
        let sol = if parallel {
            glws_par(&model, 0)?
        } else {
            glws_seq(&model, 0)
        };
        *slot = Box::into_raw(Box::new(DpdpGlws { sol }));
        Ok(())
    })
}

/// Number of states, excluding the base state 0.
///
/// # Safety
/// `h` must be a live handle from [`dpdp_glws_solve`].
#[no_mangle]
pub unsafe extern "C" fn dpdp_glws_len(h: *const DpdpGlws, n: *mut usize) -> DpdpStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("handle"))?;
        *out(n)? = h.sol.n();
        Ok(())
    })
}

/// Value and best decision of state `i` in `0..=n`.
///
/// # Safety
/// `h` must be a live handle; the out pointers must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn dpdp_glws_state(
    h: *const DpdpGlws,
    i: usize,
    value: *mut i64,
    decision: *mut usize,
) -> DpdpStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("handle"))?;
        let n = h.sol.n();
        if i > n {
            return Err(DpError::OutOfRange {
                index: i,
                lo: 0,
                hi: n,
            }
            .into());
        }
        if let Some(v) = value.as_mut() {
            *v = h.sol.value(i);
        }
        if let Some(d) = decision.as_mut() {
            *d = h.sol.decision(i);
        }
        Ok(())
    })
}

/// Frontier rounds of a parallel solve; 0 for the sequential solver.
///
/// # Safety
/// `h` must be a live handle; `rounds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dpdp_glws_rounds(h: *const DpdpGlws, rounds: *mut usize) -> DpdpStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("handle"))?;
        *out(rounds)? = h.sol.stats.as_ref().map_or(0, |s| s.rounds);
        Ok(())
    })
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dpdp_glws_free(h: *mut DpdpGlws) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Length of the longest strictly increasing subsequence.
///
/// # Safety
/// `keys` must point to `n` values; the out pointers must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn dpdp_lis(
    keys: *const i64,
    n: usize,
    k: *mut usize,
    rounds: *mut usize,
) -> DpdpStatus {
    guard(|| {
        let r = lis(input(keys, n, "keys")?);
        if let Some(k) = k.as_mut() {
            *k = r.k;
        }
        if let Some(rounds) = rounds.as_mut() {
            *rounds = r.stats.rounds;
        }
        Ok(())
    })
}

/// Longest common subsequence length of two byte strings.
///
/// # Safety
/// `a` and `b` must point to `na` and `nb` bytes; the out pointers must be
/// writable or null.
#[no_mangle]
pub unsafe extern "C" fn dpdp_lcs(
    a: *const u8,
    na: usize,
    b: *const u8,
    nb: usize,
    k: *mut usize,
    rounds: *mut usize,
) -> DpdpStatus {
    guard(|| {
        let r = sparse_lcs(&build_match_list(input(a, na, "a")?, input(b, nb, "b")?));
        if let Some(k) = k.as_mut() {
            *k = r.k;
        }
        if let Some(rounds) = rounds.as_mut() {
            *rounds = r.stats.rounds;
        }
        Ok(())
    })
}

/// Edit distance with gap costs; `cost_a` prices deletions from `a`,
/// `cost_b` from `b`.
///
/// # Safety
/// As for [`dpdp_lcs`]; both cost strings must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn dpdp_gap_solve(
    a: *const u8,
    na: usize,
    b: *const u8,
    nb: usize,
    cost_a: *const c_char,
    cost_b: *const c_char,
    out_handle: *mut *mut DpdpGap,
) -> DpdpStatus {
    guard(|| {
        let slot = out(out_handle)?;
        let (a, b) = (input(a, na, "a")?, input(b, nb, "b")?);
        let inst = GapInstance::from_bytes(
            a,
            b,
            spec(cost_a)?.build_unit(na)?,
            spec(cost_b)?.build_unit(nb)?,
        )?;
        *slot = Box::into_raw(Box::new(DpdpGap {
            sol: gap_solve(&inst)?,
        }));
        Ok(())
    })
}

/// Cost of aligning the first `i` symbols of `a` with the first `j` of `b`.
///
/// # Safety
/// `h` must be a live handle; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dpdp_gap_value(
    h: *const DpdpGap,
    i: usize,
    j: usize,
    value: *mut i64,
) -> DpdpStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("handle"))?;
        let slot = out(value)?;
        if i > h.sol.n() {
            return Err(DpError::OutOfRange {
                index: i,
                lo: 0,
                hi: h.sol.n(),
            }
            .into());
        }
        if j > h.sol.m() {
            return Err(DpError::OutOfRange {
                index: j,
                lo: 0,
                hi: h.sol.m(),
            }
            .into());
        }
        *slot = h.sol.d(i, j);
        Ok(())
    })
}

/// Full edit distance and round count.
///
/// # Safety
/// `h` must be a live handle; the out pointers must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn dpdp_gap_distance(
    h: *const DpdpGap,
    value: *mut i64,
    rounds: *mut usize,
) -> DpdpStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("handle"))?;
        if let Some(v) = value.as_mut() {
            *v = h.sol.distance();
        }
        if let Some(r) = rounds.as_mut() {
            *r = h.sol.stats.rounds;
        }
        Ok(())
    })
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dpdp_gap_free(h: *mut DpdpGap) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Minimum cost of covering the positions with exactly `k` segments under a
/// convex cost.
///
/// # Safety
/// As for [`dpdp_glws_solve`]; `cost_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dpdp_kglws(
    positions: *const i64,
    n: usize,
    cost: *const c_char,
    k: usize,
    cost_out: *mut i64,
) -> DpdpStatus {
    guard(|| {
        let slot = out(cost_out)?;
        let pos = input(positions, n, "positions")?;
        let model = spec(cost)?.build(pos.to_vec())?;
        *slot = k_glws(&model, k)?.cost;
        Ok(())
    })
}

/// Optimal binary search tree cost. With `gaps` false, `weights` holds one
/// frequency per key; with `gaps` true it holds `2n + 1` interleaved gap and
/// key weights starting and ending with a gap.
///
/// # Safety
/// `weights` must point to `len` values; `cost_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dpdp_obst(
    weights: *const i64,
    len: usize,
    gaps: bool,
    cost_out: *mut i64,
) -> DpdpStatus {
    guard(|| {
        let slot = out(cost_out)?;
        let w = input(weights, len, "weights")?.to_vec();
        let w = if gaps {
            ObstWeights::Gaps(w)
        } else {
            ObstWeights::Keys(w)
        };
        *slot = obst(&w, true)?.cost;
        Ok(())
    })
}
