//! C ABI for `metaplectic-gg`.
//!
//! Every function returns an [`MggStatus`]; results go through out-pointers. On a
//! nonzero status the message is available from [`mgg_last_error_message`] on the
//! same thread. Instances are opaque and must be released with [`mgg_instance_free`].

use std::cell::RefCell;
use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use metaplectic_gg::cocycle::FieldModel;
use metaplectic_gg::cover::{self, CoverError, CoverKind, CoverSpec, TypeSpec, DEFAULT_BOUND};
use metaplectic_gg::hecke_affine::{whittaker_dim_hecke, AffineError};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MggStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    BoundExceeded = 3,
    Unsupported = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MggKind {
    Kp = 0,
    Savin = 1,
    Generic = 2,
}

/// `r0 = r/k`, `n0` and `d0`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MggDerived {
    pub r0: i64,
    pub n0: i64,
    pub d0: i64,
}

/// A validated cover and type with an enumeration bound.
pub struct MggInstance {
    cover: CoverSpec,
    ty: TypeSpec,
    bound: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: MggStatus, msg: impl Into<String>) -> MggStatus {
    set_error(msg.into());
    status
}

fn cover_status(e: &CoverError) -> MggStatus {
    match e {
        CoverError::BoundExceeded { .. } => MggStatus::BoundExceeded,
        CoverError::UnsupportedKind(_) => MggStatus::Unsupported,
        CoverError::InvalidCover(_)
        | CoverError::InvalidType(_)
        | CoverError::KDoesNotDivideR { .. }
        | CoverError::L0DoesNotDivideN { .. } => MggStatus::InvalidArgument,
        _ => MggStatus::Internal,
    }
}

impl From<CoverError> for MggStatus {
    fn from(e: CoverError) -> Self {
        fail(cover_status(&e), e.to_string())
    }
}

impl From<AffineError> for MggStatus {
    fn from(e: AffineError) -> Self {
        match e {
            AffineError::Cover(c) => c.into(),
            other => fail(MggStatus::Internal, other.to_string()),
        }
    }
}

/// Runs `f`, converting panics into `Internal` and clearing the error on success.
fn guard(f: impl FnOnce() -> Result<(), MggStatus>) -> MggStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            MggStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => fail(MggStatus::Internal, "internal panic"),
    }
}

unsafe fn instance<'a>(p: *const MggInstance) -> Result<&'a MggInstance, MggStatus> {
    p.as_ref().ok_or_else(|| fail(MggStatus::NullPointer, "instance pointer is null"))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), MggStatus> {
    if out.is_null() {
        return Err(fail(MggStatus::NullPointer, "output pointer is null"));
    }
    out.write(v);
    Ok(())
}

/// Creates an instance; `f` is the exponent in `q0 = q^f`.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn mgg_instance_new(
    kind: MggKind,
    n: i64,
    c: i64,
    d: i64,
    r: i64,
    k: i64,
    l0: i64,
    f: u32,
    out: *mut *mut MggInstance,
) -> MggStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(MggStatus::NullPointer, "output pointer is null"));
        }
        let kind = match kind {
            MggKind::Kp => CoverKind::Kp,
            MggKind::Savin => CoverKind::Savin,
            MggKind::Generic => CoverKind::Generic,
        };
        let cover = CoverSpec::new(kind, n, c, d)?;
        let ty = TypeSpec::new(r, k, l0, f)?;
        ty.check_against(&cover)?;
        out.write(Box::into_raw(Box::new(MggInstance { cover, ty, bound: DEFAULT_BOUND })));
        Ok(())
    })
}

/// Releases an instance; null is ignored.
///
/// # Safety
/// `inst` must be null or a pointer from [`mgg_instance_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mgg_instance_free(inst: *mut MggInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Sets the ceiling on `|X(lambda)|` for enumeration (default 1000000).
///
/// # Safety
/// `inst` must be null or a live instance.
#[no_mangle]
pub unsafe extern "C" fn mgg_instance_set_bound(inst: *mut MggInstance, bound: u64) -> MggStatus {
    guard(|| {
        let inst = inst.as_mut().ok_or_else(|| fail(MggStatus::NullPointer, "instance pointer is null"))?;
        inst.bound = bound;
        Ok(())
    })
}

/// # Safety
/// `inst` must be null or a live instance; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn mgg_derive(inst: *const MggInstance, out: *mut MggDerived) -> MggStatus {
    guard(|| {
        let i = instance(inst)?;
        let p = cover::derive_params(&i.cover, &i.ty)?;
        write(out, MggDerived { r0: p.r0, n0: p.n0, d0: p.d0 })
    })
}

/// `|X(lambda)|` from the Smith normal form.
///
/// # Safety
/// `inst` must be null or a live instance; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn mgg_x_order(inst: *const MggInstance, out: *mut u64) -> MggStatus {
    guard(|| {
        let i = instance(inst)?;
        write(out, cover::x_lambda(&i.cover, &i.ty)?.order())
    })
}

/// Number of `S_k`-orbits on `X(lambda)` by exhaustive enumeration.
///
/// # Safety
/// `inst` must be null or a live instance; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn mgg_orbit_count(inst: *const MggInstance, out: *mut u64) -> MggStatus {
    guard(|| {
        let i = instance(inst)?;
        let n = cover::x_lambda(&i.cover, &i.ty)?.orbits(i.bound)?.len();
        write(out, n as u64)
    })
}

/// Closed-form Whittaker dimension; `Unsupported` for generic covers.
///
/// # Safety
/// `inst` must be null or a live instance; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn mgg_dim_closed(inst: *const MggInstance, out: *mut u64) -> MggStatus {
    guard(|| {
        let i = instance(inst)?;
        write(out, cover::whittaker_dim_closed(&i.cover, &i.ty)?)
    })
}

/// Whittaker dimension from the Hecke-module computation over Q(q).
///
/// # Safety
/// `inst` must be null or a live instance; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn mgg_dim_hecke(inst: *const MggInstance, out: *mut u64) -> MggStatus {
    guard(|| {
        let i = instance(inst)?;
        write(out, whittaker_dim_hecke(&i.cover, &i.ty, i.bound)? as u64)
    })
}

/// Tame `n`-th Hilbert symbol of `u = (u_val, u_unit)` and `v = (v_val, v_unit)` over a
/// residue field of size `q`. Writes the exponent of the fixed generator of `mu_n` and
/// the order of the result.
///
/// # Safety
/// `exp` and `order` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn mgg_hilbert(
    q: u64,
    n: u64,
    u_val: i64,
    u_unit: i64,
    v_val: i64,
    v_unit: i64,
    exp: *mut u64,
    order: *mut u64,
) -> MggStatus {
    guard(|| {
        let fm = FieldModel::new(q, n).map_err(|e| fail(MggStatus::InvalidArgument, e.to_string()))?;
        let h = fm.hilbert(&fm.elem(u_val, u_unit), &fm.elem(v_val, v_unit));
        write(exp, h.exp)?;
        write(order, h.order())
    })
}

/// Copies the calling thread's last error message, NUL-terminated and truncated to
/// `len` bytes, into `buf`. Returns the full message length without the terminator,
/// so a caller can size a buffer with a first call passing `len = 0`.
///
/// # Safety
/// `buf` must be null or valid for writing `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn mgg_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            buf.add(n).write(0);
        }
        msg.len()
    })
}
