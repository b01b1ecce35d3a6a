//! C interface to `blockgalois`.
//!
//! Groups and character tables are opaque handles released with
//! [`bg_group_free`] and [`bg_table_free`]. Every fallible function returns a
//! [`BgStatus`]; on failure [`bg_last_error`] describes the most recent error
//! on the calling thread. Strings returned through `char **` out-parameters
//! are owned by the caller and released with [`bg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use blockgalois::blocks::{block_partition, blocks_to_json, principal_block};
use blockgalois::chartab::{character_table, CharacterTable};
use blockgalois::galois_action::fixed_pprime_set;
use blockgalois::group::parse_group_file;
use blockgalois::verify::{verify_theorem_a, GroupAnalysis, GroupSpec, Status};
use blockgalois::{Error, PermGroup};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BgStatus {
    Ok = 0,
    InvalidArgument = 1,
    Parse = 2,
    Computation = 3,
    ResourceCap = 4,
    Panic = 5,
}

/// A permutation group.
pub struct BgGroup {
    group: PermGroup,
}

/// A character table together with its group.
pub struct BgTable {
    table: CharacterTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BgStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => BgStatus::Parse,
        Error::ResourceCap(_) => BgStatus::ResourceCap,
        Error::InvalidArgument(_)
        | Error::NotPrime(_)
        | Error::InvalidPermutation(_)
        | Error::DegreeMismatch { .. }
        | Error::Io(_) => BgStatus::InvalidArgument,
        _ => BgStatus::Computation,
    }
}

enum Failure {
    Lib(Error),
    Arg(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BgStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Arg(msg))) => {
            set_error(msg.to_string());
            BgStatus::InvalidArgument
        }
        Err(_) => {
            set_error("panic inside blockgalois".into());
            BgStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Arg("null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Arg("string argument is not UTF-8"))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or(Failure::Arg("null output pointer"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Arg("null handle"))
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    Ok(CString::new(s)
        .map_err(|_| Failure::Arg("string contains NUL"))?
        .into_raw())
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a group file (`degree n` followed by generators in cycle notation).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_group_from_text(
    text: *const c_char,
    out: *mut *mut BgGroup,
) -> BgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let group = parse_group_file(str_arg(text)?)?;
        *out = Box::into_raw(Box::new(BgGroup { group }));
        Ok(())
    })
}

/// Builds a group from a short spec such as `sym:5`, `psl2:7` or
/// `transitive:6:3`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_group_from_spec(
    spec: *const c_char,
    out: *mut *mut BgGroup,
) -> BgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let group = GroupSpec::parse_short(str_arg(spec)?)?.build()?;
        *out = Box::into_raw(Box::new(BgGroup { group }));
        Ok(())
    })
}

/// Group order; fails with `ResourceCap` above 2^64.
///
/// # Safety
/// `group` must come from this library and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_group_order(group: *const BgGroup, out: *mut u64) -> BgStatus {
    guard(|| {
        let g = handle(group)?;
        *out_arg(out)? = g
            .group
            .order_u64()
            .ok_or_else(|| Error::ResourceCap("order exceeds 64 bits".into()))?;
        Ok(())
    })
}

/// # Safety
/// `group` must come from this library (or be NULL) and not be used again.
#[no_mangle]
pub unsafe extern "C" fn bg_group_free(group: *mut BgGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Computes the character table.
///
/// # Safety
/// `group` must come from this library and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_table_new(group: *const BgGroup, out: *mut *mut BgTable) -> BgStatus {
    guard(|| {
        let g = handle(group)?;
        let out = out_arg(out)?;
        let table = character_table(&g.group)?;
        *out = Box::into_raw(Box::new(BgTable { table }));
        Ok(())
    })
}

/// # Safety
/// `table` must come from this library (or be NULL) and not be used again.
#[no_mangle]
pub unsafe extern "C" fn bg_table_free(table: *mut BgTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of irreducible characters (equal to the number of classes).
///
/// # Safety
/// `table` must come from this library and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_table_size(table: *const BgTable, out: *mut usize) -> BgStatus {
    guard(|| {
        *out_arg(out)? = handle(table)?.table.len();
        Ok(())
    })
}

/// Value of character `row` at class `class`, as text like `-1*E(5)^2 + 3`.
///
/// # Safety
/// `table` must come from this library and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_table_value(
    table: *const BgTable,
    row: usize,
    class: usize,
    out: *mut *mut c_char,
) -> BgStatus {
    guard(|| {
        let t = &handle(table)?.table;
        let out = out_arg(out)?;
        if row >= t.len() || class >= t.len() {
            return Err(Failure::Arg("row or class out of range"));
        }
        *out = c_string(t.character(row).value(class).to_string())?;
        Ok(())
    })
}

/// The whole table as JSON.
///
/// # Safety
/// `table` must come from this library and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_table_json(table: *const BgTable, out: *mut *mut c_char) -> BgStatus {
    guard(|| {
        let t = &handle(table)?.table;
        let out = out_arg(out)?;
        *out = c_string(t.to_json().to_string())?;
        Ok(())
    })
}

/// The p-blocks as JSON.
///
/// # Safety
/// `table` must come from this library and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_blocks_json(
    table: *const BgTable,
    p: u64,
    out: *mut *mut c_char,
) -> BgStatus {
    guard(|| {
        let t = &handle(table)?.table;
        let out = out_arg(out)?;
        let blocks = block_partition(t, p)?;
        *out = c_string(blocks_to_json(t, &blocks)?.to_string())?;
        Ok(())
    })
}

/// Number of p'-degree characters of the principal p-block fixed by `sigma_e`.
///
/// # Safety
/// `table` must come from this library and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_fixed_count(
    table: *const BgTable,
    p: u64,
    e: u32,
    out: *mut usize,
) -> BgStatus {
    guard(|| {
        let t = &handle(table)?.table;
        let out = out_arg(out)?;
        let b0 = principal_block(t, p)?;
        *out = fixed_pprime_set(&b0, 0, t, e)?.count;
        Ok(())
    })
}

/// Checks that the principal-block fixed count equals `p` exactly when a
/// Sylow p-subgroup is cyclic. Writes 1 (pass), 0 (fail) or -1 (not
/// applicable: `p` is not 2 or 3, or does not divide the order).
///
/// # Safety
/// `table` must come from this library and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bg_verify_theorem_a(
    table: *const BgTable,
    p: u64,
    out: *mut i32,
) -> BgStatus {
    guard(|| {
        let t = &handle(table)?.table;
        let out = out_arg(out)?;
        let analysis = GroupAnalysis {
            name: String::new(),
            table: t.clone(),
        };
        *out = match verify_theorem_a(&analysis, p)?.status {
            Status::Pass => 1,
            Status::Fail => 0,
            _ => -1,
        };
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library (or be NULL) and not be used again.
#[no_mangle]
pub unsafe extern "C" fn bg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
