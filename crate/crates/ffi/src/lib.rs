//! C interface to the `ncsf` library.
//!
//! Every function returns an [`NcsfStatus`]. Results come back through out
//! pointers as opaque handles or NUL-terminated strings, each released with
//! its matching `_free` function. After a failure,
//! [`ncsf_last_error_message`] describes it on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use ncsf::bases::{transition_inverse, transition_matrix, u_basis, v_in_ribbon, IntComb};
use ncsf::composition::Composition;
use ncsf::cycle_index::{c_q, c_q_tilde};
use ncsf::equivalences::{class_census_chain, insert, Relation};
use ncsf::error::Error;
use ncsf::permutation::Permutation;
use ncsf::products::{v_product, vprime_product};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DegreeBound = 3,
    OutOfRange = 4,
    Computation = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsfProductBasis {
    V = 0,
    VPrime = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsfRelation {
    Eq1 = 0,
    Eq2 = 1,
    Mirror = 2,
}

impl From<NcsfRelation> for Relation {
    fn from(r: NcsfRelation) -> Self {
        match r {
            NcsfRelation::Eq1 => Relation::Eq1,
            NcsfRelation::Eq2 => Relation::Eq2,
            NcsfRelation::Mirror => Relation::Mirror,
        }
    }
}

/// A linear combination of compositions with integer coefficients, in
/// table order (by length, then lexicographically).
pub struct NcsfExpansion {
    terms: Vec<(CString, CString)>,
}

/// A square integer matrix indexed by the compositions of `n`.
pub struct NcsfMatrix {
    labels: Vec<CString>,
    entries: Vec<Vec<CString>>,
}

/// A polynomial in `q` with integer coefficients.
pub struct NcsfPolynomial {
    coeffs: Vec<CString>,
    text: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> NcsfStatus {
    match e {
        Error::InvalidComposition(_)
        | Error::InvalidPermutation(_)
        | Error::EmptyComposition
        | Error::ZeroDegree
        | Error::Parse(_) => NcsfStatus::InvalidArgument,
        Error::DegreeBound { .. } => NcsfStatus::DegreeBound,
        Error::OutOfRange { .. } => NcsfStatus::OutOfRange,
        _ => NcsfStatus::Computation,
    }
}

struct Failure(NcsfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure> + UnwindSafe) -> NcsfStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => {
            set_error("");
            NcsfStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            NcsfStatus::Panic
        }
    }
}

fn text(s: String) -> CString {
    CString::new(s).expect("library output has no NUL bytes")
}

unsafe fn arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(NcsfStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(NcsfStatus::InvalidArgument, format!("{name} is not UTF-8")))
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    Ok(s.parse()?)
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

fn check_out<T>(out: *mut *mut T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(NcsfStatus::NullPointer, "out is null".into()));
    }
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(NcsfStatus::NullPointer, "handle is null".into()))
}

fn expansion(comb: &IntComb) -> NcsfExpansion {
    let mut terms: Vec<_> = comb.iter().collect();
    terms.sort_by(|a, b| a.0.table_key().cmp(&b.0.table_key()));
    NcsfExpansion { terms: terms.into_iter().map(|(k, c)| (text(k.compact()), text(c.to_string()))).collect() }
}

/// Message for the last failure on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ncsf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Writes a statistic of a permutation (`sc`, `rc`, `dc`, `inv`, `invc`,
/// `octype` or `foata`) as a newly allocated string.
///
/// # Safety
/// `perm` and `statistic` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_statistic(
    perm: *const c_char,
    statistic: *const c_char,
    out: *mut *mut c_char,
) -> NcsfStatus {
    guard(|| {
        check_out(out)?;
        let sigma: Permutation = parse(arg(perm, "perm")?)?;
        let value = match arg(statistic, "statistic")? {
            "sc" => sigma.saillance_composition().comma_list(),
            "rc" => sigma.recoil_composition().comma_list(),
            "dc" => sigma.descent_composition().comma_list(),
            "inv" => sigma.inversions().to_string(),
            "invc" => sigma.invc().to_string(),
            "octype" => sigma.ordered_cycle_type().comma_list(),
            "foata" => sigma.foata_first().to_string(),
            other => return Err(Failure(NcsfStatus::InvalidArgument, format!("unknown statistic {other:?}"))),
        };
        *out = text(value).into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ncsf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `U_I` in the fundamental basis.
///
/// # Safety
/// `comp` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_u_basis(comp: *const c_char, out: *mut *mut NcsfExpansion) -> NcsfStatus {
    guard(|| {
        check_out(out)?;
        let i: Composition = parse(arg(comp, "comp")?)?;
        put(out, expansion(u_basis(&i)?.terms()));
        Ok(())
    })
}

/// `V_I` in the ribbon basis.
///
/// # Safety
/// `comp` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_v_in_ribbon(comp: *const c_char, out: *mut *mut NcsfExpansion) -> NcsfStatus {
    guard(|| {
        check_out(out)?;
        let i: Composition = parse(arg(comp, "comp")?)?;
        put(out, expansion(&v_in_ribbon(&i)?));
        Ok(())
    })
}

/// The product of two basis elements of `V` or `V'`, in the same basis.
///
/// # Safety
/// `left` and `right` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_product(
    left: *const c_char,
    right: *const c_char,
    basis: NcsfProductBasis,
    out: *mut *mut NcsfExpansion,
) -> NcsfStatus {
    guard(|| {
        check_out(out)?;
        let i: Composition = parse(arg(left, "left")?)?;
        let j: Composition = parse(arg(right, "right")?)?;
        let value = match basis {
            NcsfProductBasis::V => v_product(&i, &j),
            NcsfProductBasis::VPrime => vprime_product(&i, &j),
        };
        put(out, expansion(&value));
        Ok(())
    })
}

/// Number of terms.
///
/// # Safety
/// `e` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncsf_expansion_len(e: *const NcsfExpansion, len: *mut usize) -> NcsfStatus {
    guard(|| {
        let e = handle(e)?;
        if len.is_null() {
            return Err(Failure(NcsfStatus::NullPointer, "len is null".into()));
        }
        *len = e.terms.len();
        Ok(())
    })
}

/// Borrows the composition (compact form) and coefficient of term `k`.
/// Both strings live as long as the handle.
///
/// # Safety
/// `e` must be a live handle; `index` and `coeff` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_expansion_term(
    e: *const NcsfExpansion,
    k: usize,
    index: *mut *const c_char,
    coeff: *mut *const c_char,
) -> NcsfStatus {
    guard(|| {
        let e = handle(e)?;
        if index.is_null() || coeff.is_null() {
            return Err(Failure(NcsfStatus::NullPointer, "out is null".into()));
        }
        let (i, c) = e.terms.get(k).ok_or(Error::OutOfRange { index: k, max: e.terms.len().saturating_sub(1) })?;
        *index = i.as_ptr();
        *coeff = c.as_ptr();
        Ok(())
    })
}

/// # Safety
/// `e` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ncsf_expansion_free(e: *mut NcsfExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// The transition matrix `M_n` or its inverse, rows and columns in table order.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_transition_matrix(n: usize, inverse: bool, out: *mut *mut NcsfMatrix) -> NcsfStatus {
    guard(|| {
        check_out(out)?;
        let m = if inverse { transition_inverse(n)? } else { transition_matrix(n)? };
        put(
            out,
            NcsfMatrix {
                labels: m.labels().iter().map(|l| text(l.compact())).collect(),
                entries: m.rows().iter().map(|r| r.iter().map(|x| text(x.to_string())).collect()).collect(),
            },
        );
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle; `dim` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_matrix_dim(m: *const NcsfMatrix, dim: *mut usize) -> NcsfStatus {
    guard(|| {
        let m = handle(m)?;
        if dim.is_null() {
            return Err(Failure(NcsfStatus::NullPointer, "dim is null".into()));
        }
        *dim = m.labels.len();
        Ok(())
    })
}

/// Borrows the label of row and column `k`.
///
/// # Safety
/// `m` must be a live handle; `label` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_matrix_label(m: *const NcsfMatrix, k: usize, label: *mut *const c_char) -> NcsfStatus {
    guard(|| {
        let m = handle(m)?;
        if label.is_null() {
            return Err(Failure(NcsfStatus::NullPointer, "label is null".into()));
        }
        let l = m.labels.get(k).ok_or(Error::OutOfRange { index: k, max: m.labels.len().saturating_sub(1) })?;
        *label = l.as_ptr();
        Ok(())
    })
}

/// Borrows entry `(i, j)` as a decimal string.
///
/// # Safety
/// `m` must be a live handle; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_matrix_entry(
    m: *const NcsfMatrix,
    i: usize,
    j: usize,
    value: *mut *const c_char,
) -> NcsfStatus {
    guard(|| {
        let m = handle(m)?;
        if value.is_null() {
            return Err(Failure(NcsfStatus::NullPointer, "value is null".into()));
        }
        let max = m.labels.len().saturating_sub(1);
        let row = m.entries.get(i).ok_or(Error::OutOfRange { index: i, max })?;
        let x = row.get(j).ok_or(Error::OutOfRange { index: j, max })?;
        *value = x.as_ptr();
        Ok(())
    })
}

/// # Safety
/// `m` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ncsf_matrix_free(m: *mut NcsfMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// The coefficient `c_I(q)`, or its Carlitz variant when `tilde` is set.
///
/// # Safety
/// `comp` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_qcoeff(comp: *const c_char, tilde: bool, out: *mut *mut NcsfPolynomial) -> NcsfStatus {
    guard(|| {
        check_out(out)?;
        let i: Composition = parse(arg(comp, "comp")?)?;
        let p = if tilde { c_q_tilde(&i)? } else { c_q(&i)? };
        put(
            out,
            NcsfPolynomial {
                coeffs: p.coeffs().iter().map(|c| text(c.to_string())).collect(),
                text: text(p.to_string()),
            },
        );
        Ok(())
    })
}

/// Number of stored coefficients, one more than the degree (0 for the zero polynomial).
///
/// # Safety
/// `p` must be a live handle; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_polynomial_len(p: *const NcsfPolynomial, len: *mut usize) -> NcsfStatus {
    guard(|| {
        let p = handle(p)?;
        if len.is_null() {
            return Err(Failure(NcsfStatus::NullPointer, "len is null".into()));
        }
        *len = p.coeffs.len();
        Ok(())
    })
}

/// Borrows the coefficient of `q^e`.
///
/// # Safety
/// `p` must be a live handle; `coeff` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_polynomial_coeff(
    p: *const NcsfPolynomial,
    e: usize,
    coeff: *mut *const c_char,
) -> NcsfStatus {
    guard(|| {
        let p = handle(p)?;
        if coeff.is_null() {
            return Err(Failure(NcsfStatus::NullPointer, "coeff is null".into()));
        }
        let c = p.coeffs.get(e).ok_or(Error::OutOfRange { index: e, max: p.coeffs.len().saturating_sub(1) })?;
        *coeff = c.as_ptr();
        Ok(())
    })
}

/// Borrows the polynomial written with descending powers.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncsf_polynomial_text(p: *const NcsfPolynomial) -> *const c_char {
    match p.as_ref() {
        Some(p) => p.text.as_ptr(),
        None => ptr::null(),
    }
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ncsf_polynomial_free(p: *mut NcsfPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of classes of `S_n` under a relation, by chain enumeration.
///
/// # Safety
/// `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_class_count(n: usize, relation: NcsfRelation, count: *mut u64) -> NcsfStatus {
    guard(|| {
        if count.is_null() {
            return Err(Failure(NcsfStatus::NullPointer, "count is null".into()));
        }
        *count = class_census_chain(n, relation.into())?.count() as u64;
        Ok(())
    })
}

/// The insertion symbols of a permutation, as a newly allocated string
/// holding the two trees on separate lines.
///
/// # Safety
/// `perm` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncsf_insert(perm: *const c_char, relation: NcsfRelation, out: *mut *mut c_char) -> NcsfStatus {
    guard(|| {
        check_out(out)?;
        let sigma: Permutation = parse(arg(perm, "perm")?)?;
        let pair = insert(&sigma, relation.into())?;
        *out = text(format!("P = {}\nQ = {}", pair.p, pair.q)).into_raw();
        Ok(())
    })
}
