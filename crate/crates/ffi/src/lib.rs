//! C ABI for kronmcm.
//!
//! Forms, derived objects and matrix factorizations cross the boundary as
//! opaque handles. Constructors write the handle through an out pointer and
//! the matching `*_free` releases it. Every fallible call returns a
//! [`KronmcmStatus`]; after a failure [`kronmcm_last_error`] describes it
//! until the next failing call on the same thread. Strings handed to the
//! caller are released with [`kronmcm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kronmcm::beilinson::wedge_form;
use kronmcm::derivedh::{apply_a_power, formal_iso_check, read_formal, write_formal, FormalObject};
use kronmcm::gradedring::{gorenstein_parameter, hilbert_polynomial_ring, veronese};
use kronmcm::kronecker::{read_form, BilinearForm, IsoOutcome};
use kronmcm::mfnode::{mf_iso_check, read_mf, MatrixFactorization, StableHomSpace};
use kronmcm::orbitcat::{orbit_hom, OrbitObject};
use kronmcm::{Error, FieldSpec};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronmcmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    DimensionMismatch = 5,
    InvalidForm = 6,
    InvalidField = 7,
    Unsupported = 8,
    ContractViolation = 9,
    NotGorenstein = 10,
    Undecided = 11,
    Overflow = 12,
    Panic = 13,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronmcmIso {
    NotIsomorphic = 0,
    Isomorphic = 1,
    Undecided = 2,
}

/// A nondegenerate bilinear form on the arrow space.
pub struct KronmcmForm(BilinearForm);

/// An object of the derived category, a direct sum of shifted representations.
pub struct KronmcmObject(FormalObject);

/// A graded matrix factorization of `UV`.
pub struct KronmcmMf(MatrixFactorization);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(KronmcmStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidField(_) => KronmcmStatus::InvalidField,
            Error::DimensionMismatch(_) => KronmcmStatus::DimensionMismatch,
            Error::InvalidForm(_) => KronmcmStatus::InvalidForm,
            Error::UnsupportedMorphism(_) => KronmcmStatus::Unsupported,
            Error::ContractViolation(_) => KronmcmStatus::ContractViolation,
            Error::NotGorenstein(_) => KronmcmStatus::NotGorenstein,
            Error::Undecided(_) => KronmcmStatus::Undecided,
            Error::Parse(_) | Error::Input { .. } => KronmcmStatus::Parse,
            Error::InvalidArgument(_) => KronmcmStatus::InvalidArgument,
            Error::Overflow(_) => KronmcmStatus::Overflow,
        };
        Fail(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> KronmcmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KronmcmStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            KronmcmStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(KronmcmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(KronmcmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_box<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    write_out(out, Box::into_raw(Box::new(value)))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(KronmcmStatus::InvalidArgument, "string contains nul".into()))?;
    write_out(out, c.into_raw())
}

fn field(text: &str) -> Result<FieldSpec, Fail> {
    Ok(text.parse::<FieldSpec>()?)
}

fn iso(o: IsoOutcome) -> KronmcmIso {
    match o {
        IsoOutcome::NotIsomorphic => KronmcmIso::NotIsomorphic,
        IsoOutcome::Isomorphic => KronmcmIso::Isomorphic,
        IsoOutcome::Undecided => KronmcmIso::Undecided,
    }
}

/// Message of the last failure on this thread, or null. Owned by the
/// library; valid until the next failing call.
#[no_mangle]
pub extern "C" fn kronmcm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn kronmcm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// The identity form on `k^n`; `field` is `q` or `fp:P`.
///
/// # Safety
/// `field` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_form_identity(n: usize, field_spec: *const c_char, out: *mut *mut KronmcmForm) -> KronmcmStatus {
    guard(|| {
        let f = field(str_arg(field_spec, "field")?)?;
        if n == 0 {
            return Err(Fail(KronmcmStatus::InvalidArgument, "n must be positive".into()));
        }
        write_box(out, KronmcmForm(BilinearForm::identity(n, f)))
    })
}

/// The wedge pairing on the second exterior power of a 4-dimensional space (`n = 6`).
///
/// # Safety
/// As [`kronmcm_form_identity`].
#[no_mangle]
pub unsafe extern "C" fn kronmcm_form_wedge(field_spec: *const c_char, out: *mut *mut KronmcmForm) -> KronmcmStatus {
    guard(|| write_box(out, KronmcmForm(wedge_form(field(str_arg(field_spec, "field")?)?))))
}

/// Parses the form text format (`field`, `n`, then `n` lines `row: ...`).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_form_parse(text: *const c_char, out: *mut *mut KronmcmForm) -> KronmcmStatus {
    guard(|| write_box(out, KronmcmForm(read_form(str_arg(text, "text")?, "<form>")?)))
}

/// Number of arrows, or 0 for a null handle.
///
/// # Safety
/// `form` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_form_n(form: *const KronmcmForm) -> usize {
    form.as_ref().map_or(0, |f| f.0.n())
}

/// # Safety
/// `form` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_form_free(form: *mut KronmcmForm) {
    if !form.is_null() {
        drop(Box::from_raw(form));
    }
}

/// Builds an object over the quiver of `form` from a sum such as
/// `P1 + I2[-1]` (summands `P1 P2 I1 I2 S1 S2`, optional shift `[k]`), or
/// from the object text format when `spec` starts with `object:`.
///
/// # Safety
/// `spec` must be a nul-terminated string, `form` a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_object_parse(
    spec: *const c_char,
    form: *const KronmcmForm,
    out: *mut *mut KronmcmObject,
) -> KronmcmStatus {
    guard(|| {
        let s = str_arg(spec, "spec")?;
        let pi = &handle(form, "form")?.0;
        let obj = if s.trim_start().starts_with("object:") {
            let o = read_formal(s, "<object>")?;
            if (o.n(), o.field()) != (pi.n(), pi.field()) {
                return Err(Fail(KronmcmStatus::DimensionMismatch, "object and form live over different quivers".into()));
            }
            o
        } else {
            kronmcm::cli::parse_object(s, pi.n(), pi.field())?
        };
        write_box(out, KronmcmObject(obj))
    })
}

/// # Safety
/// `obj` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_object_free(obj: *mut KronmcmObject) {
    if !obj.is_null() {
        drop(Box::from_raw(obj));
    }
}

/// Writes the object text format; release with [`kronmcm_string_free`].
///
/// # Safety
/// `obj` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_object_write(obj: *const KronmcmObject, out: *mut *mut c_char) -> KronmcmStatus {
    guard(|| write_string(out, write_formal(&handle(obj, "object")?.0)))
}

/// Short form such as `(6,1)[1]`; release with [`kronmcm_string_free`].
///
/// # Safety
/// As [`kronmcm_object_write`].
#[no_mangle]
pub unsafe extern "C" fn kronmcm_object_describe(obj: *const KronmcmObject, out: *mut *mut c_char) -> KronmcmStatus {
    guard(|| write_string(out, handle(obj, "object")?.0.to_string()))
}

/// `a^power(obj)` for the form `form`.
///
/// # Safety
/// `obj` and `form` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_object_apply_a(
    obj: *const KronmcmObject,
    form: *const KronmcmForm,
    power: i64,
    out: *mut *mut KronmcmObject,
) -> KronmcmStatus {
    guard(|| {
        let r = apply_a_power(&handle(obj, "object")?.0, power, &handle(form, "form")?.0)?;
        write_box(out, KronmcmObject(r))
    })
}

/// Isomorphism in the derived category.
///
/// # Safety
/// `x` and `y` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_object_iso(x: *const KronmcmObject, y: *const KronmcmObject, out: *mut KronmcmIso) -> KronmcmStatus {
    guard(|| {
        let o = formal_iso_check(&handle(x, "x")?.0, &handle(y, "y")?.0)?;
        write_out(out, iso(o))
    })
}

/// `dim Hom(x, y[degree])` in the orbit category of `a[-1]`.
///
/// # Safety
/// `x`, `y` and `form` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_orbit_hom(
    x: *const KronmcmObject,
    y: *const KronmcmObject,
    degree: i64,
    form: *const KronmcmForm,
    out: *mut usize,
) -> KronmcmStatus {
    guard(|| {
        let ox = OrbitObject::new(handle(x, "x")?.0.clone());
        let oy = OrbitObject::new(handle(y, "y")?.0.clone());
        let r = orbit_hom(&ox, &oy, degree, &handle(form, "form")?.0)?;
        write_out(out, r.total)
    })
}

/// Parses the factorization text format (`field`, `deg0`, `deg1`, `phi` and
/// `psi` rows). Shapes are checked here, the factorization identity by
/// [`kronmcm_mf_validate`].
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_mf_parse(text: *const c_char, out: *mut *mut KronmcmMf) -> KronmcmStatus {
    guard(|| write_box(out, KronmcmMf(read_mf(str_arg(text, "text")?, "<mf>")?)))
}

/// # Safety
/// `mf` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_mf_free(mf: *mut KronmcmMf) {
    if !mf.is_null() {
        drop(Box::from_raw(mf));
    }
}

/// `Ok` when `phi psi = psi phi = UV` with homogeneous entries.
///
/// # Safety
/// `mf` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_mf_validate(mf: *const KronmcmMf) -> KronmcmStatus {
    guard(|| Ok(handle(mf, "mf")?.0.validate()?))
}

/// Total dimension of the stable Hom space over all internal degrees.
///
/// # Safety
/// `x` and `y` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_mf_stable_hom(x: *const KronmcmMf, y: *const KronmcmMf, out: *mut usize) -> KronmcmStatus {
    guard(|| {
        let s = StableHomSpace::new(&handle(x, "x")?.0, &handle(y, "y")?.0)?;
        write_out(out, s.dim())
    })
}

/// Stable isomorphism, ignoring the grading.
///
/// # Safety
/// `x` and `y` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_mf_iso(x: *const KronmcmMf, y: *const KronmcmMf, out: *mut KronmcmIso) -> KronmcmStatus {
    guard(|| {
        let o = mf_iso_check(&handle(x, "x")?.0, &handle(y, "y")?.0)?;
        write_out(out, iso(o))
    })
}

/// Gorenstein parameter of the `m`-th Veronese subring of a polynomial ring
/// in `vars` variables; `NotGorenstein` when there is none.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_gorenstein_veronese(vars: usize, m: usize, out: *mut i64) -> KronmcmStatus {
    guard(|| {
        let h = veronese(&hilbert_polynomial_ring(vars)?, m)?;
        write_out(out, gorenstein_parameter(&h, vars)?)
    })
}

/// Runs a command line (without the program name), e.g.
/// `{"accept", "--format", "records"}`. Writes the command's exit status
/// (0 pass, 1 failed check, 2 usage error) and its standard output; the
/// diagnostic of a usage error is also the last error.
///
/// # Safety
/// `args` must point to `nargs` nul-terminated strings; `out_code` and
/// `out_stdout` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kronmcm_run(
    args: *const *const c_char,
    nargs: usize,
    out_code: *mut i32,
    out_stdout: *mut *mut c_char,
) -> KronmcmStatus {
    guard(|| {
        if args.is_null() && nargs > 0 {
            return Err(null("args"));
        }
        let mut argv = vec!["kronmcm".to_string()];
        for i in 0..nargs {
            argv.push(str_arg(*args.add(i), "argument")?.to_string());
        }
        let o = kronmcm::cli::dispatch(argv);
        if !o.stderr.is_empty() {
            set_error(o.stderr.trim_end());
        }
        write_out(out_code, o.code)?;
        write_string(out_stdout, o.stdout)
    })
}
