use std::ffi::{CStr, CString};
use std::ptr;

use kronmcm_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = kronmcm_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    kronmcm_string_free(s);
    out
}

const P_MF: &str = "field: q\ndeg0: 0\ndeg1: 1\nphi: V\npsi: U\n";
const Q_MF: &str = "field: q\ndeg0: 0\ndeg1: 1\nphi: U\npsi: V\n";

#[test]
fn version_is_package_version() {
    let v = unsafe { CStr::from_ptr(kronmcm_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn forms_and_errors() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(kronmcm_form_identity(3, c("fp:7").as_ptr(), &mut f), KronmcmStatus::Ok);
        assert_eq!(kronmcm_form_n(f), 3);
        kronmcm_form_free(f);

        let mut g = ptr::null_mut();
        assert_eq!(kronmcm_form_wedge(c("q").as_ptr(), &mut g), KronmcmStatus::Ok);
        assert_eq!(kronmcm_form_n(g), 6);
        kronmcm_form_free(g);

        let mut h = ptr::null_mut();
        let text = c("field: q\nn: 2\nrow: 0 1\nrow: -1 0\n");
        assert_eq!(kronmcm_form_parse(text.as_ptr(), &mut h), KronmcmStatus::Ok);
        assert_eq!(kronmcm_form_n(h), 2);
        kronmcm_form_free(h);

        let mut bad = ptr::null_mut();
        assert_eq!(kronmcm_form_identity(2, c("fp:4").as_ptr(), &mut bad), KronmcmStatus::InvalidField);
        assert!(bad.is_null());
        assert!(last_error().contains('4'));

        let singular = c("field: q\nn: 2\nrow: 1 1\nrow: 1 1\n");
        assert_ne!(kronmcm_form_parse(singular.as_ptr(), &mut bad), KronmcmStatus::Ok);
        assert!(bad.is_null());

        assert_eq!(kronmcm_form_wedge(ptr::null(), &mut bad), KronmcmStatus::NullPointer);
        assert_eq!(kronmcm_form_wedge(c("q").as_ptr(), ptr::null_mut()), KronmcmStatus::NullPointer);
        assert_eq!(kronmcm_form_n(ptr::null()), 0);
        kronmcm_form_free(ptr::null_mut());
    }
}

#[test]
fn objects_and_orbit_homs() {
    unsafe {
        let mut pi = ptr::null_mut();
        assert_eq!(kronmcm_form_wedge(c("q").as_ptr(), &mut pi), KronmcmStatus::Ok);
        let mut p1 = ptr::null_mut();
        assert_eq!(kronmcm_object_parse(c("P1").as_ptr(), pi, &mut p1), KronmcmStatus::Ok);

        let mut d = usize::MAX;
        assert_eq!(kronmcm_orbit_hom(p1, p1, 0, pi, &mut d), KronmcmStatus::Ok);
        assert_eq!(d, 1);

        // a^2 = tau, and tau P1 = nu P1[-1] = I1[-1]
        let mut a2 = ptr::null_mut();
        assert_eq!(kronmcm_object_apply_a(p1, pi, 2, &mut a2), KronmcmStatus::Ok);
        let mut i1 = ptr::null_mut();
        assert_eq!(kronmcm_object_parse(c("I1[-1]").as_ptr(), pi, &mut i1), KronmcmStatus::Ok);
        let mut o = KronmcmIso::Undecided;
        assert_eq!(kronmcm_object_iso(a2, i1, &mut o), KronmcmStatus::Ok);
        assert_eq!(o, KronmcmIso::Isomorphic);
        let mut s = ptr::null_mut();
        assert_eq!(kronmcm_object_describe(a2, &mut s), KronmcmStatus::Ok);
        assert_eq!(take(s), "(1,6)[-1]");

        let mut back = ptr::null_mut();
        assert_eq!(kronmcm_object_apply_a(a2, pi, -2, &mut back), KronmcmStatus::Ok);
        assert_eq!(kronmcm_object_iso(back, p1, &mut o), KronmcmStatus::Ok);
        assert_eq!(o, KronmcmIso::Isomorphic);
        assert_eq!(kronmcm_object_iso(a2, p1, &mut o), KronmcmStatus::Ok);
        assert_eq!(o, KronmcmIso::NotIsomorphic);

        assert_eq!(kronmcm_object_write(a2, &mut s), KronmcmStatus::Ok);
        let text = c(&take(s));
        let mut reread = ptr::null_mut();
        assert_eq!(kronmcm_object_parse(text.as_ptr(), pi, &mut reread), KronmcmStatus::Ok);
        assert_eq!(kronmcm_object_iso(reread, a2, &mut o), KronmcmStatus::Ok);
        assert_eq!(o, KronmcmIso::Isomorphic);

        let mut small = ptr::null_mut();
        assert_eq!(kronmcm_form_identity(2, c("q").as_ptr(), &mut small), KronmcmStatus::Ok);
        let mut wrong = ptr::null_mut();
        assert_eq!(kronmcm_object_parse(text.as_ptr(), small, &mut wrong), KronmcmStatus::DimensionMismatch);
        assert_eq!(kronmcm_object_parse(c("P3").as_ptr(), pi, &mut wrong), KronmcmStatus::Parse);
        assert!(last_error().contains("P3"));
        assert!(wrong.is_null());

        for h in [p1, a2, i1, back, reread] {
            kronmcm_object_free(h);
        }
        kronmcm_form_free(pi);
        kronmcm_form_free(small);
    }
}

#[test]
fn matrix_factorizations() {
    unsafe {
        let (mut p, mut q) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(kronmcm_mf_parse(c(P_MF).as_ptr(), &mut p), KronmcmStatus::Ok);
        assert_eq!(kronmcm_mf_parse(c(Q_MF).as_ptr(), &mut q), KronmcmStatus::Ok);
        assert_eq!(kronmcm_mf_validate(p), KronmcmStatus::Ok);

        let mut total = 0;
        assert_eq!(kronmcm_mf_stable_hom(p, p, &mut total), KronmcmStatus::Ok);
        assert_eq!(total, 1);
        let mut o = KronmcmIso::Undecided;
        assert_eq!(kronmcm_mf_iso(p, p, &mut o), KronmcmStatus::Ok);
        assert_eq!(o, KronmcmIso::Isomorphic);
        assert_eq!(kronmcm_mf_iso(p, q, &mut o), KronmcmStatus::Ok);
        assert_eq!(o, KronmcmIso::NotIsomorphic);

        let mut bad = ptr::null_mut();
        let text = c("field: q\ndeg0: 0\ndeg1: 1\nphi: U\npsi: U\n");
        assert_eq!(kronmcm_mf_parse(text.as_ptr(), &mut bad), KronmcmStatus::Ok);
        assert_eq!(kronmcm_mf_validate(bad), KronmcmStatus::InvalidArgument);
        assert!(!last_error().is_empty());

        for h in [p, q, bad] {
            kronmcm_mf_free(h);
        }
    }
}

#[test]
fn gorenstein_veronese_parameter() {
    unsafe {
        let mut a = 0;
        assert_eq!(kronmcm_gorenstein_veronese(3, 3, &mut a), KronmcmStatus::Ok);
        assert_eq!(a, 1);
        assert_eq!(kronmcm_gorenstein_veronese(4, 2, &mut a), KronmcmStatus::Ok);
        assert_eq!(a, 2);
        assert_eq!(kronmcm_gorenstein_veronese(3, 2, &mut a), KronmcmStatus::NotGorenstein);
    }
}

#[test]
fn run_command_lines() {
    unsafe {
        let args: Vec<CString> = ["--format", "records", "accept", "--criterion", "3"].iter().map(|a| c(a)).collect();
        let ptrs: Vec<_> = args.iter().map(|a| a.as_ptr()).collect();
        let (mut code, mut out) = (-1, ptr::null_mut());
        assert_eq!(kronmcm_run(ptrs.as_ptr(), ptrs.len(), &mut code, &mut out), KronmcmStatus::Ok);
        let text = take(out);
        assert_eq!(code, 0, "{text}");
        assert!(text.starts_with("config "));
        assert!(text.contains("criterion id:3 status:pass"), "{text}");

        let args = [c("no-such-verb")];
        let ptrs: Vec<_> = args.iter().map(|a| a.as_ptr()).collect();
        assert_eq!(kronmcm_run(ptrs.as_ptr(), 1, &mut code, &mut out), KronmcmStatus::Ok);
        kronmcm_string_free(out);
        assert_eq!(code, 2);
        assert!(last_error().contains("no-such-verb"));

        assert_eq!(kronmcm_run(ptr::null(), 1, &mut code, &mut out), KronmcmStatus::NullPointer);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/kronmcm.h")).unwrap();
    for name in [
        "typedef struct KronmcmForm KronmcmForm",
        "typedef struct KronmcmObject KronmcmObject",
        "typedef struct KronmcmMf KronmcmMf",
        "KRONMCM_STATUS_OK = 0",
        "KRONMCM_STATUS_PANIC",
        "KRONMCM_ISO_UNDECIDED",
        "kronmcm_last_error(void)",
        "kronmcm_string_free(char *s)",
        "kronmcm_form_identity(",
        "kronmcm_object_parse(",
        "kronmcm_orbit_hom(",
        "kronmcm_mf_stable_hom(",
        "kronmcm_gorenstein_veronese(",
        "kronmcm_run(",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
