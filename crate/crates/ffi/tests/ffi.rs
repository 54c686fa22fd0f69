use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use connlap_ffi::*;

fn from_text(text: &str) -> *mut ClComplex {
    let t = CString::new(text).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { cl_complex_from_facet_text(t.as_ptr(), &mut c) }, ClStatus::Ok);
    assert!(!c.is_null());
    c
}

fn last_error() -> String {
    let p = cl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn diamond_invariants() {
    let c = from_text("1,2,3\n2,3,4\n");
    unsafe {
        let mut n = 0usize;
        assert_eq!(cl_complex_len(c, &mut n), ClStatus::Ok);
        assert_eq!(n, 11);
        let mut f = [0u64; 4];
        let mut len = 0usize;
        assert_eq!(cl_complex_f_vector(c, f.as_mut_ptr(), f.len(), &mut len), ClStatus::Ok);
        assert_eq!(&f[..len], &[4, 5, 2]);
        assert_eq!(cl_complex_f_vector(c, f.as_mut_ptr(), 2, &mut len), ClStatus::BufferTooSmall);
        let (mut chi, mut phi, mut det, mut energy) = (0i64, 0i64, 0i64, 0i64);
        assert_eq!(cl_complex_euler(c, &mut chi), ClStatus::Ok);
        assert_eq!(cl_complex_fermi(c, &mut phi), ClStatus::Ok);
        assert_eq!(cl_connection_determinant(c, &mut det), ClStatus::Ok);
        assert_eq!(cl_total_energy(c, &mut energy), ClStatus::Ok);
        assert_eq!((chi, phi, det, energy), (1, -1, -1, 1));
        let (mut p, mut m, mut z) = (0usize, 0usize, 0usize);
        assert_eq!(cl_inertia(c, &mut p, &mut m, &mut z), ClStatus::Ok);
        assert_eq!((p, m, z), (6, 5, 0));
        cl_complex_free(c);
    }
}

#[test]
fn matrices() {
    let c = from_text("1,2\n2,3\n3,1\n");
    unsafe {
        let mut l = ptr::null_mut();
        let mut g = ptr::null_mut();
        assert_eq!(cl_connection_matrix(c, &mut l), ClStatus::Ok);
        assert_eq!(cl_green_matrix(c, &mut g), ClStatus::Ok);
        assert_eq!((cl_matrix_rows(g), cl_matrix_cols(g)), (6, 6));
        let mut total = 0i64;
        for i in 0..6 {
            for j in 0..6 {
                let mut v = 0i64;
                assert_eq!(cl_matrix_get(g, i, j, &mut v), ClStatus::Ok);
                total += v;
            }
        }
        assert_eq!(total, 0);
        let mut v = 0i64;
        assert_eq!(cl_matrix_get(l, 0, 3, &mut v), ClStatus::Ok);
        assert_eq!(v, 1);
        assert_eq!(cl_matrix_get(l, 6, 0, &mut v), ClStatus::InvalidArgument);
        assert!(last_error().contains("outside"));
        cl_matrix_free(l);
        cl_matrix_free(g);
        cl_complex_free(c);
    }
}

#[test]
fn integer_sets_and_report() {
    let vertices = [1i64, 2, 3, 2, 3, 4];
    let sizes = [3usize, 3];
    let mut c = ptr::null_mut();
    unsafe {
        assert_eq!(cl_complex_from_sets(vertices.as_ptr(), sizes.as_ptr(), 2, &mut c), ClStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(cl_report_json(c, 400, &mut json), ClStatus::Ok);
        let s = CStr::from_ptr(json).to_str().unwrap().to_string();
        assert!(s.contains("\"total_energy\": \"1\""));
        cl_string_free(json);
        assert_eq!(cl_report_json(c, 3, &mut json), ClStatus::TooLarge);
        cl_complex_free(c);

        let mut e = ptr::null_mut();
        assert_eq!(cl_complex_from_sets(ptr::null(), ptr::null(), 0, &mut e), ClStatus::Ok);
        let mut n = 1usize;
        assert_eq!(cl_complex_len(e, &mut n), ClStatus::Ok);
        assert_eq!(n, 0);
        let mut g = ptr::null_mut();
        assert_eq!(cl_green_matrix(e, &mut g), ClStatus::InvalidArgument);
        cl_complex_free(e);
    }
}

#[test]
fn errors() {
    unsafe {
        let mut c = ptr::null_mut();
        let bad = CString::new("1,2\n3,3\n").unwrap();
        assert_eq!(cl_complex_from_facet_text(bad.as_ptr(), &mut c), ClStatus::Parse);
        assert!(last_error().contains("line 2"));
        assert!(c.is_null());
        assert_eq!(cl_complex_from_facet_text(ptr::null(), &mut c), ClStatus::NullPointer);
        let mut v = 0i64;
        assert_eq!(cl_complex_euler(ptr::null(), &mut v), ClStatus::NullPointer);
        let ok = from_text("1");
        assert_eq!(cl_complex_euler(ok, ptr::null_mut()), ClStatus::NullPointer);
        assert_eq!(cl_matrix_rows(ptr::null()), 0);
        cl_complex_free(ok);
        cl_complex_free(ptr::null_mut());
        cl_matrix_free(ptr::null_mut());
        cl_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(cl_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/connlap.h")).unwrap();
    for name in [
        "cl_complex_from_facet_text",
        "cl_complex_from_sets",
        "cl_complex_free",
        "cl_total_energy",
        "cl_green_matrix",
        "cl_matrix_get",
        "cl_report_json",
        "cl_last_error",
        "CL_STATUS_OK = 0",
        "typedef struct ClComplex ClComplex;",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn header_compiles_and_links_from_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler available, skipping");
        return;
    }
    let include = dir.join("include");
    let src = dir.join("tests/smoke.c");
    let syntax = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    assert!(syntax.success());
    // the static archive sits next to the test binary's profile directory
    let profile = tmp.parent().unwrap().join(if cfg!(debug_assertions) { "debug" } else { "release" });
    let archive = profile.join("libconnlap_ffi.a");
    if !archive.exists() {
        eprintln!("{} not built, skipping link step", archive.display());
        return;
    }
    let exe = tmp.join("connlap_smoke");
    let link = Command::new(&cc)
        .args(["-std=c99", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(link.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "chi=1 det=-1 energy=1 p=6 n=5\n");
}
