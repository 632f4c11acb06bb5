use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use capelli_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    cap_string_free(p);
    s
}

unsafe fn element(text: &str) -> *mut CapElement {
    let mut out = ptr::null_mut();
    assert_eq!(cap_element_parse(c(text).as_ptr(), &mut out), CapStatus::Ok);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cap_last_error()).to_str().unwrap().to_string() }
}

#[test]
fn two_row_bitableau_and_text() {
    unsafe {
        let mut bt = ptr::null_mut();
        let (s, t) = (c("[[1],[2]]"), c("[[2],[1]]"));
        assert_eq!(cap_bitableau(CapBitabKind::Det, s.as_ptr(), t.as_ptr(), 2, &mut bt), CapStatus::Ok);
        let expected = element("-e[1,2]e[2,1] + e[1,1]");
        let mut eq = false;
        assert_eq!(cap_element_equal(bt, expected, &mut eq), CapStatus::Ok);
        assert!(eq);
        let mut text = ptr::null_mut();
        assert_eq!(cap_element_to_text(bt, &mut text), CapStatus::Ok);
        assert_eq!(take_string(text), "-e[2,1]e[1,2] + e[2,2]");
        cap_element_free(bt);
        cap_element_free(expected);
    }
}

#[test]
fn arithmetic_and_json_round_trip() {
    unsafe {
        let a = element("e[1,2]");
        let b = element("e[2,1]");
        let (mut ab, mut diff_text) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(cap_element_mul(a, b, &mut ab), CapStatus::Ok);
        let neg = element("-e[2,1]e[1,2]");
        let mut comm = ptr::null_mut();
        assert_eq!(cap_element_add(ab, neg, &mut comm), CapStatus::Ok);
        assert_eq!(cap_element_to_text(comm, &mut diff_text), CapStatus::Ok);
        assert_eq!(take_string(diff_text), "e[1,1] - e[2,2]");

        let mut json = ptr::null_mut();
        assert_eq!(cap_element_to_json(ab, &mut json), CapStatus::Ok);
        let json = CString::new(take_string(json)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(cap_element_from_json(json.as_ptr(), &mut back), CapStatus::Ok);
        let mut eq = false;
        assert_eq!(cap_element_equal(ab, back, &mut eq), CapStatus::Ok);
        assert!(eq);
        for p in [a, b, ab, neg, comm, back] {
            cap_element_free(p);
        }
    }
}

#[test]
fn catalog_centrality_and_harish_chandra() {
    unsafe {
        for (key, index) in [("Hk", 2), ("K", 2), ("C", 1), ("Ht", 3), ("Cs", 1), ("P", 2)] {
            let mut u = ptr::null_mut();
            assert_eq!(cap_compute(c(key).as_ptr(), 2, index, &mut u), CapStatus::Ok, "{key}");
            let mut central = false;
            assert_eq!(cap_element_is_central(u, 2, &mut central), CapStatus::Ok);
            assert!(central, "{key}");
            cap_element_free(u);
        }
        let mut u = ptr::null_mut();
        assert_eq!(cap_compute(c("P").as_ptr(), 1, 1, &mut u), CapStatus::Ok);
        let mut chi = ptr::null_mut();
        assert_eq!(cap_harish_chandra(u, 1, &mut chi), CapStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(cap_sympoly_to_text(chi, &mut text), CapStatus::Ok);
        assert_eq!(take_string(text), "x1");
        cap_sympoly_free(chi);
        cap_element_free(u);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut u = ptr::null_mut();
        assert_eq!(cap_compute(c("nope").as_ptr(), 2, 1, &mut u), CapStatus::InvalidArgument);
        assert!(last_error().contains("nope"));
        assert!(u.is_null());
        assert_eq!(cap_compute(ptr::null(), 2, 1, &mut u), CapStatus::NullPointer);
        assert_eq!(cap_element_parse(c("e[1,").as_ptr(), &mut u), CapStatus::ParseError);
        let nonc = element("e[1,2]");
        let mut chi = ptr::null_mut();
        assert_eq!(cap_harish_chandra(nonc, 2, &mut chi), CapStatus::InvalidArgument);
        cap_element_free(nonc);
        cap_element_free(ptr::null_mut());
        cap_string_free(ptr::null_mut());
        let mut ok = ptr::null_mut();
        assert_eq!(cap_compute(c("Hk").as_ptr(), 1, 1, &mut ok), CapStatus::Ok);
        assert_eq!(last_error(), "");
        cap_element_free(ok);
    }
}

#[test]
fn suite_report_as_json() {
    unsafe {
        let mut json = ptr::null_mut();
        let mut pass = false;
        assert_eq!(cap_run_suite(c("expansion").as_ptr(), 2, 1893, &mut json, &mut pass), CapStatus::Ok);
        assert!(pass);
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["suite"], "expansion");
        assert!(report["checks"].as_array().unwrap().iter().all(|c| c["ms"] == 0));
        assert_eq!(cap_run_suite(c("bogus").as_ptr(), 2, 1, &mut json, &mut pass), CapStatus::InvalidArgument);
    }
}

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let lib_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let staticlib = lib_dir.join("libcapelli_ffi.a");
    assert!(staticlib.exists(), "missing {}", staticlib.display());
    let exe = out_dir.join("capelli_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
