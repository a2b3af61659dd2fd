use nilpair_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { np_string_free(s) };
    out
}

fn last_error() -> String {
    let p = np_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn pair(spec: &str) -> *mut NpPair {
    let spec = CString::new(spec).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { np_pair_new(spec.as_ptr(), &mut p) }, NpStatus::Ok);
    p
}

#[test]
fn hook_pair_roundtrip() {
    let p = pair("2,1");
    let mut n = 0usize;
    assert_eq!(unsafe { np_pair_size(p, &mut n) }, NpStatus::Ok);
    assert_eq!(n, 3);
    let mut dim = 0usize;
    assert_eq!(
        unsafe { np_pair_centralizer_dim(p, &mut dim) },
        NpStatus::Ok
    );
    assert_eq!(dim, 2);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { np_pair_biexponents_json(p, &mut s) }, NpStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v, serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(unsafe { np_pair_classify_json(p, &mut s) }, NpStatus::Ok);
    assert!(take(s).contains("principal"));
    assert_eq!(unsafe { np_pair_json(p, &mut s) }, NpStatus::Ok);
    assert!(serde_json::from_str::<serde_json::Value>(&take(s)).is_ok());
    unsafe { np_pair_free(p) };
}

#[test]
fn errors_map_to_status_codes() {
    let bad = CString::new("3,1,0").unwrap();
    let mut p = ptr::null_mut();
    let st = unsafe { np_pair_new(bad.as_ptr(), &mut p) };
    assert!(matches!(st, NpStatus::Parse | NpStatus::Shape), "{st:?}");
    assert!(p.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(
        unsafe { np_pair_new(ptr::null(), &mut p) },
        NpStatus::NullPointer
    );
    let ok = CString::new("2,1").unwrap();
    assert_eq!(
        unsafe { np_pair_new(ok.as_ptr(), ptr::null_mut()) },
        NpStatus::NullPointer
    );
    let mut n = 0usize;
    assert_eq!(
        unsafe { np_pair_size(ptr::null(), &mut n) },
        NpStatus::NullPointer
    );

    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { np_pair_new(invalid.as_ptr().cast(), &mut p) },
        NpStatus::InvalidUtf8
    );

    // A non-principal pair has no bi-exponents.
    let skew = pair("3,2/1");
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { np_pair_biexponents_json(skew, &mut s) },
        NpStatus::Classification
    );
    unsafe { np_pair_free(skew) };

    // Success clears the previous message.
    let p = pair("2");
    assert!(np_last_error().is_null());
    unsafe { np_pair_free(p) };
}

#[test]
fn rectangular_and_suites() {
    let spec = CString::new("so:3x1,1x3").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { np_rect_json(spec.as_ptr(), &mut s) }, NpStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["verdict"]["accepted"], serde_json::json!(true));

    let odd = CString::new("so:2x1").unwrap();
    let st = unsafe { np_rect_json(odd.as_ptr(), &mut s) };
    assert_ne!(st, NpStatus::Ok);

    let suite = CString::new("structure").unwrap();
    let mut passed = -1;
    assert_eq!(
        unsafe { np_verify_json(suite.as_ptr(), 4, &mut s, &mut passed) },
        NpStatus::Ok
    );
    assert_eq!(passed, 1);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["items"], serde_json::json!(11));

    let unknown = CString::new("nope").unwrap();
    assert_eq!(
        unsafe { np_verify_json(unknown.as_ptr(), 4, &mut s, ptr::null_mut()) },
        NpStatus::UnknownSuite
    );

    let big = CString::new("harmonics").unwrap();
    assert_eq!(
        unsafe { np_verify_json(big.as_ptr(), 9, &mut s, ptr::null_mut()) },
        NpStatus::Resource
    );
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(np_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
    unsafe { np_string_free(ptr::null_mut()) };
    unsafe { np_pair_free(ptr::null_mut()) };
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/nilpair.h");
    let text = std::fs::read_to_string(header).expect("build script writes the header");
    for name in [
        "np_pair_new",
        "np_pair_free",
        "np_string_free",
        "np_verify_json",
        "NP_STATUS_OK",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let src = std::env::temp_dir().join(format!("nilpair_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        format!(
            "#include \"{header}\"\nint main(void) {{ NpPair *p = 0; NpStatus s = np_pair_new(\"2,1\", &p); np_pair_free(p); return (int)s; }}\n"
        ),
    )
    .unwrap();
    let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"])
        .arg(&src)
        .output()
    else {
        eprintln!("no C compiler on PATH; header syntax check skipped");
        return;
    };
    let _ = std::fs::remove_file(&src);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
