use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use blockgalois_ffi::*;

fn group(spec: &str) -> *mut BgGroup {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { bg_group_from_spec(spec.as_ptr(), &mut g) },
        BgStatus::Ok
    );
    g
}

fn table(g: *const BgGroup) -> *mut BgTable {
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { bg_table_new(g, &mut t) }, BgStatus::Ok);
    t
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { bg_string_free(s) };
    out
}

#[test]
fn a5_round_trip() {
    let g = group("alt:5");
    let mut order = 0u64;
    assert_eq!(unsafe { bg_group_order(g, &mut order) }, BgStatus::Ok);
    assert_eq!(order, 60);
    let t = table(g);
    let mut n = 0usize;
    assert_eq!(unsafe { bg_table_size(t, &mut n) }, BgStatus::Ok);
    assert_eq!(n, 5);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { bg_table_value(t, 0, 4, &mut s) }, BgStatus::Ok);
    assert_eq!(take_string(s), "1");
    assert_eq!(unsafe { bg_table_json(t, &mut s) }, BgStatus::Ok);
    assert!(take_string(s).starts_with('{'));
    assert_eq!(unsafe { bg_blocks_json(t, 2, &mut s) }, BgStatus::Ok);
    let blocks: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    // B0 = {1, 3, 3', 5} and the defect-zero block {4}
    assert_eq!(blocks.as_array().unwrap().len(), 2);
    assert_eq!(blocks[0]["defect_group_order"], 4);

    let mut count = 0usize;
    assert_eq!(unsafe { bg_fixed_count(t, 3, 1, &mut count) }, BgStatus::Ok);
    assert_eq!(count, 3);
    let mut verdict = 7i32;
    assert_eq!(
        unsafe { bg_verify_theorem_a(t, 2, &mut verdict) },
        BgStatus::Ok
    );
    assert_eq!(verdict, 1);
    assert_eq!(
        unsafe { bg_verify_theorem_a(t, 5, &mut verdict) },
        BgStatus::Ok
    );
    assert_eq!(verdict, -1);
    unsafe {
        bg_table_free(t);
        bg_group_free(g);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("degree 3\n(0 7)\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { bg_group_from_text(bad.as_ptr(), &mut g) },
        BgStatus::Parse
    );
    assert!(g.is_null());
    let msg = unsafe { CStr::from_ptr(bg_last_error()) }.to_str().unwrap();
    assert!(msg.contains("line 2"), "{msg}");

    assert_eq!(
        unsafe { bg_group_from_text(ptr::null(), &mut g) },
        BgStatus::InvalidArgument
    );
    let spec = CString::new("psl2:49").unwrap();
    assert_eq!(
        unsafe { bg_group_from_spec(spec.as_ptr(), &mut g) },
        BgStatus::InvalidArgument
    );

    let g = group("sym:3");
    let t = table(g);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { bg_table_value(t, 9, 0, &mut s) },
        BgStatus::InvalidArgument
    );
    let mut count = 0usize;
    assert_eq!(
        unsafe { bg_fixed_count(t, 4, 1, &mut count) },
        BgStatus::InvalidArgument
    );
    unsafe {
        bg_table_free(t);
        bg_group_free(g);
        bg_group_free(ptr::null_mut());
        bg_string_free(ptr::null_mut());
    }
}

#[test]
fn text_groups() {
    let text = CString::new("# S4\ndegree 4\n(0 1 2 3)\n(0 1)\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { bg_group_from_text(text.as_ptr(), &mut g) },
        BgStatus::Ok
    );
    let t = table(g);
    let mut count = 0usize;
    assert_eq!(unsafe { bg_fixed_count(t, 2, 1, &mut count) }, BgStatus::Ok);
    assert_eq!(count, 4);
    unsafe {
        bg_table_free(t);
        bg_group_free(g);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/blockgalois.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "bg_group_from_text",
        "bg_table_value",
        "bg_verify_theorem_a",
        "bg_string_free",
        "BG_STATUS_PANIC",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let dir = std::env::temp_dir().join(format!("bg_header_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        "#include \"blockgalois.h\"\nint main(void) { BgGroup *g = 0; return bg_group_from_spec(\"sym:3\", &g) == BG_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    match Command::new("cc")
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-I")
        .arg(header.parent().unwrap())
        .arg(&src)
        .status()
    {
        Ok(status) => assert!(status.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler available; syntax check skipped"),
    }
}
