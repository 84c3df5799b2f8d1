use std::ffi::CString;
use std::path::Path;
use std::process::Command;
use std::ptr;

use zss_ffi::*;

unsafe fn parse(text: &str) -> *mut ZssMatrix {
    let c = CString::new(text).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(
        zss_matrix_parse(c.as_ptr(), &mut m, ptr::null_mut(), ptr::null_mut()),
        ZssStatus::Ok
    );
    m
}

#[test]
fn parse_query_and_free() {
    unsafe {
        let m = parse("3 3\n--+\n-++\n+++\n");
        assert_eq!(zss_matrix_rows(m), 3);
        assert_eq!(zss_matrix_cols(m), 3);
        let mut d = 0;
        assert_eq!(zss_matrix_discrepancy(m, &mut d), ZssStatus::Ok);
        assert_eq!(d, 3);
        let mut free = false;
        assert_eq!(zss_matrix_is_zssf(m, &mut free, ptr::null_mut()), ZssStatus::Ok);
        assert!(free);
        let (mut v, mut t) = (ZssSplitVariant::NonSplit, 0);
        assert_eq!(zss_matrix_classify(m, &mut v, &mut t), ZssStatus::Ok);
        assert_eq!((v, t), (ZssSplitVariant::Identity, 2));
        let mut e = 0;
        assert_eq!(zss_matrix_get(m, 1, 1, &mut e), ZssStatus::Ok);
        assert_eq!(e, -1);
        assert_eq!(zss_matrix_get(m, 4, 1, &mut e), ZssStatus::InvalidArgument);
        zss_matrix_free(m);
    }
}

#[test]
fn parse_error_reports_position() {
    unsafe {
        let c = CString::new("3 2\n+-\n+0\n--\n").unwrap();
        let (mut m, mut line, mut col) = (ptr::null_mut(), 0, 0);
        assert_eq!(
            zss_matrix_parse(c.as_ptr(), &mut m, &mut line, &mut col),
            ZssStatus::ParseError
        );
        assert!(m.is_null());
        assert_eq!((line, col), (3, 2));
    }
}

#[test]
fn witness_for_a_zero_sum_square() {
    unsafe {
        let m = parse("2 2\n+-\n-+\n");
        let mut free = true;
        let mut w = [0usize; 3];
        assert_eq!(zss_matrix_is_zssf(m, &mut free, w.as_mut_ptr()), ZssStatus::Ok);
        assert!(!free);
        assert_eq!(w, [1, 1, 1]);
        let mut v = ZssSplitVariant::Identity;
        zss_matrix_classify(m, &mut v, ptr::null_mut());
        assert_eq!(v, ZssSplitVariant::NonSplit);
        zss_matrix_free(m);
    }
}

#[test]
fn t_split_canonical_and_text() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(zss_matrix_t_split(4, 5, 3, &mut s), ZssStatus::Ok);
        let mut c = ptr::null_mut();
        assert_eq!(zss_matrix_canonical(s, &mut c), ZssStatus::Ok);
        let mut len = 0;
        assert_eq!(
            zss_matrix_to_text(c, ptr::null_mut(), &mut len),
            ZssStatus::InvalidArgument
        );
        assert_eq!(len, 4 + 4 * 6 + 1);
        let mut buf = vec![0 as std::ffi::c_char; len];
        assert_eq!(zss_matrix_to_text(c, buf.as_mut_ptr(), &mut len), ZssStatus::Ok);
        let text = std::ffi::CStr::from_ptr(buf.as_ptr()).to_str().unwrap();
        assert!(text.starts_with("4 5\n"));
        let back = parse(text);
        let mut d = 0;
        zss_matrix_discrepancy(back, &mut d);
        let mut d0 = 0;
        zss_matrix_discrepancy(s, &mut d0);
        assert_eq!(d.abs(), d0.abs());
        for h in [s, c, back] {
            zss_matrix_free(h);
        }
        let mut bad = ptr::null_mut();
        assert_eq!(zss_matrix_t_split(4, 5, 99, &mut bad), ZssStatus::InvalidArgument);
        assert_eq!(zss_matrix_t_split(0, 5, 1, &mut bad), ZssStatus::InvalidArgument);
    }
}

#[test]
fn counts_match_the_exceptional_totals() {
    unsafe {
        let mut r = ZssCountReport::default();
        assert_eq!(zss_count_bounded(4, 5, 8, 2, &mut r), ZssStatus::Ok);
        assert_eq!((r.total, r.split, r.exceptional), (40, 12, 28));
        assert_eq!(zss_count_bounded(5, 5, 10, 0, &mut r), ZssStatus::Ok);
        assert_eq!((r.total, r.split, r.exceptional), (40, 8, 32));
        assert_eq!(zss_count_exact(2, 2, 0, 1, &mut r), ZssStatus::Ok);
        assert_eq!(r.total, 0);
        assert_eq!(zss_count_exact(65, 2, 0, 1, &mut r), ZssStatus::TooLarge);
    }
}

#[test]
fn null_pointers_are_rejected() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(
            zss_matrix_parse(ptr::null(), &mut m, ptr::null_mut(), ptr::null_mut()),
            ZssStatus::NullPointer
        );
        assert_eq!(zss_matrix_rows(ptr::null()), 0);
        let mut d = 0;
        assert_eq!(zss_matrix_discrepancy(ptr::null(), &mut d), ZssStatus::NullPointer);
        assert_eq!(zss_count_bounded(2, 2, 0, 1, ptr::null_mut()), ZssStatus::NullPointer);
        zss_matrix_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/zss.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for sym in [
        "zss_matrix_parse",
        "zss_matrix_free",
        "zss_count_bounded",
        "ZSS_STATUS_OK",
        "typedef struct ZssMatrix ZssMatrix",
    ] {
        assert!(text.contains(sym), "{sym} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler; skipped syntax check");
        return;
    };
    assert!(status.success());
}
