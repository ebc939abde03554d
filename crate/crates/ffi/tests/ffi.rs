use std::ffi::{c_char, CStr, CString};
use std::ptr;

use semitop_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = semitop_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

struct Space(*mut SemitopSpace);

impl Drop for Space {
    fn drop(&mut self) {
        unsafe { semitop_space_free(self.0) }
    }
}

fn catalogued(name: &str, n: usize) -> Space {
    let mut h = ptr::null_mut();
    let st = unsafe { semitop_space_from_catalog(c(name).as_ptr(), n, &mut h) };
    assert_eq!(st, SemitopStatus::Ok);
    assert!(!h.is_null());
    Space(h)
}

fn index(s: &Space, label: &str) -> usize {
    let mut i = usize::MAX;
    assert_eq!(unsafe { semitop_space_index_of(s.0, c(label).as_ptr(), &mut i) }, SemitopStatus::Ok);
    i
}

#[test]
fn classify_matches_library() {
    let s = catalogued("fig-012-tl", 0);
    assert_eq!(unsafe { semitop_space_len(s.0) }, 3);
    let one = index(&s, "1");
    let mut flags = 0u32;
    assert_eq!(unsafe { semitop_classify(s.0, one, &mut flags) }, SemitopStatus::Ok);
    assert_ne!(flags & SEMITOP_WEAKLY_REGULAR, 0);
    assert_ne!(flags & SEMITOP_CONFLICTED, 0);
    assert_eq!(flags & SEMITOP_REGULAR, 0);
    assert!(semitop_last_error().is_null());

    let mut k = 0u64;
    assert_eq!(unsafe { semitop_kernel(s.0, one, &mut k) }, SemitopStatus::Ok);
    assert_eq!(k, (1 << index(&s, "0")) | (1 << index(&s, "2")));
    let mut comm = 0u64;
    assert_eq!(unsafe { semitop_community(s.0, one, &mut comm) }, SemitopStatus::Ok);
    assert_eq!(comm, 0b111);
}

#[test]
fn intertwined_and_closure() {
    let s = catalogued("fig-012-tl", 0);
    let (zero, one, two) = (index(&s, "0"), index(&s, "1"), index(&s, "2"));
    let mut b = true;
    assert_eq!(unsafe { semitop_intertwined(s.0, zero, two, &mut b) }, SemitopStatus::Ok);
    assert!(!b);
    assert_eq!(unsafe { semitop_intertwined(s.0, zero, one, &mut b) }, SemitopStatus::Ok);
    assert!(b);

    let sk = catalogued("sierpinski", 0);
    let z = index(&sk, "0");
    let mut x = 0u64;
    assert_eq!(unsafe { semitop_closure(sk.0, 1 << z, &mut x) }, SemitopStatus::Ok);
    assert_eq!(x, 1 << z);
    assert_eq!(unsafe { semitop_interior(sk.0, 1 << z, &mut x) }, SemitopStatus::Ok);
    assert_eq!(x, 0);
    assert_eq!(unsafe { semitop_is_open(sk.0, 0b11, &mut b) }, SemitopStatus::Ok);
    assert!(b);
}

#[test]
fn json_round_trip_through_handles() {
    let s = catalogued("supermajority", 4);
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { semitop_space_to_json(s.0, &mut text) }, SemitopStatus::Ok);
    let json = unsafe { CStr::from_ptr(text) }.to_owned();
    unsafe { semitop_string_free(text) };

    let mut h = ptr::null_mut();
    assert_eq!(unsafe { semitop_space_from_json(json.as_ptr(), &mut h) }, SemitopStatus::Ok);
    let t = Space(h);
    let mut again: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { semitop_space_to_json(t.0, &mut again) }, SemitopStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(again) }, json.as_c_str());
    unsafe { semitop_string_free(again) };
}

#[test]
fn witness_json_loads_as_space() {
    let json = c(r#"{"points": ["a", "b"], "witness": {"a": [["a"]], "b": [["a", "b"]]}}"#);
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { semitop_space_from_json(json.as_ptr(), &mut h) }, SemitopStatus::Ok, "{}", last_error());
    let s = Space(h);
    assert_eq!(unsafe { semitop_space_len(s.0) }, 2);
}

#[test]
fn soberify_reports_neighbourhood_map() {
    let s = catalogued("trivial", 2);
    let mut h = ptr::null_mut();
    let mut nbhd = [usize::MAX; 2];
    assert_eq!(unsafe { semitop_soberify(s.0, &mut h, nbhd.as_mut_ptr()) }, SemitopStatus::Ok);
    let sob = Space(h);
    assert_eq!(unsafe { semitop_space_len(sob.0) }, 1);
    assert_eq!(nbhd, [0, 0]);
}

#[test]
fn eval_and_valid() {
    let s = catalogued("three", 0);
    let mut v: c_char = 0;
    let st = unsafe { semitop_eval(s.0, c("B -> F").as_ptr(), c("TBF").as_ptr(), &mut v) };
    assert_eq!(st, SemitopStatus::Ok);
    assert_eq!(v as u8, b'F');
    let st = unsafe { semitop_eval(s.0, c("'T & 'B").as_ptr(), c("TBF").as_ptr(), &mut v) };
    assert_eq!(st, SemitopStatus::Ok);
    assert_eq!(v as u8, b'B');

    let sk = catalogued("sierpinski", 0);
    let mut b = false;
    assert_eq!(unsafe { semitop_valid(sk.0, c("'0 | ~'0").as_ptr(), &mut b) }, SemitopStatus::Ok);
    assert!(b);
    assert_eq!(unsafe { semitop_valid(sk.0, c("'0").as_ptr(), &mut b) }, SemitopStatus::Ok);
    assert!(!b);
}

#[test]
fn sat_on_dimacs() {
    let mut b = false;
    assert_eq!(unsafe { semitop_sat(c("p cnf 2 2\n1 2 0\n-1 0\n").as_ptr(), &mut b) }, SemitopStatus::Ok);
    assert!(b);
    assert_eq!(unsafe { semitop_sat(c("p cnf 1 2\n1 0\n-1 0\n").as_ptr(), &mut b) }, SemitopStatus::Ok);
    assert!(!b);
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { semitop_space_from_catalog(c("no-such").as_ptr(), 0, &mut h) },
        SemitopStatus::UnknownCatalog
    );
    assert!(h.is_null());
    assert!(last_error().contains("no-such"));

    assert_eq!(unsafe { semitop_space_from_catalog(ptr::null(), 0, &mut h) }, SemitopStatus::NullArgument);
    assert_eq!(
        unsafe { semitop_space_from_catalog(c("three").as_ptr(), 0, ptr::null_mut()) },
        SemitopStatus::NullArgument
    );
    assert_eq!(unsafe { semitop_space_from_json(c("{").as_ptr(), &mut h) }, SemitopStatus::Parse);
    assert_eq!(
        unsafe { semitop_space_from_json(c(r#"{"points": ["a", "b"], "opens": [["a"], ["b"]], "mode": "full"}"#).as_ptr(), &mut h) },
        SemitopStatus::InvalidInput,
        "{}",
        last_error()
    );

    let bad = [0x66u8, 0xff, 0];
    assert_eq!(
        unsafe { semitop_space_from_catalog(bad.as_ptr() as *const c_char, 0, &mut h) },
        SemitopStatus::InvalidUtf8
    );

    let s = catalogued("three", 0);
    let mut b = false;
    assert_eq!(unsafe { semitop_intertwined(s.0, 0, 7, &mut b) }, SemitopStatus::UnknownPoint);
    let mut x = 0u64;
    assert_eq!(unsafe { semitop_closure(s.0, 1 << 5, &mut x) }, SemitopStatus::OutOfRange);
    assert_eq!(unsafe { semitop_space_index_of(s.0, c("Q").as_ptr(), &mut x as *mut u64 as *mut usize) }, SemitopStatus::UnknownPoint);
    let mut v: c_char = 0;
    assert_eq!(unsafe { semitop_eval(s.0, c("T &").as_ptr(), c("TBF").as_ptr(), &mut v) }, SemitopStatus::Parse);
    assert_eq!(unsafe { semitop_eval(s.0, c("T").as_ptr(), c("TB").as_ptr(), &mut v) }, SemitopStatus::Precondition);
    assert_eq!(unsafe { semitop_intertwined(ptr::null(), 0, 0, &mut b) }, SemitopStatus::NullArgument);
}

#[test]
fn free_accepts_null() {
    unsafe {
        semitop_space_free(ptr::null_mut());
        semitop_string_free(ptr::null_mut());
    }
    assert_eq!(unsafe { semitop_space_len(ptr::null()) }, 0);
    let v = unsafe { CStr::from_ptr(semitop_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/semitop.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 10);
    for f in exports {
        assert!(header.contains(&format!("{}(", f)), "{} missing from header", f);
    }
    assert!(header.contains("typedef struct SemitopSpace SemitopSpace;"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = std::env::temp_dir().join(format!("semitop-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let main = dir.join("main.c");
    std::fs::write(
        &main,
        "#include \"semitop.h\"\nint main(void) { SemitopSpace *s = 0; return semitop_space_len(s) == 0 ? 0 : 1; }\n",
    )
    .unwrap();
    let out = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", concat!(env!("CARGO_MANIFEST_DIR"), "/include")])
        .arg(&main)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

fn which_cc() -> Result<&'static str, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if std::process::Command::new(cc).arg("--version").output().is_ok() {
            return Ok(cc);
        }
    }
    Err(())
}
